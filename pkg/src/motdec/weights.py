"""Weight tuples, Galois orbits and admissibility for a simple factor.

A multi-weight is stored as a tuple of ``n`` dominant ``d``-tuples, one per
embedding of the center.  The Galois group acts by permuting the embeddings.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Perm = tuple[int, ...]
WeightTuple = tuple[int, ...]
MultiWeight = tuple[WeightTuple, ...]

MAX_DEGREE = 8
MAX_ORBITS = 10**6
MAX_ELEMENTS = 10**7


class DescriptorError(ValueError):
    """Invalid abelian-scheme descriptor (bad permutations, divisibility, ...)."""


class ResourceLimitError(RuntimeError):
    """Enumeration would exceed the hard caps on group degree or orbit count."""


class UnsupportedFamilyError(RuntimeError):
    """The descriptor lies outside the families with an implemented Lie-theoretic model."""


class BrauerTag(str, enum.Enum):
    SPLIT = "split"
    QUATERNION_INDEFINITE = "quaternion-indefinite"
    QUATERNION_DEFINITE = "quaternion-definite"
    UNSPECIFIED = "unspecified"


class InvolutionTag(str, enum.Enum):
    TOTALLY_REAL = "totally-real"
    CM = "cm"
    OTHER = "other"


class WeightClass(str, enum.Enum):
    NOT_POL = "not_pol"
    POL_NOT_ADM = "pol_not_adm"
    ADM = "adm"


def _check_perm(p: Sequence[int], n: int) -> Perm:
    p = tuple(int(x) for x in p)
    if len(p) != n or sorted(p) != list(range(n)):
        raise DescriptorError(f"{list(p)} is not a permutation of 0..{n - 1}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """Return p∘q (apply q first)."""
    return tuple(p[i] for i in q)


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    generators: tuple[Perm, ...] = ()

    def __post_init__(self):
        if self.degree > MAX_DEGREE:
            raise ResourceLimitError(
                f"Galois degree n={self.degree} exceeds the cap n <= {MAX_DEGREE}"
            )
        gens = tuple(_check_perm(p, self.degree) for p in self.generators)
        object.__setattr__(self, "generators", gens)

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        identity = tuple(range(self.degree))
        seen = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for a in frontier:
                for s in self.generators:
                    b = compose(s, a)
                    if b not in seen:
                        seen.add(b)
                        new.append(b)
            frontier = new
        return tuple(sorted(seen))

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_transitive(self) -> bool:
        orbit = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for s in self.generators:
                if s[i] not in orbit:
                    orbit.add(s[i])
                    frontier.append(s[i])
        return len(orbit) == self.degree

    def act(self, p: Perm, blambda: Sequence) -> tuple:
        """Move the entry at position i to position p[i]."""
        out = [None] * self.degree
        for i, v in enumerate(blambda):
            out[p[i]] = v
        return tuple(out)

    @classmethod
    def symmetric(cls, n: int) -> "PermutationGroup":
        if n <= 1:
            return cls(max(n, 1), ())
        gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
        return cls(n, tuple(gens))

    @classmethod
    def cyclic(cls, n: int) -> "PermutationGroup":
        if n <= 1:
            return cls(max(n, 1), ())
        return cls(n, (tuple(list(range(1, n)) + [0]),))


@dataclass(frozen=True)
class SimpleFactorDescriptor:
    """One simple factor of the endomorphism algebra.

    ``g`` is the relative dimension carried by this factor; it may be left as
    ``None`` when the abelian scheme has a single factor.
    """

    n: int
    d: int
    galois_generators: tuple[Perm, ...] = ()
    brauer: BrauerTag = BrauerTag.SPLIT
    involution: InvolutionTag = InvolutionTag.TOTALLY_REAL
    g: int | None = None
    quaternion: tuple[int, int] | None = None
    conjugation: Perm | None = None
    quadratic_m: int | None = None

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise DescriptorError("n and d must be positive integers")
        object.__setattr__(self, "brauer", BrauerTag(self.brauer))
        object.__setattr__(self, "involution", InvolutionTag(self.involution))
        object.__setattr__(
            self, "galois_generators",
            tuple(_check_perm(p, self.n) for p in self.galois_generators),
        )
        if self.conjugation is not None:
            object.__setattr__(self, "conjugation", _check_perm(self.conjugation, self.n))
        if not self.group.is_transitive():
            raise DescriptorError(
                "Galois generators must act transitively on the embeddings (K is a field)"
            )

    @cached_property
    def group(self) -> PermutationGroup:
        return PermutationGroup(self.n, self.galois_generators)

    def box(self, g: int) -> int:
        """The admissibility bound 2g/nd; raises if it is not an integer."""
        if (2 * g) % (self.n * self.d):
            raise DescriptorError(
                f"n*d = {self.n * self.d} does not divide 2g = {2 * g}"
            )
        return 2 * g // (self.n * self.d)


@dataclass(frozen=True)
class AbelianDescriptor:
    g: int
    factors: tuple[SimpleFactorDescriptor, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.g < 1:
            raise DescriptorError("relative dimension g must be positive")
        if not self.factors:
            raise DescriptorError("at least one simple factor is required")
        if len(self.factors) == 1:
            f = self.factors[0]
            if f.g is not None and f.g != self.g:
                raise DescriptorError("single-factor g must equal the total g")
        else:
            if any(f.g is None for f in self.factors):
                raise DescriptorError("each factor needs its own g when several are given")
            if sum(f.g for f in self.factors) != self.g:
                raise DescriptorError("per-factor dimensions must sum to g")
        for j in range(len(self.factors)):
            self.factors[j].box(self.factor_g(j))

    def factor_g(self, j: int) -> int:
        f = self.factors[j]
        return self.g if f.g is None else f.g

    @property
    def simple(self) -> SimpleFactorDescriptor:
        if len(self.factors) != 1:
            raise DescriptorError("operation requires a single simple factor")
        return self.factors[0]


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def _check_multiweight(blambda: MultiWeight, factor: SimpleFactorDescriptor) -> MultiWeight:
    blambda = tuple(tuple(int(x) for x in lam) for lam in blambda)
    if len(blambda) != factor.n:
        raise DescriptorError(f"multi-weight needs {factor.n} components, got {len(blambda)}")
    for lam in blambda:
        if len(lam) != factor.d or not is_dominant(lam):
            raise DescriptorError(f"{lam} is not a dominant {factor.d}-tuple")
    return blambda


def weight_of(blambda: MultiWeight) -> int:
    """Total degree sum_sigma |lambda(sigma)| of a polynomial multi-weight."""
    if any(x < 0 for lam in blambda for x in lam):
        raise ValueError(f"wt is only defined on polynomial weights, got {blambda}")
    return sum(sum(lam) for lam in blambda)


def dual_tuple(lam: WeightTuple, box: int) -> WeightTuple:
    return tuple(box - x for x in reversed(lam))


def dual_wdual(
    blambda: MultiWeight,
    factor: SimpleFactorDescriptor,
    g: int,
    conjugate: bool = False,
) -> MultiWeight:
    """Apply lambda -> (2g/nd - lambda_d, ..., 2g/nd - lambda_1) per embedding.

    With ``conjugate=True`` (CM centers only) the result is additionally moved
    by the user-supplied complex-conjugation permutation.
    """
    box = factor.box(g)
    blambda = _check_multiweight(blambda, factor)
    out = tuple(dual_tuple(lam, box) for lam in blambda)
    if conjugate:
        if factor.involution is not InvolutionTag.CM or factor.conjugation is None:
            raise DescriptorError("conjugate duality needs a CM factor with a conjugation permutation")
        out = factor.group.act(factor.conjugation, out)
    return out


def classify(blambda: MultiWeight, factor: SimpleFactorDescriptor, g: int) -> WeightClass:
    box = factor.box(g)
    if any(x < 0 for lam in blambda for x in lam):
        return WeightClass.NOT_POL
    if any(lam[0] > box for lam in blambda):
        return WeightClass.POL_NOT_ADM
    return WeightClass.ADM


@dataclass(frozen=True)
class HalfWeightTuple:
    """A d-tuple in (g/nd + Z)^d, stored with every entry doubled."""

    doubled: tuple[int, ...]

    @classmethod
    def from_values(cls, values: Iterable) -> "HalfWeightTuple":
        out = []
        for v in values:
            v2 = Fraction(v) * 2
            if v2.denominator != 1:
                raise ValueError(f"{v} is not a half-integer")
            out.append(int(v2))
        return cls(tuple(out))

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)


def lefschetz_admissible(mu: HalfWeightTuple, factor: SimpleFactorDescriptor, g: int) -> bool:
    """Membership in the set of g_0-weights allowed in a Lefschetz component."""
    bound2 = factor.box(g)  # = 2 * (g/nd)
    if any((x - bound2) % 2 for x in mu.doubled):
        raise ValueError(f"entries of {mu.values()} do not lie in g/nd + Z")
    m = mu.doubled
    return bound2 >= m[0] and is_dominant(m) and m[-1] >= -bound2


@dataclass(frozen=True, order=True)
class OrbitClass:
    representative: MultiWeight
    orbit_size: int = field(compare=False)
    stabilizer_order: int = field(compare=False)

    @property
    def weight(self) -> int:
        return weight_of(self.representative)


def orbit_elements(blambda: MultiWeight, group: PermutationGroup) -> list[MultiWeight]:
    return sorted({group.act(p, blambda) for p in group.elements})


def orbit_of(blambda: MultiWeight, group: PermutationGroup) -> OrbitClass:
    blambda = tuple(tuple(lam) for lam in blambda)
    if len(blambda) != group.degree:
        raise DescriptorError("group degree does not match the number of embeddings")
    orbit = orbit_elements(blambda, group)
    return OrbitClass(orbit[0], len(orbit), group.order // len(orbit))


def box_partitions(d: int, box: int) -> list[WeightTuple]:
    """All box >= lambda_1 >= ... >= lambda_d >= 0."""
    return sorted(
        tuple(sorted(c, reverse=True))
        for c in itertools.combinations_with_replacement(range(box + 1), d)
    )


def adm_generating_function(factor: SimpleFactorDescriptor, g: int) -> list[int]:
    """Coefficients of sum_{lambda in Lambda^adm} x^{|lambda|}, constant term first."""
    box = factor.box(g)
    coeffs = [0] * (factor.d * box + 1)
    for lam in box_partitions(factor.d, box):
        coeffs[sum(lam)] += 1
    return coeffs


def adm_element_polynomial(factor: SimpleFactorDescriptor, g: int) -> list[int]:
    """Generating function of X^adm by weight: the single-embedding one to the n-th power."""
    base = adm_generating_function(factor, g)
    out = [1]
    for _ in range(factor.n):
        out = [
            sum(out[i] * base[k - i] for i in range(len(out)) if 0 <= k - i < len(base))
            for k in range(len(out) + len(base) - 1)
        ]
    return out


def factor_adm_orbits(factor: SimpleFactorDescriptor, g: int) -> list[OrbitClass]:
    box = factor.box(g)
    group = factor.group  # enforces the degree cap
    parts = box_partitions(factor.d, box)
    total = len(parts) ** factor.n
    if total > MAX_ELEMENTS or total // group.order > MAX_ORBITS:
        raise ResourceLimitError(f"X^adm has {total} elements; refusing to enumerate")
    reps: dict[MultiWeight, OrbitClass] = {}
    for blambda in itertools.product(parts, repeat=factor.n):
        if blambda in reps:
            continue
        oc = orbit_of(blambda, group)
        if oc.representative == blambda:
            reps[blambda] = oc
            if len(reps) > MAX_ORBITS:
                raise ResourceLimitError("orbit count exceeds 10^6")
    return sorted(reps.values(), key=lambda o: (o.weight, _desc_key(o.representative)))


def _desc_key(blambda: MultiWeight) -> tuple:
    """Sort key giving reverse-lexicographic order, e.g. (2,0) before (1,1)."""
    return tuple(tuple(-x for x in lam) for lam in blambda)


def index_sort_key(xi: Sequence[OrbitClass]) -> tuple:
    """Order on index classes: total weight, then reverse lex per factor."""
    return (sum(o.weight for o in xi), tuple(_desc_key(o.representative) for o in xi))


def enumerate_adm_orbits(desc: AbelianDescriptor) -> list[tuple[OrbitClass, ...]]:
    """The index set prod_j X_j^adm / Gamma_j, sorted by ``index_sort_key``."""
    per_factor = [factor_adm_orbits(f, desc.factor_g(j)) for j, f in enumerate(desc.factors)]
    total = 1
    for lst in per_factor:
        total *= len(lst)
    if total > MAX_ORBITS:
        raise ResourceLimitError("product index set exceeds 10^6 classes")
    out = list(itertools.product(*per_factor))
    return sorted(out, key=index_sort_key)
