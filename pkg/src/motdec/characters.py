"""Exact character arithmetic with integer Laurent polynomials.

Characters of GL_d (possibly several blocks of them), of sp_4 (type C_2) and
of exterior powers are all carried by :class:`LaurentCharacter`.  Irreducible
constituents are recovered by highest-weight peeling.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .weights import BrauerTag, SimpleFactorDescriptor, is_dominant

MAX_RANK = 4

Exponent = tuple[int, ...]


class NotACharacterError(ValueError):
    pass


class LaurentCharacter:
    """Sparse integer Laurent polynomial in ``rank`` torus variables."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Exponent, int] | None = None):
        if rank > MAX_RANK:
            raise ValueError(f"rank {rank} exceeds the cap {MAX_RANK}")
        self.rank = rank
        self.terms: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            if len(e) != rank:
                raise ValueError(f"exponent {e} has wrong length for rank {rank}")
            if c:
                self.terms[tuple(e)] = int(c)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "LaurentCharacter":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def one(cls, rank: int) -> "LaurentCharacter":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def from_weights(cls, rank: int, weights: Iterable[Sequence[int]]) -> "LaurentCharacter":
        acc: dict[Exponent, int] = defaultdict(int)
        for w in weights:
            acc[tuple(w)] += 1
        return cls(rank, acc)

    def _coerce(self, other) -> "LaurentCharacter":
        if isinstance(other, LaurentCharacter):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, int):
            return LaurentCharacter(self.rank, {(0,) * self.rank: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentCharacter(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentCharacter(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentCharacter(self.rank, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentCharacter(self.rank, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentCharacter(self.rank, {(0,) * self.rank: other})
        if not isinstance(other, LaurentCharacter):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" + ("" if k == 1 else f"^{k}") for i, k in enumerate(e) if k
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else "") if c != 1 or not mono else mono)
        return " + ".join(parts)

    def shift(self, exp: Sequence[int]) -> "LaurentCharacter":
        return LaurentCharacter(
            self.rank, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        )

    def map_exponents(self, f) -> "LaurentCharacter":
        out: dict[Exponent, int] = defaultdict(int)
        for e, c in self.terms.items():
            out[tuple(f(e))] += c
        return LaurentCharacter(self.rank, out)

    def dimension(self) -> int:
        """Evaluation at x = (1, ..., 1)."""
        return sum(self.terms.values())

    def weights(self) -> list[Exponent]:
        """Weight multiset; only meaningful for genuine characters."""
        out = []
        for e, c in sorted(self.terms.items()):
            if c < 0:
                raise NotACharacterError(f"negative coefficient {c} at {e}")
            out.extend([e] * c)
        return out

    def leading(self) -> tuple[Exponent, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def exact_divide(self, den: "LaurentCharacter") -> "LaurentCharacter":
        """Quotient of an exact division; raises if a remainder is left."""
        den = self._coerce(den)
        de, dc = den.leading()
        rem = LaurentCharacter(self.rank, self.terms)
        quot: dict[Exponent, int] = {}
        for _ in range(10**6):
            if not rem:
                return LaurentCharacter(self.rank, quot)
            re_, rc = rem.leading()
            if rc % dc:
                raise ArithmeticError("division is not exact over the integers")
            q = tuple(a - b for a, b in zip(re_, de))
            quot[q] = quot.get(q, 0) + rc // dc
            rem = rem - den.shift(q) * (rc // dc)
        raise ArithmeticError("division did not terminate")

    def is_symmetric(self, group: Iterable) -> bool:
        """Invariance under a finite group of exponent maps."""
        return all(self.map_exponents(w) == self for w in group)


# --- Weyl groups ---------------------------------------------------------


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def type_a_weyl(d: int, blocks: int = 1) -> list:
    """Coordinate permutations within each block of size d."""
    out = []
    for perms in itertools.product(itertools.permutations(range(d)), repeat=blocks):
        def w(e, perms=perms):
            res = []
            for b, p in enumerate(perms):
                blk = e[b * d:(b + 1) * d]
                res.extend(blk[p[i]] for i in range(d))
            return tuple(res)
        out.append(w)
    return out


def type_c2_weyl() -> list[tuple[int, callable]]:
    """(sign, map) for the 8 signed permutations of two coordinates."""
    out = []
    for p in itertools.permutations(range(2)):
        for s in itertools.product((1, -1), repeat=2):
            sign = _perm_sign(p) * s[0] * s[1]
            out.append((sign, lambda e, p=p, s=s: (s[0] * e[p[0]], s[1] * e[p[1]])))
    return out


def _alternant_a(exp: Sequence[int]) -> LaurentCharacter:
    d = len(exp)
    terms = {}
    for p in itertools.permutations(range(d)):
        terms[tuple(exp[p[i]] for i in range(d))] = _perm_sign(p)
    return LaurentCharacter(d, terms)


# --- GL_d ----------------------------------------------------------------


@lru_cache(maxsize=None)
def schur_character(lam: tuple[int, ...], d: int | None = None) -> LaurentCharacter:
    """Character of the irreducible GL_d-module with highest weight ``lam``.

    Polynomial weights use the bialternant a_{lam+delta} / a_delta; a negative
    tail is handled by twisting with a power of the determinant.
    """
    lam = tuple(lam)
    d = len(lam) if d is None else d
    if len(lam) != d or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant weight of GL_{d}")
    m = max(0, -lam[-1])
    if m:
        return schur_character(tuple(x + m for x in lam), d).shift((-m,) * d)
    delta = tuple(range(d - 1, -1, -1))
    num = _alternant_a(tuple(a + b for a, b in zip(lam, delta)))
    return num.exact_divide(_alternant_a(delta))


def gl_dimension(lam: Sequence[int]) -> int:
    d = len(lam)
    out = Fraction(1)
    for i in range(d):
        for j in range(i + 1, d):
            out *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(out)


def block_schur(labels: Sequence[tuple[int, ...]], d: int) -> LaurentCharacter:
    """Outer tensor product of Schur characters, one block of d variables each."""
    out = LaurentCharacter.one(0) if not labels else None
    for lam in labels:
        s = schur_character(tuple(lam), d)
        if out is None:
            out = s
        else:
            out = LaurentCharacter(
                out.rank + d,
                {e1 + e2: c1 * c2 for e1, c1 in out.terms.items() for e2, c2 in s.terms.items()},
            )
    return out


def _block_dominant(e: Exponent, d: int) -> bool:
    return all(is_dominant(e[b:b + d]) for b in range(0, len(e), d))


def decompose_gl(char: LaurentCharacter, d: int, blocks: int = 1) -> dict:
    """Peel a (GL_d)^blocks character into irreducibles.

    Returns ``{label: multiplicity}`` in peeling order, where a label is a
    d-tuple for one block and a tuple of d-tuples otherwise.
    """
    if char.rank != d * blocks:
        raise ValueError("character rank does not match d * blocks")
    rem = LaurentCharacter(char.rank, char.terms)
    out = {}
    while rem:
        dom = [e for e in rem.terms if _block_dominant(e, d)]
        if not dom:
            raise NotACharacterError("remainder has no dominant exponent")
        top = max(dom)
        c = rem.terms[top]
        if c < 0:
            raise NotACharacterError(f"negative multiplicity {c} for highest weight {top}")
        labels = tuple(top[b:b + d] for b in range(0, len(top), d))
        out[labels[0] if blocks == 1 else labels] = c
        rem = rem - block_schur(labels, d) * c
    return out


def exterior_powers(base: LaurentCharacter) -> list[LaurentCharacter]:
    """All exterior powers of a genuine character, degree 0 first."""
    out = [LaurentCharacter.one(base.rank)]
    for w in base.weights():
        x = LaurentCharacter.monomial(w)
        out.append(LaurentCharacter(base.rank))
        for k in range(len(out) - 1, 0, -1):
            out[k] = out[k] + out[k - 1] * x
    return out


def exterior_power_character(base: LaurentCharacter, i: int) -> LaurentCharacter:
    """Character of the i-th exterior power (elementary symmetric polynomial)."""
    if i < 0:
        raise ValueError("exterior power index must be nonnegative")
    powers = exterior_powers(base)
    return powers[i] if i < len(powers) else LaurentCharacter(base.rank)


def standard_character(d: int, copies: int = 1) -> LaurentCharacter:
    return schur_character((1,) + (0,) * (d - 1), d) * copies


# --- sp_4 ----------------------------------------------------------------

_RHO_C2 = (2, 1)


def _alternant_c2(exp: Sequence[int]) -> LaurentCharacter:
    acc: dict[Exponent, int] = defaultdict(int)
    for sign, w in type_c2_weyl():
        acc[w(exp)] += sign
    return LaurentCharacter(2, acc)


@lru_cache(maxsize=None)
def sp4_character(a: int, b: int) -> LaurentCharacter:
    """Weyl character of the sp_4-irrep with highest weight a*w1 + b*w2.

    Variables are the Siegel-Levi torus coordinates, so the highest weight is
    (a + b, b).
    """
    if a < 0 or b < 0:
        raise ValueError("sp4 labels are nonnegative")
    hw = (a + b, b)
    num = _alternant_c2(tuple(x + r for x, r in zip(hw, _RHO_C2)))
    return num.exact_divide(_alternant_c2(_RHO_C2))


def sp4_dimension(a: int, b: int) -> int:
    return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) // 6


def branch_sp4_to_gl2(a: int, b: int) -> dict[tuple[int, int], int]:
    """Restriction of the sp_4 irrep (a, b) to its Siegel Levi gl_2."""
    return decompose_gl(sp4_character(a, b), 2)


def decompose_sp4(char: LaurentCharacter) -> dict[tuple[int, int], int]:
    """Peel a C_2-symmetric character into sp_4 irreducibles labelled (a, b)."""
    rem = LaurentCharacter(2, char.terms)
    out = {}
    while rem:
        dom = [e for e in rem.terms if e[0] >= e[1] >= 0]
        if not dom:
            raise NotACharacterError("remainder has no dominant sp4 weight")
        top = max(dom)
        c = rem.terms[top]
        if c < 0:
            raise NotACharacterError(f"negative multiplicity at {top}")
        label = (top[0] - top[1], top[1])
        out[label] = c
        rem = rem - sp4_character(*label) * c
    return out


def d_lambda(
    lam: Sequence[int],
    factor: SimpleFactorDescriptor,
    overrides: Mapping[tuple[int, ...], int] | None = None,
) -> int | str:
    """Schur index bookkeeping d(lambda); "unknown" outside the two known cases."""
    lam = tuple(lam)
    if overrides and lam in overrides:
        return overrides[lam]
    if factor.brauer is BrauerTag.SPLIT or factor.d == 1:
        return 1
    if factor.brauer is BrauerTag.QUATERNION_INDEFINITE and factor.d == 2:
        return 1 if (lam[0] - lam[1]) % 2 == 0 else 2
    return "unknown"
