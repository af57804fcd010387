"""Graded isotypic multiplicities of the exterior algebra on H^1.

Everything here is character arithmetic.  The degree-i part of the exterior
algebra is written as a character of the torus of g_0, with the weight shift
coming from the trace term in h_alpha.  Peeling this character with the
Weyl characters of g yields the Lefschetz multiplicities; peeling each degree
with GL_d characters yields the multiplicity of every class xi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod

from ..characters import (
    LaurentCharacter,
    decompose_gl,
    decompose_sp4,
    exterior_powers,
    sp4_character,
    standard_character,
)
from ..families import LefschetzFamily, detect_family
from ..weights import AbelianDescriptor, DescriptorError, MultiWeight, OrbitClass, orbit_of


@dataclass(frozen=True)
class GradedMultiplicities:
    family: LefschetzFamily
    xi_mult: dict[tuple[OrbitClass, ...], int]
    psi_mult: dict[tuple[int, ...], int]
    psi_degrees: dict[tuple[int, ...], tuple[int, ...]]


def half_box(desc: AbelianDescriptor) -> int:
    """g/nd, which is integral for the three supported families."""
    f = desc.simple
    if desc.g % (f.n * f.d):
        raise DescriptorError(f"g/nd = {desc.g}/{f.n * f.d} must be an integer for this family")
    return desc.g // (f.n * f.d)


def twisted_degree_characters(d: int, m: int, q: int) -> list[LaurentCharacter]:
    """g_0-torus character of each exterior power of m copies of Std_d.

    The naive action is dualized (weights negated) and shifted by q = g/nd.
    """
    out = []
    for power in exterior_powers(standard_character(d, m)):
        out.append(power.map_exponents(lambda e: tuple(q - x for x in e)))
    return out


def peel_sl2(coeffs: dict[int, int]) -> dict[int, int]:
    """Split a rank-one character into sl_2 strings; keys are highest weights k."""
    rem = dict(coeffs)
    out: dict[int, int] = {}
    while any(rem.values()):
        k = max(e for e, c in rem.items() if c)
        c = rem[k]
        if c < 0 or k < 0:
            raise ArithmeticError("character is not a sum of sl2 strings")
        out[k] = c
        for e in range(-k, k + 1, 2):
            rem[e] = rem.get(e, 0) - c
    return dict(sorted(out.items()))


def _rank_one_levels(desc: AbelianDescriptor) -> dict[int, int]:
    """Per-embedding character of the exterior algebra when d = 1: level -> dim."""
    f = desc.simple
    q = half_box(desc)
    chars = twisted_degree_characters(1, 2 * q, q)
    out: dict[int, int] = {}
    for ch in chars:
        for (e,), c in ch.terms.items():
            out[e] = out.get(e, 0) + c
    return out


def graded_multiplicities(desc: AbelianDescriptor) -> GradedMultiplicities:
    """Per-xi and per-psi multiplicities in the cohomological realization."""
    family = detect_family(desc)
    f = desc.simple
    q = half_box(desc)
    xi_mult: dict[tuple[OrbitClass, ...], int] = {}
    psi_mult: dict[tuple[int, ...], int] = {}
    psi_degrees: dict[tuple[int, ...], tuple[int, ...]] = {}

    def to_xi(mu: MultiWeight) -> tuple[OrbitClass, ...]:
        lam = tuple(tuple(q - x for x in reversed(m)) for m in mu)
        return (orbit_of(lam, f.group),)

    if family is LefschetzFamily.QUATERNION:
        chars = twisted_degree_characters(2, 2 * q, q)
        for i, ch in enumerate(chars):
            for mu, c in decompose_gl(ch, 2).items():
                xi = to_xi((mu,))
                if xi[0].weight != i:
                    raise ArithmeticError(f"class {xi} found in degree {i}")
                xi_mult[xi] = c
        total = LaurentCharacter(2)
        for ch in chars:
            total = total + ch
        for (a, b), c in decompose_sp4(total).items():
            psi_mult[(a, b)] = c
            levels = sorted({sum(e) for e in sp4_character(a, b).terms})
            psi_degrees[(a, b)] = tuple(desc.g - e for e in reversed(levels))
    else:
        per_sigma = _rank_one_levels(desc)
        strings = peel_sl2(per_sigma)
        n = f.n
        for rep in itertools.product(sorted(per_sigma), repeat=n):
            mu = tuple((e,) for e in rep)
            xi = to_xi(mu)
            if xi not in xi_mult:
                xi_mult[xi] = prod(per_sigma[e] for e in rep)
        seen: dict[tuple[int, ...], int] = {}
        for b in itertools.product(sorted(strings), repeat=n):
            label = tuple(x[0] for x in orbit_of(tuple((x,) for x in b), f.group).representative)
            mult = prod(strings[k] for k in b)
            if seen.setdefault(label, mult) != mult:
                raise ArithmeticError(f"multiplicity not constant on the orbit of {label}")
        for label, mult in sorted(seen.items()):
            m = sum(label)
            psi_mult[label] = mult
            psi_degrees[label] = tuple(range(desc.g - m, desc.g + m + 1, 2))
    xi_mult = dict(sorted(xi_mult.items(), key=lambda kv: kv[0][0].representative))
    return GradedMultiplicities(family, xi_mult, psi_mult, psi_degrees)


def binomial_string_count(g: int, k: int) -> int:
    """Copies of the (k+1)-dimensional sl_2 string in the exterior algebra on 2g letters."""

    def c(j: int) -> int:
        return comb(2 * g, j) if 0 <= j <= 2 * g else 0

    return c(g - k) - c(g - k - 2)
