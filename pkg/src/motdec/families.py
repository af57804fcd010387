"""Scope gate: which descriptors have an implemented Lie-theoretic model."""

from __future__ import annotations

import enum

from .weights import AbelianDescriptor, BrauerTag, InvolutionTag, UnsupportedFamilyError


class LefschetzFamily(str, enum.Enum):
    CLASSICAL = "classical"
    TOTALLY_REAL = "totally-real"
    QUATERNION = "quaternion-indefinite"


def detect_family(desc: AbelianDescriptor) -> LefschetzFamily:
    if len(desc.factors) != 1:
        raise UnsupportedFamilyError(
            "family gap: Lefschetz data is implemented for a single simple factor only"
        )
    f = desc.factors[0]
    if f.d > 2:
        raise UnsupportedFamilyError(f"family gap: division algebras of index d = {f.d} > 2")
    if f.involution is InvolutionTag.CM:
        raise UnsupportedFamilyError("family gap: CM centers (unitary Lie algebras)")
    if f.brauer is BrauerTag.QUATERNION_DEFINITE:
        raise UnsupportedFamilyError("family gap: definite quaternion algebras (orthogonal type)")
    if f.n == 1 and f.d == 1:
        return LefschetzFamily.CLASSICAL
    if f.d == 1 and f.involution is InvolutionTag.TOTALLY_REAL:
        return LefschetzFamily.TOTALLY_REAL
    if f.n == 1 and f.d == 2 and f.brauer is BrauerTag.QUATERNION_INDEFINITE:
        return LefschetzFamily.QUATERNION
    raise UnsupportedFamilyError(
        f"family gap: n={f.n}, d={f.d}, brauer={f.brauer.value}, "
        f"involution={f.involution.value} has no implemented model"
    )
