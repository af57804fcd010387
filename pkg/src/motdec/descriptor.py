"""Reading, writing and constructing abelian-scheme descriptors."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .weights import (
    AbelianDescriptor,
    BrauerTag,
    DescriptorError,
    InvolutionTag,
    PermutationGroup,
    SimpleFactorDescriptor,
)

_FACTOR_KEYS = {
    "n", "d", "galois_generators", "brauer", "involution",
    "quaternion", "g", "conjugation", "quadratic_m",
}


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DescriptorError(f"{what} must be an integer, got {value!r}")
    return value


def _parse_factor(raw: Any) -> SimpleFactorDescriptor:
    if not isinstance(raw, dict):
        raise DescriptorError("each factor must be a JSON object")
    unknown = set(raw) - _FACTOR_KEYS
    if unknown:
        raise DescriptorError(f"unknown factor keys: {sorted(unknown)}")
    for key in ("n", "d"):
        if key not in raw:
            raise DescriptorError(f"factor is missing required key {key!r}")
    gens = raw.get("galois_generators", [])
    if not isinstance(gens, list) or not all(isinstance(p, list) for p in gens):
        raise DescriptorError("galois_generators must be a list of permutation arrays")
    gens = tuple(tuple(_int(x, "permutation entry") for x in p) for p in gens)
    try:
        brauer = BrauerTag(raw.get("brauer", "split"))
        involution = InvolutionTag(raw.get("involution", "totally-real"))
    except ValueError as exc:
        raise DescriptorError(str(exc)) from None
    quat = raw.get("quaternion")
    if quat is not None:
        if not isinstance(quat, dict) or set(quat) != {"a", "b"}:
            raise DescriptorError("quaternion must be an object with keys a and b")
        quat = (_int(quat["a"], "quaternion a"), _int(quat["b"], "quaternion b"))
        if 0 in quat:
            raise DescriptorError("quaternion parameters must be nonzero")
    conj = raw.get("conjugation")
    if conj is not None:
        conj = tuple(_int(x, "conjugation entry") for x in conj)
    m = raw.get("quadratic_m")
    if m is not None:
        m = _int(m, "quadratic_m")
    g = raw.get("g")
    if g is not None:
        g = _int(g, "factor g")
    return SimpleFactorDescriptor(
        n=_int(raw["n"], "n"),
        d=_int(raw["d"], "d"),
        galois_generators=gens,
        brauer=brauer,
        involution=involution,
        g=g,
        quaternion=quat,
        conjugation=conj,
        quadratic_m=m,
    )


def parse_descriptor(raw: Any) -> AbelianDescriptor:
    """Validate a decoded JSON document and build the descriptor."""
    if not isinstance(raw, dict):
        raise DescriptorError("descriptor must be a JSON object")
    unknown = set(raw) - {"g", "factors"}
    if unknown:
        raise DescriptorError(f"unknown descriptor keys: {sorted(unknown)}")
    if "g" not in raw or "factors" not in raw:
        raise DescriptorError("descriptor needs keys 'g' and 'factors'")
    factors = raw["factors"]
    if not isinstance(factors, list) or not factors:
        raise DescriptorError("'factors' must be a nonempty list")
    return AbelianDescriptor(_int(raw["g"], "g"), tuple(_parse_factor(f) for f in factors))


def load_descriptor(path: str | Path) -> AbelianDescriptor:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DescriptorError(f"cannot read {path}: {exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"invalid JSON in {path}: {exc}") from None
    return parse_descriptor(raw)


def factor_to_dict(f: SimpleFactorDescriptor) -> dict:
    out: dict[str, Any] = {
        "n": f.n,
        "d": f.d,
        "galois_generators": [list(p) for p in f.galois_generators],
        "brauer": f.brauer.value,
        "involution": f.involution.value,
    }
    if f.g is not None:
        out["g"] = f.g
    if f.quaternion is not None:
        out["quaternion"] = {"a": f.quaternion[0], "b": f.quaternion[1]}
    if f.conjugation is not None:
        out["conjugation"] = list(f.conjugation)
    if f.quadratic_m is not None:
        out["quadratic_m"] = f.quadratic_m
    return out


def descriptor_to_dict(desc: AbelianDescriptor) -> dict:
    return {"g": desc.g, "factors": [factor_to_dict(f) for f in desc.factors]}


# --- presets -------------------------------------------------------------


def classical(g: int) -> AbelianDescriptor:
    """End^0 = Q."""
    return AbelianDescriptor(g, (SimpleFactorDescriptor(1, 1),))


def totally_real(n: int, g: int, generators=None, quadratic_m: int | None = None) -> AbelianDescriptor:
    if generators is None:
        generators = PermutationGroup.symmetric(n).generators
    f = SimpleFactorDescriptor(
        n, 1, tuple(generators), BrauerTag.SPLIT, InvolutionTag.TOTALLY_REAL,
        quadratic_m=quadratic_m,
    )
    return AbelianDescriptor(g, (f,))


def quaternion(g: int, a: int = -1, b: int = 3, definite: bool = False) -> AbelianDescriptor:
    tag = BrauerTag.QUATERNION_DEFINITE if definite else BrauerTag.QUATERNION_INDEFINITE
    f = SimpleFactorDescriptor(1, 2, (), tag, InvolutionTag.TOTALLY_REAL, quaternion=(a, b))
    return AbelianDescriptor(g, (f,))


def cm_field(n: int, g: int) -> AbelianDescriptor:
    """A cyclic CM field of degree n; conjugation is the half-turn of the cycle."""
    gens = PermutationGroup.cyclic(n).generators
    conj = tuple((i + n // 2) % n for i in range(n))
    f = SimpleFactorDescriptor(n, 1, gens, BrauerTag.SPLIT, InvolutionTag.CM, conjugation=conj)
    return AbelianDescriptor(g, (f,))
