"""Generalized Lefschetz decomposition for the three families with a worked model.

Components psi are irreducible representations of the Lie algebra g spanned
by the h_alpha, L_c and Lambda_c operators.  Restricting psi to the Levi g_0
and translating each g_0-constituent mu back to a class xi via
mu = (check xi)[g/nd] gives the refined table of which R^(xi) feed which
component.  Levels are keyed by the eigenvalue e of h_id, so level e lives in
degree g - e.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import prod
from typing import Any, Sequence

from .characters import branch_sp4_to_gl2, gl_dimension, sp4_dimension
from .decomposition import format_index, index_to_json
from .descriptor import descriptor_to_dict
from .families import LefschetzFamily, detect_family
from .realization.multiplicities import graded_multiplicities, half_box
from .weights import (
    AbelianDescriptor,
    HalfWeightTuple,
    MultiWeight,
    OrbitClass,
    WeightClass,
    classify,
    enumerate_adm_orbits,
    index_sort_key,
    lefschetz_admissible,
    orbit_elements,
    orbit_of,
)

Label = tuple[int, ...]
Index = tuple[OrbitClass, ...]

__all__ = [
    "LefschetzFamily",
    "detect_family",
    "enumerate_components",
    "depth",
    "branch_component",
    "refined_table",
    "core_info",
    "algebraic_part",
    "odd_part",
    "fourier_image",
    "lefschetz_report",
]


class InternalConsistencyError(AssertionError):
    """A computed table violates a structural identity it must satisfy."""


@dataclass(frozen=True)
class Constituent:
    mu: MultiWeight
    mult: int
    dim: int
    xi: Index


@dataclass(frozen=True)
class CoreInfo:
    algebra: str
    algebra_rank: int
    primitive_copies: int
    shape: str
    level_exponents: tuple[int, ...]
    lefschetz_mult: int
    core_rank: int


@dataclass(frozen=True)
class ComponentReport:
    label: Label
    depth: int
    levels: dict[int, tuple[Constituent, ...]]
    refined: dict[int, tuple[Index, ...]]
    core: CoreInfo
    fourier_fixed: bool


@dataclass(frozen=True)
class LefschetzReport:
    descriptor: AbelianDescriptor
    family: LefschetzFamily
    h: int
    components: tuple[ComponentReport, ...]
    algebraic_part: Label
    odd_part: Label


def family_h(desc: AbelianDescriptor) -> int:
    """h = g/nd; a quaternion factor forces g even, a totally real one n | g."""
    detect_family(desc)
    return half_box(desc)


def _orbit_label(label: Sequence[int], desc: AbelianDescriptor) -> Label:
    f = desc.simple
    if len(label) != f.n:
        raise ValueError(f"label needs {f.n} entries")
    return tuple(x[0] for x in orbit_of(tuple((x,) for x in label), f.group).representative)


def canonical_label(label, desc: AbelianDescriptor) -> Label:
    family = detect_family(desc)
    label = tuple(int(x) for x in label)
    if family is LefschetzFamily.TOTALLY_REAL:
        label = _orbit_label(label, desc)
    if label not in enumerate_components(desc):
        raise ValueError(f"{label} is not a Lefschetz component for g = {desc.g}")
    return label


def label_name(label: Label, desc: AbelianDescriptor) -> str:
    family = detect_family(desc)
    if family is LefschetzFamily.TOTALLY_REAL:
        return "[" + ",".join(map(str, label)) + "]"
    return "{" + ",".join(map(str, label)) + "}"


def enumerate_components(desc: AbelianDescriptor) -> list[Label]:
    family = detect_family(desc)
    h = family_h(desc)
    if family is LefschetzFamily.CLASSICAL:
        return [(k,) for k in range(desc.g + 1)]
    if family is LefschetzFamily.QUATERNION:
        return [(a, s - a) for s in range(h + 1) for a in range(s, -1, -1)]
    f = desc.simple
    labels = set()
    for b in itertools.product(range(h + 1), repeat=f.n):
        labels.add(_orbit_label(b, desc))
    return sorted(labels, key=lambda b: (sum(b), b))


def _mu_to_xi(mu: MultiWeight, desc: AbelianDescriptor) -> Index:
    f = desc.simple
    q = half_box(desc)
    for m in mu:
        if not lefschetz_admissible(HalfWeightTuple(tuple(2 * x for x in m)), f, desc.g):
            raise InternalConsistencyError(f"g_0-weight {mu} is outside the Lefschetz range")
    lam = tuple(tuple(q - x for x in reversed(m)) for m in mu)
    if classify(lam, f, desc.g) is not WeightClass.ADM:
        raise InternalConsistencyError(f"translated class {lam} is not admissible")
    return (orbit_of(lam, f.group),)


def branch_component(label, desc: AbelianDescriptor) -> dict[int, tuple[Constituent, ...]]:
    """Restriction of V_psi to g_0, grouped by the h_id-eigenvalue e."""
    family = detect_family(desc)
    label = canonical_label(label, desc)
    levels: dict[int, list[Constituent]] = {}

    def add(e: int, mu: MultiWeight, mult: int, dim: int):
        levels.setdefault(e, []).append(Constituent(mu, mult, dim, _mu_to_xi(mu, desc)))

    if family is LefschetzFamily.CLASSICAL:
        (k,) = label
        for e in range(-k, k + 1, 2):
            add(e, ((e,),), 1, 1)
    elif family is LefschetzFamily.QUATERNION:
        for mu, c in branch_sp4_to_gl2(*label).items():
            add(mu[0] + mu[1], (mu,), c, gl_dimension(mu))
    else:
        f = desc.simple
        counts: dict[tuple[int, ...], int] = {}
        for b in orbit_elements(tuple((x,) for x in label), f.group):
            ranges = [range(-x[0], x[0] + 1, 2) for x in b]
            for eta in itertools.product(*ranges):
                counts[eta] = counts.get(eta, 0) + 1
        done = set()
        for eta in sorted(counts):
            oc = orbit_of(tuple((x,) for x in eta), f.group)
            if oc.representative in done:
                continue
            done.add(oc.representative)
            add(sum(eta), oc.representative, counts[eta], oc.orbit_size)
    total = sum(c.mult * c.dim for cons in levels.values() for c in cons)
    if total != abstract_dimension(label, desc):
        raise InternalConsistencyError(f"branching of {label} has total dimension {total}")
    return {
        e: tuple(sorted(levels[e], key=lambda c: index_sort_key(c.xi)))
        for e in sorted(levels)
    }


def abstract_dimension(label: Label, desc: AbelianDescriptor) -> int:
    family = detect_family(desc)
    if family is LefschetzFamily.CLASSICAL:
        return label[0] + 1
    if family is LefschetzFamily.QUATERNION:
        return sp4_dimension(*label)
    f = desc.simple
    orbit = orbit_elements(tuple((x,) for x in label), f.group)
    return len(orbit) * prod(x + 1 for x in label)


def depth(label, desc: AbelianDescriptor) -> int:
    """Half the h_id-spread of V_psi, read off the branching and cross-checked."""
    label = canonical_label(label, desc)
    levels = branch_component(label, desc)
    m = max(levels)
    if min(levels) != -m:
        raise InternalConsistencyError(f"levels of {label} are not symmetric")
    family = detect_family(desc)
    expected = label[0] + 2 * label[1] if family is LefschetzFamily.QUATERNION else sum(label)
    if m != expected:
        raise InternalConsistencyError(f"depth {m} of {label} differs from the formula {expected}")
    return m


def component_refined(label, desc: AbelianDescriptor) -> dict[int, tuple[Index, ...]]:
    out: dict[int, list[Index]] = {}
    for e, cons in branch_component(label, desc).items():
        deg = desc.g - e
        for c in cons:
            if sum(o.weight for o in c.xi) != deg:
                raise InternalConsistencyError(f"{c.xi} placed in degree {deg}")
            if c.xi not in out.setdefault(deg, []):
                out[deg].append(c.xi)
    return {deg: tuple(sorted(v, key=index_sort_key)) for deg, v in sorted(out.items())}


def refined_table(desc: AbelianDescriptor) -> dict[Label, dict[int, tuple[Index, ...]]]:
    return {psi: component_refined(psi, desc) for psi in enumerate_components(desc)}


def _level_dims(levels: dict[int, tuple[Constituent, ...]]) -> dict[int, int]:
    return {e: sum(c.mult * c.dim for c in cons) for e, cons in levels.items()}


def _shape(exponents: list[int]) -> str:
    parts = []
    for j, r in enumerate(exponents):
        base = "P" if j == 0 else f"P(−{j})"
        parts.append(base if r == 1 else f"{base}⊕{r}")
    return " ⊕ ".join(parts)


def core_info(label, desc: AbelianDescriptor, multiplicities=None) -> CoreInfo:
    """Endomorphism algebra B of V_psi, copies of the core in the primitive part, shape and rank.

    The rank uses the realization multiplicity of V_psi, so it is a
    cohomological statement.
    """
    family = detect_family(desc)
    label = canonical_label(label, desc)
    levels = branch_component(label, desc)
    dims = _level_dims(levels)
    if multiplicities is None:
        multiplicities = graded_multiplicities(desc)
    mult = multiplicities.psi_mult.get(label, 0)
    ordered = [dims[e] for e in sorted(dims, reverse=True)]  # from the primitive level up
    if family is LefschetzFamily.QUATERNION:
        a = label[0]
        if a % 2 == 0:
            algebra, rank_b, copies, over_closure = "Q", 1, a + 1, 1
        else:
            algebra, rank_b, copies, over_closure = "D", 4, (a + 1) // 2, 2
        # V_{a,b} is over_closure copies of the absolutely irreducible module.
        rational = [over_closure * x for x in ordered]
        core_rank = mult * rank_b // over_closure
    elif family is LefschetzFamily.TOTALLY_REAL:
        f = desc.simple
        oc = orbit_of(tuple((x,) for x in label), f.group)
        algebra, rank_b, copies = f"F(psi) of degree {oc.orbit_size}", oc.orbit_size, 1
        rational = ordered
        core_rank = mult * oc.orbit_size
    else:
        algebra, rank_b, copies = "Q", 1, 1
        rational = ordered
        core_rank = mult
    if any(x % rank_b for x in rational):
        raise InternalConsistencyError(f"level dimensions {rational} not divisible by rank {rank_b}")
    exps = [x // rank_b for x in rational]
    if copies * rank_b != rational[0]:
        raise InternalConsistencyError(
            f"{copies} copies times rank {rank_b} differs from primitive dimension {rational[0]}"
        )
    return CoreInfo(algebra, rank_b, copies, _shape(exps), tuple(exps), mult, core_rank)


def fourier_image(label, desc: AbelianDescriptor) -> tuple[Label, dict[int, int]]:
    """Label of psi composed with the Fourier involution, plus the checked level dims."""
    label = canonical_label(label, desc)
    dims = _level_dims(branch_component(label, desc))
    if any(dims.get(-e) != v for e, v in dims.items()):
        raise InternalConsistencyError(f"branching of {label} is not symmetric under e -> -e")
    return label, dims


def _component_through(desc: AbelianDescriptor, degree: int) -> Label:
    hits = [psi for psi, table in refined_table(desc).items() if degree in table]
    if len(hits) != 1:
        raise InternalConsistencyError(f"expected one component in degree {degree}, found {hits}")
    return hits[0]


def algebraic_part(desc: AbelianDescriptor) -> Label:
    """The unique component reaching degree 0."""
    return _component_through(desc, 0)


def odd_part(desc: AbelianDescriptor) -> Label:
    """The unique component reaching degree 1; it has depth g - 1."""
    psi = _component_through(desc, 1)
    if depth(psi, desc) != desc.g - 1:
        raise InternalConsistencyError(f"component {psi} through degree 1 has depth != g - 1")
    return psi


def component_report(label, desc: AbelianDescriptor, multiplicities=None) -> ComponentReport:
    label = canonical_label(label, desc)
    image, _ = fourier_image(label, desc)
    return ComponentReport(
        label=label,
        depth=depth(label, desc),
        levels=branch_component(label, desc),
        refined=component_refined(label, desc),
        core=core_info(label, desc, multiplicities),
        fourier_fixed=image == label,
    )


def lefschetz_report(desc: AbelianDescriptor) -> LefschetzReport:
    family = detect_family(desc)
    h = family_h(desc)
    mults = graded_multiplicities(desc)
    comps = tuple(component_report(psi, desc, mults) for psi in enumerate_components(desc))
    return LefschetzReport(desc, family, h, comps, algebraic_part(desc), odd_part(desc))


# --- serialization -------------------------------------------------------


def _mu_name(mu: MultiWeight, family: LefschetzFamily) -> str:
    if family is LefschetzFamily.QUATERNION:
        return "U^(" + ",".join(map(str, mu[0])) + ")"
    return "U^[" + ",".join(str(m[0]) for m in mu) + "]"


def report_to_dict(report: LefschetzReport) -> dict[str, Any]:
    desc = report.descriptor
    comps = []
    for c in report.components:
        comps.append({
            "psi": list(c.label),
            "name": "R_" + label_name(c.label, desc),
            "depth": c.depth,
            "levels": [
                {
                    "e": e,
                    "degree": desc.g - e,
                    "dim": sum(x.mult * x.dim for x in cons),
                    "constituents": [
                        {
                            "mu": [list(m) for m in x.mu],
                            "mult": x.mult,
                            "dim": x.dim,
                            "xi": index_to_json(x.xi),
                        }
                        for x in cons
                    ],
                }
                for e, cons in sorted(c.levels.items(), reverse=True)
            ],
            "refined": [
                {"degree": deg, "xi": [index_to_json(xi) for xi in xis]}
                for deg, xis in c.refined.items()
            ],
            "core": {
                "algebra": c.core.algebra,
                "algebra_rank": c.core.algebra_rank,
                "primitive_copies": c.core.primitive_copies,
                "shape": c.core.shape,
                "level_exponents": list(c.core.level_exponents),
                "lefschetz_mult": c.core.lefschetz_mult,
                "core_rank": c.core.core_rank,
            },
            "fourier_fixed": c.fourier_fixed,
        })
    return {
        "descriptor": descriptor_to_dict(desc),
        "family": report.family.value,
        "h": report.h,
        "algebraic_part": list(report.algebraic_part),
        "odd_part": list(report.odd_part),
        "components": comps,
        "notes": [
            "lefschetz_mult and core_rank come from the cohomological realization",
            "level e is the eigenvalue of h_id and sits in degree g - e",
        ],
    }


def json_report(report: LefschetzReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def markdown_report(report: LefschetzReport) -> str:
    desc = report.descriptor
    family = report.family
    per_weight: dict[int, int] = {}
    for xi in enumerate_adm_orbits(desc):
        w = sum(o.weight for o in xi)
        per_weight[w] = per_weight.get(w, 0) + 1
    homes: dict[Index, int] = {}
    for c in report.components:
        for xis in c.refined.values():
            for xi in xis:
                homes[xi] = homes.get(xi, 0) + 1

    def collapsed(xi: Index, deg: int) -> str:
        # A whole degree collapses to R^i when it is a single class owned by one component.
        if per_weight[deg] == 1 and homes[xi] == 1:
            return f"R^{deg}"
        return f"R^{format_index(xi, desc)}"

    names = ["R_" + label_name(c.label, desc) for c in report.components]
    lines = [
        f"# Lefschetz decomposition (g = {desc.g}, family {family.value}, h = {report.h})",
        "",
        "R = " + " ⊕ ".join(names),
        "",
        f"Algebraic part: R_{label_name(report.algebraic_part, desc)}; "
        f"odd part: R_{label_name(report.odd_part, desc)}",
    ]
    for c, name in zip(report.components, names):
        flat = [(deg, xi) for deg, xis in c.refined.items() for xi in xis]
        levels = sorted(c.levels.items(), reverse=True)
        dims = [sum(x.mult * x.dim for x in cons) for _, cons in levels]
        lines += [
            "",
            f"## {name}",
            "",
            f"{name} = " + " ⊕ ".join(collapsed(xi, deg) for deg, xi in flat),
            f"{name} = " + " ⊕ ".join(f"{name}^{format_index(xi, desc)}" for _, xi in flat),
            "",
            f"- depth: {c.depth}",
            f"- degrees: {', '.join(str(deg) for deg in c.refined)}",
            "- level dims (primitive first): " + ", ".join(map(str, dims)),
        ]
        for e, cons in levels:
            body = " ⊕ ".join(
                (f"{x.mult}·" if x.mult > 1 else "") + f"{_mu_name(x.mu, family)} [dim {x.dim}]"
                for x in cons
            )
            lines.append(f"- e = {e} (degree {desc.g - e}): {body}")
        core = c.core
        lines += [
            f"- core: B = {core.algebra}, primitive part = {core.primitive_copies} "
            f"cop{'y' if core.primitive_copies == 1 else 'ies'} of the core",
            f"- shape: {name} ≅ {core.shape}",
            f"- core rank (realization): {core.core_rank}; multiplicity of V_psi: {core.lefschetz_mult}",
            f"- Fourier image: {name}" + (" (fixed)" if c.fourier_fixed else ""),
        ]
    return "\n".join(lines) + "\n"
