"""Index combinatorics of the refined motivic decomposition.

Each record corresponds to one class xi in the product of the admissible
orbit sets of the simple factors.  Besides the degree it carries the dual
class, the Fourier partner with its Tate twist, the dimension over an
algebraic closure and the multiplicity of the matching isotypic piece in the
exterior algebra on H^1 (the cohomological realization).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Any, Sequence

from .characters import d_lambda, decompose_gl, exterior_powers, gl_dimension, standard_character
from .descriptor import descriptor_to_dict, parse_descriptor
from .weights import (
    AbelianDescriptor,
    OrbitClass,
    classify,
    dual_wdual,
    enumerate_adm_orbits,
    orbit_elements,
    orbit_of,
    WeightClass,
)

Index = tuple[OrbitClass, ...]


# --- labels --------------------------------------------------------------


def format_factor_weight(rep, d: int) -> str:
    if d == 1:
        return "[" + ",".join(str(lam[0]) for lam in rep) + "]"
    if len(rep) == 1:
        return "(" + ",".join(map(str, rep[0])) + ")"
    return "[" + ",".join("(" + ",".join(map(str, lam)) + ")" for lam in rep) + "]"


def format_index(xi: Index, desc: AbelianDescriptor) -> str:
    return " x ".join(
        format_factor_weight(o.representative, f.d) for o, f in zip(xi, desc.factors)
    )


def index_to_json(xi: Index) -> list:
    return [[list(lam) for lam in o.representative] for o in xi]


def index_from_json(raw: list, desc: AbelianDescriptor) -> Index:
    return tuple(
        orbit_of(tuple(tuple(lam) for lam in rep), f.group) for rep, f in zip(raw, desc.factors)
    )


# --- per-record quantities -----------------------------------------------


def dual_index(xi: Index, desc: AbelianDescriptor, conjugate: bool = False) -> Index:
    out = []
    for j, (o, f) in enumerate(zip(xi, desc.factors)):
        flag = conjugate and f.conjugation is not None
        dual = dual_wdual(o.representative, f, desc.factor_g(j), conjugate=flag)
        out.append(orbit_of(dual, f.group))
    return tuple(out)


def index_weight(xi: Index) -> int:
    return sum(o.weight for o in xi)


def fourier_partner(xi: Index, desc: AbelianDescriptor, conjugate: bool = False) -> tuple[Index, int]:
    """Partner on the dual abelian scheme and the Tate twist wt(partner) - g."""
    for j, (o, f) in enumerate(zip(xi, desc.factors)):
        if classify(o.representative, f, desc.factor_g(j)) is not WeightClass.ADM:
            raise ValueError(f"{o.representative} is not admissible")
    partner = dual_index(xi, desc, conjugate)
    return partner, index_weight(partner) - desc.g


def dim_over_closure(xi: Index, desc: AbelianDescriptor) -> int:
    total = 1
    for o, f in zip(xi, desc.factors):
        total *= sum(
            prod(gl_dimension(lam) for lam in elt)
            for elt in orbit_elements(o.representative, f.group)
        )
    return total


def index_d_lambda(xi: Index, desc: AbelianDescriptor) -> int | str:
    """d(lambda) when it is known for every factor; only n = 1 factors qualify beyond d = 1."""
    values = []
    for o, f in zip(xi, desc.factors):
        if f.d == 1:
            values.append(1)
        elif f.n == 1:
            values.append(d_lambda(o.representative[0], f))
        else:
            values.append("unknown")
    if len(values) == 1:
        return values[0]
    return 1 if all(v == 1 for v in values) else "unknown"


@lru_cache(maxsize=None)
def exterior_isotypic(d: int, m: int) -> dict[tuple[int, ...], int]:
    """Multiplicity of each GL_d-irrep in the exterior algebra on m copies of Std_d."""
    out: dict[tuple[int, ...], int] = {}
    for power in exterior_powers(standard_character(d, m)):
        out.update(decompose_gl(power, d))
    return out


def sigma_multiplicity(lam: Sequence[int], d: int, m: int) -> int:
    return exterior_isotypic(d, m).get(tuple(lam), 0)


def realization_multiplicity(xi: Index, desc: AbelianDescriptor) -> int:
    """Copies of the irreducible with highest weight xi in the exterior algebra on H^1.

    Per embedding, H^1 is m = 2g/nd copies of the standard d-dimensional module.
    """
    total = 1
    for j, (o, f) in enumerate(zip(xi, desc.factors)):
        m = f.box(desc.factor_g(j))
        for lam in o.representative:
            if any(x < 0 for x in lam):
                return 0
            total *= sigma_multiplicity(lam, f.d, m)
    return total


def coarse_map(xi: Index, desc: AbelianDescriptor) -> tuple[tuple[int, ...], ...]:
    """Gamma-orbit (lex-min representative) of sigma -> |lambda(sigma)|, per factor."""
    out = []
    for o, f in zip(xi, desc.factors):
        eta = tuple((sum(lam),) for lam in o.representative)
        out.append(tuple(x[0] for x in orbit_of(eta, f.group).representative))
    return tuple(out)


# --- report --------------------------------------------------------------


@dataclass(frozen=True)
class SummandRecord:
    xi: Index
    weight: int
    dual: Index
    fourier_partner: Index
    tate_twist: int
    dim_over_closure: int
    d_lambda_note: int | str
    realization_mult: int


@dataclass(frozen=True)
class DecompositionReport:
    descriptor: AbelianDescriptor
    records: tuple[SummandRecord, ...]
    notes: tuple[str, ...] = field(default_factory=tuple)

    def degree(self, i: int) -> list[SummandRecord]:
        return [r for r in self.records if r.weight == i]

    @property
    def total_dimension(self) -> int:
        return sum(r.realization_mult * r.dim_over_closure for r in self.records)


def make_record(xi: Index, desc: AbelianDescriptor, conjugate: bool = False) -> SummandRecord:
    partner, twist = fourier_partner(xi, desc, conjugate)
    return SummandRecord(
        xi=xi,
        weight=index_weight(xi),
        dual=dual_index(xi, desc),
        fourier_partner=partner,
        tate_twist=twist,
        dim_over_closure=dim_over_closure(xi, desc),
        d_lambda_note=index_d_lambda(xi, desc),
        realization_mult=realization_multiplicity(xi, desc),
    )


def decompose(desc: AbelianDescriptor, conjugate: bool = False) -> DecompositionReport:
    records = tuple(make_record(xi, desc, conjugate) for xi in enumerate_adm_orbits(desc))
    notes = []
    if len(desc.factors) > 1:
        notes.append("admissibility bound 2g_j/(n_j d_j) applied factor by factor")
    if conjugate:
        notes.append("Fourier partners use the complex-conjugate convention")
    notes.append("mult is the multiplicity in the cohomological realization")
    return DecompositionReport(desc, records, tuple(notes))


def beauville_table(
    desc: AbelianDescriptor, j: int, include_negative: bool = False
) -> dict[int, list[Index]]:
    """s -> classes of weight 2j - s, i.e. the summands feeding CH^j_(s).

    Negative s are dropped unless asked for; those groups are conjecturally zero.
    """
    if not 0 <= j <= desc.g:
        raise ValueError(f"codimension must lie in 0..{desc.g}")
    by_weight: dict[int, list[Index]] = {}
    for xi in enumerate_adm_orbits(desc):
        by_weight.setdefault(index_weight(xi), []).append(xi)
    return {
        2 * j - i: by_weight[i]
        for i in sorted(by_weight, reverse=True)
        if include_negative or 2 * j - i >= 0
    }


def product_index_set(dims: Sequence[int]) -> list[tuple[int, ...]]:
    """The box 0 <= i_nu <= 2 g_nu indexing summands of a product of abelian schemes."""
    if not dims or any(g < 1 for g in dims):
        raise ValueError("dimensions must be positive")
    return list(itertools.product(*(range(2 * g + 1) for g in dims)))


def product_action(index: Sequence[int]) -> str:
    """How multiplication by (m_1, ..., m_r) acts on the summand of this multidegree."""
    return " ".join(f"m{nu + 1}^{i}" for nu, i in enumerate(index))


# --- serialization -------------------------------------------------------


def report_to_dict(report: DecompositionReport) -> dict[str, Any]:
    desc = report.descriptor
    return {
        "descriptor": descriptor_to_dict(desc),
        "records": [
            {
                "xi": index_to_json(r.xi),
                "weight": r.weight,
                "dual": index_to_json(r.dual),
                "fourier": index_to_json(r.fourier_partner),
                "twist": r.tate_twist,
                "dim_closure": r.dim_over_closure,
                "d_lambda": r.d_lambda_note,
                "mult": r.realization_mult,
            }
            for r in report.records
        ],
        "degrees": {
            str(i): [format_index(r.xi, desc) for r in report.degree(i)]
            for i in range(2 * desc.g + 1)
        },
        "totals": {
            "classes": len(report.records),
            "dimension": report.total_dimension,
            "expected_dimension": 2 ** (2 * desc.g),
        },
        "notes": list(report.notes),
    }


def json_report(report: DecompositionReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> DecompositionReport:
    raw = json.loads(text)
    desc = parse_descriptor(raw["descriptor"])
    records = tuple(
        SummandRecord(
            xi=index_from_json(r["xi"], desc),
            weight=r["weight"],
            dual=index_from_json(r["dual"], desc),
            fourier_partner=index_from_json(r["fourier"], desc),
            tate_twist=r["twist"],
            dim_over_closure=r["dim_closure"],
            d_lambda_note=r["d_lambda"],
            realization_mult=r["mult"],
        )
        for r in raw["records"]
    )
    return DecompositionReport(desc, records, tuple(raw["notes"]))


def markdown_report(report: DecompositionReport) -> str:
    desc = report.descriptor
    lines = [f"# Motivic decomposition (g = {desc.g})", ""]
    for j, f in enumerate(desc.factors):
        lines.append(
            f"- factor {j}: n={f.n}, d={f.d}, |Gamma|={f.group.order}, brauer={f.brauer.value}, "
            f"involution={f.involution.value}, g_j={desc.factor_g(j)}, box={f.box(desc.factor_g(j))}"
        )
    lines += ["", "## Degrees", ""]
    for i in range(2 * desc.g + 1):
        recs = report.degree(i)
        body = " ⊕ ".join(f"R^{format_index(r.xi, desc)}" for r in recs)
        lines.append(f"R^{i} = {body}")
    lines += [
        "",
        "## Summands",
        "",
        "| xi | wt | dual | Fourier partner | twist | dim | d(lambda) | mult |",
        "|---|---|---|---|---|---|---|---|",
    ]
    for r in report.records:
        lines.append(
            f"| {format_index(r.xi, desc)} | {r.weight} | {format_index(r.dual, desc)} "
            f"| {format_index(r.fourier_partner, desc)} | {r.tate_twist} | {r.dim_over_closure} "
            f"| {r.d_lambda_note} | {r.realization_mult} |"
        )
    lines += [
        "",
        f"Total: {len(report.records)} classes, sum of mult*dim = {report.total_dimension} "
        f"(2^{2 * desc.g} = {2 ** (2 * desc.g)})",
    ]
    lines += [f"- note: {n}" for n in report.notes]
    return "\n".join(lines) + "\n"
