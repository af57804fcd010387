"""Cross-check the character computation against the combinatorial engines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..decomposition import format_index, realization_multiplicity
from ..families import LefschetzFamily
from ..lefschetz import branch_component, enumerate_components, label_name
from ..weights import AbelianDescriptor, enumerate_adm_orbits
from .multiplicities import binomial_string_count, graded_multiplicities


@dataclass
class Comparison:
    descriptor: AbelianDescriptor
    family: LefschetzFamily
    checks: dict[str, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)
    psi_mult: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def record(self, check: str, good: bool, message: str) -> None:
        self.checks[check] = self.checks.get(check, 0) + 1
        if not good:
            self.mismatches.append(f"{check}: {message}")


def compare_predictions(desc: AbelianDescriptor) -> Comparison:
    gm = graded_multiplicities(desc)
    out = Comparison(desc, gm.family, psi_mult=dict(gm.psi_mult))
    adm = enumerate_adm_orbits(desc)

    for xi in adm:
        name = format_index(xi, desc)
        got, want = gm.xi_mult.get(xi, 0), realization_multiplicity(xi, desc)
        out.record("xi multiplicity", got == want, f"{name}: character {got}, combinatorial {want}")
    for xi in gm.xi_mult:
        out.record("xi support", xi in adm, f"{format_index(xi, desc)} is not admissible")

    components = enumerate_components(desc)
    for psi, m in gm.psi_mult.items():
        name = label_name(psi, desc)
        if psi not in components:
            out.record("psi support", False, f"{name} (mult {m}) is not an enumerated component")
            continue
        out.record("psi support", True, "")
        degrees = tuple(desc.g - e for e in sorted(branch_component(psi, desc), reverse=True))
        out.record(
            "psi degrees", degrees == gm.psi_degrees[psi],
            f"{name}: branching gives {degrees}, characters give {gm.psi_degrees[psi]}",
        )
    for psi in components:
        out.record("psi nonzero", gm.psi_mult.get(psi, 0) > 0,
                   f"{label_name(psi, desc)} does not occur in the realization")

    # Summing M_psi times the branching multiplicity must recover every xi.
    recovered: dict = {}
    for psi, m in gm.psi_mult.items():
        if psi not in components:
            continue
        for constituents in branch_component(psi, desc).values():
            for c in constituents:
                recovered[c.xi] = recovered.get(c.xi, 0) + m * c.mult
    for xi in adm:
        got, want = recovered.get(xi, 0), realization_multiplicity(xi, desc)
        out.record("branching consistency", got == want,
                   f"{format_index(xi, desc)}: components give {got}, expected {want}")

    if gm.family is LefschetzFamily.CLASSICAL:
        for (k,), m in gm.psi_mult.items():
            want = binomial_string_count(desc.g, k)
            out.record("binomial strings", m == want, f"k={k}: peeled {m}, binomial {want}")
    return out


def report_to_dict(cmp: Comparison) -> dict[str, Any]:
    return {
        "family": cmp.family.value,
        "g": cmp.descriptor.g,
        "checks": dict(cmp.checks),
        "lefschetz_multiplicities": {
            label_name(psi, cmp.descriptor): m for psi, m in cmp.psi_mult.items()
        },
        "mismatches": list(cmp.mismatches),
        "status": "pass" if cmp.ok else "fail",
    }


def json_report(cmp: Comparison) -> str:
    return json.dumps(report_to_dict(cmp), indent=2, ensure_ascii=False) + "\n"


def markdown_report(cmp: Comparison) -> str:
    d = report_to_dict(cmp)
    lines = [f"# Prediction comparison ({d['family']}, g = {d['g']})", "", "| check | cases |", "|---|---|"]
    lines += [f"| {k} | {v} |" for k, v in d["checks"].items()]
    lines += ["", "Lefschetz multiplicities: "
              + ", ".join(f"{k}: {v}" for k, v in d["lefschetz_multiplicities"].items())]
    lines += [f"- mismatch: {m}" for m in d["mismatches"]]
    lines += ["", f"Overall: {d['status']}"]
    return "\n".join(lines) + "\n"
