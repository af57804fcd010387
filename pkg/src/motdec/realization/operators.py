"""Exact operators h_alpha, L_c, Lambda_c on the exterior algebra of H^1.

Basis vectors of the exterior algebra are bitmasks over the 2g coordinates
of H^1 (the dual of H_1).  All matrices are sparse DomainMatrix objects over
QQ, so every identity below is checked with exact rational arithmetic.
"""

from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .algebras import AlgebraPreset, Vector

RELATION_NAMES = ("a", "b", "c", "d", "e", "f")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _between(p: int, q: int) -> int:
    lo, hi = min(p, q), max(p, q)
    return ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)


def _wedge_left(p: int, mask: int) -> tuple[int, int]:
    """e^p wedge e^mask as (sign, mask); sign 0 when p is already present."""
    if mask >> p & 1:
        return 0, mask
    sign = -1 if _popcount(mask & ((1 << p) - 1)) % 2 else 1
    return sign, mask | (1 << p)


def _contract(p: int, mask: int) -> tuple[int, int]:
    """Interior product by the basis vector dual to e^p."""
    if not mask >> p & 1:
        return 0, mask
    sign = -1 if _popcount(mask & ((1 << p) - 1)) % 2 else 1
    return sign, mask ^ (1 << p)


def _sparse(entries: dict[int, dict[int, Any]], size: int) -> DomainMatrix:
    clean = {r: {c: v for c, v in row.items() if v} for r, row in entries.items()}
    return DomainMatrix({r: row for r, row in clean.items() if row}, (size, size), QQ)


def _matrix_entries(m: DomainMatrix) -> dict[tuple[int, int], Any]:
    return dict(m.to_sdm().to_dok())


class ExteriorAlgebra:
    def __init__(self, dim: int):
        self.dim = dim
        self.size = 1 << dim

    def derivation(self, mat: DomainMatrix) -> DomainMatrix:
        """Extension of an endomorphism of H^1 (e^p -> sum_q mat[q,p] e^q) as a derivation."""
        cols: dict[int, list[tuple[int, Any]]] = {}
        for (q, p), v in _matrix_entries(mat).items():
            cols.setdefault(p, []).append((q, v))
        out: dict[int, dict[int, Any]] = {}
        for mask in range(self.size):
            bits = [p for p in range(self.dim) if mask >> p & 1]
            for p in bits:
                for q, v in cols.get(p, ()):
                    if q == p:
                        target, sign = mask, 1
                    elif mask >> q & 1:
                        continue
                    else:
                        target = (mask ^ (1 << p)) | (1 << q)
                        sign = -1 if _popcount(mask & _between(p, q)) % 2 else 1
                    row = out.setdefault(target, {})
                    row[mask] = row.get(mask, QQ(0)) + sign * v
        return _sparse(out, self.size)

    def wedge_two_form(self, s: DomainMatrix) -> DomainMatrix:
        """Left multiplication by sum_{p<q} s[p,q] e^p e^q."""
        terms = [(p, q, v) for (p, q), v in _matrix_entries(s).items() if p < q]
        out: dict[int, dict[int, Any]] = {}
        for mask in range(self.size):
            for p, q, v in terms:
                s1, m1 = _wedge_left(q, mask)
                if not s1:
                    continue
                s2, m2 = _wedge_left(p, m1)
                if not s2:
                    continue
                row = out.setdefault(m2, {})
                row[mask] = row.get(mask, QQ(0)) + s1 * s2 * v
        return _sparse(out, self.size)

    def contract_bivector(self, pi: DomainMatrix) -> DomainMatrix:
        """Contraction by sum_{p<q} pi[p,q] e_p e_q, i.e. iota_q after iota_p."""
        terms = [(p, q, v) for (p, q), v in _matrix_entries(pi).items() if p < q]
        out: dict[int, dict[int, Any]] = {}
        for mask in range(self.size):
            for p, q, v in terms:
                s1, m1 = _contract(p, mask)
                if not s1:
                    continue
                s2, m2 = _contract(q, m1)
                if not s2:
                    continue
                row = out.setdefault(m2, {})
                row[mask] = row.get(mask, QQ(0)) + s1 * s2 * v
        return _sparse(out, self.size)

    def scalar(self, c) -> DomainMatrix:
        return _sparse({m: {m: QQ(c)} for m in range(self.size)}, self.size)

    def degree(self, mask: int) -> int:
        return _popcount(mask)


@dataclass
class OperatorSet:
    preset: AlgebraPreset
    algebra: ExteriorAlgebra
    kappa: Any
    _cache: dict = field(default_factory=dict, repr=False)

    def h(self, alpha: Vector) -> DomainMatrix:
        key = ("h", alpha)
        if key not in self._cache:
            a = self.preset.action(alpha)
            op = -self.algebra.derivation(a.transpose())
            self._cache[key] = op + self.algebra.scalar(self.preset.trace(alpha) / QQ(2))
        return self._cache[key]

    def two_form(self, c: Vector) -> DomainMatrix:
        return self.preset.action(c).transpose() * self.preset.form

    def bivector(self, c: Vector) -> DomainMatrix:
        return self.preset.action(c) * self._form_inverse

    @cached_property
    def _form_inverse(self) -> DomainMatrix:
        return self.preset.form.to_dense().inv().to_sparse()

    def L(self, c: Vector) -> DomainMatrix:
        key = ("L", c)
        if key not in self._cache:
            self._require_symmetric(c)
            self._cache[key] = self.algebra.wedge_two_form(self.two_form(c))
        return self._cache[key]

    def Lam(self, c: Vector) -> DomainMatrix:
        key = ("Lam", c)
        if key not in self._cache:
            self._require_symmetric(c)
            raw = self.algebra.contract_bivector(self.bivector(c))
            self._cache[key] = raw * self.kappa if self.kappa != 1 else raw
        return self._cache[key]

    def _require_symmetric(self, c: Vector):
        if self.preset.dagger(c) != tuple(c):
            raise ValueError(f"{c} is not dagger-symmetric")


def _bracket(x: DomainMatrix, y: DomainMatrix) -> DomainMatrix:
    return x * y - y * x


def build_operators(preset: AlgebraPreset) -> OperatorSet:
    """Assemble the operators; the Lambda normalization is fixed by [Lambda_1, L_1] = h_1 on 1."""
    algebra = ExteriorAlgebra(2 * preset.g)
    raw = OperatorSet(preset, algebra, QQ(1))
    one = preset.unit(0)
    value = _matrix_entries(raw.Lam(one) * raw.L(one)).get((0, 0), QQ(0))
    if not value:
        raise ArithmeticError("pairing of the base two-form with its bivector vanishes")
    kappa = QQ(preset.g) / value
    return OperatorSet(preset, algebra, kappa)


# --- verification --------------------------------------------------------


def _discrepancy(x: DomainMatrix) -> Any:
    return sum((abs(v) for v in _matrix_entries(x).values()), QQ(0))


def solve_combination(target: DomainMatrix, family: list[DomainMatrix]) -> list | None:
    """Coefficients c with target = sum c_k family[k], or None."""
    entries = [_matrix_entries(m) for m in family]
    t = _matrix_entries(target)
    keys = sorted(set(t).union(*entries))
    if not keys:
        return [QQ(0)] * len(family)
    rows = [[e.get(k, QQ(0)) for e in entries] + [t.get(k, QQ(0))] for k in keys]
    aug = DomainMatrix(rows, (len(rows), len(family) + 1), QQ)
    rref, pivots = aug.rref()
    if len(family) in pivots:
        return None
    sol = [QQ(0)] * len(family)
    dense = rref.to_list()
    for r, p in enumerate(pivots):
        sol[p] = dense[r][-1]
    return sol


def _coords(preset: AlgebraPreset, x: Vector, basis: tuple[Vector, ...]) -> list | None:
    """Coordinates of a D-element in a given family of D-vectors."""
    rows = [[b[i] for b in basis] + [x[i]] for i in range(preset.dim)]
    aug = DomainMatrix(rows, (preset.dim, len(basis) + 1), QQ)
    rref, pivots = aug.rref()
    if len(basis) in pivots:
        return None
    sol = [QQ(0)] * len(basis)
    dense = rref.to_list()
    for r, p in enumerate(pivots):
        sol[p] = dense[r][-1]
    return sol


def _fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _fmt(x) -> str:
    return str(x) if not isinstance(x, (list, tuple)) else "[" + ", ".join(map(_fmt, x)) + "]"


@dataclass
class RelationCheck:
    relation: str
    pair: tuple[int, int]
    predicted: list
    solved: list | None
    discrepancy: Any

    @property
    def ok(self) -> bool:
        return self.discrepancy == 0 and self.solved is not None and list(self.solved) == list(self.predicted)


def _check(name, pair, lhs, predicted_coords, family_ops, predicted_op) -> RelationCheck:
    solved = solve_combination(lhs, family_ops) if family_ops else None
    residual = lhs - predicted_op if predicted_op is not None else lhs
    if not family_ops:
        solved = [] if not _matrix_entries(lhs) else None
    return RelationCheck(name, pair, predicted_coords, solved, _discrepancy(residual))


def verify_relations(ops: OperatorSet) -> dict[str, list[RelationCheck]]:
    """Check relations a) to f) on all basis pairs.

    a) [h_x, h_y] = h_{xy - yx}
    b) [L_c, L_c'] = 0          c) [Lambda_c, Lambda_c'] = 0
    d) [h_a, L_c] = L_{-(a^dagger c + c a)}
    e) [h_a, Lambda_c] = Lambda_{a c + c a^dagger}
    f) [Lambda_b, L_c] = h_{bc}
    """
    p = ops.preset
    d_basis = [p.unit(i) for i in range(p.dim)]
    sym = list(p.sym_basis)
    h_ops = [ops.h(x) for x in d_basis]
    L_ops = [ops.L(c) for c in sym]
    Lam_ops = [ops.Lam(c) for c in sym]
    out: dict[str, list[RelationCheck]] = {k: [] for k in RELATION_NAMES}

    def neg(x: Vector) -> Vector:
        return tuple(-v for v in x)

    def plus(x: Vector, y: Vector) -> Vector:
        return tuple(u + v for u, v in zip(x, y))

    for i, x in enumerate(d_basis):
        for j, y in enumerate(d_basis):
            target = plus(p.mul(x, y), neg(p.mul(y, x)))
            out["a"].append(_check("a", (i, j), _bracket(h_ops[i], h_ops[j]),
                                   _coords(p, target, tuple(d_basis)), h_ops, ops.h(target)))
    for i in range(len(sym)):
        for j in range(len(sym)):
            zero = [QQ(0)] * len(sym)
            out["b"].append(_check("b", (i, j), _bracket(L_ops[i], L_ops[j]), zero, L_ops, None))
            out["c"].append(_check("c", (i, j), _bracket(Lam_ops[i], Lam_ops[j]), zero, Lam_ops, None))
    for i, a in enumerate(d_basis):
        for j, c in enumerate(sym):
            t_d = neg(plus(p.mul(p.dagger(a), c), p.mul(c, a)))
            out["d"].append(_check("d", (i, j), _bracket(h_ops[i], L_ops[j]),
                                   _coords(p, t_d, tuple(sym)), L_ops, ops.L(t_d)))
            t_e = plus(p.mul(a, c), p.mul(c, p.dagger(a)))
            out["e"].append(_check("e", (i, j), _bracket(h_ops[i], Lam_ops[j]),
                                   _coords(p, t_e, tuple(sym)), Lam_ops, ops.Lam(t_e)))
    for i, b in enumerate(sym):
        for j, c in enumerate(sym):
            t_f = p.mul(b, c)
            out["f"].append(_check("f", (i, j), _bracket(Lam_ops[i], L_ops[j]),
                                   _coords(p, t_f, tuple(d_basis)), h_ops, ops.h(t_f)))
    return out


def h_id_spectrum(ops: OperatorSet) -> dict[int, list]:
    """Diagonal of h_1 grouped by exterior degree; must be the constant g - i."""
    h = _matrix_entries(ops.h(ops.preset.unit(0)))
    spectrum: dict[int, set] = {}
    for mask in range(ops.algebra.size):
        for (r, c), v in h.items():
            if r == c == mask:
                spectrum.setdefault(_popcount(mask), set()).add(v)
        if (mask, mask) not in h:
            spectrum.setdefault(_popcount(mask), set()).add(QQ(0))
    offdiag = any(r != c for r, c in h)
    if offdiag:
        raise ArithmeticError("h_1 is not diagonal in the monomial basis")
    return {i: sorted(_fraction(v) for v in vals) for i, vals in sorted(spectrum.items())}


@dataclass
class PairingCheck:
    pair: tuple[int, int]
    value: Any
    expected: Any

    @property
    def ok(self) -> bool:
        return self.value == self.expected


def trace_pairing_check(ops: OperatorSet) -> list[PairingCheck]:
    """Top coefficient of omega_c wedge Lambda_b(vol) against trace(bc)/2 for basis pairs."""
    p = ops.preset
    top = ops.algebra.size - 1
    out = []
    for i, b in enumerate(p.sym_basis):
        for j, c in enumerate(p.sym_basis):
            prod_op = ops.L(c) * ops.Lam(b)
            value = _matrix_entries(prod_op).get((top, top), QQ(0))
            out.append(PairingCheck((i, j), value, p.trace(p.mul(b, c)) / QQ(2)))
    return out


def sl2_triple_check(ops: OperatorSet) -> list[tuple[int, bool]]:
    """(Lambda_{c^-1}, h_1, L_c) is an sl_2-triple for every symmetric basis element c."""
    p = ops.preset
    h = ops.h(p.unit(0))
    out = []
    for i, c in enumerate(p.sym_basis):
        e, f = ops.Lam(p.inverse(c)), ops.L(c)
        ok = (
            _bracket(h, e) == e * QQ(2)
            and _bracket(h, f) == f * QQ(-2)
            and _bracket(e, f) == h
        )
        out.append((i, ok))
    return out


@dataclass
class VerificationReport:
    preset: AlgebraPreset
    kappa: Any
    relations: dict[str, list[RelationCheck]]
    pairing: list[PairingCheck]
    spectrum: dict[int, list]
    sl2: list[tuple[int, bool]]

    @property
    def relation_status(self) -> dict[str, bool]:
        return {k: all(c.ok for c in v) for k, v in self.relations.items()}

    @property
    def spectrum_ok(self) -> bool:
        return all(vals == [self.preset.g - i] for i, vals in self.spectrum.items())

    @property
    def ok(self) -> bool:
        return (
            all(self.relation_status.values())
            and all(c.ok for c in self.pairing)
            and self.spectrum_ok
            and all(ok for _, ok in self.sl2)
        )


def verify(preset: AlgebraPreset) -> VerificationReport:
    ops = build_operators(preset)
    rel = verify_relations(ops)
    return VerificationReport(
        preset, ops.kappa, rel, trace_pairing_check(ops), h_id_spectrum(ops), sl2_triple_check(ops)
    )


def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    p = report.preset
    return {
        "algebra": p.name,
        "g": p.g,
        "dim_D": p.dim,
        "dim_D_sym": len(p.sym_basis),
        "dim_lie_algebra": p.lie_dimension,
        "exterior_dimension": 1 << (2 * p.g),
        "kappa": str(report.kappa),
        "relations": {
            name: {
                "status": "pass" if all(c.ok for c in checks) else "fail",
                "checks": len(checks),
                "failures": [
                    {
                        "pair": list(c.pair),
                        "predicted": _fmt(c.predicted),
                        "solved": _fmt(c.solved) if c.solved is not None else None,
                        "discrepancy": str(c.discrepancy),
                    }
                    for c in checks if not c.ok
                ],
                "max_discrepancy": str(max((c.discrepancy for c in checks), default=QQ(0))),
            }
            for name, checks in report.relations.items()
        },
        "trace_pairing": {
            "status": "pass" if all(c.ok for c in report.pairing) else "fail",
            "values": [
                {"pair": list(c.pair), "value": str(c.value), "expected": str(c.expected)}
                for c in report.pairing
            ],
        },
        "h_id_spectrum": {
            "status": "pass" if report.spectrum_ok else "fail",
            "by_degree": {str(i): [str(v) for v in vals] for i, vals in report.spectrum.items()},
        },
        "sl2_triples": {
            "status": "pass" if all(ok for _, ok in report.sl2) else "fail",
            "checked": len(report.sl2),
        },
        "status": "pass" if report.ok else "fail",
    }


def json_report(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def markdown_report(report: VerificationReport) -> str:
    d = report_to_dict(report)
    lines = [
        f"# Relation verification: D = {d['algebra']}, g = {d['g']}",
        "",
        f"- dim D = {d['dim_D']}, dim D^sym = {d['dim_D_sym']}, dim g = {d['dim_lie_algebra']}",
        f"- exterior algebra dimension {d['exterior_dimension']}, Lambda normalization {d['kappa']}",
        "",
        "| check | status | cases | max discrepancy |",
        "|---|---|---|---|",
    ]
    for name, r in d["relations"].items():
        lines.append(f"| {name}) | {r['status']} | {r['checks']} | {r['max_discrepancy']} |")
    lines.append(f"| trace pairing | {d['trace_pairing']['status']} | {len(d['trace_pairing']['values'])} | |")
    lines.append(f"| h_id spectrum | {d['h_id_spectrum']['status']} | {len(d['h_id_spectrum']['by_degree'])} | |")
    lines.append(f"| sl2 triples | {d['sl2_triples']['status']} | {d['sl2_triples']['checked']} | |")
    lines += ["", f"Overall: {d['status']}"]
    return "\n".join(lines) + "\n"
