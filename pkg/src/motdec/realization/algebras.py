"""Concrete models of (D, Rosati involution, H_1, E_0) for the supported families.

H_1 is D^k with D acting by left multiplication.  E_0 is an alternating form
with E_0(alpha x, y) = E_0(x, alpha^dagger y), built as a trace form and then
checked exactly.  D^sym, the dagger-symmetric part of D, parameterizes the
degree +-2 parts of the Lie algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..families import LefschetzFamily, detect_family
from ..weights import AbelianDescriptor, DescriptorError, ResourceLimitError, UnsupportedFamilyError

MAX_G = 6

Vector = tuple  # coordinates of a D-element in the preset basis


class ConstructionError(AssertionError):
    """A preset failed one of its defining identities."""


@dataclass(frozen=True)
class AlgebraPreset:
    name: str
    g: int
    basis: tuple[str, ...]
    table: tuple  # table[i][j] = coordinates of basis[i] * basis[j]
    involution: DomainMatrix  # dagger on D-coordinates (columns are images)
    copies: int
    form: DomainMatrix  # E_0 on Q^{2g}
    sym_basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def lie_dimension(self) -> int:
        return self.dim + 2 * len(self.sym_basis)

    def unit(self, i: int) -> Vector:
        return _unit(self.dim, i)

    def mul(self, x: Vector, y: Vector) -> Vector:
        return _mul(self.table, x, y)

    def dagger(self, x: Vector) -> Vector:
        return _apply(self.involution, x)

    def left_regular(self, x: Vector) -> DomainMatrix:
        return _from_columns([self.mul(x, self.unit(j)) for j in range(self.dim)])

    def action(self, x: Vector) -> DomainMatrix:
        """Matrix of x on H_1 = D^copies."""
        block = self.left_regular(x).to_list()
        n = 2 * self.g
        rows = [[QQ(0)] * n for _ in range(n)]
        for c in range(self.copies):
            o = c * self.dim
            for i in range(self.dim):
                for j in range(self.dim):
                    rows[o + i][o + j] = block[i][j]
        return DomainMatrix(rows, (n, n), QQ).to_sparse()

    def inverse(self, x: Vector) -> Vector:
        return _apply(self.left_regular(x).to_field().inv(), self.unit(0))

    def trace(self, x: Vector) -> object:
        """Trace of x acting on H_1 (a 2g-dimensional rational space)."""
        return sum(self.action(x).diagonal(), QQ(0))


def _unit(dim: int, i: int) -> Vector:
    return tuple(QQ(int(j == i)) for j in range(dim))


def _mul(table, x: Vector, y: Vector) -> Vector:
    out = [QQ(0)] * len(x)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj:
                for k, c in enumerate(table[i][j]):
                    out[k] += xi * yj * c
    return tuple(out)


def _apply(mat: DomainMatrix, x: Vector) -> Vector:
    col = DomainMatrix([[c] for c in x], (len(x), 1), QQ)
    return tuple(r[0] for r in (mat * col).to_list())


def _from_columns(cols: list[Vector]) -> DomainMatrix:
    n = len(cols)
    return DomainMatrix([[cols[j][i] for j in range(n)] for i in range(n)], (n, n), QQ)


def _quaternion_table(a: int, b: int):
    one, i, j, k = range(4)

    def v(**kw):
        out = [QQ(0)] * 4
        for name, c in kw.items():
            out["oijk".index(name)] = QQ(c)
        return tuple(out)

    t = {
        (one, one): v(o=1), (one, i): v(i=1), (one, j): v(j=1), (one, k): v(k=1),
        (i, one): v(i=1), (i, i): v(o=a), (i, j): v(k=1), (i, k): v(j=a),
        (j, one): v(j=1), (j, i): v(k=-1), (j, j): v(o=b), (j, k): v(i=-b),
        (k, one): v(k=1), (k, i): v(j=-a), (k, j): v(i=b), (k, k): v(o=-a * b),
    }
    return tuple(tuple(t[(r, c)] for c in range(4)) for r in range(4))


def _trace_form(table, s: Vector, inv: DomainMatrix) -> list[list]:
    """Matrix of (x, y) -> trace_{D/Q}(x s y^dagger) on the basis of D."""
    dim = len(s)
    units = [_unit(dim, i) for i in range(dim)]
    # dim times the first coordinate is the regular trace for every preset here.
    return [
        [QQ(dim) * _mul(table, _mul(table, units[p], s), _apply(inv, units[q]))[0]
         for q in range(dim)]
        for p in range(dim)
    ]


def _sym_basis(inv: DomainMatrix, dim: int) -> tuple[Vector, ...]:
    kernel = (inv - DomainMatrix.eye(dim, QQ)).to_field().nullspace()
    rows = kernel.to_list()
    return tuple(tuple(QQ(c) for c in r) for r in rows)


def _assemble_form(block_pairs, dim: int, copies: int, g: int) -> DomainMatrix:
    n = 2 * g
    rows = [[QQ(0)] * n for _ in range(n)]
    for (c1, c2), block in block_pairs:
        for i in range(dim):
            for j in range(dim):
                rows[c1 * dim + i][c2 * dim + j] += block[i][j]
    return DomainMatrix(rows, (n, n), QQ)


def build_realization(desc: AbelianDescriptor) -> AlgebraPreset:
    family = detect_family(desc)
    g = desc.g
    if g > MAX_G:
        raise ResourceLimitError(f"realization capped at g <= {MAX_G} (exterior algebra of dim 2^(2g))")
    f = desc.simple
    if family is LefschetzFamily.CLASSICAL:
        table = ((tuple([QQ(1)]),),)
        inv = DomainMatrix.eye(1, QQ)
        copies = 2 * g
        pairs = [((c, c + g), [[QQ(1)]]) for c in range(g)]
        pairs += [((c + g, c), [[QQ(-1)]]) for c in range(g)]
        form = _assemble_form(pairs, 1, copies, g)
        name, basis = "Q", ("1",)
    elif family is LefschetzFamily.TOTALLY_REAL:
        if f.n != 2:
            raise UnsupportedFamilyError(
                f"family gap: realization preset exists for real quadratic fields only (n={f.n})"
            )
        if g % 2:
            raise DescriptorError("a real quadratic factor needs g divisible by 2")
        m = 5 if f.quadratic_m is None else f.quadratic_m
        if m <= 1 or isqrt(m) ** 2 == m:
            raise DescriptorError(f"quadratic_m = {m} must be a positive non-square")
        table = (
            ((QQ(1), QQ(0)), (QQ(0), QQ(1))),
            ((QQ(0), QQ(1)), (QQ(m), QQ(0))),
        )
        inv = DomainMatrix.eye(2, QQ)
        copies = g
        tr = [[QQ(2), QQ(0)], [QQ(0), QQ(2 * m)]]
        neg = [[-x for x in r] for r in tr]
        half = copies // 2
        pairs = [((c, c + half), tr) for c in range(half)]
        pairs += [((c + half, c), neg) for c in range(half)]
        form = _assemble_form(pairs, 2, copies, g)
        name, basis = f"Q(sqrt({m}))", ("1", "w")
    else:
        if g % 2:
            raise DescriptorError("an indefinite quaternion factor forces g to be even")
        a, b = f.quaternion or (-1, 3)
        if a < 0 and b < 0:
            raise DescriptorError(f"({a},{b}) is a definite quaternion algebra")
        table = _quaternion_table(a, b)
        # dagger(x) = t^-1 conj(x) t with t a pure quaternion of negative square
        t_index, t_square = (1, a) if a < 0 else (2, b) if b < 0 else (3, -a * b)
        t = _unit(4, t_index)
        t_inv = tuple(c / QQ(t_square) for c in t)
        cols = []
        for j in range(4):
            conj = tuple(c if i == 0 else -c for i, c in enumerate(_unit(4, j)))
            cols.append(_mul(table, _mul(table, t_inv, conj), t))
        inv = _from_columns(cols)
        copies = g // 2
        block = _trace_form(table, t, inv)
        form = _assemble_form([((c, c), block) for c in range(copies)], 4, copies, g)
        name, basis = f"({a},{b})_Q", ("1", "i", "j", "k")
    preset = AlgebraPreset(name, g, basis, table, inv, copies, form.to_sparse(),
                           _sym_basis(inv, len(basis)))
    check_preset(preset, family)
    return preset


EXPECTED_LIE_DIMENSION = {
    LefschetzFamily.CLASSICAL: 3,
    LefschetzFamily.TOTALLY_REAL: 6,
    LefschetzFamily.QUATERNION: 10,
}


def check_preset(preset: AlgebraPreset, family: LefschetzFamily) -> None:
    e0 = preset.form
    if preset.dim * preset.copies != 2 * preset.g:
        raise ConstructionError("dim_Q(D) * copies must equal 2g")
    if e0.transpose() != -e0:
        raise ConstructionError("E_0 is not alternating")
    if e0.to_dense().det() == 0:
        raise ConstructionError("E_0 is degenerate")
    for i in range(preset.dim):
        x = preset.unit(i)
        lhs = preset.action(x).transpose() * e0
        rhs = e0 * preset.action(preset.dagger(x))
        if lhs != rhs:
            raise ConstructionError(f"E_0 is not compatible with dagger for basis element {preset.basis[i]}")
        if preset.dagger(preset.dagger(x)) != x:
            raise ConstructionError("dagger is not an involution")
    if preset.lie_dimension != EXPECTED_LIE_DIMENSION[family]:
        raise ConstructionError(
            f"dim g = {preset.lie_dimension}, expected {EXPECTED_LIE_DIMENSION[family]}"
        )
