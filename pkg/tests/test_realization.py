import pytest
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from motdec.descriptor import classical, cm_field, quaternion, totally_real
from motdec.realization.algebras import MAX_G, build_realization, check_preset
from motdec.realization.compare import compare_predictions
from motdec.realization.multiplicities import binomial_string_count, graded_multiplicities, peel_sl2
from motdec.realization.operators import (
    ExteriorAlgebra,
    build_operators,
    h_id_spectrum,
    json_report,
    solve_combination,
    trace_pairing_check,
    verify,
)
from motdec.families import detect_family
from motdec.weights import DescriptorError, ResourceLimitError, UnsupportedFamilyError
from oracles import sl2_strings_exterior


@pytest.mark.parametrize("desc,lie_dim,sym_dim", [
    (classical(1), 3, 1),
    (classical(3), 3, 1),
    (totally_real(2, 2), 6, 2),
    (quaternion(2), 10, 3),
    (quaternion(4, 2, 3), 10, 3),
    (quaternion(2, 3, -1), 10, 3),
])
def test_presets(desc, lie_dim, sym_dim):
    preset = build_realization(desc)
    check_preset(preset, detect_family(desc))
    assert preset.lie_dimension == lie_dim
    assert len(preset.sym_basis) == sym_dim
    assert preset.trace(preset.unit(0)) == 2 * desc.g


@pytest.mark.parametrize("desc,err", [
    (classical(MAX_G + 1), ResourceLimitError),
    (totally_real(3, 3), UnsupportedFamilyError),
    (cm_field(4, 4), UnsupportedFamilyError),
    (quaternion(2, -1, -1), DescriptorError),
    (totally_real(2, 2, quadratic_m=4), DescriptorError),
])
def test_preset_errors(desc, err):
    with pytest.raises(err):
        build_realization(desc)


def test_wedge_and_contraction_are_adjoint_shapes():
    alg = ExteriorAlgebra(4)
    s = DomainMatrix({0: {1: QQ(1)}, 1: {0: QQ(-1)}}, (4, 4), QQ)
    w = alg.wedge_two_form(s)
    c = alg.contract_bivector(s)
    assert w.to_sdm().to_dok() == {(0b11, 0): QQ(1), (0b1111, 0b1100): QQ(1), (0b111, 0b100): QQ(1), (0b1011, 0b1000): QQ(1)}
    assert c.transpose() == w


def test_h_id_spectrum_g1():
    ops = build_operators(build_realization(classical(1)))
    assert h_id_spectrum(ops) == {0: [1], 1: [0], 2: [-1]}


def test_L_on_unit_is_two_form():
    preset = build_realization(classical(1))
    ops = build_operators(preset)
    image = ops.L(preset.unit(0)).to_sdm().to_dok()
    assert image == {(0b11, 0): QQ(1)}


def test_normalization_gives_g_on_degree_zero():
    for desc in (classical(1), classical(2), quaternion(2)):
        preset = build_realization(desc)
        ops = build_operators(preset)
        one = preset.unit(0)
        assert (ops.Lam(one) * ops.L(one)).to_sdm().to_dok().get((0, 0)) == desc.g
        assert ops.kappa == -1


def test_solve_combination():
    a = DomainMatrix({0: {0: QQ(1)}}, (2, 2), QQ)
    b = DomainMatrix({1: {1: QQ(1)}}, (2, 2), QQ)
    assert solve_combination(a * QQ(3) + b * QQ(-2), [a, b]) == [QQ(3), QQ(-2)]
    assert solve_combination(DomainMatrix({0: {1: QQ(1)}}, (2, 2), QQ), [a, b]) is None


def test_quaternion_commutator_ij():
    preset = build_realization(quaternion(2))
    ops = build_operators(preset)
    i, j = preset.unit(1), preset.unit(2)
    bracket = ops.h(i) * ops.h(j) - ops.h(j) * ops.h(i)
    two_ij = tuple(2 * x for x in preset.mul(i, j))
    assert bracket == ops.h(two_ij)


@pytest.mark.parametrize("desc", [classical(1), classical(2), quaternion(2), totally_real(2, 2)],
                         ids=["c1", "c2", "q2", "tr2"])
def test_all_relations(desc):
    report = verify(build_realization(desc))
    assert report.relation_status == dict.fromkeys("abcdef", True)
    assert report.ok


def test_trace_pairing_values():
    preset = build_realization(classical(1))
    checks = trace_pairing_check(build_operators(preset))
    assert [(c.value, c.expected) for c in checks] == [(QQ(1), QQ(1))]
    qchecks = trace_pairing_check(build_operators(build_realization(quaternion(2))))
    assert qchecks[0].value == 2
    assert any(c.expected == 0 for c in qchecks)
    assert all(c.ok for c in qchecks)


def test_report_json_marks_status():
    text = json_report(verify(build_realization(quaternion(2))))
    assert '"status": "pass"' in text
    assert '"kappa": "-1"' in text


@pytest.mark.parametrize("g", [1, 2, 3])
def test_primitive_dimensions_by_rank(g):
    """Strings counted as dim ker(Lambda) on degree i <= g, by exact linear algebra."""
    preset = build_realization(classical(g))
    ops = build_operators(preset)
    lam = ops.Lam(preset.unit(0)).to_dense().to_Matrix()
    masks = range(1 << (2 * g))
    strings = {}
    for i in range(g + 1):
        cols = [m for m in masks if bin(m).count("1") == i]
        rank = lam.extract(list(masks), cols).rank()
        strings[g - i] = len(cols) - rank
    assert strings == sl2_strings_exterior(g)
    assert strings == {k: binomial_string_count(g, k) for k in range(g + 1)}


def test_peel_sl2():
    assert peel_sl2({2: 1, 0: 3, -2: 1}) == {0: 2, 2: 1}
    with pytest.raises(ArithmeticError):
        peel_sl2({1: 1})


def test_graded_multiplicities_quaternion():
    gm = graded_multiplicities(quaternion(4))
    assert gm.psi_mult == {(0, 2): 1, (1, 1): 4, (2, 0): 5, (0, 1): 10, (1, 0): 16, (0, 0): 14}
    top = [xi for xi in gm.xi_mult if xi[0].weight == 8]
    assert len(top) == 1 and gm.xi_mult[top[0]] == 1


@pytest.mark.parametrize("desc", [classical(3), quaternion(2), quaternion(4), totally_real(2, 2),
                                  totally_real(3, 3), totally_real(4, 4)],
                         ids=["c3", "q2", "q4", "tr2", "tr3", "tr4"])
def test_compare(desc):
    result = compare_predictions(desc)
    assert result.ok, result.mismatches
