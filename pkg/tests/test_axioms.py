"""Axiom checker behavior on the catalog, the exclusions, and known cosets."""

import json

import pytest

from stgroups.axioms import (
    AxiomReport,
    CandidateGroup,
    check_candidate,
    check_st1,
    check_st2,
    check_st3,
    check_st4,
    component_shape,
)
from stgroups.components import (
    EXCLUSIONS,
    component,
    diag_pairs,
    pair_cycle,
    plane_rotation,
    _su2_pair_rotation,
)
from stgroups.cyclotomic import zeta
from stgroups.linalg import Mat
from stgroups.moments import A1_SQ, ExactAverageUnsupported, LAM2, SYM2

IDENT = Mat.identity(6)
LETTERS = "ABCDEFGHIJKLMN"

# index layout of the exact integrator per letter: (line slots, su2 pair slots)
SHAPES = {
    "E": ([], [(0, 3, 0), (1, 4, 1), (2, 5, 2)]),
    "F": ([0, 3], [(1, 4, 0), (2, 5, 1)]),
    "G": ([0, 1, 3, 4], [(2, 5, 0)]),
    "H": ([0, 1, 2, 3, 4, 5], []),
    "I": ([], [(0, 3, 0), (1, 4, 1), (2, 5, 1)]),
    "J": ([0, 3], [(1, 4, 0), (2, 5, 0)]),
    "K": ([1, 2, 4, 5], [(0, 3, 0)]),
    "L": ([0, 1, 2, 3, 4, 5], []),
    "M": ([], [(0, 3, 0), (1, 4, 0), (2, 5, 0)]),
    "N": ([0, 1, 2, 3, 4, 5], []),
}


def order_seven_candidate():
    reps = tuple(
        diag_pairs([zeta(7) ** k, zeta(7) ** (2 * k), zeta(7) ** (4 * k)])
        for k in range(7)
    )
    return CandidateGroup(component("N"), reps, label="order-7 cyclic")


# ---------------------------------------------------------------------------
# candidate plumbing


def test_candidate_requires_a_coset():
    with pytest.raises(ValueError):
        CandidateGroup(component("A"), ())


def test_candidate_unwraps_element_containers():
    class Box:
        elements = [IDENT]

    cand = CandidateGroup(component("A"), Box(), label="boxed")
    assert cand.coset_reps == (IDENT,)
    assert cand.name == "USp(6) [boxed]"


@pytest.mark.parametrize("letter", sorted(SHAPES))
def test_component_shape_layout(letter):
    shape = component_shape(component(letter))
    lines, pairs = SHAPES[letter]
    assert sorted(shape.lines) == lines
    assert [(i, j, f) for i, j, f, _ in shape.pairs] == pairs
    assert not any(tw for _, _, _, tw in shape.pairs)


@pytest.mark.parametrize("letter", "ABCD")
def test_component_shape_refuses_large_factors(letter):
    with pytest.raises(ExactAverageUnsupported):
        component_shape(component(letter))


# ---------------------------------------------------------------------------
# ST1 and ST2


@pytest.mark.parametrize("letter", LETTERS)
def test_probe_cosets_pass_st1(letter):
    comp = component(letter)
    cand = CandidateGroup(comp, [IDENT] + comp.st4_probes())
    assert check_st1(cand).passed


def test_st1_rejects_non_normalizing_representative():
    skew = _su2_pair_rotation((0,))
    report = check_st1(CandidateGroup(component("H"), (IDENT, skew)))
    assert report.memberships == (True, True)
    assert report.normalizations == (True, False)
    assert not report.passed


@pytest.mark.parametrize("letter", LETTERS)
def test_catalog_components_pass_st2(letter):
    report = check_st2(component(letter))
    assert report.passed and report.dense and report.circle_count > 0


# ---------------------------------------------------------------------------
# ST3, exact mode


def test_order_seven_coset_wedge_average_is_two():
    cand = order_seven_candidate()
    report = check_st3(cand, characters=[LAM2], mode="exact")
    assert report.passed and len(report.entries) == 7
    for entry in report.entries:
        assert entry.method == "exact"
        assert entry.value.is_rational_integer()
    nontrivial = report.entries[1]
    assert abs(nontrivial.value.to_complex() - 2.0) < 1e-12


def test_full_torus_wedge_average_is_three():
    report = check_st3(CandidateGroup(component("H"), (IDENT,)),
                       characters=[LAM2], mode="exact")
    assert report.passed
    assert abs(report.entries[0].value.to_complex() - 3.0) < 1e-12


def test_diagonal_su2_squared_trace_average_is_nine():
    report = check_st3(CandidateGroup(component("M"), (IDENT,)),
                       characters=[A1_SQ], mode="exact")
    assert report.passed
    assert abs(report.entries[0].value.to_complex() - 9.0) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_diagonal_su2_rotation_cosets_pass(n):
    cand = CandidateGroup(component("M"), (IDENT, plane_rotation(0, 1, n, 1)))
    assert check_st3(cand, mode="exact").passed


def test_order_five_rotation_coset_fails():
    cand = CandidateGroup(component("M"), (IDENT, plane_rotation(0, 1, 5, 1)))
    report = check_st3(cand, mode="exact")
    assert not report.passed
    failing = {(e.coset, e.character) for e in report.failures()}
    assert failing == {(1, "a1^2"), (1, "sym2"), (1, "lambda2^2")}
    # the symmetric square separates this coset; the wedge square does not
    sym = check_st3(cand, characters=[SYM2], mode="exact")
    wedge = check_st3(cand, characters=[LAM2], mode="exact")
    assert not sym.passed and wedge.passed


def test_order_nine_torus_coset_fails():
    rep = diag_pairs([zeta(9), zeta(9) ** 2, zeta(9) ** 6])
    report = check_st3(CandidateGroup(component("N"), (IDENT, rep)),
                       mode="exact")
    failing = {(e.coset, e.character) for e in report.failures()}
    assert failing == {
        (1, "a1^2"), (1, "sym2"), (1, "lambda2"), (1, "lambda2^2"),
    }


def test_exact_average_ignores_torus_shift_of_representative():
    rep = diag_pairs([zeta(9), zeta(9) ** 2, zeta(9) ** 6])
    shift = diag_pairs([zeta(5), zeta(5), zeta(5)])
    comp = component("N")
    a = check_st3(CandidateGroup(comp, (rep,)), mode="exact")
    b = check_st3(CandidateGroup(comp, (rep * shift,)), mode="exact")
    for x, y in zip(a.entries, b.entries):
        assert (x.value - y.value).is_zero()


def test_exact_verdicts_survive_inner_conjugation():
    comp = component("M")
    g = comp.conjugators()[0]
    rep = pair_cycle()
    moved = g * rep * g.inverse()
    a = check_st3(CandidateGroup(comp, (rep,)), mode="exact")
    b = check_st3(CandidateGroup(comp, (moved,)), mode="exact")
    for x, y in zip(a.entries, b.entries):
        assert (x.value - y.value).is_zero()


# ---------------------------------------------------------------------------
# ST3, structure and sampling modes


@pytest.mark.parametrize("letter", "ABCD")
def test_large_factor_components_use_the_structural_argument(letter):
    cand = CandidateGroup(component(letter), (IDENT,))
    report = check_st3(cand, mode="auto")
    assert report.passed
    assert {e.method for e in report.entries} == {"structure"}
    with pytest.raises(ExactAverageUnsupported):
        check_st3(cand, mode="exact")


def test_sampling_mode_reports_integral_estimates():
    cand = CandidateGroup(component("D"), (IDENT,))
    report = check_st3(cand, mode="mc")
    assert report.passed
    by_name = {e.character: e for e in report.entries}
    assert by_name["a1^2"].method == "mc"
    assert abs(by_name["a1^2"].estimate - 3.0) <= 3.0 * by_name["a1^2"].stderr
    assert abs(by_name["lambda2"].estimate - 2.0) <= 3.0 * by_name["lambda2"].stderr


def test_check_st3_argument_validation():
    cand = CandidateGroup(component("H"), (IDENT,))
    with pytest.raises(ValueError):
        check_st3(cand, mode="bogus")
    with pytest.raises(ValueError):
        check_st3(cand, characters=[])


# ---------------------------------------------------------------------------
# ST4


@pytest.mark.parametrize("letter", LETTERS)
def test_catalog_components_pass_st4(letter):
    report = check_st4(component(letter))
    assert report.passed
    assert report.fixer_dim == report.group_dim == component(letter).dim
    assert report.probe_escapes == ()


def test_so3_fails_st4_by_probe_escape():
    report = check_st4(EXCLUSIONS["SO(3)"])
    assert (report.group_dim, report.commutant_dim) == (3, 4)
    assert report.fixer_dim == 3
    assert report.probe_escapes == (0,)
    assert not report.passed


def test_su3_fails_st4_by_fixer_growth():
    report = check_st4(EXCLUSIONS["SU(3)"])
    assert (report.group_dim, report.commutant_dim) == (8, 2)
    assert report.fixer_dim == 9
    assert not report.passed


def test_st4_needs_a_stored_embedding():
    with pytest.raises(ValueError):
        check_st4(EXCLUSIONS["U(2)"])


# ---------------------------------------------------------------------------
# combined report


def test_order_seven_candidate_passes_everything():
    report = check_candidate(order_seven_candidate())
    assert isinstance(report, AxiomReport)
    assert report.passed
    assert report.st1.passed and report.st2.passed
    assert report.st3.passed and report.st4.passed


def test_axiom_report_serializes():
    report = check_candidate(CandidateGroup(component("H"), (IDENT,)))
    blob = json.dumps(report.to_json())
    parsed = json.loads(blob)
    assert parsed["passed"] is True
    assert {"st1", "st2", "st3", "st4"} <= set(parsed)
    assert parsed["st3"]["entries"][0]["method"] == "exact"
