"""Tests for highest-weight bookkeeping.

Dimension oracles below work in orthogonal coordinates from independent
data (partition shapes for type A, epsilon coordinates for types B/C, a
closed-form polynomial for g2), so they cross-check the Cartan-matrix
tables in the module rather than reusing them.
"""

import itertools
from fractions import Fraction

import pytest

from stgroups import liereps as lr


# ---------------------------------------------------------------------------
# Oracles.


def oracle_dim_sl(n, coords):
    """Type A_{n-1} via partition coordinates l_i = a_i + ... + a_{n-1}."""
    lam = [sum(coords[i:]) for i in range(n - 1)] + [0]
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


def oracle_dim_sp(n, coords):
    """Type C_n in epsilon coordinates; omega_k = e_1 + ... + e_k."""
    lam = [sum(coords[i:]) for i in range(n)]
    rho = [n - i for i in range(n)]
    shifted = [a + b for a, b in zip(lam, rho)]
    value = Fraction(1)
    for i in range(n):
        value *= Fraction(shifted[i], rho[i])
        for j in range(i + 1, n):
            value *= Fraction(shifted[i] - shifted[j], rho[i] - rho[j])
            value *= Fraction(shifted[i] + shifted[j], rho[i] + rho[j])
    assert value.denominator == 1
    return int(value)


def oracle_dim_so_odd(n, coords):
    """Type B_n in epsilon coordinates; the last node is the spin node."""
    lam = [sum(coords[i:n - 1]) + Fraction(coords[n - 1], 2) for i in range(n)]
    rho = [Fraction(2 * (n - i) - 1, 2) for i in range(n)]
    shifted = [a + b for a, b in zip(lam, rho)]
    value = Fraction(1)
    for i in range(n):
        value *= shifted[i] / rho[i]
        for j in range(i + 1, n):
            value *= (shifted[i] - shifted[j]) / (rho[i] - rho[j])
            value *= (shifted[i] + shifted[j]) / (rho[i] + rho[j])
    assert value.denominator == 1
    return int(value)


def oracle_dim_g2(coords):
    """Closed form; first coordinate is the short node (7-dim fundamental)."""
    a, b = coords
    value = (
        (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3)
        * (a + 3 * b + 4) * (2 * a + 3 * b + 5)
    )
    assert value % 120 == 0
    return value // 120


ORACLES = {
    "sl2": lambda w: oracle_dim_sl(2, w),
    "sl3": lambda w: oracle_dim_sl(3, w),
    "sl4": lambda w: oracle_dim_sl(4, w),
    "sp4": lambda w: oracle_dim_sp(2, w),
    "sp6": lambda w: oracle_dim_sp(3, w),
    "so7": lambda w: oracle_dim_so_odd(3, w),
    "g2": oracle_dim_g2,
}


# ---------------------------------------------------------------------------
# Dimensions.


@pytest.mark.parametrize("family", sorted(lr.SIMPLE_FAMILIES))
def test_weyl_dim_matches_orthogonal_oracle(family):
    rank = lr.SIMPLE_FAMILIES[family].rank
    spread = 5 if rank == 1 else (4 if rank == 2 else 3)
    for weight in itertools.product(range(spread), repeat=rank):
        assert lr.weyl_dim(family, weight) == ORACLES[family](weight)


@pytest.mark.parametrize(
    "family,weight,expected",
    [
        ("sl2", (3,), 4),
        ("sl3", (1, 1), 8),
        ("sl3", (3, 0), 10),
        ("sl3", (2, 2), 27),
        ("sl4", (0, 1, 0), 6),
        ("sl4", (1, 0, 1), 15),
        ("sl4", (2, 0, 0), 10),
        ("sp4", (1, 0), 4),
        ("sp4", (0, 1), 5),
        ("sp4", (2, 0), 10),
        ("sp4", (0, 2), 14),
        ("sp4", (1, 1), 16),
        ("sp4", (3, 0), 20),
        ("sp6", (1, 0, 0), 6),
        ("sp6", (0, 1, 0), 14),
        ("sp6", (0, 0, 1), 14),
        ("sp6", (2, 0, 0), 21),
        ("sp6", (1, 1, 0), 64),
        ("so7", (1, 0, 0), 7),
        ("so7", (0, 0, 1), 8),
        ("so7", (0, 1, 0), 21),
        ("so7", (2, 0, 0), 27),
        ("so7", (1, 0, 1), 48),
        ("so7", (0, 0, 2), 35),
        ("g2", (1, 0), 7),
        ("g2", (0, 1), 14),
        ("g2", (2, 0), 27),
        ("g2", (1, 1), 64),
    ],
)
def test_known_dimensions(family, weight, expected):
    assert lr.weyl_dim(family, weight) == expected


def test_weyl_dim_rejects_bad_weights():
    with pytest.raises(ValueError):
        lr.weyl_dim("sl3", (1,))
    with pytest.raises(ValueError):
        lr.weyl_dim("sl2", (-1,))


# ---------------------------------------------------------------------------
# Duality.


@pytest.mark.parametrize(
    "family,weight,expected",
    [
        ("sl2", (1,), lr.SELF_DUAL_SYMPLECTIC),
        ("sl2", (2,), lr.SELF_DUAL_ORTHOGONAL),
        ("sl2", (3,), lr.SELF_DUAL_SYMPLECTIC),
        ("sl3", (1, 0), lr.NOT_SELF_DUAL),
        ("sl3", (1, 1), lr.SELF_DUAL_ORTHOGONAL),
        ("sl4", (1, 0, 0), lr.NOT_SELF_DUAL),
        ("sl4", (0, 1, 0), lr.SELF_DUAL_ORTHOGONAL),
        ("sl4", (1, 0, 1), lr.SELF_DUAL_ORTHOGONAL),
        ("sp4", (1, 0), lr.SELF_DUAL_SYMPLECTIC),
        ("sp4", (0, 1), lr.SELF_DUAL_ORTHOGONAL),
        ("sp6", (1, 0, 0), lr.SELF_DUAL_SYMPLECTIC),
        ("sp6", (0, 1, 0), lr.SELF_DUAL_ORTHOGONAL),
        ("sp6", (0, 0, 1), lr.SELF_DUAL_SYMPLECTIC),
        ("so7", (1, 0, 0), lr.SELF_DUAL_ORTHOGONAL),
        ("so7", (0, 0, 1), lr.SELF_DUAL_ORTHOGONAL),
        ("g2", (1, 0), lr.SELF_DUAL_ORTHOGONAL),
        ("g2", (0, 1), lr.SELF_DUAL_ORTHOGONAL),
    ],
)
def test_duality_type(family, weight, expected):
    assert lr.duality_type(family, weight) == expected


def test_dual_weight_is_an_involution():
    for family, data in lr.SIMPLE_FAMILIES.items():
        for weight in itertools.product(range(3), repeat=data.rank):
            dual = lr.dual_weight(family, weight)
            assert lr.dual_weight(family, dual) == weight
            assert lr.weyl_dim(family, dual) == lr.weyl_dim(family, weight)


def test_sl2_duality_alternates_with_parity():
    for a in range(8):
        expected = lr.SELF_DUAL_ORTHOGONAL if a % 2 == 0 else lr.SELF_DUAL_SYMPLECTIC
        assert lr.duality_type("sl2", (a,)) == expected


# ---------------------------------------------------------------------------
# Algebra descriptors.


def test_lie_algebra_parsing():
    alg = lr.lie_algebra("t1 x sl2 x sl2")
    assert alg.torus_rank == 1
    assert alg.factors == ("sl2", "sl2")
    assert alg.rank == 3
    assert alg.name == "t1 x sl2 x sl2"
    assert lr.lie_algebra("sp4 * sl2") == lr.lie_algebra("sl2 x sp4")
    assert lr.lie_algebra("so5") == lr.lie_algebra("sp4")
    assert lr.lie_algebra("so3 x t2") == lr.lie_algebra("t2 x sl2")
    assert lr.lie_algebra("so4") == lr.lie_algebra("sl2 x sl2")
    assert lr.lie_algebra("so6") == lr.lie_algebra("sl4")


def test_lie_algebra_rejects_garbage():
    with pytest.raises(ValueError):
        lr.lie_algebra("e8")
    with pytest.raises(ValueError):
        lr.lie_algebra("sl2 x sl2 x sl2 x sl2")


def test_all_rank_le3_algebras():
    algebras = lr.all_rank_le3_algebras()
    assert len(algebras) == 21
    names = {alg.name for alg in algebras}
    assert "t3" in names
    assert "sp6" in names
    assert "t1 x sl2 x sl2" in names
    assert "sl2 x g2" in names
    assert "0" not in names
    assert len(names) == 21
    assert all(alg.rank <= 3 for alg in algebras)


def test_weyl_orders():
    expected = {
        "sl2": 2, "sl3": 6, "sl4": 24,
        "sp4": 8, "sp6": 48, "so7": 48, "g2": 12,
    }
    for family, order in expected.items():
        assert lr.SIMPLE_FAMILIES[family].weyl_order == order
    assert lr.lie_algebra("sl2 x sp4").weyl_order == 16


# ---------------------------------------------------------------------------
# Irreducible enumeration.


def test_enumerate_irreps_g2_up_to_seven():
    alg = lr.lie_algebra("g2")
    reps = lr.enumerate_irreps(alg, 7)
    nontrivial = [r for r in reps if r.dimension > 1]
    assert len(nontrivial) == 1
    assert nontrivial[0].dimension == 7
    assert nontrivial[0].duality == lr.SELF_DUAL_ORTHOGONAL


def test_enumerate_irreps_sl2_up_to_four():
    reps = lr.enumerate_irreps(lr.lie_algebra("sl2"), 4)
    assert [r.dimension for r in reps] == [1, 2, 3, 4]
    assert [r.duality for r in reps] == [
        lr.SELF_DUAL_ORTHOGONAL,
        lr.SELF_DUAL_SYMPLECTIC,
        lr.SELF_DUAL_ORTHOGONAL,
        lr.SELF_DUAL_SYMPLECTIC,
    ]


def test_enumerate_irreps_so7_up_to_six_is_trivial_only():
    reps = lr.enumerate_irreps(lr.lie_algebra("so7"), 6)
    assert [r.dimension for r in reps] == [1]


def test_enumerate_irreps_sp4():
    reps = lr.enumerate_irreps(lr.lie_algebra("sp4"), 6)
    assert [(r.dimension, r.duality) for r in reps] == [
        (1, lr.SELF_DUAL_ORTHOGONAL),
        (4, lr.SELF_DUAL_SYMPLECTIC),
        (5, lr.SELF_DUAL_ORTHOGONAL),
    ]


def test_enumerate_irreps_product():
    reps = lr.enumerate_irreps(lr.lie_algebra("sl2 x sl2"), 4)
    assert sorted(r.dimension for r in reps) == [1, 2, 2, 3, 3, 4, 4, 4]
    square = next(r for r in reps if r.factor_weights == ((1,), (1,)))
    assert square.dimension == 4
    assert square.duality == lr.SELF_DUAL_ORTHOGONAL
    assert square.highest_weight == (1, 1)


def test_enumerate_irreps_input_validation():
    with pytest.raises(ValueError):
        lr.enumerate_irreps(lr.lie_algebra("sl2"), 65)
    with pytest.raises(ValueError):
        lr.enumerate_irreps(lr.lie_algebra("sl2"), 0)
    with pytest.raises(ValueError):
        lr.enumerate_irreps(lr.lie_algebra("t1 x sl2"), 4)


# ---------------------------------------------------------------------------
# Weight multiplicities.


def test_sl2_weight_strings():
    mults = dict(lr.irrep_weight_multiplicities("sl2", (3,)))
    assert mults == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}


def test_sl3_standard_weights():
    rows = lr.irrep_weight_rows("sl3", (1, 0))
    assert sorted(rows) == sorted([(1, 0), (-1, 1), (0, -1)])


def test_sl3_adjoint_has_double_zero_weight():
    mults = dict(lr.irrep_weight_multiplicities("sl3", (1, 1)))
    assert mults[(0, 0)] == 2
    assert sum(mults.values()) == 8
    assert all(m == 1 for wt, m in mults.items() if wt != (0, 0))


def test_sp4_standard_weights():
    rows = lr.irrep_weight_rows("sp4", (1, 0))
    assert sorted(rows) == sorted([(1, 0), (-1, 1), (1, -1), (-1, 0)])


def test_sp6_standard_weights():
    rows = lr.irrep_weight_rows("sp6", (1, 0, 0))
    expected = [(1, 0, 0), (-1, 1, 0), (0, -1, 1), (0, 1, -1), (1, -1, 0), (-1, 0, 0)]
    assert sorted(rows) == sorted(expected)


def test_so7_spin_weights():
    mults = dict(lr.irrep_weight_multiplicities("so7", (0, 0, 1)))
    assert sum(mults.values()) == 8
    assert all(m == 1 for m in mults.values())
    assert set(mults) == {
        (0, 0, 1), (0, 1, -1), (1, -1, 1), (-1, 0, 1),
        (0, 0, -1), (0, -1, 1), (-1, 1, -1), (1, 0, -1),
    }


def test_weight_multiplicities_sum_to_dimension():
    cases = [
        ("sp4", (1, 1)), ("sp6", (0, 1, 0)), ("sp6", (0, 0, 1)),
        ("so7", (0, 1, 0)), ("g2", (0, 1)), ("sl4", (1, 0, 1)),
    ]
    for family, weight in cases:
        total = sum(m for _, m in lr.irrep_weight_multiplicities(family, weight))
        assert total == lr.weyl_dim(family, weight)


def test_weight_multiset_is_negation_symmetric_for_self_duals():
    for family, weight in [("sp4", (0, 1)), ("g2", (1, 0)), ("so7", (1, 0, 0))]:
        mults = dict(lr.irrep_weight_multiplicities(family, weight))
        negated = {tuple(-w for w in wt): m for wt, m in mults.items()}
        assert negated == mults
        assert mults[tuple(-w for w in weight)] == 1


# ---------------------------------------------------------------------------
# Six-dimensional decompositions.


def _decomp_sets(reps):
    return [rep.atoms for rep in reps]


def _assert_contains(algebra, reps, atoms):
    atoms = tuple(sorted(atoms))
    assert any(
        lr.equivalent_decompositions(algebra, rep.atoms, atoms) for rep in reps
    ), f"no class equivalent to {atoms}"


def test_admissible_empty_cases():
    for name in ["sp4", "sl4", "so7", "g2", "sl2 x sl3", "sl2 x g2", "t1 x g2"]:
        assert lr.admissible_sixdim_reps(lr.lie_algebra(name)) == []


def test_admissible_sl2():
    reps = lr.admissible_sixdim_reps(lr.lie_algebra("sl2"))
    assert sorted(rep.dims for rep in reps) == [(2, 2, 2), (2, 4), (3, 3), (6,)]


def test_admissible_sl3_is_standard_plus_dual():
    alg = lr.lie_algebra("sl3")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 1
    _assert_contains(alg, reps, [((), ((1, 0),)), ((), ((0, 1),))])


def test_admissible_sp6_is_standard():
    reps = lr.admissible_sixdim_reps(lr.lie_algebra("sp6"))
    assert len(reps) == 1
    assert reps[0].atoms == (((), ((1, 0, 0),)),)


def test_admissible_triple_sl2():
    alg = lr.lie_algebra("sl2 x sl2 x sl2")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 1
    _assert_contains(
        alg, reps,
        [((), ((1,), (0,), (0,))), ((), ((0,), (1,), (0,))), ((), ((0,), (0,), (1,)))],
    )


def test_admissible_sl2_sp4():
    alg = lr.lie_algebra("sl2 x sp4")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 1
    _assert_contains(alg, reps, [((), ((1,), (0, 0))), ((), ((0,), (1, 0)))])


def test_admissible_double_sl2():
    alg = lr.lie_algebra("sl2 x sl2")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 3
    # Doubled standard on one factor next to the standard of the other.
    _assert_contains(
        alg, reps,
        [((), ((1,), (0,))), ((), ((0,), (1,))), ((), ((0,), (1,)))],
    )
    # Standard plus the four-dimensional irreducible of the other factor.
    _assert_contains(alg, reps, [((), ((1,), (0,))), ((), ((0,), (3,)))])
    # Irreducible tensor of the standard with the three-dimensional one.
    _assert_contains(alg, reps, [((), ((1,), (2,)))])


def test_admissible_t1_sp4():
    alg = lr.lie_algebra("t1 x sp4")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 1
    _assert_contains(
        alg, reps,
        [((1,), ((0, 0),)), ((-1,), ((0, 0),)), ((0,), ((1, 0),))],
    )


def test_admissible_t1_sl3():
    alg = lr.lie_algebra("t1 x sl3")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 1
    _assert_contains(alg, reps, [((1,), ((1, 0),)), ((-1,), ((0, 1),))])


def test_admissible_pure_torus_rank_one():
    alg = lr.lie_algebra("t1")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 1
    assert reps[0].atoms == (((-1,), ()),) * 3 + (((1,), ()),) * 3


def test_admissible_t2_classes():
    alg = lr.lie_algebra("t2")
    reps = lr.admissible_sixdim_reps(alg)
    # A doubled character line next to an independent one, its unsaturated
    # twin, and two configurations of three pairwise-distinct characters.
    assert len(reps) == 4
    _assert_contains(
        alg, reps,
        [((1, 0), ()), ((-1, 0), ()), ((0, 1), ()), ((0, -1), ()),
         ((0, 1), ()), ((0, -1), ())],
    )


def test_admissible_t1_sl2_classes():
    alg = lr.lie_algebra("t1 x sl2")
    reps = lr.admissible_sixdim_reps(alg)
    assert len(reps) == 6
    # Doubled standard next to a character line.
    _assert_contains(
        alg, reps,
        [((0,), ((1,),)), ((0,), ((1,),)), ((1,), ((0,),)), ((-1,), ((0,),))],
    )
    # Standard next to a doubled character line.
    _assert_contains(
        alg, reps,
        [((0,), ((1,),)), ((1,), ((0,),)), ((1,), ((0,),)),
         ((-1,), ((0,),)), ((-1,), ((0,),))],
    )


def test_admissible_t2_sl2_contains_twisted_class():
    alg = lr.lie_algebra("t2 x sl2")
    reps = lr.admissible_sixdim_reps(alg)
    # Untwisted: two character lines and an untwisted standard.
    _assert_contains(
        alg, reps,
        [((1, 0), ((0,),)), ((-1, 0), ((0,),)),
         ((0, 1), ((0,),)), ((0, -1), ((0,),)), ((0, 0), ((1,),))],
    )
    # Twisted: a character line and a torus-twisted standard.
    _assert_contains(
        alg, reps,
        [((1, 0), ((0,),)), ((-1, 0), ((0,),)),
         ((0, 1), ((1,),)), ((0, -1), ((1,),))],
    )


def test_admissible_t1_double_sl2_contains_twisted_class():
    alg = lr.lie_algebra("t1 x sl2 x sl2")
    reps = lr.admissible_sixdim_reps(alg)
    # Untwisted: line plus one standard from each factor.
    _assert_contains(
        alg, reps,
        [((1,), ((0,), (0,))), ((-1,), ((0,), (0,))),
         ((0,), ((1,), (0,))), ((0,), ((0,), (1,)))],
    )
    # Twisted: one factor appears only with a nonzero torus weight.
    _assert_contains(
        alg, reps,
        [((1,), ((1,), (0,))), ((-1,), ((1,), (0,))), ((0,), ((0,), (1,)))],
    )


def test_admissible_decompositions_are_valid():
    for alg in lr.all_rank_le3_algebras():
        for rep in lr.admissible_sixdim_reps(alg):
            assert sum(rep.dims) == 6
            counts = {}
            for atom in rep.atoms:
                counts[atom] = counts.get(atom, 0) + 1
            for atom, count in counts.items():
                dual = lr.atom_dual(alg, atom)
                assert counts.get(dual, 0) == count
                if lr.atom_duality(alg, atom) == lr.SELF_DUAL_ORTHOGONAL:
                    assert count % 2 == 0
            for j in range(len(alg.factors)):
                assert any(any(atom[1][j]) for atom in rep.atoms)
            if alg.torus_rank:
                assert lr.integer_rank([a[0] for a in rep.atoms]) == alg.torus_rank


# ---------------------------------------------------------------------------
# Weight rows and Hodge cocharacters.


def _rows(name, atoms):
    return lr.decomposition_weight_rows(lr.lie_algebra(name), atoms)


STANDARD_CONFIGS = {
    "A": ("sp6", [((), ((1, 0, 0),))]),
    "B": ("t1 x sl3", [((1,), ((1, 0),)), ((-1,), ((0, 1),))]),
    "C": ("sl2 x sp4", [((), ((1,), (0, 0))), ((), ((0,), (1, 0)))]),
    "D": ("t1 x sp4",
          [((1,), ((0, 0),)), ((-1,), ((0, 0),)), ((0,), ((1, 0),))]),
    "E": ("sl2 x sl2 x sl2",
          [((), ((1,), (0,), (0,))), ((), ((0,), (1,), (0,))),
           ((), ((0,), (0,), (1,)))]),
    "F": ("t1 x sl2 x sl2",
          [((1,), ((0,), (0,))), ((-1,), ((0,), (0,))),
           ((0,), ((1,), (0,))), ((0,), ((0,), (1,)))]),
    "G": ("t2 x sl2",
          [((1, 0), ((0,),)), ((-1, 0), ((0,),)),
           ((0, 1), ((0,),)), ((0, -1), ((0,),)), ((0, 0), ((1,),))]),
    "H": ("t3",
          [((1, 0, 0), ()), ((-1, 0, 0), ()), ((0, 1, 0), ()),
           ((0, -1, 0), ()), ((0, 0, 1), ()), ((0, 0, -1), ())]),
    "I": ("sl2 x sl2",
          [((), ((1,), (0,))), ((), ((0,), (1,))), ((), ((0,), (1,)))]),
    "J": ("t1 x sl2",
          [((0,), ((1,),)), ((0,), ((1,),)),
           ((1,), ((0,),)), ((-1,), ((0,),))]),
    "K": ("t1 x sl2",
          [((0,), ((1,),)), ((1,), ((0,),)), ((1,), ((0,),)),
           ((-1,), ((0,),)), ((-1,), ((0,),))]),
    "L": ("t2",
          [((1, 0), ()), ((-1, 0), ()), ((0, 1), ()), ((0, -1), ()),
           ((0, 1), ()), ((0, -1), ())]),
    "M": ("sl2", [((), ((1,),))] * 3),
    "N": ("t1", [((1,), ())] * 3 + [((-1,), ())] * 3),
}

EXPECTED_CIRCLES = {
    "A": 8, "B": 8, "C": 8, "D": 8, "E": 8, "F": 8, "G": 8, "H": 8,
    "I": 4, "J": 4, "K": 4, "L": 4, "M": 2, "N": 2,
}


@pytest.mark.parametrize("letter", sorted(STANDARD_CONFIGS))
def test_hodge_pattern_counts(letter):
    name, atoms = STANDARD_CONFIGS[letter]
    rows = _rows(name, atoms)
    patterns = lr.hodge_sign_patterns(rows)
    assert len(patterns) == EXPECTED_CIRCLES[letter]
    for signs, _ in patterns:
        assert sorted(signs) == [-1, -1, -1, 1, 1, 1]


@pytest.mark.parametrize("letter", sorted(STANDARD_CONFIGS))
def test_standard_configs_are_dense(letter):
    name, atoms = STANDARD_CONFIGS[letter]
    alg = lr.lie_algebra(name)
    rows = lr.decomposition_weight_rows(alg, atoms)
    solutions = [sol for _, sol in lr.hodge_sign_patterns(rows)]
    assert lr.circles_generate_densely(alg, solutions)


def test_unsaturated_torus_parametrization_still_finds_circles():
    # Doubled characters describe the same subtorus; the rational search
    # must accept them, as the circle exists after saturation.
    rows = [(2,)] * 3 + [(-2,)] * 3
    patterns = lr.hodge_sign_patterns(rows)
    assert len(patterns) == 2
    assert patterns[0][1][0].denominator == 2


def test_rational_cocharacter_for_index_three_lattice():
    # The determinant-one parametrization of the type-B group hits the
    # central circle only at a third of integral speed.
    name, atoms = STANDARD_CONFIGS["B"]
    rows = _rows(name, atoms)
    fractional = [
        sol for _, sol in lr.hodge_sign_patterns(rows)
        if any(c.denominator == 3 for c in sol)
    ]
    assert len(fractional) == 6


def test_twisted_standard_config_is_dense_but_flagged_case():
    # The unitary-times-twisted-standard configuration passes the circle
    # conditions; excluding it requires the separate two-by-two flag.
    alg = lr.lie_algebra("t2 x sl2")
    atoms = [((1, 0), ((0,),)), ((-1, 0), ((0,),)),
             ((0, 1), ((1,),)), ((0, -1), ((1,),))]
    rows = lr.decomposition_weight_rows(alg, atoms)
    solutions = [sol for _, sol in lr.hodge_sign_patterns(rows)]
    assert solutions
    assert lr.circles_generate_densely(alg, solutions)


def test_plain_unitary_pair_config_has_no_circle():
    # Standard plus determinant character of a rank-one unitary pair needs
    # a half-integral cocharacter on an odd lattice: no circle at all.
    alg = lr.lie_algebra("t1 x sl2")
    atoms = [((1,), ((1,),)), ((-1,), ((1,),)),
             ((2,), ((0,),)), ((-2,), ((0,),))]
    rows = lr.decomposition_weight_rows(alg, atoms)
    assert lr.hodge_sign_patterns(rows) == []


def test_distinct_character_triples_fail():
    # Three pairwise-distinct characters of a two-torus: either no circle
    # (parity obstruction) or a single circle generating only a subtorus.
    full = [((1, 0), ()), ((-1, 0), ()), ((0, 1), ()), ((0, -1), ()),
            ((1, 1), ()), ((-1, -1), ())]
    alg = lr.lie_algebra("t2")
    assert lr.hodge_sign_patterns(lr.decomposition_weight_rows(alg, full)) == []
    mixed = [((1, 0), ()), ((-1, 0), ()), ((1, 1), ()), ((-1, -1), ()),
             ((1, -1), ()), ((-1, 1), ())]
    solutions = [s for _, s in lr.hodge_sign_patterns(
        lr.decomposition_weight_rows(alg, mixed))]
    assert solutions
    assert not lr.circles_generate_densely(alg, solutions)


def test_so3_style_weights_have_no_circle():
    # The three-dimensional orthogonal irreducible doubled: eigenvalue
    # exponents contain zeros, so no sign pattern is reachable.
    alg = lr.lie_algebra("sl2")
    atoms = [((), ((2,),)), ((), ((2,),))]
    rows = lr.decomposition_weight_rows(alg, atoms)
    assert lr.hodge_sign_patterns(rows) == []


def test_su3_style_weights_have_no_circle():
    # Adjoint-free: standard plus dual of the unit-determinant group has a
    # parity obstruction once the center is gone from the torus data.
    alg = lr.lie_algebra("sl3")
    atoms = [((), ((1, 0),)), ((), ((0, 1),))]
    rows = lr.decomposition_weight_rows(alg, atoms)
    assert lr.hodge_sign_patterns(rows) == []


# ---------------------------------------------------------------------------
# Torus weight normalization and lattice saturation.


def test_normalize_doubled_character():
    alg = lr.lie_algebra("t1")
    doubled = [((2,), ())] * 3 + [((-2,), ())] * 3
    normalized = lr.normalize_torus_weights(alg, doubled)
    assert normalized == (((-1,), ()),) * 3 + (((1,), ()),) * 3


def test_normalize_identifies_unsaturated_doubled_line():
    alg = lr.lie_algebra("t2")
    unsaturated = [((1, 1), ()), ((-1, -1), ()), ((1, 1), ()), ((-1, -1), ()),
                   ((1, -1), ()), ((-1, 1), ())]
    saturated = [((1, 0), ()), ((-1, 0), ()), ((1, 0), ()), ((-1, 0), ()),
                 ((0, 1), ()), ((0, -1), ())]
    a = lr.normalize_torus_weights(alg, unsaturated)
    b = lr.normalize_torus_weights(alg, saturated)
    assert lr.equivalent_decompositions(alg, a, b)


def test_saturate_columns_divides_out_content():
    rows = [(2,), (2,), (2,), (-2,), (-2,), (-2,)]
    saturated = lr.saturate_columns(rows)
    assert saturated in (
        [(1,), (1,), (1,), (-1,), (-1,), (-1,)],
        [(-1,), (-1,), (-1,), (1,), (1,), (1,)],
    )


def test_saturate_columns_makes_circles_integral():
    name, atoms = STANDARD_CONFIGS["B"]
    rows = _rows(name, atoms)
    saturated = lr.saturate_columns(rows)
    for signs, _ in lr.hodge_sign_patterns(rows):
        solution = lr.hodge_sign_patterns(saturated)
        matching = [sol for s, sol in solution if s == signs]
        assert matching and all(c.denominator == 1 for c in matching[0])


def test_integer_rank():
    assert lr.integer_rank([(1, 2), (2, 4)]) == 1
    assert lr.integer_rank([(1, 0), (0, 1)]) == 2
    assert lr.integer_rank([(0, 0)]) == 0


def test_equivalent_decompositions_detects_sign_flip():
    alg = lr.lie_algebra("t1 x sl3")
    first = (((1,), ((1, 0),)), ((-1,), ((0, 1),)))
    second = (((1,), ((0, 1),)), ((-1,), ((1, 0),)))
    assert lr.equivalent_decompositions(alg, first, second)


def test_inequivalent_decompositions():
    alg = lr.lie_algebra("t1 x sl2")
    doubled_std = (((0,), ((1,),)), ((0,), ((1,),)),
                   ((1,), ((0,),)), ((-1,), ((0,),)))
    doubled_line = (((0,), ((1,),)), ((1,), ((0,),)), ((1,), ((0,),)),
                    ((-1,), ((0,),)), ((-1,), ((0,),)))
    assert not lr.equivalent_decompositions(alg, doubled_std, doubled_line)
