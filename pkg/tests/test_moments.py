from fractions import Fraction

import pytest

from stgroups.cyclotomic import cos_angle, rational, sin_angle, zeta
from stgroups.linalg import Mat
from stgroups.moments import (
    A1,
    A1_LAM2,
    A1_SQ,
    DEFAULT_FAMILY,
    LAM2,
    LAM3,
    SYM2,
    CharacterSpec,
    ComponentShape,
    LaurentPoly,
    coset_character_average,
    haar_expectation,
    power_traces,
)


def diag_torus_shape():
    # u -> diag(u,u,u, u^-1,u^-1,u^-1)
    return ComponentShape(
        6, 1, {0: (1,), 1: (1,), 2: (1,), 3: (-1,), 4: (-1,), 5: (-1,)}, []
    )


def full_torus_shape():
    return ComponentShape(
        6,
        3,
        {
            0: (1, 0, 0), 1: (0, 1, 0), 2: (0, 0, 1),
            3: (-1, 0, 0), 4: (0, -1, 0), 5: (0, 0, -1),
        },
        [],
    )


def diagonal_su2_shape():
    return ComponentShape(6, 0, {}, [(0, 3, 0, False), (1, 4, 0, False), (2, 5, 0, False)])


def emb(b):
    z = Mat.zero(3)
    return Mat.block([[b, z], [z, b.conj()]])


def rot_coset(n, k=1):
    c, s = cos_angle(n, k), sin_angle(n, k)
    r = Mat([[c, -s, 0], [s, c, 0], [0, 0, 1]])
    return Mat.block([[r, Mat.zero(3)], [Mat.zero(3), r]])


def test_su2_entry_moments():
    # E[(tr g)^2] = 1 and E[tr(g^2)] = -1 for Haar SU(2)
    a = LaurentPoly.symbol(("a", 0))
    abar = LaurentPoly.symbol(("A", 0))
    b = LaurentPoly.symbol(("b", 0))
    bbar = LaurentPoly.symbol(("B", 0))
    tr = a + abar
    assert haar_expectation(tr * tr) == rational(1)
    tr_sq = a * a + abar * abar - LaurentPoly.const(2) * b * bbar
    assert haar_expectation(tr_sq) == rational(-1)
    # |a|^4 has Dirichlet moment 1/3; |a b|^2 has 1/6
    assert haar_expectation(a * a * abar * abar) == rational(Fraction(1, 3))
    assert haar_expectation(a * abar * b * bbar) == rational(Fraction(1, 6))
    assert haar_expectation(a * b) == rational(0)


def test_torus_constant_term():
    t = LaurentPoly.torus(0)
    tinv = LaurentPoly.torus(0, -1)
    assert haar_expectation(t * tinv + t) == rational(1)
    assert haar_expectation(t ** 3) == rational(0)


def test_laurent_conj():
    p = LaurentPoly.torus(0) * zeta(3) + LaurentPoly.symbol(("a", 1))
    q = p.conj()
    assert q == LaurentPoly.torus(0, -1) * zeta(3, 2) + LaurentPoly.symbol(("A", 1))


def test_diag_torus_coset_average_is_norm_of_trace():
    b7 = Mat.diag([zeta(7), zeta(7, 2), zeta(7, 4)])
    got = coset_character_average(diag_torus_shape(), emb(b7), LAM2)
    assert got == rational(2)


def test_full_torus_identity_lambda2():
    got = coset_character_average(full_torus_shape(), Mat.identity(6), LAM2)
    assert got == rational(3)


def test_su2_cubed_identity_a1sq():
    got = coset_character_average(diagonal_su2_shape(), Mat.identity(6), A1_SQ)
    assert got == rational(9)


@pytest.mark.parametrize(
    "n,lam2,sym2",
    [(1, 6, 3), (2, 2, -1), (3, 0, 0), (4, 0, 1), (6, 2, 2)],
)
def test_su2_rotation_cosets(n, lam2, sym2):
    r = rot_coset(n)
    assert coset_character_average(diagonal_su2_shape(), r, LAM2) == rational(lam2)
    assert coset_character_average(diagonal_su2_shape(), r, SYM2) == rational(sym2)


def test_rotation_order_five_breaks_integrality():
    r = rot_coset(5)
    v = coset_character_average(diagonal_su2_shape(), r, SYM2)
    assert not v.is_rational_integer()
    # lambda2 alone is integral here; the sum rule needs both characters
    assert coset_character_average(diagonal_su2_shape(), r, LAM2) == rational(1)


def test_cyclic_component_criterion():
    def all_integral(n):
        return all(
            coset_character_average(diagonal_su2_shape(), rot_coset(n, k), ch)
            .is_rational_integer()
            for k in range(n)
            for ch in DEFAULT_FAMILY
        )

    accepted = [n for n in range(1, 13) if all_integral(n)]
    assert accepted == [1, 2, 3, 4, 6]


def test_order_nine_diagonal_coset_fails():
    b9 = Mat.diag([zeta(9), zeta(9, 2), zeta(9, 6)])
    v = coset_character_average(diag_torus_shape(), emb(b9), LAM2)
    assert not v.is_rational_integer()


def test_translation_invariance_on_torus():
    b7 = Mat.diag([zeta(7), zeta(7, 2), zeta(7, 4)])
    t = Mat.diag([zeta(12)] * 3 + [zeta(12, 11)] * 3)
    for ch in (A1, LAM2, LAM3, A1_LAM2):
        v1 = coset_character_average(diag_torus_shape(), emb(b7), ch)
        v2 = coset_character_average(diag_torus_shape(), emb(b7) * t, ch)
        assert v1 == v2


def test_power_traces_match_matrix_powers():
    shape = diagonal_su2_shape()
    m = shape.coset_matrix(rot_coset(4))
    t1, t2, t3 = power_traces(m, 3)
    # spot check: evaluating at a = 1, b = 0 gives traces of the rep itself
    def at_identity(p):
        total = rational(0)
        for mono, c in p.terms.items():
            if all(kind in ("a", "A") for (kind, f), e in mono):
                total = total + c
        return total

    r = rot_coset(4)
    assert at_identity(t1) == r.trace()
    assert at_identity(t2) == (r * r).trace()
    assert at_identity(t3) == (r ** 3).trace()


def test_character_degree_bound():
    with pytest.raises(ValueError):
        CharacterSpec({(4, 0, 1): 1})


def test_exterior_powers_on_torus_coset():
    # lambda^3 of diag(u,u,u,u^-1,...) coset picks pairs-with-inverses
    got = coset_character_average(diag_torus_shape(), Mat.identity(6), LAM3)
    # weights of Lambda^3 C^6: u^3, u (x9), u^-1 (x9), u^-3; constant term 0
    assert got == rational(0)
    got2 = coset_character_average(full_torus_shape(), Mat.identity(6), LAM3)
    # no triple of distinct weight lines multiplies to weight zero here
    assert got2 == rational(0)


def test_a1_vanishes_on_nontrivial_torus_coset():
    b7 = Mat.diag([zeta(7), zeta(7, 2), zeta(7, 4)])
    assert coset_character_average(diag_torus_shape(), emb(b7), A1) == rational(0)
