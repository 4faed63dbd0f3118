"""Catalog of the fourteen connected-group classes inside USp(6).

Each class carries an exact embedding: basis vector k is symplectically
paired with k+3, the group sits in block form, and the Lie algebra
generators are matrices over cyclotomic numbers.  The catalog records the
facts the axiom checkers consume (dimension, commutant, endomorphism
type) and the weight data that ties the embedding back to the abstract
decomposition.  ``connected_group_search`` re-derives the list from
scratch out of the rank-at-most-3 representation theory.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import liereps
from .cyclotomic import I_UNIT, ONE, ZERO, cos_angle, sin_angle, zeta
from .linalg import Mat, commutant_basis, lie_closure, symplectic_form

__all__ = [
    "ComponentDescriptor",
    "COMPONENTS",
    "ExclusionEntry",
    "EXCLUSIONS",
    "component",
    "in_usp_algebra",
    "ambient_usp_basis",
    "plane_rotation",
    "pair_flip",
    "pair_swap",
    "pair_cycle",
    "diag_pairs",
    "HodgeCircle",
    "hodge_circles",
    "circles_generate_densely_embedded",
    "twisted_pair_flagged",
    "SearchOutcome",
    "connected_group_search",
    "match_component",
    "surviving_letters",
    "NO_CIRCLE",
    "NOT_DENSE",
    "TWISTED_PAIR",
    "SURVIVOR",
]


# ---------------------------------------------------------------------------
# Matrix builders.  Global coordinates 0,1,2 are paired with 3,4,5.


def _mat(entries) -> Mat:
    rows = [[ZERO] * 6 for _ in range(6)]
    for (i, j), value in entries.items():
        rows[i][j] = rows[i][j] + value
    return Mat(rows)


def _diag_direction(weights) -> Mat:
    """i * diag(w1, w2, w3, -w1, -w2, -w3); the basic torus directions."""
    return Mat.diag(
        [I_UNIT * int(w) for w in weights] + [-(I_UNIT * int(w)) for w in weights]
    )


def _su2_block(pairs) -> list:
    """Diagonal su(2) acting standardly on each listed symplectic pair."""
    h = {}
    x = {}
    y = {}
    for k in pairs:
        h[(k, k)] = I_UNIT
        h[(k + 3, k + 3)] = -I_UNIT
        x[(k, k + 3)] = ONE
        x[(k + 3, k)] = -ONE
        y[(k, k + 3)] = I_UNIT
        y[(k + 3, k)] = I_UNIT
    return [_mat(h), _mat(x), _mat(y)]


def _u_diag_part(tops) -> list:
    """u(n) embedded as A |-> diag(A, conj A) on the listed coordinates."""
    out = []
    for k in tops:
        out.append(_mat({(k, k): I_UNIT, (k + 3, k + 3): -I_UNIT}))
    for a, k in enumerate(tops):
        for l in tops[a + 1:]:
            out.append(_mat({
                (k, l): ONE, (l, k): -ONE,
                (k + 3, l + 3): ONE, (l + 3, k + 3): -ONE,
            }))
            out.append(_mat({
                (k, l): I_UNIT, (l, k): I_UNIT,
                (k + 3, l + 3): -I_UNIT, (l + 3, k + 3): -I_UNIT,
            }))
    return out


def _usp_block(tops) -> list:
    """Full usp(2n) on the listed coordinates and their partners."""
    out = _u_diag_part(tops)
    for a, k in enumerate(tops):
        out.append(_mat({(k, k + 3): ONE, (k + 3, k): -ONE}))
        out.append(_mat({(k, k + 3): I_UNIT, (k + 3, k): I_UNIT}))
        for l in tops[a + 1:]:
            out.append(_mat({
                (k, l + 3): ONE, (l, k + 3): ONE,
                (k + 3, l): -ONE, (l + 3, k): -ONE,
            }))
            out.append(_mat({
                (k, l + 3): I_UNIT, (l, k + 3): I_UNIT,
                (k + 3, l): I_UNIT, (l + 3, k): I_UNIT,
            }))
    return out


def _so3_diag_block() -> list:
    """so(3) embedded as R |-> diag(R, R); real rotations on both blocks."""
    out = []
    for k in range(3):
        for l in range(k + 1, 3):
            out.append(_mat({
                (k, l): ONE, (l, k): -ONE,
                (k + 3, l + 3): ONE, (l + 3, k + 3): -ONE,
            }))
    return out


def _su_diag_block(tops) -> list:
    """su(n) embedded as A |-> diag(A, conj A): traceless part of u(n)."""
    full = _u_diag_part(tops)
    torus = []
    for a in range(len(tops) - 1):
        k, l = tops[a], tops[a + 1]
        torus.append(_mat({
            (k, k): I_UNIT, (l, l): -I_UNIT,
            (k + 3, k + 3): -I_UNIT, (l + 3, l + 3): I_UNIT,
        }))
    return torus + full[len(tops):]


_COS8 = cos_angle(8)
_SIN8 = sin_angle(8)


def plane_rotation(i, j, n: int = 8, k: int = 1) -> Mat:
    """Rotation by 2*pi*k/n in the (i, j) plane, repeated on the partners.

    Lies in the unitary block diag(R, conj R), so it normalizes every
    catalog component whose coordinates it permutes consistently.
    """
    c, s = cos_angle(n, k), sin_angle(n, k)
    entries = {(a, a): ONE for a in range(6) if a not in (i, j, i + 3, j + 3)}
    for a, b in ((i, j), (i + 3, j + 3)):
        entries[(a, a)] = c
        entries[(b, b)] = c
        entries[(a, b)] = s
        entries[(b, a)] = -s
    return _mat(entries)


def pair_flip(k) -> Mat:
    """The order-4 element [[0, 1], [-1, 0]] inside the pair (k, k+3).

    Projectively an involution: it inverts the U(1) acting on the pair.
    """
    entries = {(a, a): ONE for a in range(6) if a not in (k, k + 3)}
    entries[(k, k + 3)] = ONE
    entries[(k + 3, k)] = -ONE
    return _mat(entries)


def pair_swap(k, l) -> Mat:
    """Permutation exchanging the symplectic pairs k and l."""
    entries = {}
    for a in range(6):
        entries[(a, a)] = ONE
    for a, b in ((k, l), (k + 3, l + 3)):
        del entries[(a, a)], entries[(b, b)]
        entries[(a, b)] = ONE
        entries[(b, a)] = ONE
    return _mat(entries)


def pair_cycle() -> Mat:
    """Permutation cycling the three symplectic pairs 0 -> 1 -> 2 -> 0."""
    entries = {}
    for a in range(3):
        entries[((a + 1) % 3, a)] = ONE
        entries[((a + 1) % 3 + 3, a + 3)] = ONE
    return _mat(entries)


def diag_pairs(units) -> Mat:
    """diag(u1, u2, u3, conj u1, conj u2, conj u3) for unit entries."""
    units = list(units)
    return Mat.diag(units + [u.conj() for u in units])


def _pair_rotation(k) -> Mat:
    """45-degree rotation inside the symplectic pair (k, k+3)."""
    return _su2_pair_rotation((k,))


_ST4_PROBES = {
    "A": lambda: [],
    "B": lambda: [symplectic_form(6)],
    "C": lambda: [],
    "D": lambda: [pair_flip(0)],
    "E": lambda: [pair_swap(0, 1), pair_swap(1, 2)],
    "F": lambda: [pair_flip(0), pair_swap(1, 2)],
    "G": lambda: [pair_flip(0), pair_flip(1), pair_swap(0, 1)],
    "H": lambda: [pair_flip(0), pair_swap(0, 1), pair_swap(1, 2)],
    "I": lambda: [plane_rotation(1, 2), diag_pairs([ONE, zeta(4), -zeta(4)])],
    "J": lambda: [pair_flip(0), plane_rotation(1, 2),
                  diag_pairs([ONE, zeta(4), -zeta(4)])],
    "K": lambda: [plane_rotation(1, 2), pair_flip(1) * pair_flip(2)],
    "L": lambda: [pair_flip(0), plane_rotation(1, 2),
                  pair_flip(1) * pair_flip(2)],
    "M": lambda: [plane_rotation(0, 1), pair_cycle()],
    "N": lambda: [symplectic_form(6), plane_rotation(0, 1), pair_cycle()],
}


def _su2_pair_rotation(pairs) -> Mat:
    """45-degree rotation applied simultaneously inside several pairs."""
    skip = set(pairs) | {k + 3 for k in pairs}
    entries = {(a, a): ONE for a in range(6) if a not in skip}
    for k in pairs:
        entries[(k, k)] = _COS8
        entries[(k + 3, k + 3)] = _COS8
        entries[(k, k + 3)] = _SIN8
        entries[(k + 3, k)] = -_SIN8
    return _mat(entries)


def in_usp_algebra(m: Mat) -> bool:
    """Exact membership test for the Lie algebra usp(6)."""
    j = symplectic_form(6)
    return m.is_anti_hermitian() and m.transpose() * j + j * m == Mat.zero(6)


def ambient_usp_basis() -> list:
    """The 21-element basis of the full algebra usp(6)."""
    return _usp_block((0, 1, 2))


# ---------------------------------------------------------------------------
# The catalog.


@dataclass(frozen=True)
class ComponentDescriptor:
    """One connected-group class with its exact standard embedding."""

    letter: str
    name: str
    algebra: liereps.LieAlgebraDescriptor
    atoms: tuple
    dim: int
    commutant_dim: int
    endo_type: str
    normalizer_class: str
    # Component group of the full normalizer, derived from the case
    # analysis behind the extension counts; ":" marks a semidirect product.
    normalizer_model: str
    # Weight rows carried by basis vectors 0, 1, 2; partners carry the
    # negatives.  Columns follow (torus coords | factor Cartan coords).
    coordinate_rows: tuple
    hodge_count: int

    def weight_rows(self) -> list:
        rows = [tuple(r) for r in self.coordinate_rows]
        return rows + [tuple(-w for w in r) for r in rows]

    def torus_directions(self) -> list:
        width = len(self.coordinate_rows[0])
        return [
            _diag_direction([row[k] for row in self.coordinate_rows])
            for k in range(width)
        ]

    def generators(self) -> list:
        return _GENERATORS[self.letter]()

    def conjugators(self) -> list:
        return _CONJUGATORS[self.letter]()

    def commutant(self) -> list:
        return commutant_basis(self.generators())

    def st4_probes(self) -> list:
        return _ST4_PROBES[self.letter]()


def _alg(text: str) -> liereps.LieAlgebraDescriptor:
    return liereps.lie_algebra(text)


COMPONENTS = {
    "A": ComponentDescriptor(
        letter="A", name="USp(6)", algebra=_alg("sp6"),
        atoms=(((), ((1, 0, 0),)),),
        dim=21, commutant_dim=1, endo_type="R",
        normalizer_class="indecomposable",
        normalizer_model="trivial",
        coordinate_rows=((1, 0, 0), (-1, 1, 0), (0, -1, 1)),
        hodge_count=8,
    ),
    "B": ComponentDescriptor(
        letter="B", name="U(3)", algebra=_alg("t1 x sl3"),
        atoms=(((-1,), ((0, 1),)), ((1,), ((1, 0),))),
        dim=9, commutant_dim=2, endo_type="C",
        normalizer_class="indecomposable",
        normalizer_model="C2",
        coordinate_rows=((1, 1, 0), (1, -1, 1), (1, 0, -1)),
        hodge_count=8,
    ),
    "C": ComponentDescriptor(
        letter="C", name="SU(2) x USp(4)", algebra=_alg("sl2 x sp4"),
        atoms=(((), ((0,), (1, 0))), ((), ((1,), (0, 0)))),
        dim=13, commutant_dim=2, endo_type="R x R",
        normalizer_class="split",
        normalizer_model="trivial",
        coordinate_rows=((1, 0, 0), (0, 1, 0), (0, -1, 1)),
        hodge_count=8,
    ),
    "D": ComponentDescriptor(
        letter="D", name="U(1) x USp(4)", algebra=_alg("t1 x sp4"),
        atoms=(((-1,), ((0, 0),)), ((0,), ((1, 0),)), ((1,), ((0, 0),))),
        dim=11, commutant_dim=3, endo_type="C x R",
        normalizer_class="split",
        normalizer_model="C2",
        coordinate_rows=((1, 0, 0), (0, 1, 0), (0, -1, 1)),
        hodge_count=8,
    ),
    "E": ComponentDescriptor(
        letter="E", name="SU(2) x SU(2) x SU(2)", algebra=_alg("sl2 x sl2 x sl2"),
        atoms=(((), ((0,), (0,), (1,))), ((), ((0,), (1,), (0,))),
               ((), ((1,), (0,), (0,)))),
        dim=9, commutant_dim=3, endo_type="R x R x R",
        normalizer_class="triple",
        normalizer_model="S3",
        coordinate_rows=((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        hodge_count=8,
    ),
    "F": ComponentDescriptor(
        letter="F", name="U(1) x SU(2) x SU(2)", algebra=_alg("t1 x sl2 x sl2"),
        atoms=(((-1,), ((0,), (0,))), ((0,), ((0,), (1,))),
               ((0,), ((1,), (0,))), ((1,), ((0,), (0,)))),
        dim=7, commutant_dim=4, endo_type="C x R x R",
        normalizer_class="split",
        normalizer_model="C2 x C2",
        coordinate_rows=((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        hodge_count=8,
    ),
    "G": ComponentDescriptor(
        letter="G", name="U(1) x U(1) x SU(2)", algebra=_alg("t2 x sl2"),
        atoms=(((-1, 0), ((0,),)), ((0, -1), ((0,),)), ((0, 0), ((1,),)),
               ((0, 1), ((0,),)), ((1, 0), ((0,),))),
        dim=5, commutant_dim=5, endo_type="C x C x R",
        normalizer_class="split",
        normalizer_model="C2 wr S2",
        coordinate_rows=((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        hodge_count=8,
    ),
    "H": ComponentDescriptor(
        letter="H", name="U(1) x U(1) x U(1)", algebra=_alg("t3"),
        atoms=(((-1, 0, 0), ()), ((0, -1, 0), ()), ((0, 0, -1), ()),
               ((0, 0, 1), ()), ((0, 1, 0), ()), ((1, 0, 0), ())),
        dim=3, commutant_dim=6, endo_type="C x C x C",
        normalizer_class="triple",
        normalizer_model="C2 wr S3",
        coordinate_rows=((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        hodge_count=8,
    ),
    "I": ComponentDescriptor(
        letter="I", name="SU(2) x SU(2)_2", algebra=_alg("sl2 x sl2"),
        atoms=(((), ((0,), (1,))), ((), ((0,), (1,))), ((), ((1,), (0,)))),
        dim=6, commutant_dim=5, endo_type="R x M2(R)",
        normalizer_class="split",
        normalizer_model="SO(3) x C2",
        coordinate_rows=((1, 0), (0, 1), (0, 1)),
        hodge_count=4,
    ),
    "J": ComponentDescriptor(
        letter="J", name="U(1) x SU(2)_2", algebra=_alg("t1 x sl2"),
        atoms=(((-1,), ((0,),)), ((0,), ((1,),)), ((0,), ((1,),)),
               ((1,), ((0,),))),
        dim=4, commutant_dim=6, endo_type="C x M2(R)",
        normalizer_class="split",
        normalizer_model="C2 x (SO(3) x C2)",
        coordinate_rows=((1, 0), (0, 1), (0, 1)),
        hodge_count=4,
    ),
    "K": ComponentDescriptor(
        letter="K", name="SU(2) x U(1)_2", algebra=_alg("t1 x sl2"),
        atoms=(((-1,), ((0,),)), ((-1,), ((0,),)), ((0,), ((1,),)),
               ((1,), ((0,),)), ((1,), ((0,),))),
        dim=4, commutant_dim=9, endo_type="R x M2(C)",
        normalizer_class="split",
        normalizer_model="SO(3) x C2",
        coordinate_rows=((0, 1), (1, 0), (1, 0)),
        hodge_count=4,
    ),
    "L": ComponentDescriptor(
        letter="L", name="U(1) x U(1)_2", algebra=_alg("t2"),
        atoms=(((-1, 0), ()), ((0, -1), ()), ((0, -1), ()),
               ((0, 1), ()), ((0, 1), ()), ((1, 0), ())),
        dim=2, commutant_dim=10, endo_type="C x M2(C)",
        normalizer_class="split",
        normalizer_model="C2 x (SO(3) x C2)",
        coordinate_rows=((1, 0), (0, 1), (0, 1)),
        hodge_count=4,
    ),
    "M": ComponentDescriptor(
        letter="M", name="SU(2)_3", algebra=_alg("sl2"),
        atoms=(((), ((1,),)), ((), ((1,),)), ((), ((1,),))),
        dim=3, commutant_dim=9, endo_type="M3(R)",
        normalizer_class="diagonal",
        normalizer_model="SO(3)",
        coordinate_rows=((1,), (1,), (1,)),
        hodge_count=2,
    ),
    "N": ComponentDescriptor(
        letter="N", name="U(1)_3", algebra=_alg("t1"),
        atoms=(((-1,), ()), ((-1,), ()), ((-1,), ()),
               ((1,), ()), ((1,), ()), ((1,), ())),
        dim=1, commutant_dim=18, endo_type="M3(C)",
        normalizer_class="diagonal",
        normalizer_model="PSU(3) : C2",
        coordinate_rows=((1,), (1,), (1,)),
        hodge_count=2,
    ),
}


_GENERATORS = {
    "A": lambda: _usp_block((0, 1, 2)),
    "B": lambda: _u_diag_part((0, 1, 2)),
    "C": lambda: _su2_block((0,)) + _usp_block((1, 2)),
    "D": lambda: [_diag_direction((1, 0, 0))] + _usp_block((1, 2)),
    "E": lambda: _su2_block((0,)) + _su2_block((1,)) + _su2_block((2,)),
    "F": lambda: [_diag_direction((1, 0, 0))] + _su2_block((1,)) + _su2_block((2,)),
    "G": lambda: [_diag_direction((1, 0, 0)), _diag_direction((0, 1, 0))]
    + _su2_block((2,)),
    "H": lambda: [_diag_direction((1, 0, 0)), _diag_direction((0, 1, 0)),
                  _diag_direction((0, 0, 1))],
    "I": lambda: _su2_block((0,)) + _su2_block((1, 2)),
    "J": lambda: [_diag_direction((1, 0, 0))] + _su2_block((1, 2)),
    "K": lambda: _su2_block((0,)) + [_diag_direction((0, 1, 1))],
    "L": lambda: [_diag_direction((1, 0, 0)), _diag_direction((0, 1, 1))],
    "M": lambda: _su2_block((0, 1, 2)),
    "N": lambda: [_diag_direction((1, 1, 1))],
}

_CONJUGATORS = {
    "A": lambda: [plane_rotation(0, 1), plane_rotation(1, 2), _pair_rotation(0)],
    "B": lambda: [plane_rotation(0, 1), plane_rotation(1, 2)],
    "C": lambda: [_pair_rotation(0), plane_rotation(1, 2), _pair_rotation(1)],
    "D": lambda: [plane_rotation(1, 2), _pair_rotation(1)],
    "E": lambda: [_pair_rotation(0), _pair_rotation(1), _pair_rotation(2)],
    "F": lambda: [_pair_rotation(1), _pair_rotation(2)],
    "G": lambda: [_pair_rotation(2)],
    "H": lambda: [],
    "I": lambda: [_pair_rotation(0), _su2_pair_rotation((1, 2))],
    "J": lambda: [_su2_pair_rotation((1, 2))],
    "K": lambda: [_pair_rotation(0)],
    "L": lambda: [],
    "M": lambda: [_su2_pair_rotation((0, 1, 2))],
    "N": lambda: [],
}


def component(letter: str) -> ComponentDescriptor:
    try:
        return COMPONENTS[letter.upper()]
    except KeyError:
        raise ValueError(f"no component class {letter!r}") from None


# ---------------------------------------------------------------------------
# Exclusions: connected groups that fail an axiom or the two-by-two flag.


@dataclass(frozen=True)
class ExclusionEntry:
    """A connected candidate that the classification rejects."""

    name: str
    algebra: liereps.LieAlgebraDescriptor
    atoms: tuple
    failure: str
    note: str

    def generators(self):
        builder = _EXCLUSION_GENERATORS.get(self.name)
        if builder is None:
            raise ValueError(f"no standard embedding stored for {self.name}")
        return builder()

    def st4_probes(self) -> list:
        builder = _EXCLUSION_PROBES.get(self.name)
        if builder is None:
            raise ValueError(f"no probe set stored for {self.name}")
        return builder()


NO_CIRCLE = "no-hodge-circle"
NOT_DENSE = "circles-not-dense"
TWISTED_PAIR = "twisted-pair-exclusion"
SURVIVOR = "survivor"


EXCLUSIONS = {
    "SO(3)": ExclusionEntry(
        name="SO(3)", algebra=_alg("sl2"),
        atoms=(((), ((2,),)), ((), ((2,),))),
        failure=NO_CIRCLE,
        note="weight zero appears, so no circle has the required eigenvalues; "
             "the commutant fixer is the full orthogonal group of the real "
             "structure, which is disconnected",
    ),
    "SU(3)": ExclusionEntry(
        name="SU(3)", algebra=_alg("sl3"),
        atoms=(((), ((1, 0),)), ((), ((0, 1),))),
        failure=NO_CIRCLE,
        note="circle exponents on the standard-plus-dual weights have an "
             "unsolvable parity; the commutant fixer is the full unitary "
             "group of the splitting",
    ),
    "U(2)": ExclusionEntry(
        name="U(2)", algebra=_alg("t1 x sl2"),
        atoms=(((-2,), ((0,),)), ((-1,), ((1,),)),
               ((1,), ((1,),)), ((2,), ((0,),))),
        failure=NO_CIRCLE,
        note="standard plus determinant character: the determinant line "
             "forces a half-integral cocharacter",
    ),
    "U(1) x U(2)": ExclusionEntry(
        name="U(1) x U(2)", algebra=_alg("t2 x sl2"),
        atoms=(((-1, 0), ((0,),)), ((0, -1), ((1,),)),
               ((0, 1), ((1,),)), ((1, 0), ((0,),))),
        failure=TWISTED_PAIR,
        note="passes the circle conditions and fixes only itself; excluded "
             "by the separate argument against twisted two-by-two blocks",
    ),
    "SU(2) x U(2)": ExclusionEntry(
        name="SU(2) x U(2)", algebra=_alg("t1 x sl2 x sl2"),
        atoms=(((-1,), ((1,), (0,))), ((0,), ((0,), (1,))),
               ((1,), ((1,), (0,)))),
        failure=TWISTED_PAIR,
        note="same twisted-block exclusion with the unitary line replaced "
             "by a special-unitary pair",
    ),
}

_EXCLUSION_GENERATORS = {
    "SO(3)": _so3_diag_block,
    "SU(3)": lambda: _su_diag_block((0, 1, 2)),
}

_EXCLUSION_PROBES = {
    # determinant -1 on the real structure: orthogonal but not special
    "SO(3)": lambda: [diag_pairs([-ONE, ONE, ONE])],
    # determinant i on the unitary structure: unitary but not special
    "SU(3)": lambda: [diag_pairs([zeta(4), ONE, ONE])],
}


# ---------------------------------------------------------------------------
# Hodge circles against the catalog embeddings.


@dataclass(frozen=True)
class HodgeCircle:
    """A circle with eigenvalue exponents +1, +1, +1, -1, -1, -1."""

    signs: tuple
    cocharacter: tuple
    direction: Mat


def hodge_circles(comp: ComponentDescriptor) -> list:
    """All Hodge circles of a catalog component, with embedded directions.

    Cocharacters are rational in the catalog coordinates: the embedded
    torus may be a quotient of the coordinate product, and the circle then
    moves at fractional coordinate speed while staying integral on the
    diagonal entries.
    """
    circles = []
    for signs, solution in liereps.hodge_sign_patterns(comp.weight_rows()):
        circles.append(
            HodgeCircle(
                signs=signs,
                cocharacter=solution,
                direction=_diag_direction(signs[:3]),
            )
        )
    return circles


def circles_generate_densely_embedded(comp: ComponentDescriptor) -> bool:
    """Check density of the circle subgroup on the embedded Lie algebra.

    The group generated by all Hodge circles is invariant under inner
    automorphisms, so its algebra is the smallest Ad-invariant subalgebra
    containing the circle directions.
    """
    directions = [circle.direction for circle in hodge_circles(comp)]
    if not directions:
        return False
    closure = lie_closure(
        directions, conjugators=comp.conjugators(), ad_saturate=True
    )
    return closure == comp.dim


# ---------------------------------------------------------------------------
# The search.


def twisted_pair_flagged(algebra, atoms) -> bool:
    """Whether some su(2) factor acts only through torus-twisted summands."""
    for j, fam in enumerate(algebra.factors):
        if fam != "sl2":
            continue
        occurrences = [atom for atom in atoms if any(atom[1][j])]
        if occurrences and all(any(atom[0]) for atom in occurrences):
            return True
    return False


@dataclass(frozen=True)
class SearchOutcome:
    algebra: liereps.LieAlgebraDescriptor
    atoms: tuple
    stage: str
    letter: str | None


def match_component(algebra, atoms) -> str | None:
    """Letter of the catalog class cutting out the same connected group."""
    normalized = liereps.normalize_torus_weights(algebra, atoms)
    for letter, comp in COMPONENTS.items():
        if comp.algebra != algebra:
            continue
        target = liereps.normalize_torus_weights(comp.algebra, comp.atoms)
        if liereps.equivalent_decompositions(algebra, normalized, target):
            return letter
    return None


def connected_group_search(torus_height: int = 1, algebras=None) -> list:
    """Run the connected-group classification from scratch.

    Every admissible six-dimensional decomposition of a rank-at-most-3
    algebra is pushed through the circle-existence, circle-density and
    twisted-block stages.  Survivors are matched to catalog letters, so
    distinct parametrizations of one subgroup collapse to one class.
    """
    if algebras is None:
        algebras = liereps.all_rank_le3_algebras()
    outcomes = []
    for algebra in algebras:
        for rep in liereps.admissible_sixdim_reps(algebra, torus_height):
            rows = rep.weight_rows()
            patterns = liereps.hodge_sign_patterns(rows)
            if not patterns:
                stage = NO_CIRCLE
            elif not liereps.circles_generate_densely(
                algebra, [sol for _, sol in patterns]
            ):
                stage = NOT_DENSE
            elif twisted_pair_flagged(algebra, rep.atoms):
                stage = TWISTED_PAIR
            else:
                stage = SURVIVOR
            letter = None
            if stage == SURVIVOR:
                letter = match_component(algebra, rep.atoms)
            outcomes.append(
                SearchOutcome(
                    algebra=algebra, atoms=rep.atoms, stage=stage, letter=letter
                )
            )
    return outcomes


def surviving_letters(outcomes) -> set:
    letters = set()
    for outcome in outcomes:
        if outcome.stage == SURVIVOR:
            if outcome.letter is None:
                raise AssertionError(
                    f"survivor {outcome.algebra.name} {outcome.atoms} matches "
                    "no catalog class"
                )
            letters.add(outcome.letter)
    return letters
