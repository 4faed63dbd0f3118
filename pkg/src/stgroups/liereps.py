"""Highest-weight bookkeeping for compact Lie algebras of rank at most 3.

Covers the connected-group side of the classification: exact Weyl
dimensions, duality typing of irreducibles, enumeration of the
six-dimensional faithful symplectic decompositions, and the cocharacter
search behind the Hodge-circle condition.  Everything is exact; weight
data is kept in fundamental-weight coordinates so cocharacters pair with
weights by a plain dot product.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "SELF_DUAL_ORTHOGONAL",
    "SELF_DUAL_SYMPLECTIC",
    "NOT_SELF_DUAL",
    "SIMPLE_FAMILIES",
    "LieAlgebraDescriptor",
    "lie_algebra",
    "all_rank_le3_algebras",
    "weyl_dim",
    "dual_weight",
    "duality_type",
    "IrrepInfo",
    "enumerate_irreps",
    "irrep_weight_multiplicities",
    "irrep_weight_rows",
    "Atom",
    "atom_dim",
    "atom_dual",
    "atom_duality",
    "SixDimRep",
    "admissible_sixdim_reps",
    "equivalent_decompositions",
    "decomposition_weight_rows",
    "hodge_sign_patterns",
    "circles_generate_densely",
    "normalize_torus_weights",
    "integer_rank",
    "saturate_columns",
]

SELF_DUAL_ORTHOGONAL = "self-dual-orthogonal"
SELF_DUAL_SYMPLECTIC = "self-dual-symplectic"
NOT_SELF_DUAL = "not-self-dual"


@dataclass(frozen=True)
class _SimpleData:
    rank: int
    # Rows are simple roots in fundamental-weight coordinates (Cartan matrix).
    cartan: tuple
    # Symmetrizers d_i = (alpha_i, alpha_i)/2, so d_i * cartan[j][i] is symmetric.
    symmetrizer: tuple
    # Positive roots as coefficient vectors over the simple roots.
    pos_roots: tuple
    # Positive coroots as coefficient vectors over the simple coroots.
    pos_coroots: tuple
    weyl_order: int
    # Permutation of fundamental weights induced by -w0.
    duality: tuple


SIMPLE_FAMILIES = {
    "sl2": _SimpleData(
        rank=1,
        cartan=((2,),),
        symmetrizer=(Fraction(1),),
        pos_roots=((1,),),
        pos_coroots=((1,),),
        weyl_order=2,
        duality=(0,),
    ),
    "sl3": _SimpleData(
        rank=2,
        cartan=((2, -1), (-1, 2)),
        symmetrizer=(Fraction(1), Fraction(1)),
        pos_roots=((1, 0), (0, 1), (1, 1)),
        pos_coroots=((1, 0), (0, 1), (1, 1)),
        weyl_order=6,
        duality=(1, 0),
    ),
    "sl4": _SimpleData(
        rank=3,
        cartan=((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
        symmetrizer=(Fraction(1), Fraction(1), Fraction(1)),
        pos_roots=(
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (0, 1, 1), (1, 1, 1),
        ),
        pos_coroots=(
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (0, 1, 1), (1, 1, 1),
        ),
        weyl_order=24,
        duality=(2, 1, 0),
    ),
    "sp4": _SimpleData(
        rank=2,
        cartan=((2, -1), (-2, 2)),
        symmetrizer=(Fraction(1), Fraction(2)),
        pos_roots=((1, 0), (0, 1), (1, 1), (2, 1)),
        pos_coroots=((1, 0), (0, 1), (1, 2), (1, 1)),
        weyl_order=8,
        duality=(0, 1),
    ),
    "sp6": _SimpleData(
        rank=3,
        cartan=((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
        symmetrizer=(Fraction(1), Fraction(1), Fraction(2)),
        pos_roots=(
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (0, 1, 1), (1, 1, 1),
            (0, 2, 1), (1, 2, 1), (2, 2, 1),
        ),
        pos_coroots=(
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (0, 1, 1), (1, 1, 1),
            (0, 1, 2), (1, 1, 2), (1, 2, 2),
        ),
        weyl_order=48,
        duality=(0, 1, 2),
    ),
    "so7": _SimpleData(
        rank=3,
        cartan=((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
        symmetrizer=(Fraction(1), Fraction(1), Fraction(1, 2)),
        pos_roots=(
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (0, 1, 1), (1, 1, 1),
            (0, 1, 2), (1, 1, 2), (1, 2, 2),
        ),
        pos_coroots=(
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (0, 1, 1), (1, 1, 1),
            (0, 2, 1), (1, 2, 1), (2, 2, 1),
        ),
        weyl_order=48,
        duality=(0, 1, 2),
    ),
    "g2": _SimpleData(
        rank=2,
        cartan=((2, -1), (-3, 2)),
        symmetrizer=(Fraction(1), Fraction(3)),
        pos_roots=((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)),
        pos_coroots=((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)),
        weyl_order=12,
        duality=(0, 1),
    ),
}

_ALIASES = {
    "so3": ("sl2",),
    "so4": ("sl2", "sl2"),
    "so5": ("sp4",),
    "so6": ("sl4",),
}


def _factor_key(family: str):
    return (SIMPLE_FAMILIES[family].rank, family)


def _check_simple_data() -> None:
    for name, data in SIMPLE_FAMILIES.items():
        n = data.rank
        c = data.cartan
        if len(c) != n or any(len(row) != n for row in c):
            raise AssertionError(f"{name}: Cartan matrix shape")
        for i in range(n):
            if c[i][i] != 2:
                raise AssertionError(f"{name}: Cartan diagonal")
            for j in range(n):
                if i != j and (c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0)):
                    raise AssertionError(f"{name}: Cartan off-diagonal")
                if data.symmetrizer[i] * c[j][i] != data.symmetrizer[j] * c[i][j]:
                    raise AssertionError(f"{name}: symmetrizer")
        if len(data.pos_roots) != len(data.pos_coroots):
            raise AssertionError(f"{name}: root/coroot count")
        dual = data.duality
        if sorted(dual) != list(range(n)):
            raise AssertionError(f"{name}: duality permutation")


_check_simple_data()


@dataclass(frozen=True)
class LieAlgebraDescriptor:
    """Reductive algebra: a torus factor times a product of simple factors."""

    torus_rank: int
    factors: tuple

    def __post_init__(self):
        if self.torus_rank < 0:
            raise ValueError("negative torus rank")
        for fam in self.factors:
            if fam not in SIMPLE_FAMILIES:
                raise ValueError(f"unknown simple family {fam!r}")
        if tuple(sorted(self.factors, key=_factor_key)) != self.factors:
            raise ValueError("factors must be sorted; use lie_algebra()")
        if self.rank > 3:
            raise ValueError("rank exceeds 3")

    @property
    def rank(self) -> int:
        return self.torus_rank + sum(SIMPLE_FAMILIES[f].rank for f in self.factors)

    @property
    def name(self) -> str:
        parts = []
        if self.torus_rank:
            parts.append(f"t{self.torus_rank}")
        parts.extend(self.factors)
        return " x ".join(parts) if parts else "0"

    @property
    def weyl_order(self) -> int:
        order = 1
        for fam in self.factors:
            order *= SIMPLE_FAMILIES[fam].weyl_order
        return order

    def __str__(self) -> str:
        return self.name


def lie_algebra(text: str) -> LieAlgebraDescriptor:
    """Parse names like ``"t1 x sl2 x sl2"`` (``*`` works as a separator too)."""
    torus = 0
    factors = []
    for token in text.replace("*", "x").split("x"):
        token = token.strip().lower()
        if not token:
            continue
        if token.startswith("t") and token[1:].isdigit():
            torus += int(token[1:])
        elif token in _ALIASES:
            factors.extend(_ALIASES[token])
        elif token in SIMPLE_FAMILIES:
            factors.append(token)
        else:
            raise ValueError(f"unrecognized factor {token!r}")
    return LieAlgebraDescriptor(torus, tuple(sorted(factors, key=_factor_key)))


def all_rank_le3_algebras() -> list:
    """The 21 nontrivial reductive algebras of rank at most 3."""
    names = sorted(SIMPLE_FAMILIES, key=lambda f: (SIMPLE_FAMILIES[f].rank, f))
    combos = [()]
    for fam in names:
        extended = []
        for combo in combos:
            total = sum(SIMPLE_FAMILIES[f].rank for f in combo)
            added = combo
            while total + SIMPLE_FAMILIES[fam].rank <= 3:
                added = added + (fam,)
                total += SIMPLE_FAMILIES[fam].rank
                extended.append(added)
        combos.extend(extended)
    out = []
    for combo in combos:
        simple_rank = sum(SIMPLE_FAMILIES[f].rank for f in combo)
        for torus in range(0, 4 - simple_rank):
            if torus == 0 and not combo:
                continue
            out.append(LieAlgebraDescriptor(torus, tuple(sorted(combo, key=_factor_key))))
    out.sort(key=lambda alg: (alg.rank, alg.name))
    return out


# ---------------------------------------------------------------------------
# Irreducibles of the simple families.


def _validate_weight(family: str, weight) -> _SimpleData:
    data = SIMPLE_FAMILIES[family]
    if len(weight) != data.rank or any(w < 0 for w in weight):
        raise ValueError(f"bad dominant weight {weight!r} for {family}")
    return data


def weyl_dim(family: str, weight) -> int:
    """Dimension of the irreducible with the given highest weight."""
    data = _validate_weight(family, weight)
    num = 1
    den = 1
    for coroot in data.pos_coroots:
        num *= sum((w + 1) * c for w, c in zip(weight, coroot))
        den *= sum(coroot)
    if num % den:
        raise AssertionError("Weyl dimension is not an integer")
    return num // den


def dual_weight(family: str, weight) -> tuple:
    data = _validate_weight(family, weight)
    return tuple(weight[j] for j in data.duality)


def duality_type(family: str, weight) -> str:
    data = _validate_weight(family, weight)
    if dual_weight(family, weight) != tuple(weight):
        return NOT_SELF_DUAL
    # Frobenius-Schur indicator (-1)^<lambda, 2 rho-check>.
    pairing = sum(
        w * c for coroot in data.pos_coroots for w, c in zip(weight, coroot)
    )
    return SELF_DUAL_SYMPLECTIC if pairing % 2 else SELF_DUAL_ORTHOGONAL


@dataclass(frozen=True)
class IrrepInfo:
    """Irreducible of a torus-free product algebra."""

    factor_weights: tuple
    dimension: int
    duality: str

    @property
    def highest_weight(self) -> tuple:
        return tuple(w for fw in self.factor_weights for w in fw)


def _weights_upto(family: str, bound: int) -> list:
    """All dominant weights with Weyl dimension <= bound, with dimensions."""
    rank = SIMPLE_FAMILIES[family].rank
    out = []

    def extend(prefix):
        if len(prefix) == rank:
            out.append((prefix, weyl_dim(family, prefix)))
            return
        k = 0
        while True:
            cand = prefix + (k,)
            padded = cand + (0,) * (rank - len(cand))
            if weyl_dim(family, padded) > bound:
                break
            extend(cand)
            k += 1

    extend(())
    return sorted(out, key=lambda item: (item[1], item[0]))


def _product_duality(factors, factor_weights) -> str:
    sign = 1
    for fam, fw in zip(factors, factor_weights):
        kind = duality_type(fam, fw)
        if kind == NOT_SELF_DUAL:
            return NOT_SELF_DUAL
        if kind == SELF_DUAL_SYMPLECTIC:
            sign = -sign
    return SELF_DUAL_SYMPLECTIC if sign < 0 else SELF_DUAL_ORTHOGONAL


def enumerate_irreps(algebra: LieAlgebraDescriptor, max_dim: int) -> list:
    """All irreducibles of dimension <= max_dim, typed by duality."""
    if not 1 <= max_dim <= 64:
        raise ValueError("max_dim must lie in 1..64")
    if algebra.torus_rank:
        raise ValueError("torus characters are unbounded; drop the torus factor")
    choices = [(fam, _weights_upto(fam, max_dim)) for fam in algebra.factors]
    out = []

    def assemble(idx, picked, dim):
        if idx == len(choices):
            out.append(
                IrrepInfo(
                    factor_weights=tuple(picked),
                    dimension=dim,
                    duality=_product_duality(algebra.factors, picked),
                )
            )
            return
        for weight, d in choices[idx][1]:
            if dim * d > max_dim:
                continue
            assemble(idx + 1, picked + [weight], dim * d)

    assemble(0, [], 1)
    out.sort(key=lambda r: (r.dimension, r.factor_weights))
    return out


# ---------------------------------------------------------------------------
# Weight multiplicities (Freudenthal), used to lay out torus weight rows.


def _solve_fraction(matrix, rhs):
    """Solve a square rational system; matrix must be invertible."""
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col])
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


@lru_cache(maxsize=None)
def _gram_alpha(family: str):
    data = SIMPLE_FAMILIES[family]
    n = data.rank
    gram = [
        [data.symmetrizer[i] * data.cartan[j][i] for j in range(n)] for i in range(n)
    ]
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise AssertionError(f"{family}: asymmetric root Gram matrix")
    return tuple(tuple(row) for row in gram)


def _inner_product(family: str, mu, nu) -> Fraction:
    """Invariant form on the weight space, arguments in fundamental coords."""
    data = SIMPLE_FAMILIES[family]
    scaled = [data.symmetrizer[j] * nu[j] for j in range(data.rank)]
    alpha_coords = _solve_fraction(_gram_alpha(family), scaled)
    return sum(
        Fraction(mu[j]) * data.symmetrizer[j] * alpha_coords[j]
        for j in range(data.rank)
    )


@lru_cache(maxsize=None)
def irrep_weight_multiplicities(family: str, weight) -> tuple:
    """Weight multiplicities of an irreducible, as ((weight, mult), ...)."""
    data = _validate_weight(family, weight)
    n = data.rank
    roots = [
        tuple(sum(coeff[k] * data.cartan[k][i] for k in range(n)) for i in range(n))
        for coeff in data.pos_roots
    ]
    root_coeffs = [tuple(coeff) for coeff in data.pos_roots]
    lam = tuple(weight)

    def shifted_norm(mu):
        shifted = tuple(m + 1 for m in mu)
        return _inner_product(family, shifted, shifted)

    top_norm = shifted_norm(lam)
    mults = {lam: 1}
    decided = {lam}
    # Freudenthal needs every higher weight settled first, so candidates are
    # processed by increasing height of lambda - mu in root coordinates.
    heap = []

    def push_children(mu, depth):
        for alpha, coeff in zip(roots, root_coeffs):
            child = tuple(m - a for m, a in zip(mu, alpha))
            heapq.heappush(heap, (depth + sum(coeff), child))

    push_children(lam, 0)
    while heap:
        depth, mu = heapq.heappop(heap)
        if mu in decided:
            continue
        decided.add(mu)
        denom = top_norm - shifted_norm(mu)
        if denom <= 0:
            continue
        acc = Fraction(0)
        for alpha, coeff in zip(roots, root_coeffs):
            k = 1
            while k * sum(coeff) <= depth:
                above = tuple(m + k * a for m, a in zip(mu, alpha))
                mult_above = mults.get(above, 0)
                if mult_above:
                    acc += mult_above * _inner_product(family, above, alpha)
                k += 1
        value = 2 * acc / denom
        if value.denominator != 1:
            raise AssertionError("Freudenthal produced a non-integer")
        if value > 0:
            mults[mu] = int(value)
            push_children(mu, depth)
    total = sum(mults.values())
    if total != weyl_dim(family, weight):
        raise AssertionError("weight multiplicities disagree with Weyl dimension")
    return tuple(sorted(mults.items(), reverse=True))


def irrep_weight_rows(family: str, weight) -> list:
    """Weights of an irreducible listed with multiplicity, highest first."""
    rows = []
    for wt, mult in irrep_weight_multiplicities(family, weight):
        rows.extend([wt] * mult)
    return rows


# ---------------------------------------------------------------------------
# Six-dimensional symplectic decompositions.

#: An atom is (torus weight vector, per-factor dominant weights).
Atom = tuple


def atom_dim(algebra: LieAlgebraDescriptor, atom: Atom) -> int:
    dim = 1
    for fam, fw in zip(algebra.factors, atom[1]):
        dim *= weyl_dim(fam, fw)
    return dim


def atom_dual(algebra: LieAlgebraDescriptor, atom: Atom) -> Atom:
    torus = tuple(-w for w in atom[0])
    weights = tuple(
        dual_weight(fam, fw) for fam, fw in zip(algebra.factors, atom[1])
    )
    return (torus, weights)


def atom_duality(algebra: LieAlgebraDescriptor, atom: Atom) -> str:
    if any(atom[0]):
        # A nonzero torus character is never self-dual.
        return NOT_SELF_DUAL
    return _product_duality(algebra.factors, atom[1])


def _atom_is_trivial(algebra: LieAlgebraDescriptor, atom: Atom) -> bool:
    return not any(atom[0]) and all(not any(fw) for fw in atom[1])


@dataclass(frozen=True)
class SixDimRep:
    """A six-dimensional faithful self-dual symplectic decomposition."""

    algebra: LieAlgebraDescriptor
    atoms: tuple

    @property
    def dims(self) -> tuple:
        return tuple(atom_dim(self.algebra, atom) for atom in self.atoms)

    def weight_rows(self):
        return decomposition_weight_rows(self.algebra, self.atoms)


def integer_rank(rows) -> int:
    """Rank over Q of a list of integer (or Fraction) vectors."""
    work = [list(map(Fraction, row)) for row in rows]
    cols = len(work[0]) if work else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


def _decomposition_valid(algebra: LieAlgebraDescriptor, atoms) -> bool:
    counts = {}
    for atom in atoms:
        counts[atom] = counts.get(atom, 0) + 1
    for atom, count in counts.items():
        dual = atom_dual(algebra, atom)
        if counts.get(dual, 0) != count:
            return False
        if atom_duality(algebra, atom) == SELF_DUAL_ORTHOGONAL and count % 2:
            return False
    for j, fam in enumerate(algebra.factors):
        if all(not any(atom[1][j]) for atom in atoms):
            return False
    if algebra.torus_rank:
        if integer_rank([atom[0] for atom in atoms]) != algebra.torus_rank:
            return False
    return True


def _torus_basis_change(source_atoms, target_atoms, rank):
    """Find B in GL(rank, Z) with {(w @ B, lams)} matching target, if any."""
    if rank == 0:
        return sorted(source_atoms) == sorted(target_atoms)
    rows = []
    picked = []
    for atom in source_atoms:
        if integer_rank(rows + [atom[0]]) > len(rows):
            rows.append(atom[0])
            picked.append(atom)
            if len(rows) == rank:
                break
    if len(rows) < rank:
        return False
    target_list = list(target_atoms)
    candidate_pools = [
        [t for t in target_list if t[1] == atom[1]] for atom in picked
    ]
    for images in itertools.product(*candidate_pools):
        matrix = [list(atom[0]) for atom in picked]
        solved = []
        ok = True
        for col in range(rank):
            rhs = [images[i][0][col] for i in range(rank)]
            try:
                column = _solve_fraction(matrix, rhs)
            except StopIteration:
                ok = False
                break
            if any(x.denominator != 1 for x in column):
                ok = False
                break
            solved.append([int(x) for x in column])
        if not ok:
            continue
        b = [[solved[col][row] for col in range(rank)] for row in range(rank)]
        det = _int_det(b)
        if det not in (1, -1):
            continue
        mapped = sorted(
            (tuple(sum(w * b[i][j] for i, w in enumerate(atom[0])) for j in range(rank)), atom[1])
            for atom in source_atoms
        )
        if mapped == sorted(target_atoms):
            return True
    return False


def _int_det(matrix) -> int:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    det = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        det += (-1) ** j * matrix[0][j] * _int_det(minor)
    return det


def equivalent_decompositions(algebra, first, second) -> bool:
    """Whether two decompositions differ only by symmetries of the algebra.

    The symmetries considered are permutations of identical simple factors
    and integral basis changes of the torus character lattice.
    """
    by_family = {}
    for idx, fam in enumerate(algebra.factors):
        by_family.setdefault(fam, []).append(idx)
    groups = list(by_family.values())
    for perm_parts in itertools.product(*[itertools.permutations(g) for g in groups]):
        perm = list(range(len(algebra.factors)))
        for original, permuted in zip(groups, perm_parts):
            for src, dst in zip(original, permuted):
                perm[src] = dst
        permuted_second = [
            (atom[0], tuple(atom[1][perm[j]] for j in range(len(perm))))
            for atom in second
        ]
        if _torus_basis_change(list(first), permuted_second, algebra.torus_rank):
            return True
    return False


def admissible_sixdim_reps(algebra: LieAlgebraDescriptor, torus_height: int = 1) -> list:
    """Six-dimensional faithful self-dual symplectic decompositions.

    Simple-factor content is enumerated exhaustively.  Torus characters are
    searched up to the given coordinate height; height 1 reaches every
    decomposition that can support a Hodge circle in saturated coordinates.
    Summands on which the whole algebra acts trivially are omitted, since a
    fixed vector rules out the required circle eigenvalues.  Results are
    deduplicated under torus basis changes and permutations of identical
    simple factors.
    """
    factor_options = [
        [w for w, _ in _weights_upto(fam, 6)] for fam in algebra.factors
    ]
    torus_vectors = list(
        itertools.product(range(-torus_height, torus_height + 1), repeat=algebra.torus_rank)
    )
    atoms = []
    for torus in torus_vectors:
        for weights in itertools.product(*factor_options) if factor_options else [()]:
            atom = (torus, tuple(weights))
            if _atom_is_trivial(algebra, atom):
                continue
            if atom_dim(algebra, atom) <= 6:
                atoms.append(atom)

    units = []
    for atom in atoms:
        dual = atom_dual(algebra, atom)
        kind = atom_duality(algebra, atom)
        if kind == SELF_DUAL_SYMPLECTIC:
            units.append(((atom,), atom_dim(algebra, atom)))
        elif kind == SELF_DUAL_ORTHOGONAL:
            units.append(((atom, atom), 2 * atom_dim(algebra, atom)))
        elif atom < dual:
            units.append(((atom, dual), 2 * atom_dim(algebra, atom)))
    units.sort()

    found = []

    def knapsack(start, remaining, chosen):
        if remaining == 0:
            decomposition = tuple(sorted(chosen))
            if _decomposition_valid(algebra, decomposition):
                found.append(decomposition)
            return
        for idx in range(start, len(units)):
            block, dim = units[idx]
            if dim <= remaining:
                knapsack(idx, remaining - dim, chosen + list(block))

    knapsack(0, 6, [])

    classes = []
    for decomposition in found:
        if any(
            equivalent_decompositions(algebra, decomposition, seen)
            for seen in classes
        ):
            continue
        classes.append(decomposition)
    return [SixDimRep(algebra, atoms) for atoms in sorted(classes)]


def decomposition_weight_rows(algebra: LieAlgebraDescriptor, atoms) -> list:
    """Six weight rows over (torus coords | factor Cartan coords)."""
    rows = []
    for atom in atoms:
        factor_rows = [
            irrep_weight_rows(fam, fw)
            for fam, fw in zip(algebra.factors, atom[1])
        ]
        for combo in itertools.product(*factor_rows) if factor_rows else [()]:
            row = tuple(atom[0]) + tuple(w for part in combo for w in part)
            rows.append(row)
    if len(rows) != 6:
        raise AssertionError("decomposition is not six-dimensional")
    return rows


# ---------------------------------------------------------------------------
# Hodge cocharacters.


def hodge_sign_patterns(rows) -> list:
    """Cocharacters whose eigenvalue exponents form the multiset {+1 x3, -1 x3}.

    Returns (exponents, solution) pairs; the solution is the rational
    cocharacter in the given coordinates.  Rational solutions are group-level
    correct: an integral cocharacter exists on the saturated torus lattice.
    """
    if not rows:
        return []
    out = []
    for signs in itertools.product((1, -1), repeat=6):
        if sum(signs) != 0:
            continue
        solution = _solve_rectangular(rows, signs)
        if solution is not None:
            out.append((signs, tuple(solution)))
    return out


def _solve_rectangular(rows, rhs):
    """Solve an overdetermined rational system; None when inconsistent."""
    m = len(rows)
    n = len(rows[0])
    a = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, m) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(m):
            if r != rank and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, m):
        if a[r][n]:
            return None
    solution = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        solution[col] = a[r][n]
    return solution


def circles_generate_densely(algebra: LieAlgebraDescriptor, solutions) -> bool:
    """Structural density test on cocharacter solutions in product coordinates.

    The circles generate a dense subgroup iff their torus projections have
    full rank and every simple factor receives a nonzero Cartan component;
    a simple factor is then filled out by its own adjoint action.
    """
    if not solutions:
        return False
    r = algebra.torus_rank
    if r and integer_rank([sol[:r] for sol in solutions]) != r:
        return False
    offset = r
    for fam in algebra.factors:
        width = SIMPLE_FAMILIES[fam].rank
        if not any(any(sol[offset:offset + width]) for sol in solutions):
            return False
        offset += width
    return True


def normalize_torus_weights(algebra: LieAlgebraDescriptor, atoms) -> tuple:
    """Rewrite torus weights in a basis of the character lattice they span.

    Two decompositions with the same normalized form cut out the same
    connected subgroup even when their torus parametrizations differ by a
    finite isogeny (for example doubled weights).
    """
    r = algebra.torus_rank
    if r == 0:
        return tuple(sorted(atoms))
    span_basis = _row_lattice_basis([atom[0] for atom in atoms])
    k = len(span_basis)
    rewritten = []
    for atom in atoms:
        coords = _solve_rectangular(
            [[span_basis[i][j] for i in range(k)] for j in range(r)], atom[0]
        )
        if coords is None or any(c.denominator != 1 for c in coords):
            raise AssertionError("torus weight outside its own span lattice")
        rewritten.append((tuple(int(c) for c in coords), atom[1]))
    return tuple(sorted(rewritten))


def _row_lattice_basis(rows) -> list:
    """Basis of the lattice generated by integer rows (Hermite-style)."""
    work = [list(row) for row in rows if any(row)]
    cols = len(rows[0]) if rows else 0
    basis = []
    for col in range(cols):
        holders = [r for r in work if r[col]]
        if not holders:
            continue
        # Euclid within the column until a single row carries the gcd.
        while len(holders) > 1:
            holders.sort(key=lambda r: abs(r[col]))
            pivot = holders[0]
            for row in holders[1:]:
                q = row[col] // pivot[col]
                for j in range(cols):
                    row[j] -= q * pivot[j]
            holders = [r for r in holders if r[col]]
        pivot = holders[0]
        if pivot[col] < 0:
            for j in range(cols):
                pivot[j] = -pivot[j]
        basis.append(tuple(pivot))
        work = [r for r in work if r is not pivot and any(r)]
    return basis


def saturate_columns(rows) -> list:
    """Rows of the saturation of the column lattice of the given matrix.

    The input is a list of integer rows; the output spans the same rational
    column space with a basis of the full lattice (R-span intersected with
    the integer lattice), returned again as rows.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    d = [list(row) for row in rows]
    # W tracks the inverse of the accumulated row operations, column-wise.
    w = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def row_op(i, j, q):
        # D_i -= q D_j, so the inverse adds q times column i to column j of W.
        for col in range(n):
            d[i][col] -= q * d[j][col]
        for row in range(m):
            w[row][j] += q * w[row][i]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        for row in range(m):
            w[row][i], w[row][j] = w[row][j], w[row][i]

    def col_op(i, j, q):
        for row in range(m):
            d[row][i] -= q * d[row][j]

    def col_swap(i, j):
        for row in range(m):
            d[row][i], d[row][j] = d[row][j], d[row][i]

    t = 0
    while t < min(m, n):
        entries = [
            (abs(d[i][j]), i, j)
            for i in range(t, m)
            for j in range(t, n)
            if d[i][j]
        ]
        if not entries:
            break
        _, pi, pj = min(entries)
        row_swap(t, pi)
        col_swap(t, pj)
        clean = False
        while not clean:
            clean = True
            for i in range(t + 1, m):
                if d[i][t]:
                    row_op(i, t, d[i][t] // d[t][t])
                    if d[i][t]:
                        row_swap(t, i)
                        clean = False
            for j in range(t + 1, n):
                if d[t][j]:
                    col_op(j, t, d[t][j] // d[t][t])
                    if d[t][j]:
                        col_swap(t, j)
                        clean = False
        t += 1
    rank = t
    return [tuple(w[row][i] for i in range(rank)) for row in range(m)]
