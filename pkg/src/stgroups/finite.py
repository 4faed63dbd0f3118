"""Finite matrix groups with exact entries.

Groups are closed element lists with an integer Cayley table, so everything
downstream (conjugacy classes, derived series, subgroup enumeration,
isomorphism search) runs on small-int arithmetic.  Matrices only matter at
closure time; projective groups store one canonical representative per
scalar class.

Subgroup enumeration uses cyclic extensions: every subgroup sits above its
perfect residual through a chain of prime-index normal steps, so seeding the
queue with the trivial subgroup plus all perfect subgroups (found inside the
perfect residual, which covers every 2-generated perfect group of the orders
supported here) is exhaustive.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycNum, HALF, ONE, ZERO, zeta
from .linalg import EchelonAccumulator, Mat, nullspace


class OrderCapExceeded(RuntimeError):
    """Closure grew past the configured cap (infinite group or bad cap)."""


class EnumerationBoundExceeded(RuntimeError):
    """Subgroup enumeration refused: the group is larger than the bound."""


def _cyc_key(x: CycNum):
    # magnitude before sign, so the identity coset canonicalizes to I even
    # when the scalar group contains -1
    return (x.order, x.den, tuple((abs(v), v < 0) for v in x.num))


def _mat_key(m: Mat):
    return tuple(_cyc_key(x) for r in m.rows for x in r)


@lru_cache(maxsize=None)
def _scalar_candidates(m: int, dim: int) -> tuple[Mat, ...]:
    return tuple(zeta(m, k) * Mat.identity(dim) for k in range(m))


def projective_canonical(mat: Mat, scalars) -> Mat:
    """Least scalar multiple under a fixed total order on entry tuples.

    scalars is either an integer m (quotient by mu_m = {zeta_m^k I}) or an
    explicit tuple of scalar matrices forming a group.
    """
    if isinstance(scalars, int):
        cands = _scalar_candidates(scalars, mat.nrows)[1:]
    else:
        cands = scalars
    best = mat
    best_key = _mat_key(mat)
    for s in cands:
        cand = s * mat
        k = _mat_key(cand)
        if k < best_key:
            best, best_key = cand, k
    return best


class FiniteMatrixGroup:
    """A finite group of exact matrices, optionally taken modulo scalars."""

    def __init__(self, dim, elements, generators, projective_scalars=None,
                 name=None):
        self.dim = dim
        self.elements = list(elements)
        self.generators = list(generators)
        self.projective_scalars = projective_scalars
        self.name = name
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._table = None
        self._inv = None
        self._orders = None
        self._classes = None

    # -- construction -----------------------------------------------------

    @staticmethod
    def generate(generators, projective_scalars=None, order_cap=10000,
                 name=None, dim=None):
        if generators:
            dim = generators[0].nrows
        elif dim is None:
            dim = 1
        ident = Mat.identity(dim)
        canon = (lambda m: projective_canonical(m, projective_scalars)) \
            if projective_scalars else (lambda m: m)
        gens = []
        for g in generators:
            cg = canon(g)
            if cg != ident and cg not in gens:
                gens.append(cg)
        elements = [ident]
        index = {ident: 0}
        parent = [None]  # (prefix index, generator slot) for table completion
        frontier = [0]
        while frontier:
            new_frontier = []
            for i in frontier:
                for k, g in enumerate(gens):
                    prod = canon(elements[i] * g)
                    if prod not in index:
                        index[prod] = len(elements)
                        elements.append(prod)
                        parent.append((i, k))
                        new_frontier.append(index[prod])
                        if len(elements) > order_cap:
                            raise OrderCapExceeded(
                                f"closure exceeded cap {order_cap}"
                            )
            frontier = new_frontier
        group = FiniteMatrixGroup(dim, elements, gens, projective_scalars, name)
        group._complete_table(parent)
        return group

    def _complete_table(self, parent):
        """Fill the full Cayley table from the BFS parent decomposition."""
        n = len(self.elements)
        gens = self.generators
        gen_ids = [self._index[g] for g in gens]
        table = [[-1] * n for _ in range(n)]
        canon = (lambda m: projective_canonical(m, self.projective_scalars)) \
            if self.projective_scalars else (lambda m: m)
        # generator columns by exact multiplication
        for i in range(n):
            for k, g in enumerate(gens):
                table[i][gen_ids[k]] = self._index[canon(self.elements[i] * g)]
        # remaining columns in BFS order: x*(z*g) = (x*z)*g
        for j in range(n):
            if parent[j] is None or j in gen_ids:
                continue
            z, k = parent[j]
            gk = gen_ids[k]
            for i in range(n):
                table[i][j] = table[table[i][z]][gk]
        for i in range(n):
            table[i][0] = i
            table[0][i] = i
        self._table = table
        inv = [-1] * n
        for i in range(n):
            row = table[i]
            for j in range(n):
                if row[j] == 0:
                    inv[i] = j
                    break
        self._inv = inv

    # -- basic structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, m: Mat) -> int:
        if self.projective_scalars:
            m = projective_canonical(m, self.projective_scalars)
        return self._index[m]

    def contains(self, m: Mat) -> bool:
        if self.projective_scalars:
            m = projective_canonical(m, self.projective_scalars)
        return m in self._index

    def mul(self, i: int, j: int) -> int:
        return self._table[i][j]

    def inv(self, i: int) -> int:
        return self._inv[i]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1 by table lookups."""
        return self._table[self._table[g][x]][self._inv[g]]

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self._table[x][i]
            k += 1
        return k

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [self.element_order(i) for i in range(self.order)]
        return self._orders

    def exponent(self) -> int:
        return math.lcm(*self.element_orders())

    def conjugacy_classes(self) -> list[list[int]]:
        if self._classes is None:
            n = self.order
            seen = [False] * n
            classes = []
            for i in range(n):
                if seen[i]:
                    continue
                orb = {self.conj(g, i) for g in range(n)}
                for x in orb:
                    seen[x] = True
                classes.append(sorted(orb))
            self._classes = classes
        return self._classes

    def class_of(self) -> list[int]:
        out = [0] * self.order
        for ci, cl in enumerate(self.conjugacy_classes()):
            for x in cl:
                out[x] = ci
        return out

    def center_indices(self) -> list[int]:
        n = self.order
        return [
            i for i in range(n)
            if all(self._table[i][j] == self._table[j][i] for j in range(n))
        ]

    # -- subgroup helpers (index sets) ---------------------------------------

    def subgroup_closure(self, seed) -> frozenset[int]:
        elems = {0}
        frontier = [0]
        gens = [s for s in seed if s != 0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self._table[x][g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(elems)

    def derived_subgroup(self) -> frozenset[int]:
        comms = {
            self._table[self._table[a][b]][
                self._table[self._inv[a]][self._inv[b]]
            ]
            for a in (self._index[g] for g in self.generators)
            for b in (self._index[g] for g in self.generators)
        }
        sub = self.subgroup_closure(comms)
        # normal closure
        while True:
            extra = {self.conj(g, x) for g in range(self.order) for x in sub}
            if extra <= sub:
                return sub
            sub = self.subgroup_closure(sub | extra)

    def derived_subgroup_of(self, indices: frozenset[int]) -> frozenset[int]:
        idx = sorted(indices)
        comms = {
            self._table[self._table[a][b]][self._table[self._inv[a]][self._inv[b]]]
            for a in idx
            for b in idx
        }
        return self.subgroup_closure(comms)

    def perfect_residual(self) -> frozenset[int]:
        cur = frozenset(range(self.order))
        while True:
            nxt = self.derived_subgroup_of(cur)
            if nxt == cur:
                return cur
            cur = nxt

    def normalizer(self, indices: frozenset[int]) -> list[int]:
        return [
            g for g in range(self.order)
            if all(self.conj(g, x) in indices for x in indices)
        ]

    def is_normal(self, indices: frozenset[int]) -> bool:
        return all(
            self.conj(g, x) in indices for g in range(self.order) for x in indices
        )

    def conjugate_subgroup(self, g: int, indices: frozenset[int]) -> frozenset[int]:
        return frozenset(self.conj(g, x) for x in indices)

    def subgroup_orbit(self, indices: frozenset[int]) -> set[frozenset[int]]:
        return {self.conjugate_subgroup(g, indices) for g in range(self.order)}

    def subgroups_conjugate(self, a: frozenset[int], b: frozenset[int]) -> bool:
        if len(a) != len(b):
            return False
        return any(self.conjugate_subgroup(g, a) == b for g in range(self.order))

    def abelian_invariants_of_quotient(self, normal: frozenset[int]) -> tuple[int, ...]:
        """Primary cyclic decomposition of G/N for N containing [G,G]."""
        reps = {}
        coset_of = {}
        for x in range(self.order):
            key = frozenset(self._table[x][n] for n in normal)
            coset_of[x] = key
            reps.setdefault(key, x)
        ident = coset_of[0]
        orders = []
        for key, x in reps.items():
            y, k = x, 1
            while coset_of[y] != ident:
                y = self._table[y][x]
                k += 1
            orders.append(k)
        q = len(reps)
        invs = []
        for p in prime_divisors(q):
            # N_k = #{cosets killed by p^k} = p^(sum min(lambda_i, k));
            # the partition lambda falls out of successive quotients
            ms = []
            prev = 1
            k = 1
            while True:
                nk = sum(1 for o in orders if p ** k % o == 0)
                ms.append(_int_log(nk // prev, p))
                if nk == q or ms[-1] == 0:
                    break
                prev = nk
                k += 1
            ms.append(0)
            for depth in range(len(ms) - 1):
                invs.extend([p ** (depth + 1)] * (ms[depth] - ms[depth + 1]))
        return tuple(sorted(invs))

    def abelianization(self) -> tuple[int, ...]:
        return self.abelian_invariants_of_quotient(self.derived_subgroup())

    # -- fingerprints -----------------------------------------------------------

    def fingerprint(self) -> "GroupFingerprint":
        orders = self.element_orders()
        hist = {}
        for o in orders:
            hist[o] = hist.get(o, 0) + 1
        der = self.derived_subgroup()
        return GroupFingerprint(
            order=self.order,
            exponent=self.exponent(),
            abelian_invariants=self.abelianization(),
            class_sizes=tuple(sorted(len(c) for c in self.conjugacy_classes())),
            order_histogram=tuple(sorted(hist.items())),
            center_order=len(self.center_indices()),
            derived_order=len(der),
        )

    # -- subgroup classes ----------------------------------------------------------

    def subgroup_index_classes(self, bound: int = 1000) -> list[frozenset[int]]:
        """One index-set representative per conjugacy class of subgroups."""
        if self.order > bound:
            raise EnumerationBoundExceeded(
                f"order {self.order} exceeds enumeration bound {bound}"
            )
        seeds = [frozenset([0])]
        residual = self.perfect_residual()
        if len(residual) > 1:
            seen_perfect = set()
            res = sorted(residual)
            for a in res:
                for b in res:
                    if b < a:
                        continue
                    k = self.subgroup_closure({a, b})
                    if k in seen_perfect:
                        continue
                    seen_perfect.add(k)
                    if len(k) > 1 and self.derived_subgroup_of(k) == k:
                        seeds.append(k)
        classes = []
        seen = {}
        queue = []
        for s in seeds:
            orbit = self.subgroup_orbit(s)
            if not any(o in seen for o in orbit):
                cid = len(classes)
                classes.append(min(orbit, key=sorted))
                for o in orbit:
                    seen[o] = cid
                queue.append(classes[-1])
        qi = 0
        while qi < len(queue):
            h = queue[qi]
            qi += 1
            norm = self.normalizer(h)
            m = len(h)
            primes = prime_divisors(self.order // m)
            cands = {}
            for g in norm:
                if g in h:
                    continue
                for p in primes:
                    x = g
                    for _ in range(p - 1):
                        x = self._table[x][g]
                    if x in h:
                        cands.setdefault(p, []).append(g)
                        break
            for p, gs in cands.items():
                for g in gs:
                    k = set(h)
                    coset = [self._table[x][g] for x in h]
                    cur = coset
                    for _ in range(p - 1):
                        k.update(cur)
                        cur = [self._table[x][g] for x in cur]
                    k = frozenset(k)
                    if k in seen:
                        continue
                    orbit = self.subgroup_orbit(k)
                    cid = len(classes)
                    rep = min(orbit, key=sorted)
                    classes.append(rep)
                    for o in orbit:
                        seen[o] = cid
                    queue.append(rep)
        return sorted(classes, key=lambda s: (len(s), sorted(s)))

    def subgroup_from_indices(self, indices: frozenset[int]) -> "FiniteMatrixGroup":
        idx = sorted(indices)
        elems = [self.elements[i] for i in idx]
        gens = minimal_generating_indices(self, indices)
        sub = FiniteMatrixGroup(
            self.dim,
            elems,
            [self.elements[i] for i in gens],
            self.projective_scalars,
        )
        remap = {i: k for k, i in enumerate(idx)}
        sub._table = [[remap[self._table[a][b]] for b in idx] for a in idx]
        sub._inv = [remap[self._inv[a]] for a in idx]
        sub.parent_indices = indices
        sub.normal_in_parent = self.is_normal(indices)
        return sub

    def subgroup_classes(self, bound: int = 1000) -> list["FiniteMatrixGroup"]:
        return [
            self.subgroup_from_indices(s)
            for s in self.subgroup_index_classes(bound)
        ]

    # -- serialization ------------------------------------------------------------

    def to_descriptor(self) -> dict:
        scal = self.projective_scalars
        if scal is not None and not isinstance(scal, int):
            scal = [s.to_json() for s in scal]
        return {
            "name": self.name,
            "dim": self.dim,
            "projective_scalars": scal,
            "generators": [g.to_json() for g in self.generators],
        }

    @staticmethod
    def from_descriptor(obj: dict, order_cap: int = 10000) -> "FiniteMatrixGroup":
        gens = [Mat.from_json(g) for g in obj["generators"]]
        scal = obj.get("projective_scalars")
        if scal is not None and not isinstance(scal, int):
            scal = tuple(Mat.from_json(s) for s in scal)
        return FiniteMatrixGroup.generate(
            gens,
            projective_scalars=scal,
            order_cap=order_cap,
            name=obj.get("name"),
        )

    def __repr__(self):
        tag = self.name or "group"
        if isinstance(self.projective_scalars, int):
            mode = f" mod mu_{self.projective_scalars}"
        elif self.projective_scalars:
            mode = f" mod {len(self.projective_scalars)} scalars"
        else:
            mode = ""
        return f"<{tag}: order {self.order}, dim {self.dim}{mode}>"


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    exponent: int
    abelian_invariants: tuple[int, ...]
    class_sizes: tuple[int, ...]
    order_histogram: tuple[tuple[int, int], ...]
    center_order: int
    derived_order: int
    char_degrees: tuple[int, ...] | None = None


def generate_closure(generators, projective_scalars=None, order_cap=10000,
                     name=None) -> FiniteMatrixGroup:
    """Close a generator list into a FiniteMatrixGroup; see OrderCapExceeded."""
    return FiniteMatrixGroup.generate(
        generators, projective_scalars=projective_scalars,
        order_cap=order_cap, name=name,
    )


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _int_log(x: int, p: int) -> int:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


def minimal_generating_indices(g: FiniteMatrixGroup,
                               indices: frozenset[int]) -> list[int]:
    """Greedy small generating set for the subgroup given by index set."""
    idx = sorted(indices, key=lambda i: (-g.element_order(i), i))
    gens = []
    have = frozenset([0])
    for i in idx:
        if i in have:
            continue
        gens.append(i)
        have = g.subgroup_closure(set(gens))
        if have == indices:
            break
    return gens or [0]


def brute_force_subgroups(g: FiniteMatrixGroup) -> set[frozenset[int]]:
    """All subgroups by one-element extensions; test oracle for small groups."""
    subs = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for s in frontier:
            for x in range(g.order):
                if x in s:
                    continue
                k = g.subgroup_closure(s | {x})
                if k not in subs:
                    subs.add(k)
                    nxt.append(k)
        frontier = nxt
    return subs


# -- isomorphism search ------------------------------------------------------


def _generating_sequence(g: FiniteMatrixGroup) -> list[int]:
    seq = []
    have = frozenset([0])
    order_by = sorted(range(g.order), key=lambda i: (-g.element_order(i), i))
    while len(have) < g.order:
        nxt = next(i for i in order_by if i not in have)
        seq.append(nxt)
        have = g.subgroup_closure(set(seq))
    return seq


def _extend_morphism(g1, g2, gens, images):
    """Map <gens> -> g2 with phi(gens)=images; None when inconsistent."""
    phi = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for a, b in zip(gens, images):
                y = g1.mul(x, a)
                fy = g2.mul(phi[x], b)
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    phi[y] = fy
                    nxt.append(y)
        frontier = nxt
    return phi


def find_isomorphism(g1: FiniteMatrixGroup, g2: FiniteMatrixGroup,
                     value1=None, value2=None):
    """Group isomorphism g1 -> g2 transporting the optional element labels.

    value1/value2 are callables index -> hashable; the returned map phi
    satisfies value2(phi(x)) == value1(x) for every x.  Returns the full
    index map as a list, or None.
    """
    if g1.order != g2.order:
        return None
    n = g1.order
    v1 = [value1(i) if value1 else None for i in range(n)]
    v2 = [value2(i) if value2 else None for i in range(n)]
    cls1, cls2 = g1.class_of(), g2.class_of()
    size1 = [len(g1.conjugacy_classes()[cls1[i]]) for i in range(n)]
    size2 = [len(g2.conjugacy_classes()[cls2[i]]) for i in range(n)]
    prof2 = {}
    for j in range(n):
        prof2.setdefault((g2.element_order(j), size2[j], v2[j]), []).append(j)
    gens = _generating_sequence(g1)
    cand = []
    for a in gens:
        key = (g1.element_order(a), size1[a], v1[a])
        pool = prof2.get(key, [])
        if not pool:
            return None
        cand.append(pool)

    chain_sizes = []
    have = set()
    for k in range(len(gens)):
        have = g1.subgroup_closure(set(gens[: k + 1]))
        chain_sizes.append(len(have))

    def dfs(k, images):
        if k == len(gens):
            phi = _extend_morphism(g1, g2, gens, images)
            if phi is None or len(phi) != n:
                return None
            if len(set(phi.values())) != n:
                return None
            if value1 and any(v2[phi[i]] != v1[i] for i in range(n)):
                return None
            return phi
        for b in cand[k]:
            imgs = images + [b]
            if len(g2.subgroup_closure(set(imgs))) != chain_sizes[k]:
                continue
            got = dfs(k + 1, imgs)
            if got is not None:
                return got
        return None

    phi = dfs(0, [])
    if phi is None:
        return None
    return [phi[i] for i in range(n)]


# -- ambient subgroup conjugacy ------------------------------------------
#
# Conjugacy of two finite groups inside a compact ambient is decided by an
# exact intertwiner search: pick a small generating set of the first group,
# run a DFS over spectrum-matched images inside the scalar-saturated element
# set of the second, and keep the linear solution space of T g = g' T.  A
# leaf succeeds when the space contains an invertible T.  Nonvanishing of
# det on the span is certified on the integer grid {0,..,3}^m: det is at
# most cubic in each coefficient, so vanishing on the whole grid forces the
# zero polynomial.  Everything runs over exact cyclotomic arithmetic, so a
# "conjugate" or "not conjugate" answer is a proof, not numerics.

_AMBIENT_NAMES = {
    "PSU3": "psu3",
    "PSU3XC2": "psu3xc2",
    "PSU3C2": "psu3xc2",
    "SO3": "so3",
    "C2WRS3": "wreath",
    "C2S3": "wreath",
}


def _ambient_key(ambient: str) -> str:
    stripped = "".join(c for c in ambient if c.isascii() and c.isalnum())
    try:
        return _AMBIENT_NAMES[stripped.upper()]
    except KeyError:
        raise ValueError(f"unsupported ambient: {ambient!r}") from None


@lru_cache(maxsize=1)
def wreath_ambient() -> FiniteMatrixGroup:
    """The signed 3x3 permutation matrices, order 48."""
    flips = [Mat.diag([-1 if i == k else 1 for i in range(3)])
             for k in range(3)]
    swap = Mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    cycle = Mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    return FiniteMatrixGroup.generate(
        flips + [swap, cycle], order_cap=48, name="C2wrS3"
    )


def group_fingerprint(g: FiniteMatrixGroup) -> GroupFingerprint:
    """Isomorphism-invariant summary; equality is necessary, not sufficient."""
    return g.fingerprint()


def ambient_subgroup_conjugate(h1: FiniteMatrixGroup, h2: FiniteMatrixGroup,
                               ambient) -> bool:
    """Whether some ambient element conjugates h1 onto h2.

    ambient is a FiniteMatrixGroup containing both element sets, or one of
    the compact models "PSU3", "PSU3xC2", "SO3", "C2wrS3".  PSU3 expects
    3x3 groups taken mod mu_3; PSU3xC2 additionally accepts the 6x6
    block-paired normalizer form with twisted elements.
    """
    if isinstance(ambient, FiniteMatrixGroup):
        return _finite_ambient_conjugate(h1, h2, ambient)
    key = _ambient_key(ambient)
    if h1.order != h2.order:
        return False
    if key == "wreath":
        return _finite_ambient_conjugate(h1, h2, wreath_ambient())
    if key == "so3":
        return _so3_conjugate(h1, h2)
    if key == "psu3":
        return _psu3_conjugate(h1, h2, allow_reversal=False)
    if h1.dim == 3 and h2.dim == 3:
        return _psu3_conjugate(h1, h2, allow_reversal=True)
    if h1.dim == 6 and h2.dim == 6:
        return _paired6_conjugate(h1, h2)
    raise ValueError("PSU3xC2 ambient needs two 3x3 or two 6x6 groups")


def _finite_ambient_conjugate(h1, h2, ambient) -> bool:
    try:
        a = frozenset(ambient.index_of(e) for e in h1.elements)
        b = frozenset(ambient.index_of(e) for e in h2.elements)
    except KeyError:
        raise ValueError("subgroup does not live inside the ambient group") \
            from None
    if len(a) != len(b):
        return False
    if a == b:
        return True
    if h1.fingerprint() != h2.fingerprint():
        return False
    return ambient.subgroups_conjugate(a, b)


def _so3_conjugate(h1, h2) -> bool:
    for h in (h1, h2):
        if h.dim != 3:
            raise ValueError("SO3 ambient expects 3x3 real rotation groups")
        for g in h.generators:
            ok = g.is_unitary() and g.det() == ONE \
                and all(x.is_real() for r in g.rows for x in r)
            if not ok:
                raise ValueError("element outside SO(3)")
    # Finite rotation groups are classified by isomorphism type: cyclic,
    # dihedral, tetrahedral, octahedral, icosahedral each form one conjugacy
    # class, and no two distinct types share order + exponent + abelianization.
    return h1.fingerprint() == h2.fingerprint()


# the six scalar matrices diag(z I3, conj(z) I3), z^6 = 1, of the paired model
@lru_cache(maxsize=1)
def paired_scalar_matrices() -> tuple[Mat, ...]:
    out = []
    for k in range(6):
        z = zeta(6, k)
        zb = z.conj()
        out.append(Mat.diag([z, z, z, zb, zb, zb]))
    return tuple(out)


def _charpoly_key(m: Mat):
    return tuple(_cyc_key(c) for c in m.char_poly())


def _top_left(m: Mat) -> Mat:
    return Mat([[m.rows[i][j] for j in range(3)] for i in range(3)])


def _paired_split(m: Mat):
    """(False, A) for diag(A, conj A); (True, W) for the twisted block shape."""
    tr = Mat([[m.rows[i][j + 3] for j in range(3)] for i in range(3)])
    bl = Mat([[m.rows[i + 3][j] for j in range(3)] for i in range(3)])
    br = Mat([[m.rows[i + 3][j + 3] for j in range(3)] for i in range(3)])
    z3 = Mat.zero(3)
    if tr == z3 and bl == z3:
        a = _top_left(m)
        if br == a.conj():
            return False, a
    elif _top_left(m) == z3 and br == z3 and tr == (-bl).conj():
        return True, -bl
    raise ValueError("matrix is not in the block-paired normalizer form")


def _paired_label(m: Mat):
    twisted, part = _paired_split(m)
    if twisted:
        return ("t",) + _charpoly_key(-(part.conj() * part))
    return ("u",) + _charpoly_key(part)


def _xy_rows(a: Mat, b: Mat, left: int, right: int, slots: int):
    """Constraint rows of X_left * a - b * X_right = 0 over 3x3 unknowns."""
    rows = []
    for r in range(3):
        for c in range(3):
            row = [ZERO] * slots
            for k in range(3):
                i = left + 3 * r + k
                row[i] = row[i] + a.rows[k][c]
                j = right + 3 * k + c
                row[j] = row[j] - b.rows[r][k]
            rows.append(row)
    return rows


def _pair_rows_3(x1: Mat, x2: Mat):
    return _xy_rows(x1, x2, 0, 0, 9)


def _pair_rows_paired(x1: Mat, x2: Mat):
    t1, p1 = _paired_split(x1)
    t2, p2 = _paired_split(x2)
    if t1 != t2:
        return None
    if not t1:
        return _xy_rows(p1, p2, 0, 0, 18) \
            + _xy_rows(p1.conj(), p2.conj(), 9, 9, 18)
    return _xy_rows(p1.conj(), p2.conj(), 0, 9, 18) \
        + _xy_rows(p1, p2, 9, 0, 18)


def _vec_to_mat(vec, off: int) -> Mat:
    return Mat([[vec[off + 3 * r + c] for c in range(3)] for r in range(3)])


def _invertible_in_span(mats: list[Mat]) -> bool:
    """Exact decision: does the span contain an invertible matrix?

    det restricted to the span has degree <= 3 in each coefficient, so it
    vanishes identically iff it vanishes on the grid {0,1,2,3}^m.
    """
    mats = [m for m in mats if m != Mat.zero(m.nrows)]
    if not mats:
        return False
    for m in mats:
        if not m.det().is_zero():
            return True
    if len(mats) == 1:
        return False
    if len(mats) > 10:
        raise RuntimeError("intertwiner space unexpectedly large")
    for coeffs in itertools.product(range(4), repeat=len(mats)):
        if sum(1 for c in coeffs if c) < 2:
            continue
        acc = None
        for c, m in zip(coeffs, mats):
            if not c:
                continue
            term = m if c == 1 else CycNum.rational(c) * m
            acc = term if acc is None else acc + term
        if not acc.det().is_zero():
            return True
    return False


def _tau_real_basis(sol: list[list[CycNum]]) -> list[list[CycNum]]:
    """Real-form basis of a tau-stable solution space, tau(P,Q)=(conj Q, conj P).

    Genuine paired conjugators are the tau-fixed points; the real span of
    the returned vectors is exactly that fixed space.
    """
    half = HALF
    ihalf = HALF * zeta(4, 3)

    def tau(v):
        return [v[9 + i].conj() for i in range(9)] \
            + [v[i].conj() for i in range(9)]

    def realify(v):
        out = []
        for x in v:
            xc = x.conj()
            out.append((x + xc) * half)
            out.append((x - xc) * ihalf)
        return out

    acc = EchelonAccumulator()
    basis = []
    for v in sol:
        tv = tau(v)
        plus = [a + b for a, b in zip(v, tv)]
        minus = [(a - b) * zeta(4, 1) for a, b in zip(v, tv)]
        for cand in (plus, minus):
            if acc.add(realify(cand), payload=None):
                basis.append(cand)
    return basis


def _matrix_conjugacy(group1, mats1, mats2, scalar_mats, label_fn, rows_fn,
                      slots, tau_real) -> bool:
    """Core intertwiner DFS between scalar-saturated matrix models.

    group1 supplies the multiplication table of the first group; mats1[i]
    is the model matrix of its element i, mats2 lists the second group's
    representatives.  Returns True iff some invertible block intertwiner
    maps the saturation of mats1 onto the saturation of mats2.
    """
    lift2 = [s * e for e in mats2 for s in scalar_mats]
    labels1 = Counter(label_fn(s * e) for e in mats1 for s in scalar_mats)
    pool = {}
    for x in lift2:
        pool.setdefault(label_fn(x), []).append(x)
    if labels1 != Counter({k: len(v) for k, v in pool.items()}):
        return False

    every = frozenset(range(group1.order))
    gen_idx = minimal_generating_indices(group1, every)
    gens = [mats1[i] for i in gen_idx]
    try:
        pools = [pool[label_fn(g)] for g in gens]
    except KeyError:
        return False

    # BFS word decomposition over the first group's table
    parent = {0: None}
    visit = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for slot, gi in enumerate(gen_idx):
                y = group1.mul(x, gi)
                if y not in parent:
                    parent[y] = (x, slot)
                    visit.append(y)
                    nxt.append(y)
        frontier = nxt
    raw1 = {0: Mat.identity(mats1[0].nrows)}
    for y in visit[1:]:
        x, slot = parent[y]
        raw1[y] = raw1[x] * gens[slot]

    def leaf(images) -> bool:
        raw2 = {0: Mat.identity(mats1[0].nrows)}
        acc = EchelonAccumulator()
        for y in visit[1:]:
            x, slot = parent[y]
            raw2[y] = raw2[x] * images[slot]
            rows = rows_fn(raw1[y], raw2[y])
            if rows is None:
                return False
            for row in rows:
                acc.add(row)
            if len(acc.rows) == slots:
                return False
        sol = nullspace(acc.rows) if acc.rows \
            else [[ONE if i == j else ZERO for i in range(slots)]
                  for j in range(slots)]
        if not sol:
            return False
        if tau_real:
            sol = _tau_real_basis(sol)
        return _invertible_in_span([_vec_to_mat(v, 0) for v in sol])

    def rank_of(rows) -> int:
        acc = EchelonAccumulator()
        for row in rows:
            acc.add(row)
        return len(acc.rows)

    def dfs(k, images, rows) -> bool:
        if k == len(gens):
            return leaf(images)
        for cand in pools[k]:
            extra = rows_fn(gens[k], cand)
            if extra is None:
                continue
            new_rows = rows + extra
            if rank_of(new_rows) == slots:
                continue
            if dfs(k + 1, images + [cand], new_rows):
                return True
        return False

    return dfs(0, [], [])


def _diagonal_weight_match(elems1, elems2, sat: int, allow_reversal: bool):
    """Conjugacy of two finite diagonal families under column permutations.

    Conjugate diagonal subgroups of the torus are related by an element of
    the torus normalizer, so comparing exponent-vector sets modulo the S3
    column action and per-element scalar shifts decides the question.
    Returns None when some entry is not a root of unity.
    """
    raw = []
    for part, elems in ((0, elems1), (1, elems2)):
        for e in elems:
            vec = [e.entry(i, i).root_of_unity_exponent() for i in range(3)]
            if any(v is None for v in vec):
                return None
            raw.append((part, vec))
    mod = sat
    for _, vec in raw:
        for m, _k in vec:
            mod = math.lcm(mod, m)
    shifts = [j * (mod // sat) for j in range(sat)]

    def canon(vec):
        return min(tuple((x + s) % mod for x in vec) for s in shifts)

    weights = [[], []]
    for part, vec in raw:
        weights[part].append([k * (mod // m) for m, k in vec])
    target = {canon(v) for v in weights[0]}
    signs = (1, -1) if allow_reversal else (1,)
    for sign in signs:
        for perm in itertools.permutations(range(3)):
            got = {canon([sign * v[p] % mod for p in perm])
                   for v in weights[1]}
            if got == target:
                return True
    return False


def _psu3_conjugate(h1, h2, allow_reversal: bool) -> bool:
    for h in (h1, h2):
        if h.dim != 3 or h.projective_scalars != 3:
            raise ValueError("PSU3 ambient expects 3x3 groups taken mod mu_3")
    return _projective3_conjugate(h1, h1.elements, h2.elements, 3,
                                  allow_reversal)


def _projective3_conjugate(group1, mats1, mats2, sat, allow_reversal) -> bool:
    if set(mats1) == set(mats2):
        return True
    diag = all(_is_diagonal(e) for e in mats1) \
        and all(_is_diagonal(e) for e in mats2)
    if diag:
        got = _diagonal_weight_match(mats1, mats2, sat, allow_reversal)
        if got is not None:
            return got
    scalars = tuple(zeta(sat, k) * Mat.identity(3) for k in range(sat))
    targets = [mats2]
    if allow_reversal:
        targets.append([e.conj() for e in mats2])
    for target in targets:
        if _matrix_conjugacy(group1, mats1, target, scalars, _charpoly_key,
                             _pair_rows_3, 9, tau_real=False):
            return True
    return False


def _is_diagonal(m: Mat) -> bool:
    return all(m.rows[i][j].is_zero()
               for i in range(m.nrows) for j in range(m.ncols) if i != j)


def _paired6_conjugate(h1, h2) -> bool:
    if set(h1.elements) == set(h2.elements):
        return True
    split1 = [_paired_split(e) for e in h1.elements]
    split2 = [_paired_split(e) for e in h2.elements]
    twists1 = sum(1 for t, _ in split1 if t)
    twists2 = sum(1 for t, _ in split2 if t)
    if twists1 != twists2:
        return False
    if twists1 == 0:
        # untwisted groups reduce to 3x3 parts mod mu_6: the paired scalar
        # diag(z, conj z) acts on the top block as multiplication by z
        return _projective3_conjugate(
            h1, [a for _, a in split1], [a for _, a in split2], 6,
            allow_reversal=True,
        )
    scalars = paired_scalar_matrices()
    for target in (h2.elements, [e.conj() for e in h2.elements]):
        if _matrix_conjugacy(h1, h1.elements, target, scalars, _paired_label,
                             _pair_rows_paired, 18, tau_real=True):
            return True
    return False
