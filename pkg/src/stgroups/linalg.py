"""Exact dense linear algebra over cyclotomic numbers.

Matrices are immutable tuples of CycNum entries.  Everything here is
field-exact: rank, nullspace, determinants, commutants and real Lie spans
are computed by Gaussian elimination over the entries' number field, so a
reported dimension is a theorem, not an estimate.

Real dimensions (Lie closures) are ranks of matrices over the real subfield,
obtained by splitting every entry into real and imaginary parts; rank is
invariant under extending the real cyclotomic subfield to R.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, HALF, I_UNIT, ONE, ZERO, rational


def _as_cyc(x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    return CycNum.rational(x)


class Mat:
    """Square or rectangular exact matrix."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows):
        self.rows = tuple(tuple(_as_cyc(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        assert all(len(r) == self.ncols for r in self.rows)
        self._hash = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(n: int, m: int | None = None) -> "Mat":
        m = n if m is None else m
        return Mat([[ZERO] * m for _ in range(n)])

    @staticmethod
    def diag(entries) -> "Mat":
        es = [_as_cyc(e) for e in entries]
        n = len(es)
        return Mat([[es[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def block(grid) -> "Mat":
        out = []
        for brow in grid:
            h = brow[0].nrows
            for i in range(h):
                out.append([x for b in brow for x in b.rows[i]])
        return Mat(out)

    @staticmethod
    def kron(a: "Mat", b: "Mat") -> "Mat":
        return Mat(
            [
                [a.rows[i][j] * b.rows[k][l] for j in range(a.ncols) for l in range(b.ncols)]
                for i in range(a.nrows)
                for k in range(b.nrows)
            ]
        )

    # -- ring operations ---------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Mat):
            assert self.ncols == other.nrows
            bt = list(zip(*other.rows))
            return Mat(
                [
                    [_dot(r, c) for c in bt]
                    for r in self.rows
                ]
            )
        x = _as_cyc(other)
        return Mat([[x * e for e in r] for r in self.rows])

    def __rmul__(self, other):
        return self * other

    def __add__(self, other):
        return Mat(
            [
                [x + y for x, y in zip(r, s)]
                for r, s in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        return Mat(
            [
                [x - y for x, y in zip(r, s)]
                for r, s in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return Mat([[-x for x in r] for r in self.rows])

    def __pow__(self, k: int):
        assert self.nrows == self.ncols
        if k < 0:
            return self.inverse() ** (-k)
        out = Mat.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- involutions -------------------------------------------------------

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.rows)))

    def conj(self) -> "Mat":
        return Mat([[x.conj() for x in r] for r in self.rows])

    def conj_transpose(self) -> "Mat":
        return Mat([[x.conj() for x in r] for r in zip(*self.rows)])

    # -- scalars -------------------------------------------------------------

    def trace(self) -> CycNum:
        s = ZERO
        for i in range(self.nrows):
            s = s + self.rows[i][i]
        return s

    def det(self) -> CycNum:
        assert self.nrows == self.ncols
        rows = [list(r) for r in self.rows]
        n = self.nrows
        sign = 1
        acc = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if not rows[r][c].is_zero()), None)
            if p is None:
                return ZERO
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                sign = -sign
            piv = rows[c][c]
            acc = acc * piv
            inv = piv.inverse()
            for r in range(c + 1, n):
                f = rows[r][c] * inv
                if not f.is_zero():
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return acc if sign == 1 else -acc

    def char_poly(self) -> list[CycNum]:
        """Coefficients of det(tI - M), low degree first, via Faddeev-LeVerrier."""
        n = self.nrows
        coeffs = [ZERO] * n + [ONE]
        m = Mat.zero(n)
        c = ONE
        for k in range(1, n + 1):
            m = self * m + c * Mat.identity(n)
            c = (self * m).trace() * rational(Fraction(-1, k))
            coeffs[n - k] = c
        return coeffs

    def inverse(self) -> "Mat":
        assert self.nrows == self.ncols
        n = self.nrows
        aug = [list(r) + list(Mat.identity(n).rows[i]) for i, r in enumerate(self.rows)]
        for c in range(n):
            p = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            aug[c], aug[p] = aug[p], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and not aug[r][c].is_zero():
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return Mat([r[n:] for r in aug])

    # -- structure tests ------------------------------------------------------

    def is_unitary(self) -> bool:
        return self * self.conj_transpose() == Mat.identity(self.nrows)

    def is_anti_hermitian(self) -> bool:
        return self.conj_transpose() == -self

    # -- misc -------------------------------------------------------------------

    def entry(self, i: int, j: int) -> CycNum:
        return self.rows[i][j]

    def to_complex(self):
        import numpy as np

        return np.array(
            [[x.to_complex() for x in r] for r in self.rows], dtype=complex
        )

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    @staticmethod
    def from_json(obj) -> "Mat":
        return Mat([[CycNum.from_json(x) for x in r] for r in obj])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"Mat({[[str(x) for x in r] for r in self.rows]})"


def _dot(r, c):
    s = ZERO
    for x, y in zip(r, c):
        if not (x.is_zero() or y.is_zero()):
            s = s + x * y
    return s


def symplectic_form(n: int = 6) -> Mat:
    """The fixed block form [[0, I], [-I, 0]] on C^n, n even."""
    h = n // 2
    i = Mat.identity(h)
    return Mat.block([[Mat.zero(h), i], [-i, Mat.zero(h)]])


def check_usp_membership(m: Mat) -> bool:
    """Exact test for membership in USp(n) with the fixed block form."""
    if m.nrows != m.ncols or m.nrows % 2:
        raise ValueError(f"matrix must be even-dimensional square, got {m.nrows}x{m.ncols}")
    j = symplectic_form(m.nrows)
    return m.is_unitary() and m.transpose() * j * m == j


# -- exact vector-space routines ------------------------------------------


def rref(rows: list[list[CycNum]]):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r0 = 0
    for c in range(ncols):
        p = next((r for r in range(r0, len(rows)) if not rows[r][c].is_zero()), None)
        if p is None:
            continue
        rows[r0], rows[p] = rows[p], rows[r0]
        inv = rows[r0][c].inverse()
        rows[r0] = [x * inv for x in rows[r0]]
        for r in range(len(rows)):
            if r != r0 and not rows[r][c].is_zero():
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[r0])]
        pivots.append(c)
        r0 += 1
        if r0 == len(rows):
            break
    return rows[:r0], pivots


def nullspace(rows: list[list[CycNum]]) -> list[list[CycNum]]:
    """Basis of the right kernel."""
    red, pivots = rref(rows)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return basis


def rank(rows: list[list[CycNum]]) -> int:
    return len(rref(rows)[0])


class EchelonAccumulator:
    """Incremental echelon basis for exact vectors; tracks attached payloads."""

    def __init__(self):
        self.rows = []       # echelon vectors, leading entry 1
        self.lead = []       # pivot column per row
        self.payloads = []   # caller objects, one per accepted vector

    def reduce(self, vec):
        vec = list(vec)
        for row, lc in zip(self.rows, self.lead):
            if not vec[lc].is_zero():
                f = vec[lc]
                for i in range(lc, len(vec)):
                    if not row[i].is_zero():
                        vec[i] = vec[i] - f * row[i]
        return vec

    def add(self, vec, payload=None) -> bool:
        """Insert if independent; returns True when the rank grew."""
        vec = self.reduce(vec)
        lc = next((i for i, x in enumerate(vec) if not x.is_zero()), None)
        if lc is None:
            return False
        inv = vec[lc].inverse()
        vec = [x * inv for x in vec]
        self.rows.append(vec)
        self.lead.append(lc)
        self.payloads.append(payload)
        return True

    @property
    def dimension(self) -> int:
        return len(self.rows)


# -- commutants --------------------------------------------------------------


def commutant_basis(test_generators: list[Mat]) -> list[Mat]:
    """Basis of the algebra of matrices commuting with every generator."""
    d = test_generators[0].nrows
    assert all(g.nrows == d and g.ncols == d for g in test_generators)
    rows = []
    for g in test_generators:
        # constraint rows of X*g - g*X = 0 in the d*d unknowns X[k][l]
        for i in range(d):
            for j in range(d):
                row = [ZERO] * (d * d)
                for l in range(d):
                    row[i * d + l] = row[i * d + l] + g.rows[l][j]
                for k in range(d):
                    row[k * d + j] = row[k * d + j] - g.rows[i][k]
                rows.append(row)
    basis = []
    for v in nullspace(rows):
        basis.append(Mat([[v[i * d + j] for j in range(d)] for i in range(d)]))
    return basis


def commutant_dimension(test_generators: list[Mat]) -> int:
    return len(commutant_basis(test_generators))


# -- real Lie-algebra spans ----------------------------------------------------


def _real_flatten(m: Mat) -> list[CycNum]:
    out = []
    for r in m.rows:
        for x in r:
            xc = x.conj()
            out.append((x + xc) * HALF)
            out.append((x - xc) * HALF / I_UNIT)
    return out


def real_span_dimension(mats: list[Mat]) -> int:
    return rank([_real_flatten(m) for m in mats])


def bracket(a: Mat, b: Mat) -> Mat:
    return a * b - b * a


def lie_closure(seeds: list[Mat], conjugators: list[Mat] | None = None,
                ad_saturate: bool = False) -> int:
    """Real dimension of the Lie algebra generated by the seeds.

    The starting set is the seeds together with g*s*g^-1 for every listed
    conjugator g; the span is then closed under brackets.  With ad_saturate
    the conjugators keep acting on every new basis element as well, giving
    the smallest Ad(<conjugators>)-invariant subalgebra through the seeds.
    """
    for s in seeds:
        if not s.is_anti_hermitian():
            raise ValueError("lie_closure seeds must be anti-Hermitian")
    conjugators = conjugators or []
    pairs = [(g, g.inverse()) for g in conjugators]
    acc = EchelonAccumulator()
    fresh = []
    for s in seeds:
        if acc.add(_real_flatten(s), s):
            fresh.append(s)
        for g, gi in pairs:
            t = g * s * gi
            if acc.add(_real_flatten(t), t):
                fresh.append(t)
    while fresh:
        batch, fresh = fresh, []
        for x in batch:
            for y in list(acc.payloads):
                z = bracket(x, y)
                if acc.add(_real_flatten(z), z):
                    fresh.append(z)
            if ad_saturate:
                for g, gi in pairs:
                    z = g * x * gi
                    if acc.add(_real_flatten(z), z):
                        fresh.append(z)
    return acc.dimension
