"""Exact Haar averages of characters over cosets of connected groups.

Supported identity components are products of U(1) and SU(2) factors acting
on C^6 through torus-weight lines and 2x2 blocks.  A generic group element
is a 6x6 matrix of Laurent monomials in the torus variables t_i and the
entry symbols of each SU(2) factor (g = [[a, b], [-conj(b), conj(a)]]).
Multiplying by an exact coset representative and taking power traces gives
every needed character as a Laurent polynomial, and the Haar average is a
term-by-term moment evaluation:

    E[t^n] = [n == 0]
    E[a^p conj(a)^q b^r conj(b)^s] = [p == q][r == s] * p! r! / (p + r + 1)!

The second line is the Dirichlet(1,1) moment of (|a|^2, |b|^2) on S^3.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclotomic import CycNum, rational, ZERO as CZERO, ONE as CONE
from .linalg import Mat


class ExactAverageUnsupported(RuntimeError):
    """The component's factors fall outside the exactly-integrable family."""


# symbols: ("t", i) torus variable, ("a"/"A"/"b"/"B", f) SU(2) factor entries,
# capital letters marking complex conjugates
_CONJ = {"a": "A", "A": "a", "b": "B", "B": "b"}


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def const(c) -> "LaurentPoly":
        c = c if isinstance(c, CycNum) else rational(c)
        return LaurentPoly({(): c} if not c.is_zero() else {})

    @staticmethod
    def symbol(sym) -> "LaurentPoly":
        return LaurentPoly({((sym, 1),): CONE})

    @staticmethod
    def torus(i: int, exp: int = 1) -> "LaurentPoly":
        return LaurentPoly({((("t", i), exp),): CONE})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, CZERO) + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return LaurentPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CycNum):
            if other.is_zero():
                return LaurentPoly()
            return LaurentPoly({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mul_monomials(m1, m2)
                s = out.get(m, CZERO) + c1 * c2
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> "LaurentPoly":
        out = {}
        for m, c in self.terms.items():
            cm = tuple(
                sorted(
                    ((kind, f) if kind == "t" else (_CONJ[kind], f), -e if kind == "t" else e)
                    for (kind, f), e in m
                )
            )
            out[cm] = c.conj()
        return LaurentPoly(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            sym = "*".join(f"{k}{f}^{e}" for (k, f), e in m)
            bits.append(f"({c})*{sym}" if sym else f"({c})")
        return "LaurentPoly(" + " + ".join(bits) + ")"


def _mul_monomials(m1, m2):
    acc = dict(m1)
    for sym, e in m2:
        e2 = acc.get(sym, 0) + e
        if e2:
            acc[sym] = e2
        else:
            acc.pop(sym)
    return tuple(sorted(acc.items()))


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def haar_expectation(poly: LaurentPoly) -> CycNum:
    """Average over independent Haar-uniform torus and SU(2) factors."""
    total = CZERO
    for m, coeff in poly.terms.items():
        su2 = {}
        ok = True
        for (kind, f), e in m:
            if kind == "t":
                if e != 0:
                    ok = False
                    break
            else:
                su2.setdefault(f, {"a": 0, "A": 0, "b": 0, "B": 0})
                su2[f][kind] += e
        if not ok:
            continue
        weight = Fraction(1)
        for deg in su2.values():
            if deg["a"] != deg["A"] or deg["b"] != deg["B"]:
                weight = Fraction(0)
                break
            p, r = deg["a"], deg["b"]
            weight *= Fraction(
                math.factorial(p) * math.factorial(r), math.factorial(p + r + 1)
            )
        if weight:
            total = total + coeff * rational(weight)
    return total


class ComponentShape:
    """Symbolic form of a connected subgroup built from U(1) and SU(2) slots.

    lines: map coord -> integer torus weight vector (length = torus rank);
    pairs: list of (i, j, factor index, conjugated flag) giving 2x2 blocks
    [[a, b], [-B, A]] of factor f on coordinates (i, j), entrywise conjugated
    when the flag is set.  Every coordinate appears exactly once.
    """

    def __init__(self, dim: int, torus_rank: int, lines: dict, pairs: list):
        self.dim = dim
        self.torus_rank = torus_rank
        self.lines = dict(lines)
        self.pairs = list(pairs)
        covered = sorted(
            list(self.lines) + [i for (i, j, *_rest) in pairs] + [j for (i, j, *_r) in pairs]
        )
        assert covered == list(range(dim)), f"slots must partition coords, got {covered}"

    def generic_matrix(self) -> list[list[LaurentPoly]]:
        g = [[ZERO for _ in range(self.dim)] for _ in range(self.dim)]
        for i, w in self.lines.items():
            mono = tuple(
                sorted(((("t", k), e) for k, e in enumerate(w) if e), key=lambda p: p[0])
            )
            g[i][i] = LaurentPoly({mono: CONE})
        for (i, j, f, conjd) in self.pairs:
            a = LaurentPoly.symbol(("a", f))
            abar = LaurentPoly.symbol(("A", f))
            b = LaurentPoly.symbol(("b", f))
            bbar = LaurentPoly.symbol(("B", f))
            if conjd:
                a, abar = abar, a
                b, bbar = bbar, b
            g[i][i] = a
            g[i][j] = b
            g[j][i] = -bbar
            g[j][j] = abar
        return g

    def coset_matrix(self, rep: Mat) -> list[list[LaurentPoly]]:
        assert rep.nrows == self.dim
        g = self.generic_matrix()
        out = [[ZERO for _ in range(self.dim)] for _ in range(self.dim)]
        for i in range(self.dim):
            for k in range(self.dim):
                c = rep.rows[i][k]
                if c.is_zero():
                    continue
                row = g[k]
                for j in range(self.dim):
                    if not row[j].is_zero():
                        out[i][j] = out[i][j] + row[j] * c
        return out


def _sym_mat_mul(a, b):
    n = len(a)
    return [
        [
            _sym_dot(a[i], [b[k][j] for k in range(n)])
            for j in range(n)
        ]
        for i in range(n)
    ]


def _sym_dot(row, col):
    s = ZERO
    for x, y in zip(row, col):
        if not (x.is_zero() or y.is_zero()):
            s = s + x * y
    return s


def _sym_trace(m):
    s = ZERO
    for i in range(len(m)):
        s = s + m[i][i]
    return s


def power_traces(m, kmax: int) -> list[LaurentPoly]:
    """[tr M, tr M^2, ..., tr M^kmax]."""
    out = []
    acc = m
    out.append(_sym_trace(acc))
    for _ in range(kmax - 1):
        acc = _sym_mat_mul(acc, m)
        out.append(_sym_trace(acc))
    return out


class CharacterSpec:
    """Integer combination of monomials a1^j * L2^k * L3^l, j + 2k + 3l <= 6.

    a1 is the trace of the standard 6-dimensional representation, L2 and L3
    the traces of its second and third exterior powers.
    """

    def __init__(self, combo: dict, name: str | None = None):
        self.combo = {tuple(k): int(v) for k, v in combo.items() if v}
        self.name = name
        for (j, k, l) in self.combo:
            if j + 2 * k + 3 * l > 6:
                raise ValueError(f"character degree {j}+2*{k}+3*{l} exceeds 6")

    def needs_power(self) -> int:
        top = 1
        for (j, k, l) in self.combo:
            if l:
                top = max(top, 3)
            elif k:
                top = max(top, 2)
        return top

    def evaluate(self, traces: list[LaurentPoly]) -> LaurentPoly:
        t1 = traces[0]
        t2 = traces[1] if len(traces) > 1 else ZERO
        t3 = traces[2] if len(traces) > 2 else ZERO
        half = rational(Fraction(1, 2))
        sixth = rational(Fraction(1, 6))
        lam2 = (t1 * t1 - t2) * half
        lam3 = (t1 * t1 * t1 - LaurentPoly.const(3) * t1 * t2
                + LaurentPoly.const(2) * t3) * sixth
        out = ZERO
        for (j, k, l), coeff in self.combo.items():
            term = LaurentPoly.const(coeff)
            for _ in range(j):
                term = term * t1
            for _ in range(k):
                term = term * lam2
            for _ in range(l):
                term = term * lam3
            out = out + term
        return out

    def __repr__(self):
        return f"CharacterSpec({self.name or self.combo})"


A1 = CharacterSpec({(1, 0, 0): 1}, "a1")
A1_SQ = CharacterSpec({(2, 0, 0): 1}, "a1^2")
LAM2 = CharacterSpec({(0, 1, 0): 1}, "lambda2")
LAM3 = CharacterSpec({(0, 0, 1): 1}, "lambda3")
SYM2 = CharacterSpec({(2, 0, 0): 1, (0, 1, 0): -1}, "sym2")
LAM2_SQ = CharacterSpec({(0, 2, 0): 1}, "lambda2^2")
A1_LAM2 = CharacterSpec({(1, 1, 0): 1}, "a1*lambda2")

DEFAULT_FAMILY = [A1, A1_SQ, SYM2, LAM2, LAM3, LAM2_SQ, A1_LAM2]


def coset_character_average(shape: ComponentShape, coset_rep: Mat,
                            char: CharacterSpec) -> CycNum:
    """Exact Haar average of char over the coset coset_rep * G0."""
    m = shape.coset_matrix(coset_rep)
    traces = power_traces(m, char.needs_power())
    return haar_expectation(char.evaluate(traces))
