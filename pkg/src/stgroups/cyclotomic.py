"""Exact arithmetic in cyclotomic fields.

A value is stored as a rational polynomial in zeta_N (a primitive N-th root
of unity) reduced modulo the N-th cyclotomic polynomial, with N minimal:
every result is rebased to the smallest cyclotomic field containing it, so
equality and hashing are structural.  N is kept out of the 2 mod 4 branch
(Q(zeta_2m) = Q(zeta_m) for odd m).

Coefficient vectors are integer tuples over a common positive denominator.
No floats enter any computation; ``to_complex`` exists only for display and
Monte Carlo cross-checks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

CONDUCTOR_CAP = 10000


class ConductorOverflow(ArithmeticError):
    """Raised when an operation would exceed the supported conductor bound."""


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
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


def euler_phi(n: int) -> int:
    r = n
    for p in prime_factors(n):
        r = r // p * (p - 1)
    return r


def mobius(n: int) -> int:
    m = 1
    for p in prime_factors(n):
        if n % (p * p) == 0:
            return 0
        m = -m
    return m


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    """Quotient of exact division of integer polynomials (den monic)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, monic integral."""
    if n == 1:
        return (-1, 1)
    poly = [0] * n + [1]
    poly[0] = -1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k is zeta_n^k reduced mod Phi_n, for k up to max(n, 2*phi(n)) - 1."""
    phi = euler_phi(n)
    top = max(n, 2 * phi)
    rows = []
    for k in range(phi):
        row = [0] * phi
        row[k] = 1
        rows.append(tuple(row))
    cyc = cyclotomic_polynomial(n)
    for k in range(phi, top):
        prev = rows[k - 1]
        # multiply by x, fold the overflow back with x^phi = -(low terms)
        carry = prev[phi - 1]
        row = [0] + list(prev[:-1])
        if carry:
            for j in range(phi):
                row[j] -= carry * cyc[j]
        rows.append(tuple(row))
    return tuple(rows)


def _reduce_exponents(n: int, pairs: dict[int, int]) -> list[int]:
    """Map {exponent: integer coefficient} to a reduced length-phi(n) vector."""
    rows = _power_rows(n)
    phi = euler_phi(n)
    vec = [0] * phi
    for k, c in pairs.items():
        if c:
            row = rows[k % n]
            for j in range(phi):
                vec[j] += c * row[j]
    return vec


@lru_cache(maxsize=None)
def _descent_probes(n: int, m: int) -> tuple[int, ...]:
    """Exponent maps generating Gal(Q(zeta_n)/Q(zeta_m)), as residues j mod n."""
    return tuple(
        j for j in range(1 + m, n, m) if math.gcd(j, n) == 1
    )


@lru_cache(maxsize=None)
def _galois_matrix(n: int, j: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of zeta -> zeta^j on the power basis (columns are images)."""
    rows = _power_rows(n)
    phi = euler_phi(n)
    return tuple(rows[(j * k) % n] for k in range(phi))


def _galois_apply(n: int, j: int, num: tuple[int, ...]) -> list[int]:
    mat = _galois_matrix(n, j)
    phi = len(num)
    out = [0] * phi
    for k in range(phi):
        c = num[k]
        if c:
            row = mat[k]
            for t in range(phi):
                out[t] += c * row[t]
    return out


@lru_cache(maxsize=None)
def _subfield_solver(n: int, m: int):
    """Return a function rebasing coefficient vectors from Q(zeta_n) to Q(zeta_m).

    Requires m | n and Q(zeta_m) to contain the value; the solver returns None
    when the vector is not in the subfield (used as the membership test).
    """
    phi_n = euler_phi(n)
    phi_m = euler_phi(m)
    rows = _power_rows(n)
    step = n // m
    basis = [rows[(step * i) % n] for i in range(phi_m)]
    # row-reduce the phi_n x phi_m system once; record pivot bookkeeping
    cols = [[Fraction(basis[i][r]) for i in range(phi_m)] for r in range(phi_n)]

    def solve(vec: list[int], den: int):
        rhs = [Fraction(v, den) for v in vec]
        aug = [cols[r] + [rhs[r]] for r in range(phi_n)]
        piv = []
        r0 = 0
        for c in range(phi_m):
            pr = None
            for r in range(r0, phi_n):
                if aug[r][c]:
                    pr = r
                    break
            if pr is None:
                continue
            aug[r0], aug[pr] = aug[pr], aug[r0]
            inv = 1 / aug[r0][c]
            aug[r0] = [x * inv for x in aug[r0]]
            for r in range(phi_n):
                if r != r0 and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[r0])]
            piv.append(c)
            r0 += 1
        # consistency: rows beyond rank must have zero rhs
        for r in range(r0, phi_n):
            if aug[r][phi_m]:
                return None
        sol = [Fraction(0)] * phi_m
        for i, c in enumerate(piv):
            sol[c] = aug[i][phi_m]
        return sol

    return solve


def _normalize_fracs(fracs: list[Fraction]) -> tuple[tuple[int, ...], int]:
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    nums = [int(f * den) for f in fracs]
    g = 0
    for v in nums:
        g = math.gcd(g, v)
    g = math.gcd(g, den)
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    return tuple(nums), den


class CycNum:
    """An element of some cyclotomic field, always in canonical minimal form."""

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, num: tuple[int, ...], den: int, _trusted=False):
        if not _trusted:
            raise TypeError("use the constructors: rational(), zeta(), from_coeffs()")
        self.order = order
        self.num = num
        self.den = den
        self._hash = hash((order, num, den))

    # -- construction ---------------------------------------------------

    @staticmethod
    def _build(order: int, vec: list[int], den: int) -> "CycNum":
        """Canonicalize an integer vector / denominator at the given order."""
        if order > CONDUCTOR_CAP:
            raise ConductorOverflow(f"conductor {order} exceeds cap {CONDUCTOR_CAP}")
        n, fr = _canonical_form(order, vec, den)
        return CycNum(n, fr[0], fr[1], _trusted=True)

    @staticmethod
    def rational(q) -> "CycNum":
        f = Fraction(q)
        return CycNum(1, (f.numerator,), f.denominator, _trusted=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "CycNum":
        if n <= 0:
            raise ValueError("zeta order must be positive")
        return CycNum._build(n, _reduce_exponents(n, {k % n: 1}), 1)

    @staticmethod
    def from_exponents(n: int, weights: dict[int, "Fraction | int"]) -> "CycNum":
        """Sum of q_k * zeta_n^k terms."""
        den = 1
        fw = {k: Fraction(v) for k, v in weights.items()}
        for f in fw.values():
            den = den * f.denominator // math.gcd(den, f.denominator)
        pairs = {k: int(f * den) for k, f in fw.items()}
        return CycNum._build(n, _reduce_exponents(n, pairs), den)

    # -- predicates and conversions -------------------------------------

    def is_zero(self) -> bool:
        return self.order == 1 and self.num[0] == 0

    def is_rational(self) -> bool:
        return self.order == 1

    def as_rational(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"not a rational number: {self}")
        return Fraction(self.num[0], self.den)

    def is_rational_integer(self) -> bool:
        return self.order == 1 and self.den == 1

    def coeffs(self) -> list[Fraction]:
        return [Fraction(v, self.den) for v in self.num]

    def to_complex(self) -> complex:
        import cmath

        z = 0j
        for k, v in enumerate(self.num):
            if v:
                z += v * cmath.exp(2j * cmath.pi * k / self.order)
        return z / self.den

    # -- arithmetic ------------------------------------------------------

    def _lift(self, n: int) -> list[int]:
        """Integer vector of self at order n (self.order | n); den unchanged."""
        if n == self.order:
            return list(self.num)
        step = n // self.order
        return _reduce_exponents(
            n, _vector_exponent_pairs(self.order, self.num, step)
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = _common_order(self.order, other.order)
        a, b = self._lift(n), other._lift(n)
        da, db = self.den, other.den
        g = math.gcd(da, db)
        la, lb = db // g, da // g
        vec = [x * la + y * lb for x, y in zip(a, b)]
        return CycNum._build(n, vec, da // g * db)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, tuple(-v for v in self.num), self.den, _trusted=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1:
            if self.num[0] == 0:
                return ZERO
            vec = [self.num[0] * v for v in other.num]
            return CycNum._build(other.order, vec, self.den * other.den)
        if other.order == 1:
            return other * self
        n = _common_order(self.order, other.order)
        a, b = self._lift(n), other._lift(n)
        phi = len(a)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        rows = _power_rows(n)
        vec = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = rows[k]
                for j in range(phi):
                    vec[j] += c * row[j]
        return CycNum._build(n, vec, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.order == 1:
            return CycNum.rational(Fraction(self.den, self.num[0]))
        # extended euclid: u*self + v*Phi_n = 1 in Q[x]
        n = self.order
        a = [Fraction(v, self.den) for v in self.num]
        b = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r0, r1 = b, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            r1 = _poly_trim(r1)
            if len(r1) == 1 and r1[0] != 0:
                inv = 1 / r1[0]
                u = [c * inv for c in s1]
                break
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        phi = euler_phi(n)
        pairs = {k: c for k, c in enumerate(u) if c}
        den = 1
        for c in pairs.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        vec = _reduce_exponents(n, {k: int(c * den) for k, c in pairs.items()})
        return CycNum._build(n, vec, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- Galois ----------------------------------------------------------

    def galois(self, j: int) -> "CycNum":
        """Apply zeta_n -> zeta_n^j (j coprime to the conductor)."""
        if self.order == 1:
            return self
        if math.gcd(j, self.order) != 1:
            raise ValueError(f"{j} is not coprime to conductor {self.order}")
        vec = _galois_apply(self.order, j % self.order, self.num)
        return CycNum._build(self.order, vec, self.den)

    def conj(self) -> "CycNum":
        return self.galois(-1 % self.order) if self.order > 1 else self

    def is_real(self) -> bool:
        return self.conj() == self

    def abs_squared(self) -> "CycNum":
        return self * self.conj()

    def real_part(self) -> "CycNum":
        return (self + self.conj()) * HALF

    def imag_unit_part(self) -> "CycNum":
        """y such that self = real_part + i*y."""
        return (self - self.conj()) * HALF / I_UNIT

    # -- root-of-unity recognition ---------------------------------------

    def root_of_unity_exponent(self) -> tuple[int, int] | None:
        """(m, k) with self == zeta_m^k, gcd(k, m)=1 or k=0; None otherwise."""
        if self.is_zero():
            return None
        if self.order == 1:
            if self.num[0] == self.den:
                return (1, 0)
            if self.num[0] == -self.den:
                return (2, 1)
            return None
        m = self.order if self.order % 2 == 0 else 2 * self.order
        z = CycNum.zeta(m)
        cur = ONE
        for k in range(m):
            if cur == self:
                return (m, k)
            cur = cur * z
        return None

    def cube_root(self) -> "CycNum":
        """A cube root, defined for roots of unity only."""
        mk = self.root_of_unity_exponent()
        if mk is None:
            raise ValueError("cube_root is only implemented for roots of unity")
        m, k = mk
        return CycNum.zeta(3 * m, k)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [
                [f.numerator, f.denominator] for f in self.coeffs()
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "CycNum":
        n = obj["order"]
        fracs = [Fraction(a, b) for a, b in obj["coeffs"]]
        if len(fracs) != euler_phi(n):
            raise ValueError("coefficient vector length must be phi(order)")
        nums, den = _normalize_fracs(fracs)
        return CycNum._build(n, list(nums), den)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self.order == other.order
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.order == 1:
            return f"CycNum({Fraction(self.num[0], self.den)})"
        terms = []
        for k, v in enumerate(self.num):
            if v:
                q = Fraction(v, self.den)
                terms.append(f"{q}*z{self.order}^{k}" if k else f"{q}")
        return "CycNum(" + " + ".join(terms) + ")"


def _vector_exponent_pairs(order, num, step):
    return {k * step: c for k, c in enumerate(num) if c}


def _coerce(x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.rational(x)
    return NotImplemented


@lru_cache(maxsize=None)
def _common_order(a: int, b: int) -> int:
    n = a * b // math.gcd(a, b)
    # canonical orders are 1 or not 2 mod 4, so n is never 2 mod 4 here;
    # if a raw order slips through, doubling keeps a | n and b | n valid
    if n % 4 == 2:
        n *= 2
    if n > CONDUCTOR_CAP:
        raise ConductorOverflow(f"conductor {n} exceeds cap {CONDUCTOR_CAP}")
    return n


def _canonical_form(n, vec, den):
    """Reduce (order, integer vector, denominator) to minimal conductor."""
    while True:
        if n % 4 == 2:
            m = n // 2
            sol = _subfield_solver(n, m)(vec, den)
            assert sol is not None
            n = m
            nums, den = _normalize_fracs(sol)
            vec = list(nums)
            continue
        if n == 1:
            nums, d = _normalize_fracs([Fraction(vec[0], den)])
            return 1, (nums, d)
        descended = False
        for p in prime_factors(n):
            m = n // p
            if m % 4 == 2:
                m //= 2
            if m == n:
                continue
            probes = _descent_probes(n, m)
            if all(_galois_apply(n, j, tuple(vec)) == list(vec) for j in probes):
                sol = _subfield_solver(n, m)(vec, den)
                if sol is not None:
                    n = m
                    nums, den = _normalize_fracs(sol)
                    vec = list(nums)
                    descended = True
                    break
        if not descended:
            g = 0
            for v in vec:
                g = math.gcd(g, v)
            g = math.gcd(g, den)
            if g > 1:
                vec = [v // g for v in vec]
                den //= g
            return n, (tuple(vec), den)


# -- polynomial helpers over Fraction ------------------------------------

def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _poly_divmod_frac(num, den):
    num = list(num)
    den = _poly_trim(list(den))
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    inv = 1 / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return q, _poly_trim(num)


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)
HALF = CycNum.rational(Fraction(1, 2))
I_UNIT = CycNum.zeta(4)


def zeta(n: int, k: int = 1) -> CycNum:
    return CycNum.zeta(n, k)


def rational(q) -> CycNum:
    return CycNum.rational(q)


def cos_angle(n: int, k: int = 1) -> CycNum:
    """cos(2*pi*k/n), exactly."""
    return (zeta(n, k) + zeta(n, -k)) * HALF


def sin_angle(n: int, k: int = 1) -> CycNum:
    """sin(2*pi*k/n), exactly."""
    return (zeta(n, k) - zeta(n, -k)) * HALF / I_UNIT


def recognize_rational_integer(x: CycNum):
    """Return the Python int when x is a rational integer, else None."""
    if x.is_rational_integer():
        return x.num[0]
    return None
