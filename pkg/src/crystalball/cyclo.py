"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Every number is a vector of rational coefficients over the power basis
zeta^0 .. zeta^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
That makes equality a plain coefficient comparison, complex conjugation the
Galois map zeta -> zeta^(N-1), and all arithmetic exact; nothing is ever
rounded.  The default order N = 72 = lcm(8, 9, 12, 18, 24) is the smallest
order containing i, sqrt2, sqrt3, i*sqrt2, omega and e^(2*pi*i/(3p)) for
p in {2, 3, 4, 6}.

Certified sign decisions for real elements go through an exact zero test
first, then adaptive-precision interval enclosures of the basis roots of
unity (mpmath's interval context), so a nonzero sign is always decided.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

import mpmath

DEFAULT_ORDER = 72

RationalLike = int | Fraction


class FieldConfigError(ValueError):
    """A requested constant does not live in Q(zeta_N) for the configured N."""


class NotRealError(ValueError):
    """sign_of_real was applied to an element with conj(x) != x."""


class CycZeroDivisionError(ZeroDivisionError):
    """Division by the zero element of the field."""


# ---------------------------------------------------------------------------
# integer polynomials (dense tuples, constant term first)


def _int_trim(cs: list[int]) -> tuple[int, ...]:
    n = len(cs)
    while n > 0 and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _int_divmod(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # exact division only (used where b is monic or divides a); raises otherwise
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(_int_trim(r)) >= len(b):
        r = list(_int_trim(r))
        shift = len(r) - len(b)
        c, rem = divmod(r[-1], b[-1])
        if rem != 0:
            raise ArithmeticError("non-exact integer polynomial division")
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
    return _int_trim(q), _int_trim(r)


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient by trial division; inputs here stay tiny.

    >>> euler_phi(72)
    24
    """
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            result *= (p - 1) * p ** (k - 1)
        p += 1
    if m > 1:
        result *= m - 1
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic_int_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    >>> cyclotomic_int_poly(72)
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _int_divmod(poly, cyclotomic_int_poly(d))
            assert rem == ()
    return poly


class _Field:
    """Cached reduction data for one cyclotomic order."""

    __slots__ = ("order", "phi", "modulus", "powers", "galois_exponents")

    def __init__(self, order: int):
        self.order = order
        self.phi = euler_phi(order)
        self.modulus = cyclotomic_int_poly(order)
        limit = max(order, 2 * self.phi - 1)
        powers: list[tuple[int, ...]] = []
        cur = [1] + [0] * (self.phi - 1)
        powers.append(tuple(cur))
        for _ in range(1, limit):
            nxt = [0] + cur
            if len(nxt) > self.phi:
                lead = nxt.pop()
                if lead:
                    for j in range(self.phi):
                        nxt[j] -= lead * self.modulus[j]
            cur = nxt
            powers.append(tuple(cur))
        self.powers = tuple(powers)
        self.galois_exponents = tuple(k for k in range(1, order) if math.gcd(k, order) == 1)


@functools.lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    if order < 3:
        raise FieldConfigError("cyclotomic order must be at least 3")
    return _Field(order)


# ---------------------------------------------------------------------------
# field elements


class CycNum:
    """An element of Q(zeta_N): integer coefficient vector over a common
    denominator, fully reduced and normalised (gcd 1, positive denominator),
    so equal values have identical representations."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num: tuple[int, ...], den: int):
        # trusted constructor; use the factory helpers below
        self.order = order
        self.num = num
        self.den = den

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(order: int, num: list[int], den: int) -> CycNum:
        if den == 0:
            raise CycZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [c // g for c in num]
        return CycNum(order, tuple(num), den)

    @staticmethod
    def rational(value: RationalLike, order: int = DEFAULT_ORDER) -> CycNum:
        value = Fraction(value)
        phi = _field(order).phi
        return CycNum._make(order, [value.numerator] + [0] * (phi - 1), value.denominator)

    @staticmethod
    def zero(order: int = DEFAULT_ORDER) -> CycNum:
        return CycNum.rational(0, order)

    @staticmethod
    def one(order: int = DEFAULT_ORDER) -> CycNum:
        return CycNum.rational(1, order)

    @staticmethod
    def zeta_power(k: int, order: int = DEFAULT_ORDER) -> CycNum:
        """zeta_N^k as a reduced basis vector."""
        fld = _field(order)
        return CycNum._make(order, list(fld.powers[k % order]), 1)

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> CycNum | None:
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(other, self.order)
        return None

    def __add__(self, other) -> CycNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        num = [a * db + b * da for a, b in zip(self.num, o.num)]
        return CycNum._make(self.order, num, da * db)

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.order, tuple(-c for c in self.num), self.den)

    def __sub__(self, other) -> CycNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CycNum:
        return (-self) + other

    def __mul__(self, other) -> CycNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        fld = _field(self.order)
        phi = fld.phi
        a, b = self.num, o.num
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:phi]
        powers = fld.powers
        for e in range(phi, 2 * phi - 1):
            c = conv[e]
            if c:
                row = powers[e]
                for j in range(phi):
                    rj = row[j]
                    if rj:
                        out[j] += c * rj
        return CycNum._make(self.order, out, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CycNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> CycNum:
        return self.inverse() * other

    def __pow__(self, k: int) -> CycNum:
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverse(self) -> CycNum:
        """Multiplicative inverse via the extended Euclidean algorithm
        against the cyclotomic modulus over Q[x]."""
        if self.is_zero():
            raise CycZeroDivisionError("inverse of zero")
        fld = _field(self.order)
        mod = [Fraction(c) for c in fld.modulus]
        a = [Fraction(c, self.den) for c in self.num]
        s = _poly_ext_inverse(a, mod)
        phi = fld.phi
        s += [Fraction(0)] * (phi - len(s))
        den = 1
        for c in s:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return CycNum._make(self.order, [int(c * den) for c in s[:phi]], den)

    def conj(self) -> CycNum:
        """Complex conjugation, i.e. the Galois map zeta -> zeta^(N-1)."""
        return self.galois(self.order - 1)

    def galois(self, k: int) -> CycNum:
        """The automorphism zeta -> zeta^k (k must be prime to the order)."""
        if math.gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not prime to the order {self.order}")
        fld = _field(self.order)
        out = [0] * fld.phi
        for j, c in enumerate(self.num):
            if c:
                row = fld.powers[(j * k) % self.order]
                for t in range(fld.phi):
                    if row[t]:
                        out[t] += c * row[t]
        return CycNum._make(self.order, out, self.den)

    # -- ring protocol (shared with the other matrix scalar types) ----------

    def ring_zero(self) -> CycNum:
        return CycNum.zero(self.order)

    def ring_one(self) -> CycNum:
        return CycNum.one(self.order)

    # -- predicates and views ------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def is_real(self) -> bool:
        return self.conj() == self

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def real_part(self) -> CycNum:
        return (self + self.conj()) * Fraction(1, 2)

    def imag_part_times_minus_i(self) -> CycNum:
        """(x - conj x) / 2 as a field element (equals i * Im x)."""
        return (self - self.conj()) * Fraction(1, 2)

    def norm_square(self) -> CycNum:
        """x * conj(x); real and nonnegative."""
        return self * self.conj()

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, CycNum) else other
        if o is None or not isinstance(o, CycNum):
            return NotImplemented
        return self.order == o.order and self.den == o.den and self.num == o.num

    def __hash__(self) -> int:
        return hash((self.order, self.num, self.den))

    def __repr__(self) -> str:
        return f"CycNum({self.serialize()!r}, order={self.order})"

    def serialize(self) -> str:
        """Canonical human-readable form c0 + c1*z + ... with rational c_k.

        >>> (CycNum.zeta_power(9) + CycNum.rational(Fraction(1, 2))).serialize()
        '1/2 + z^9'
        """
        parts = []
        for k, c in enumerate(self.num):
            if c == 0:
                continue
            q = Fraction(c, self.den)
            mag = q if q > 0 else -q
            coeff = "" if (mag == 1 and k > 0) else str(mag) + ("*" if k > 0 else "")
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            term = coeff + mono
            parts.append(("- " if q < 0 else "+ ") + term if parts else ("-" if q < 0 else "") + term)
        return " ".join(parts) if parts else "0"

    # -- numerics ------------------------------------------------------------

    def approx(self, dps: int = 30) -> complex:
        """Floating approximation (not certified; use enclosure for proofs)."""
        with mpmath.workdps(dps):
            z = mpmath.e ** (2j * mpmath.pi / self.order)
            acc = mpmath.mpc(0)
            for c in reversed(self.num):
                acc = acc * z + c
            acc /= self.den
            return complex(acc)

    def enclosure(self, prec_bits: int = 64):
        """Certified complex enclosure (re, im) as mpmath interval numbers,
        by Horner evaluation at an interval enclosure of zeta_N."""
        iv = mpmath.iv
        old = iv.prec
        try:
            iv.prec = prec_bits
            theta = 2 * iv.pi / self.order
            zr, zi = iv.cos(theta), iv.sin(theta)
            ar, ai = iv.mpf(0), iv.mpf(0)
            for c in reversed(self.num):
                ar, ai = ar * zr - ai * zi + c, ar * zi + ai * zr
            d = iv.mpf(self.den)
            return ar / d, ai / d
        finally:
            iv.prec = old

    def enclosure_term_sum(self, prec_bits: int = 64):
        """Independent enclosure: sum of coefficient * zeta^k term enclosures."""
        iv = mpmath.iv
        old = iv.prec
        try:
            iv.prec = prec_bits
            ar, ai = iv.mpf(0), iv.mpf(0)
            for k, c in enumerate(self.num):
                if c:
                    theta = 2 * iv.pi * k / self.order
                    ar += c * iv.cos(theta)
                    ai += c * iv.sin(theta)
            d = iv.mpf(self.den)
            return ar / d, ai / d
        finally:
            iv.prec = old


def _poly_ext_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """s with a*s = 1 (mod mod) over Q[x]; a nonzero mod the modulus."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_q(n, d):
        n = n[:]
        q = [Fraction(0)] * max(0, len(n) - len(d) + 1)
        while len(trim(n)) >= len(d):
            n = trim(n)
            shift = len(n) - len(d)
            c = n[-1] / d[-1]
            q[shift] = c
            for i, dc in enumerate(d):
                n[shift + i] -= c * dc
        return trim(q), trim(n)

    r0, r1 = mod[:], trim(a[:])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r2 = divmod_q(r0, r1)
        # s2 = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    prod[i + j] += qc * sc
        s2 = [ (s0[i] if i < len(s0) else Fraction(0)) - (prod[i] if i < len(prod) else Fraction(0))
               for i in range(max(len(s0), len(prod))) ]
        r0, r1, s0, s1 = r1, r2, s1, trim(s2) or [Fraction(0)]
        if len(r1) == 1:
            break
        if not r1:
            raise CycZeroDivisionError("element is a zero divisor (not coprime to modulus)")
    c = r1[0]
    return [sc / c for sc in s1]


# ---------------------------------------------------------------------------
# named constants


def _require(cond: bool, what: str, needed: int, order: int) -> None:
    if not cond:
        raise FieldConfigError(
            f"{what} requires the cyclotomic order to be divisible by {needed}; "
            f"configured order is {order} (use --zeta-order {math.lcm(order, needed)} or larger)"
        )


def embed_constant(name: str, order: int = DEFAULT_ORDER) -> CycNum:
    """Return one of the standing named constants as an exact field element.

    Accepted names: i, sqrt2, sqrt3, isqrt2, omega, sigma1, sigma1bar,
    zeta(k) and u(p) for p in {2,3,4,6,inf}.

    >>> embed_constant("isqrt2") ** 2 == CycNum.rational(-2)
    True
    """
    if name == "i":
        _require(order % 4 == 0, "i", 4, order)
        return CycNum.zeta_power(order // 4, order)
    if name == "omega":
        _require(order % 3 == 0, "omega", 3, order)
        return CycNum.zeta_power(order // 3, order)
    if name == "sqrt2":
        _require(order % 8 == 0, "sqrt2", 8, order)
        z8 = order // 8
        return CycNum.zeta_power(z8, order) + CycNum.zeta_power(order - z8, order)
    if name == "sqrt3":
        _require(order % 12 == 0, "sqrt3", 12, order)
        z12 = order // 12
        return CycNum.zeta_power(z12, order) + CycNum.zeta_power(order - z12, order)
    if name == "isqrt2":
        _require(order % 8 == 0, "i*sqrt2", 8, order)
        z8 = order // 8
        return CycNum.zeta_power(z8, order) + CycNum.zeta_power(3 * z8, order)
    if name == "sigma1":
        return CycNum.rational(-1, order) + embed_constant("isqrt2", order)
    if name == "sigma1bar":
        return CycNum.rational(-1, order) - embed_constant("isqrt2", order)
    if name.startswith("zeta(") and name.endswith(")"):
        k = int(name[5:-1])
        _require(k >= 1 and order % k == 0, f"zeta({k})", k, order)
        return CycNum.zeta_power(order // k, order)
    if name.startswith("u(") and name.endswith(")"):
        arg = name[2:-1]
        if arg == "inf":
            return CycNum.one(order)
        p = int(arg)
        _require(order % (3 * p) == 0, f"u({p})", 3 * p, order)
        return CycNum.zeta_power(order // (3 * p), order)
    raise ValueError(f"unknown constant {name!r}")


def rotation_eigenvalue(p, order: int = DEFAULT_ORDER) -> CycNum:
    """u = e^(2*pi*i/(3p)); u = 1 for the p = infinity degeneration."""
    if p == math.inf:
        return CycNum.one(order)
    if p not in (2, 3, 4, 6):
        raise FieldConfigError(f"p must be one of 2, 3, 4, 6, inf; got {p}")
    return embed_constant(f"u({p})", order)


# ---------------------------------------------------------------------------
# certified signs and roots of unity


def sign_of_real(x: CycNum, max_bits: int = 1 << 14) -> int:
    """Certified sign of a real element: -1, 0 or +1.

    Zero is decided exactly on the coefficient vector; a nonzero sign is
    decided by interval enclosures at doubling precision (terminates since
    the value is a nonzero algebraic number).
    """
    if not x.is_real():
        raise NotRealError(f"not a real element: {x!r}")
    if x.is_zero():
        return 0
    bits = 64
    while bits <= max_bits:
        re, _ = x.enclosure(bits)
        if re > 0:
            return 1
        if re < 0:
            return -1
        bits *= 2
    raise RuntimeError("sign undecided at maximal precision (unreachable for nonzero input)")


def is_root_of_unity(x: CycNum) -> int | None:
    """Multiplicative order of x if x is a root of unity, else None.

    Roots of unity in Q(zeta_N) have order dividing 2N, so x^(2N) = 1 is a
    complete test.

    >>> is_root_of_unity(CycNum.rational(1))
    1
    """
    if x.is_zero():
        return None
    two_n = 2 * x.order
    if not (x ** two_n == CycNum.one(x.order)):
        return None
    for d in sorted(_divisors(two_n)):
        if x ** d == CycNum.one(x.order):
            return d
    raise AssertionError("unreachable")


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


# ---------------------------------------------------------------------------
# polynomials over Q


class RatPoly:
    """Dense polynomial over Q, constant term first, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def x() -> RatPoly:
        return RatPoly([0, 1])

    @staticmethod
    def cyclotomic(n: int) -> RatPoly:
        return RatPoly(cyclotomic_int_poly(n))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: RatPoly) -> RatPoly:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RatPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __sub__(self, other: RatPoly) -> RatPoly:
        return self + (-other)

    def __neg__(self) -> RatPoly:
        return RatPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> RatPoly:
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 if self.coeffs and other.coeffs else 0)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RatPoly:
        result = RatPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __divmod__(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        q = [Fraction(0)] * max(0, len(r) - len(d) + 1)
        while len(r) >= len(d):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(d):
                break
            shift = len(r) - len(d)
            c = r[-1] / d[-1]
            q[shift] = c
            for i, dc in enumerate(d):
                r[shift + i] -= c * dc
            r.pop()
        return RatPoly(q), RatPoly(r)

    def __floordiv__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[1]

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return RatPoly([c / lead for c in self.coeffs])

    def gcd(self, other: RatPoly) -> RatPoly:
        """Monic greatest common divisor.

        >>> RatPoly([-1, 0, 1]).gcd(RatPoly([1, 1])).coeffs
        (Fraction(1, 1), Fraction(1, 1))
        """
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> RatPoly:
        return RatPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def squarefree_part(self) -> RatPoly:
        if self.degree() < 1:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def evaluate(self, x):
        acc = x * 0 if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def integer_coeffs(self) -> tuple[int, ...]:
        """Clear denominators and content; sign fixed by a positive leading
        coefficient.  Suitable for mod-p work on primitive integer polys."""
        if self.is_zero():
            return ()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return tuple(ints)

    def pretty(self, var: str = "lam") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = c if c > 0 else -c
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            body = str(mag) if (k == 0 or mag != 1) else ""
            term = body + ("*" if body and mono else "") + mono
            parts.append(("- " if c < 0 else "+ ") + term if parts else ("-" if c < 0 else "") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RatPoly('{self.pretty('x')}')"


# ---------------------------------------------------------------------------
# polynomials over the cyclotomic field


class CycPoly:
    """Dense polynomial with CycNum coefficients, constant term first."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.order = order
        self.coeffs = tuple(cs)

    @staticmethod
    def from_rational(p: RatPoly, order: int = DEFAULT_ORDER) -> CycPoly:
        return CycPoly(order, [CycNum.rational(c, order) for c in p.coeffs])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, CycPoly) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: CycPoly) -> CycPoly:
        a, b = self.coeffs, other.coeffs
        zero = CycNum.zero(self.order)
        n = max(len(a), len(b))
        return CycPoly(self.order, [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)])

    def __neg__(self) -> CycPoly:
        return CycPoly(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: CycPoly) -> CycPoly:
        return self + (-other)

    def __mul__(self, other) -> CycPoly:
        if isinstance(other, (int, Fraction, CycNum)):
            return CycPoly(self.order, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return CycPoly(self.order, [])
        zero = CycNum.zero(self.order)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
        return CycPoly(self.order, out)

    __rmul__ = __mul__

    def __divmod__(self, other: CycPoly) -> tuple[CycPoly, CycPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = CycNum.zero(self.order)
        r = list(self.coeffs)
        d = other.coeffs
        dinv = d[-1].inverse()
        q = [zero] * max(0, len(r) - len(d) + 1)
        while len(r) >= len(d):
            while r and r[-1].is_zero():
                r.pop()
            if len(r) < len(d):
                break
            shift = len(r) - len(d)
            c = r[-1] * dinv
            q[shift] = c
            for i, dc in enumerate(d):
                r[shift + i] = r[shift + i] - c * dc
            r.pop()
        return CycPoly(self.order, q), CycPoly(self.order, r)

    def __floordiv__(self, other: CycPoly) -> CycPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: CycPoly) -> CycPoly:
        return divmod(self, other)[1]

    def monic(self) -> CycPoly:
        if self.is_zero():
            return self
        inv = self.coeffs[-1].inverse()
        return CycPoly(self.order, [c * inv for c in self.coeffs])

    def gcd(self, other: CycPoly) -> CycPoly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> CycPoly:
        return CycPoly(self.order, [c * k for k, c in enumerate(self.coeffs)][1:])

    def squarefree_part(self) -> CycPoly:
        if self.degree() < 1:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def evaluate(self, x: CycNum) -> CycNum:
        acc = CycNum.zero(self.order)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def galois(self, k: int) -> CycPoly:
        return CycPoly(self.order, [c.galois(k) for c in self.coeffs])

    def rational_coeffs(self) -> RatPoly:
        """Convert to RatPoly; raises if any coefficient is irrational."""
        return RatPoly([c.as_rational() for c in self.coeffs])

    def __repr__(self) -> str:
        body = ", ".join(c.serialize() for c in self.coeffs)
        return f"CycPoly(order={self.order}, [{body}])"


def galois_norm(q: CycPoly) -> RatPoly:
    """Product of q over all Galois automorphisms zeta -> zeta^k; the result
    is Galois-stable, hence has rational coefficients (asserted exactly)."""
    fld = _field(q.order)
    prod = CycPoly.from_rational(RatPoly([1]), q.order)
    for k in fld.galois_exponents:
        prod = prod * q.galois(k)
    for c in prod.coeffs:
        if not c.is_rational():
            raise AssertionError("Galois norm produced an irrational coefficient")
    return prod.rational_coeffs()


def cyclotomic_factor_scan(p: RatPoly) -> list[int]:
    """All n with Phi_n dividing p.  Scans n with phi(n) <= deg p, using
    n <= 2*(deg p)^2 as the safe enumeration bound (phi(n) >= sqrt(n/2)).
    An empty result certifies that no root of p is a root of unity."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    deg = p.degree()
    hits = []
    for n in range(1, 2 * deg * deg + 1):
        if euler_phi(n) <= deg and p.gcd(RatPoly.cyclotomic(n)).degree() > 0:
            hits.append(n)
    return hits


# ---------------------------------------------------------------------------
# irreducibility over Q by the mod-p factor-degree sieve


def _mod_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _mod_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _mod_trim(out)

def _mod_rem(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        if c:
            shift = len(a) - len(m)
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return _mod_trim(a)


def _mod_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _mod_trim(a[:]), _mod_trim(b[:])
    while b:
        a, b = b, _mod_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def factor_degree_pattern(int_coeffs: tuple[int, ...], p: int) -> tuple[int, ...] | None:
    """Degrees (with multiplicity) of the irreducible factors of the
    reduction mod p, by distinct-degree decomposition.  Returns None when the
    reduction is not squarefree or drops degree (bad prime)."""
    f = [c % p for c in int_coeffs]
    f = _mod_trim(f)
    if len(f) != len(int_coeffs):
        return None
    fp = _mod_trim([c * k % p for k, c in enumerate(f)][1:])
    if len(_mod_gcd(f, fp, p)) != 1:
        return None
    degrees: list[int] = []
    inv = pow(f[-1], p - 2, p)
    f = [c * inv % p for c in f]
    w = [0, 1]  # x
    d = 0
    rest = f
    while len(rest) - 1 > 2 * d:
        d += 1
        # w = w^p mod rest
        acc = [1]
        base = w[:]
        e = p
        while e:
            if e & 1:
                acc = _mod_rem(_mod_mul(acc, base, p), rest, p)
            base = _mod_rem(_mod_mul(base, base, p), rest, p)
            e >>= 1
        w = acc
        w_minus_x = [c for c in w] + [0] * max(0, 2 - len(w))
        w_minus_x[1] = (w_minus_x[1] - 1) % p
        g = _mod_gcd(_mod_trim(w_minus_x), rest, p)
        if len(g) > 1:
            degrees.extend([d] * ((len(g) - 1) // d))
            rest = _mod_trim([c for c in _exact_mod_div(rest, g, p)])
            w = _mod_rem(w, rest, p) if len(rest) > 1 else [0]
    if len(rest) > 1:
        degrees.append(len(rest) - 1)
    return tuple(sorted(degrees))


def _exact_mod_div(a: list[int], b: list[int], p: int) -> list[int]:
    q = [0] * (len(a) - len(b) + 1)
    r = a[:]
    inv = pow(b[-1], p - 2, p)
    while len(r) >= len(b):
        r = _mod_trim(r)
        if len(r) < len(b):
            break
        c = r[-1] * inv % p
        q[len(r) - len(b)] = c
        for i, bc in enumerate(b):
            r[len(r) - len(b) + i] = (r[len(r) - len(b) + i] - c * bc) % p
        r.pop()
    return q


_SIEVE_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101)


def feasible_factor_degrees(poly: RatPoly, primes=_SIEVE_PRIMES) -> set[int]:
    """Degrees a monic rational factor of poly could have: the intersection
    over good primes of the subset sums of the mod-p factor degree patterns.
    Always contains 0 and deg(poly).  {0, deg} certifies irreducibility."""
    ints = poly.integer_coeffs()
    n = poly.degree()
    feasible = set(range(n + 1))
    for p in primes:
        pattern = factor_degree_pattern(ints, p)
        if pattern is None:
            continue
        sums = {0}
        for d in pattern:
            sums |= {s + d for s in sums}
        feasible &= sums
        if feasible == {0, n}:
            break
    return feasible


def find_integer_factor(poly: RatPoly, degrees=None, dps: int = 60) -> RatPoly | None:
    """A proper monic integer factor of a monic squarefree integer polynomial,
    or None, certifying irreducibility.

    Candidate factors are subset products of high-precision roots (a true
    factor has integer coefficients, so it shows up as a near-integer
    coefficient vector); every candidate is confirmed or refuted by exact
    division, so a returned factor is exact and an empty search is a proof.
    `degrees` restricts the subset sizes tried (defaults to the mod-p sieve's
    feasible proper degrees up to deg/2).
    """
    import itertools

    ints = poly.integer_coeffs()
    n = poly.degree()
    if ints[-1] != 1:
        raise ValueError("factor search requires a monic integer polynomial")
    if n <= 1:
        return None
    if degrees is None:
        feasible = feasible_factor_degrees(poly)
        degrees = sorted(d for d in feasible if 1 <= d <= n // 2)
        degrees = degrees or [d for d in range(1, n // 2 + 1)]
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(ints)], maxsteps=200, extraprec=200)
        # certify the root multiset is accurate: the monic product must
        # reproduce the integer coefficients to well below rounding tolerance
        recon = _poly_from_roots(roots, mpmath.mpc(1))
        for c, expect in zip(recon, ints):
            assert abs(complex(c) - expect) < 1e-12, "root refinement failed"
    croots = [complex(r) for r in roots]
    for d in degrees:
        for subset in itertools.combinations(range(n), d):
            coeffs = _poly_from_roots([croots[i] for i in subset], 1.0 + 0j)
            cand = []
            ok = True
            for c in coeffs:
                nearest = round(c.real)
                if abs(c.imag) > 1e-6 or abs(c.real - nearest) > 1e-6:
                    ok = False
                    break
                cand.append(nearest)
            if not ok:
                continue
            g = RatPoly(cand)
            if g.degree() != d:
                continue
            q, r = divmod(poly.monic(), g)
            if r.is_zero():
                return g
    return None


def _poly_from_roots(roots, one):
    """Monic product of (x - r), coefficients constant-first."""
    coeffs = [one]
    for r in roots:
        new = [c * 0 for c in coeffs] + [coeffs[-1] * 0]
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= r * c
        coeffs = new
    return coeffs


def is_irreducible(poly: RatPoly) -> bool:
    """Irreducibility over Q for monic squarefree integer polynomials: the
    mod-p degree sieve when it is conclusive, else the exhaustive
    subset-product factor search (exact either way)."""
    n = poly.degree()
    if n <= 0:
        return False
    if n == 1:
        return True
    feasible = feasible_factor_degrees(poly)
    if feasible == {0, n}:
        return True
    if 1 in feasible and _has_rational_root(poly):
        return False
    degrees = sorted(d for d in feasible if 1 <= d <= n // 2)
    return find_integer_factor(poly, degrees=degrees) is None


def _has_rational_root(poly: RatPoly) -> bool:
    ints = poly.integer_coeffs()
    lead, const = ints[-1], ints[0]
    if const == 0:
        return True
    for r in _divisors(abs(const)):
        for s in _divisors(abs(lead)):
            for sign in (1, -1):
                if poly.evaluate(Fraction(sign * r, s)) == 0:
                    return True
    return False
