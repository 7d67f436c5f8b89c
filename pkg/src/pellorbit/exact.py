"""Exact arbitrary-precision value types: projective rationals, quadratic
surds, and integer matrices acting as linear fractional transformations.

Everything here is immutable and computed with integer arithmetic only;
no floating point appears anywhere in a comparison or a result.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def floor_sqrt_scaled(n: int, num: int) -> int:
    """floor(num * sqrt(n)) for num >= 0."""
    return isqrt(num * num * n)


class Rational:
    """A rational number on the projective line: den == 0 encodes the
    point at infinity (always stored as 1/0)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, Rational):
            num, den = num.num, num.den * den
        if isinstance(num, Fraction):
            num, den = num.numerator * den, num.denominator
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("Rational needs integers")
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("0/0 is not a projective point")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("Rational is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def numerator(self) -> int:
        return self.num

    @property
    def denominator(self) -> int:
        return self.den

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinity has no Fraction form")
        return Fraction(self.num, self.den)

    @staticmethod
    def _coerce(x):
        if isinstance(x, Rational):
            return x
        if isinstance(x, int):
            return Rational(x)
        if isinstance(x, Fraction):
            return Rational(x.numerator, x.denominator)
        return NotImplemented

    def __add__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            if self.is_infinite and other.is_infinite:
                raise ZeroDivisionError("inf + inf is indeterminate")
            return INF
        return Rational(self.num * other.den + other.num * self.den,
                        self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_infinite:
            return INF
        return Rational(-self.num, self.den)

    def __sub__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            if (not self.is_infinite and self.num == 0) or \
               (not other.is_infinite and other.num == 0):
                raise ZeroDivisionError("0 * inf is indeterminate")
            return INF
        return Rational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self):
        return Rational(self.den, self.num) if self.num != 0 or self.den != 0 \
            else INF

    def __truediv__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite and other.is_infinite:
            raise ZeroDivisionError("inf / inf is indeterminate")
        if other.is_infinite:
            return Rational(0)
        if other.num == 0:
            if self.num == 0 and not self.is_infinite:
                raise ZeroDivisionError("0 / 0 is indeterminate")
            return INF
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_infinite:
            return hash("pellorbit-inf")
        return hash(Fraction(self.num, self.den))

    def _require_finite(self, other):
        if self.is_infinite or other.is_infinite:
            raise ValueError("projective infinity is unordered")

    def __lt__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._require_finite(other)
        return self.num * other.den < other.num * self.den

    def __le__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._require_finite(other)
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other < self

    def __ge__(self, other):
        other = Rational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other <= self

    def __abs__(self):
        if self.is_infinite:
            return INF
        return Rational(abs(self.num), self.den)

    def floor(self) -> int:
        if self.is_infinite:
            raise ValueError("floor of infinity")
        return self.num // self.den

    def is_integral(self) -> bool:
        return self.den == 1

    def __repr__(self):
        if self.is_infinite:
            return "Rational(inf)"
        return f"Rational({self.num}, {self.den})"

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INF = Rational(1, 0)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _sign_int_plus_root(a: int, b: int, k: int) -> int:
    """Exact sign of a + b*sqrt(k) for k > 0 nonsquare."""
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    sa, sb = _sign(a), _sign(b)
    if sa == sb:
        return sa
    # opposite signs: compare a^2 with b^2 k
    lhs, rhs = a * a, b * b * k
    if lhs == rhs:
        # would force sqrt(k) rational
        raise ArithmeticError("nonsquare radicand produced a square")
    return sa if lhs > rhs else sb


def _sign_two_roots(A: int, B: int, m: int, C: int, n: int) -> int:
    """Exact sign of A + B*sqrt(m) + C*sqrt(n), m and n positive nonsquares."""
    if C == 0:
        return _sign_int_plus_root(A, B, m)
    if B == 0:
        return _sign_int_plus_root(A, C, n)
    if A == 0:
        # B sqrt(m) + C sqrt(n): compare B^2 m with C^2 n
        if _sign(B) == _sign(C):
            return _sign(B)
        lhs, rhs = B * B * m, C * C * n
        if lhs == rhs:
            return 0
        return _sign(B) if lhs > rhs else _sign(C)
    # all three nonzero: value cannot be 0 (squaring A + B sqrt(m) = -C sqrt(n)
    # leaves an irrational cross term), so adaptive intervals terminate
    prec = 32
    while True:
        scale = 1 << prec
        blo = floor_sqrt_scaled(m, abs(B))
        nlo = floor_sqrt_scaled(n, abs(C))
        # scaled bounds on B sqrt(m) and C sqrt(n)
        bm_lo = isqrt(B * B * m * scale * scale)
        cn_lo = isqrt(C * C * n * scale * scale)
        bm = (bm_lo, bm_lo + 1) if B > 0 else (-bm_lo - 1, -bm_lo)
        cn = (cn_lo, cn_lo + 1) if C > 0 else (-cn_lo - 1, -cn_lo)
        lo = A * scale + bm[0] + cn[0]
        hi = A * scale + bm[1] + cn[1]
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2
        if prec > 1 << 20:  # value proven nonzero above; cannot happen
            raise ArithmeticError("comparison failed to converge")


class QuadSurd:
    """Exact real quadratic surd (a + b*sqrt(k)) / c with k > 0 nonsquare,
    c > 0, gcd(a, b, c) == 1.  b == 0 is allowed (a rational value that
    remembers its field)."""

    __slots__ = ("a", "b", "c", "k")

    def __init__(self, a: int, b: int, c: int, k: int):
        if not all(isinstance(x, int) for x in (a, b, c, k)):
            raise TypeError("QuadSurd needs integers")
        if k <= 0 or is_square(k):
            raise ValueError(f"radicand {k} must be a positive nonsquare")
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "k", k)

    def __setattr__(self, *args):
        raise AttributeError("QuadSurd is immutable")

    @classmethod
    def sqrt(cls, k: int) -> "QuadSurd":
        return cls(0, 1, 1, k)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Rational:
        if self.b != 0:
            raise ValueError("irrational surd")
        return Rational(self.a, self.c)

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.c, self.k)

    def norm(self) -> Rational:
        return Rational(self.a * self.a - self.b * self.b * self.k,
                        self.c * self.c)

    def trace(self) -> Rational:
        return Rational(2 * self.a, self.c)

    def minimal_poly(self) -> tuple[int, int, int]:
        """(A, B, C) with A x^2 + B x + C = 0, gcd 1, A > 0."""
        A = self.c * self.c
        B = -2 * self.a * self.c
        C = self.a * self.a - self.b * self.b * self.k
        g = gcd(gcd(A, B), C)
        return (A // g, B // g, C // g)

    def sign(self) -> int:
        return _sign_int_plus_root(self.a, self.b, self.k)

    def floor(self) -> int:
        """Exact floor via integer square-root bracketing."""
        if self.b == 0:
            return self.a // self.c
        if self.b > 0:
            t = isqrt(self.b * self.b * self.k)
        else:
            t = -isqrt(self.b * self.b * self.k) - 1
        return (self.a + t) // self.c

    # -- arithmetic (same radicand, or rational operands) ------------------

    def _coerce_pair(self, other):
        if isinstance(other, QuadSurd):
            if other.b == 0:
                return self, other.to_rational()
            if self.b == 0:
                return self.to_rational(), other
            if other.k != self.k:
                raise ValueError("mixed radicands")
            return self, other
        if isinstance(other, (int, Fraction, Rational)):
            r = Rational._coerce(other)
            if r.is_infinite:
                raise ValueError("infinite operand")
            return self, r
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._coerce_pair(other)
        if b is NotImplemented:
            return NotImplemented
        if isinstance(a, Rational):  # self was rational-valued
            if isinstance(b, Rational):
                res = a + b
                return QuadSurd(res.num, 0, res.den, self.k)
            a, b = b, a
        if isinstance(b, Rational):
            return QuadSurd(a.a * b.den + b.num * a.c, a.b * b.den,
                            a.c * b.den, a.k)
        return QuadSurd(a.a * b.c + b.a * a.c, a.b * b.c + b.b * a.c,
                        a.c * b.c, a.k)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.c, self.k)

    def __sub__(self, other):
        if isinstance(other, QuadSurd):
            return self + (-other)
        r = Rational._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return self + (-r)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce_pair(other)
        if b is NotImplemented:
            return NotImplemented
        if isinstance(a, Rational):
            if isinstance(b, Rational):
                res = a * b
                return QuadSurd(res.num, 0, res.den, self.k)
            a, b = b, a
        if isinstance(b, Rational):
            return QuadSurd(a.a * b.num, a.b * b.num, a.c * b.den, a.k)
        return QuadSurd(a.a * b.a + a.b * b.b * a.k, a.a * b.b + a.b * b.a,
                        a.c * b.c, a.k)

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadSurd":
        nrm = self.a * self.a - self.b * self.b * self.k
        if nrm == 0:
            raise ZeroDivisionError("zero surd")
        return QuadSurd(self.a * self.c, -self.b * self.c, nrm, self.k) \
            if nrm > 0 else \
            QuadSurd(-self.a * self.c, self.b * self.c, -nrm, self.k)

    def __truediv__(self, other):
        if isinstance(other, QuadSurd):
            return self * other.reciprocal()
        r = Rational._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return self * r.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int) -> "QuadSurd":
        if n < 0:
            return self.reciprocal() ** (-n)
        result = QuadSurd(1, 0, 1, self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -------------------------------------------------------

    def _cmp(self, other) -> int:
        if isinstance(other, (int, Fraction, Rational)):
            r = Rational._coerce(other)
            if r.is_infinite:
                raise ValueError("projective infinity is unordered")
            diff = self - r
            return diff.sign()
        if not isinstance(other, QuadSurd):
            raise TypeError(f"cannot compare QuadSurd with {type(other)}")
        if other.k == self.k or self.b == 0 or other.b == 0:
            diff = self - other
            return diff.sign()
        # general case: sign of a1 c2 - a2 c1 + b1 c2 sqrt(k1) - b2 c1 sqrt(k2)
        return _sign_two_roots(self.a * other.c - other.a * self.c,
                               self.b * other.c, self.k,
                               -other.b * self.c, other.k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            if self.b != 0:
                return False
            r = Rational._coerce(other)
            return not r.is_infinite and Rational(self.a, self.c) == r
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return (self.minimal_poly() == other.minimal_poly()
                and _sign(self.b) == _sign(other.b))

    def __hash__(self):
        return hash((self.minimal_poly(), _sign(self.b)))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return self if self.sign() >= 0 else -self

    def __repr__(self):
        return f"QuadSurd(({self.a} + {self.b}*sqrt({self.k}))/{self.c})"


class Lft:
    """Linear fractional transformation x -> (m11 x + m12)/(m21 x + m22),
    stored as a primitive integer matrix (gcd 1, first nonzero entry
    positive).  Rational entries are accepted and cleared projectively."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11, m12, m21, m22):
        entries = []
        denoms = 1
        for e in (m11, m12, m21, m22):
            if isinstance(e, Rational):
                if e.is_infinite:
                    raise ValueError("infinite matrix entry")
                e = e.as_fraction()
            elif isinstance(e, int):
                e = Fraction(e)
            elif not isinstance(e, Fraction):
                raise TypeError("Lft entries must be rational")
            entries.append(e)
            denoms = denoms * e.denominator // gcd(denoms, e.denominator)
        ints = [int(e * denoms) for e in entries]
        g = gcd(gcd(ints[0], ints[1]), gcd(ints[2], ints[3]))
        if g == 0:
            raise ValueError("zero matrix")
        ints = [x // g for x in ints]
        for x in ints:
            if x != 0:
                if x < 0:
                    ints = [-y for y in ints]
                break
        if ints[0] * ints[3] - ints[1] * ints[2] == 0:
            raise ValueError("degenerate (determinant zero) transformation")
        object.__setattr__(self, "m11", ints[0])
        object.__setattr__(self, "m12", ints[1])
        object.__setattr__(self, "m21", ints[2])
        object.__setattr__(self, "m22", ints[3])

    def __setattr__(self, *args):
        raise AttributeError("Lft is immutable")

    @classmethod
    def identity(cls) -> "Lft":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def trace(self) -> int:
        return self.m11 + self.m22

    def entries(self) -> tuple[int, int, int, int]:
        return (self.m11, self.m12, self.m21, self.m22)

    def compose(self, other: "Lft") -> "Lft":
        """self after other (matrix product self @ other)."""
        return Lft(self.m11 * other.m11 + self.m12 * other.m21,
                   self.m11 * other.m12 + self.m12 * other.m22,
                   self.m21 * other.m11 + self.m22 * other.m21,
                   self.m21 * other.m12 + self.m22 * other.m22)

    __matmul__ = compose

    def inverse(self) -> "Lft":
        return Lft(self.m22, -self.m12, -self.m21, self.m11)

    def power(self, n: int) -> "Lft":
        if n < 0:
            return self.inverse().power(-n)
        result = Lft.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, x):
        """Apply to a Rational (projective conventions) or QuadSurd."""
        if isinstance(x, (int, Fraction)):
            x = Rational._coerce(x)
        if isinstance(x, Rational):
            n, d = (1, 0) if x.is_infinite else (x.num, x.den)
            return Rational(self.m11 * n + self.m12 * d,
                            self.m21 * n + self.m22 * d)
        if isinstance(x, QuadSurd):
            num = x * self.m11 + self.m12
            den = x * self.m21 + self.m22
            return num / den
        raise TypeError(f"cannot apply Lft to {type(x)}")

    def __eq__(self, other):
        if not isinstance(other, Lft):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Lft[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"


def surd_floor(x: QuadSurd) -> int:
    return x.floor()


def lft_apply(g: Lft, x):
    return g.apply(x)


def lft_compose(g: Lft, h: Lft) -> Lft:
    return g.compose(h)


def lft_pow(g: Lft, n: int) -> Lft:
    return g.power(n)
