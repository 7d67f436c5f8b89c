"""The dynamical system x -> (d x + k)/(x + d) iterated from infinity.

Covers exact iteration, the Babylonian doubling step, the integrality test
on R = 4 d^2/(k - d^2), the minimal projectively-integral power of a
rational matrix, and classification of iterates against the independent
continued fraction oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .cf import Cf, cf_expand_surd, locate_convergent, locate_semiconvergent
from .exact import INF, Lft, QuadSurd, Rational, is_square


@dataclass(frozen=True)
class OrbitSpec:
    """Parameters of the orbit: a nonsquare k > 0 and a rational d > 0."""

    k: int
    d: Rational

    def __post_init__(self):
        if self.k <= 0 or is_square(self.k):
            raise ValueError(f"k = {self.k} must be a positive nonsquare")
        d = self.d
        if isinstance(d, (int, Fraction)):
            d = Rational._coerce(d)
            object.__setattr__(self, "d", d)
        if d.is_infinite or d <= 0:
            raise ValueError("d must be a positive rational")

    @property
    def R(self) -> Rational:
        d2 = self.d * self.d
        return Rational(4) * d2 / (Rational(self.k) - d2)

    def lft(self) -> Lft:
        """The map x -> (d x + k)/(x + d) as an integer matrix."""
        p, q = self.d.num, self.d.den
        return Lft(p, self.k * q, q, p)


@dataclass(frozen=True)
class SeedVerdict:
    R: Rational
    integral: bool


@dataclass(frozen=True)
class IterateRecord:
    n: int
    value: Rational
    pell_error: Rational
    convergent_index: int | None
    semiconvergent: bool
    pellian: bool


def iterate(spec: OrbitSpec, n: int) -> Rational:
    """f^n(infinity) = a/b where (d + sqrt(k))^n = a + b sqrt(k), by binary
    exponentiation on the coefficient pair."""
    if n < 0:
        raise ValueError("negative iterate")
    p, q = spec.d.num, spec.d.den
    # track (p + q sqrt(k))^n; the q^n scale cancels in the ratio
    a, b = 1, 0
    ba, bb = p, q
    k = spec.k
    while n:
        if n & 1:
            a, b = a * ba + b * bb * k, a * bb + b * ba
        ba, bb = ba * ba + bb * bb * k, 2 * ba * bb
        n >>= 1
    return Rational(a, b)


def iterate_pairs(spec: OrbitSpec, count: int):
    """Yield (n, a, b) with (p + q sqrt(k))^n = a + b sqrt(k) for n=1..count.

    Incremental integer recurrence; a/b equals f^n(infinity).
    """
    p, q, k = spec.d.num, spec.d.den, spec.k
    a, b = p, q
    for n in range(1, count + 1):
        yield n, a, b
        a, b = p * a + k * q * b, p * b + q * a


def babylonian_step(k: int, x: Rational) -> Rational:
    """Exact (x + k/x)/2; doubles the orbit index of an iterate."""
    if x.is_infinite or x.num == 0:
        raise ValueError("Babylonian step undefined at 0 and infinity")
    return (x + Rational(k) / x) / 2


def is_seed(spec: OrbitSpec) -> SeedVerdict:
    R = spec.R
    return SeedVerdict(R=R, integral=R.is_integral())


def min_integral_power(g: Lft, hard_cap: int = 10 ** 6) -> int:
    """Minimal n >= 1 such that g^n, as a primitive integer matrix, has
    determinant +-1 (i.e. represents an integral transformation).

    Requires (tr g)^2 / det g to be an integer; otherwise no power works
    and a ValueError is raised.  The search is capped at twice the period
    of the Cayley-Hamilton entry recurrence modulo the cleared denominator,
    which the trace condition guarantees to suffice.
    """
    T, D = g.trace, g.det
    if (T * T) % D != 0:
        raise ValueError("(tr g)^2 / det g is not an integer; "
                         "no power of g is integral")
    cap = 2 * _recurrence_period_bound(g, hard_cap)
    power = Lft.identity()
    for n in range(1, cap + 1):
        power = power @ g
        if abs(power.det) == 1:
            return n
    raise RuntimeError(f"no integral power found within bound {cap}")


def _recurrence_period_bound(g: Lft, hard_cap: int) -> int:
    """Period of x(n+1) = t x(n) - x(n-1) mod m for C = g^2 / det g, which
    bounds the minimal n with C^n integral."""
    a, b, c, d = g.entries()
    D = g.det
    e11 = a * a + b * c
    e12 = b * (a + d)
    e21 = c * (a + d)
    e22 = d * d + b * c
    content = gcd(gcd(e11, e12), gcd(e21, e22))
    m = abs(D) // gcd(content, abs(D))
    if m == 1:
        return 1
    t = (e11 + e22) // D  # integer by the trace condition
    # order of the companion matrix [[t, -1], [1, 0]] in GL2(Z/m)
    x11, x12, x21, x22 = t % m, (-1) % m, 1, 0
    c11, c12, c21, c22 = x11, x12, x21, x22
    for n in range(1, hard_cap + 1):
        if (c11 % m, c12 % m, c21 % m, c22 % m) == (1, 0, 0, 1):
            return n
        c11, c12, c21, c22 = ((c11 * x11 + c12 * x21) % m,
                              (c11 * x12 + c12 * x22) % m,
                              (c21 * x11 + c22 * x21) % m,
                              (c21 * x12 + c22 * x22) % m)
    raise RuntimeError(f"companion period exceeds hard cap {hard_cap}")


def classify_orbit(spec: OrbitSpec, count: int,
                   oracle: Cf | None = None) -> list[IterateRecord]:
    """Records for n = 1..count: exact value, Pell error p^2 - k q^2,
    membership among the convergents/semiconvergents of sqrt(k), and the
    Pellian flag."""
    if count < 1:
        raise ValueError("need at least one iterate")
    if oracle is None:
        oracle = cf_expand_surd(QuadSurd.sqrt(spec.k))
    p, q = spec.d.num, spec.d.den
    base_norm = p * p - spec.k * q * q
    records = []
    for n, a, b in iterate_pairs(spec, count):
        g = gcd(a, b)
        value = Rational(a, b)
        # norm multiplicativity: (a^2 - k b^2) = (p^2 - k q^2)^n
        err = Rational(base_norm ** n, g * g)
        pellian = abs(err) == Rational(1) and value > 0
        idx = locate_convergent(value, oracle)
        semi = locate_semiconvergent(value, oracle) is not None
        records.append(IterateRecord(n=n, value=value, pell_error=err,
                                     convergent_index=idx,
                                     semiconvergent=semi, pellian=pellian))
    return records
