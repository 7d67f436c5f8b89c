"""Pellian fractions of real quadratic integers: the defining inequalities,
period-based enumeration through the purely periodic normal form, fundamental
units, orbit-coverage verdicts with the golden-ratio / Pell-number exceptional
cases, and negative-Pell solvability.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .cf import cf_expand_surd, convergents
from .exact import QuadSurd, Rational, is_square
from .pattern import PatternParams, a_sequence

GOLDEN_SHAPES = {
    # (t0, u0) of the exceptional surds xi/sigma, with the divisor kind
    (3, -1): "golden",       # (3 + sqrt(5))/2
    (5, -5): "golden",       # (5 + sqrt(5))/2
    (4, -2): "pell_number",  # 2 + sqrt(2)
}


@dataclass(frozen=True)
class QuadInteger:
    """The root xi > |conjugate| of x^2 - t x - u = 0 (t, u integers)."""

    t: int
    u: int

    def __post_init__(self):
        disc = self.t * self.t + 4 * self.u
        if disc <= 0 or is_square(disc):
            raise ValueError("x^2 - t x - u must have irrational real roots")
        if self.t <= 0:
            raise ValueError("xi > |conjugate| requires t > 0")

    @property
    def discriminant(self) -> int:
        return self.t * self.t + 4 * self.u

    @property
    def xi(self) -> QuadSurd:
        return QuadSurd(self.t, 1, 2, self.discriminant)

    @property
    def conj(self) -> QuadSurd:
        return QuadSurd(self.t, -1, 2, self.discriminant)

    def pell_form(self, p: int, q: int) -> int:
        return p * p - self.t * p * q - self.u * q * q


@dataclass(frozen=True)
class PellianFraction:
    p: int
    q: int
    norm: int  # p^2 - t p q - u q^2, always +-1


@dataclass(frozen=True)
class PellCore:
    period_L: int
    fractions: tuple[PellianFraction, ...]
    fundamental: tuple[int, int]  # (p_1, q_1)


@dataclass(frozen=True)
class PellReport:
    t: int
    u: int
    period_L: int
    pellians: tuple[PellianFraction, ...]
    fundamental_unit: tuple[int, int]
    orbit_indices: tuple[int, ...]   # positions in `pellians` hit by the orbit
    covers_all: bool
    exception: tuple[str, int] | None  # ("golden"|"pell_number", sigma)


def is_pellian(p: int, q: int, xi: QuadInteger) -> bool:
    """q > 0, p/q > t/2, and p^2 - t p q - u q^2 = +-1, all exact."""
    if q <= 0:
        return False
    if 2 * p <= xi.t * q:
        return False
    return abs(xi.pell_form(p, q)) == 1


def pellian_fractions(xi: QuadInteger, count: int) -> PellCore:
    """First `count` Pellian fractions, read off the purely periodic shift.

    xi is shifted by ceil(conjugate) so the conjugate lands in (-1, 0); the
    shifted expansion is purely periodic with period L, its convergents at
    multiples of L are the Pellian fractions of the shift, and shifting back
    preserves Pellian-ness since p - q*conj is shift-invariant.
    """
    if count < 1:
        raise ValueError("need at least one fraction")
    c = xi.conj.floor() + 1  # ceil of an irrational
    shifted = QuadSurd(xi.t - 2 * c, 1, 2, xi.discriminant)  # xi - c
    cf = cf_expand_surd(shifted)
    if cf.head != ():
        raise AssertionError("shifted surd is not purely periodic")
    L = len(cf.period)
    out = []
    it = convergents(cf)
    for n, value in it:
        if n == 0 or n % L != 0:
            continue
        p = value.num + c * value.den
        q = value.den
        norm = xi.pell_form(p, q)
        if abs(norm) != 1 or not is_pellian(p, q, xi):
            raise AssertionError(f"enumerated fraction {p}/{q} fails the "
                                 "Pellian definition")
        out.append(PellianFraction(p=p, q=q, norm=norm))
        if len(out) == count:
            break
    return PellCore(period_L=L, fractions=tuple(out),
                    fundamental=(out[0].p, out[0].q))


def unit_of(xi: QuadInteger, frac: PellianFraction) -> QuadSurd:
    """p - q * conjugate(xi) as an exact field element."""
    return Rational(frac.p) - xi.conj * frac.q


def exceptional_divisor(s: int, kind: str) -> bool:
    """Does s divide some odd-index term of the Fibonacci (F) or Pell (G)
    sequence?  Decided within one period of the sequence mod s."""
    if s < 1:
        raise ValueError("s must be positive")
    if kind not in ("fibonacci", "pell"):
        raise ValueError(f"unknown kind {kind!r}")
    if s == 1:
        return True
    mult = 1 if kind == "fibonacci" else 2
    a, b = 0, 1  # F_0, F_1 (or G_0, G_1)
    n = 0
    cap = 6 * s * s
    while True:
        a, b = b, (mult * b + a) % s
        n += 1
        if a == 0 and n % 2 == 1:
            return True
        if (a, b) == (0, 1):
            return False
        if n > cap:
            raise AssertionError(f"no period mod {s} within {cap} steps")


def classify_exception(t: int, u: int) -> tuple[str, int] | None:
    """Match xi against sigma * {(3+sqrt5)/2, (5+sqrt5)/2, 2+sqrt2} and test
    the corresponding divisor condition on sigma."""
    for (t0, u0), kind in GOLDEN_SHAPES.items():
        if t % t0 == 0:
            sigma = t // t0
            if sigma >= 1 and u == u0 * sigma * sigma:
                if exceptional_divisor(sigma, "fibonacci" if kind == "golden"
                                       else "pell"):
                    return (kind, sigma)
    return None


def orbit_values(params: PatternParams, max_den: int, max_n: int = 2000):
    """Reduced iterates f_xi^n(infinity) = s v_{n+1} a_{n+1} / a_n for
    n = 1, 2, ... until the reduced denominator exceeds max_den."""
    s, m, eps = params.s, params.m, params.eps
    # gcd(a_n, a_{n+1}) = 1 bounds the cancellation by s*v, so once a_n
    # passes s*v*max_den no later reduced denominator can fit
    a_cutoff = s * params.v * max_den
    a_prev, a_n = 0, 1  # a_0, a_1
    for n in range(1, max_n + 1):
        if a_n > a_cutoff:
            return
        a_next = params.v_at(n) * m * a_n + eps * a_prev
        num = s * params.v_at(n + 1) * a_next
        den = a_n
        g = gcd(num, den)
        if den // g <= max_den:
            yield n, num // g, den // g
        a_prev, a_n = a_n, a_next
    raise AssertionError("orbit did not exhaust the height bound")


def orbit_pell_coverage(params: PatternParams,
                        height: int = 10 ** 12) -> PellReport:
    """Which Pellian fractions of xi does the orbit of f_xi hit?

    Enumerates all Pellian fractions with q <= height, computes the orbit
    hits, and checks the empirical verdict against the exceptional-case
    classifier; a disagreement raises (it would contradict the theorem).
    """
    t = params.s * params.v * params.m
    u = params.eps * params.s * params.s * params.v
    xi = QuadInteger(t=t, u=u)
    fracs: list[PellianFraction] = []
    count = 8
    while True:
        core = pellian_fractions(xi, count)
        fracs = [f for f in core.fractions if f.q <= height]
        if core.fractions[-1].q > height:
            break
        count *= 2
    orbit = {(p, q) for _, p, q in orbit_values(params, height)}
    hit_idx = tuple(i for i, f in enumerate(fracs) if (f.p, f.q) in orbit)
    covers = len(hit_idx) == len(fracs)
    exc = classify_exception(t, u)
    predicted_covers = exc is None
    if covers != predicted_covers:
        raise AssertionError(
            f"empirical coverage ({covers}) contradicts the exception "
            f"classifier ({exc}) for params {params}")
    return PellReport(t=t, u=u, period_L=core.period_L,
                      pellians=tuple(fracs),
                      fundamental_unit=core.fundamental,
                      orbit_indices=hit_idx, covers_all=covers,
                      exception=exc)


@dataclass(frozen=True)
class NegativePellVerdict:
    k: int
    d: int
    verdict: str               # "unsolvable" | "undetermined"
    exception: tuple[str, int] | None
    oracle_solvable: bool      # period of sqrt(k) is odd


def negative_pell_verdict(k: int, d: int) -> NegativePellVerdict:
    """p^2 - k q^2 = -1 is unsolvable whenever some d makes R a negative
    integer, unless (k, d) has one of the exceptional shapes."""
    diff = k - d * d
    if diff >= 0 or (4 * d * d) % diff != 0:
        raise ValueError("need R = 4d^2/(k - d^2) to be a negative integer")
    exc = None
    s5 = isqrt(k // 5) if k % 5 == 0 else 0
    if s5 and k == 5 * s5 * s5 and d in (3 * s5, 5 * s5) \
            and exceptional_divisor(2 * s5, "fibonacci"):
        exc = ("golden", s5)
    s2 = isqrt(k // 2) if k % 2 == 0 else 0
    if exc is None and s2 and k == 2 * s2 * s2 and d == 2 * s2 \
            and exceptional_divisor(s2, "pell"):
        exc = ("pell_number", s2)
    verdict = "undetermined" if exc is not None else "unsolvable"
    oracle = len(cf_expand_surd(QuadSurd.sqrt(k)).period) % 2 == 1
    if verdict == "unsolvable" and oracle:
        raise AssertionError(f"oracle found x^2 - {k} y^2 = -1 solvable, "
                             "contradicting the verdict")
    return NegativePellVerdict(k=k, d=d, verdict=verdict, exception=exc,
                               oracle_solvable=oracle)
