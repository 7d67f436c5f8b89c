"""Packet synthesis of the continued fraction from the (s, v, m, eps)
parametrization: the integer sequence recurrence, per-index packets, the
assembled periodic word with its packet boundaries, regime classification,
the Pellian-iterate predicate, and two-parameter family scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

from .cf import Cf, cf_of_rational, _lft_of_terms
from .exact import INF, Lft, QuadSurd, Rational, is_square


@dataclass(frozen=True)
class PatternParams:
    """s, v, m positive integers and eps = +-1, describing the surd
    xi = (svm + sqrt(s^2 v (v m^2 + 4 eps)))/2 and the shifted map fixing it.

    Quadruples with eps = -1 and v m^2 <= 4 are rejected: they make xi
    rational or non-real.
    """

    s: int
    v: int
    m: int
    eps: int

    def __post_init__(self):
        if self.s < 1 or self.v < 1 or self.m < 1:
            raise ValueError("s, v, m must be positive")
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if self.eps == -1 and self.v * self.m * self.m <= 4:
            raise ValueError("eps = -1 needs v m^2 > 4 (xi would be "
                             "rational or non-real)")

    @property
    def delta(self) -> int:
        return 0 if self.eps == 1 else 1

    @property
    def d(self) -> Rational:
        return Rational(self.s * self.v * self.m, 2)

    @property
    def k(self) -> Rational:
        s, v, m, e = self.s, self.v, self.m, self.eps
        return Rational(s * s * v * (v * m * m + 4 * e), 4)

    @property
    def discriminant(self) -> int:
        """s^2 v (v m^2 + 4 eps) = (2d)^2 - 4(d^2 - k); always a positive
        nonsquare integer for valid params."""
        s, v, m, e = self.s, self.v, self.m, self.eps
        return s * s * v * (v * m * m + 4 * e)

    @property
    def xi(self) -> QuadSurd:
        return QuadSurd(self.s * self.v * self.m, 1, 2, self.discriminant)

    @property
    def xi_conj(self) -> QuadSurd:
        return QuadSurd(self.s * self.v * self.m, -1, 2, self.discriminant)

    def v_at(self, n: int) -> int:
        return self.v if n % 2 == 0 else 1

    def packet_parity(self) -> str:
        return "odd" if self.eps == 1 else "even"


@dataclass(frozen=True)
class PacketData:
    n: int
    v_n: int
    a_n: int
    a_next: int
    s_n: int
    m_n: int
    xi_hat: Rational
    packet: Cf


@dataclass(frozen=True)
class PatternCf:
    """One period of concatenated packets (a purely periodic word valuing
    xi - delta) together with the packet boundary indices."""

    cf: Cf
    boundaries: tuple[int, ...]
    packet_period: int


@dataclass(frozen=True)
class PacketFit:
    alpha: Fraction
    beta: Fraction
    tail: tuple[int, ...]


@dataclass(frozen=True)
class FamilyReport:
    s: int
    eps: int
    v_residue: int
    m_residue: int
    period: int
    packets: tuple[PacketFit, ...]
    samples: tuple[tuple[int, int], ...]


def parametrize(k: int, d: int) -> PatternParams:
    """Recover (s, v, m, eps) from an integral pair with R integral."""
    if not isinstance(k, int) or not isinstance(d, int):
        raise TypeError("parametrize needs integers")
    if k <= 0 or is_square(k):
        raise ValueError(f"k = {k} must be a positive nonsquare")
    if d <= 0:
        raise ValueError("d must be positive")
    diff = k - d * d
    R_num = 4 * d * d
    if R_num % diff != 0:
        raise ValueError(f"R = {R_num}/{diff} is not an integer")
    R = R_num // diff
    eps = 1 if diff > 0 else -1
    v = gcd(abs(R), abs(diff))
    m2, s2 = abs(R) // v, abs(diff) // v
    m, s = isqrt(m2), isqrt(s2)
    if m * m != m2 or s * s != s2:
        raise AssertionError("parametrization squares failed")
    params = PatternParams(s=s, v=v, m=m, eps=eps)
    if params.d != Rational(d) or params.k != Rational(k):
        raise AssertionError("parametrization round-trip failed")
    return params


def a_sequence(params: PatternParams, count: int) -> list[int]:
    """a_0 .. a_count with a_0 = 0, a_1 = 1,
    a_{n+1} = v_n m a_n + eps a_{n-1}."""
    if count < 0:
        raise ValueError("negative count")
    a = [0, 1]
    for n in range(1, count):
        a.append(params.v_at(n) * params.m * a[n] + params.eps * a[n - 1])
    return a[:count + 1]


def f_xi(params: PatternParams) -> Lft:
    """The shifted map x -> svm + eps s^2 v / x fixing xi.

    (The quantity eps s^2 v is k - d^2, so this is f conjugated by the
    shift x -> x + d.)
    """
    s, v, m, e = params.s, params.v, params.m, params.eps
    return Lft(s * v * m, e * s * s * v, 1, 0)


def _a_with_negative(params: PatternParams, n: int) -> tuple[int, int, int]:
    """(a_{n-1}, a_n, a_{n+1}); a_{-1} = eps extends the recurrence."""
    if n == 0:
        return (params.eps, 0, 1)
    a = a_sequence(params, n + 1)
    return (a[n - 1], a[n], a[n + 1])


def packet(params: PatternParams, n: int) -> PacketData:
    """Packet quantities at index n and the finite packet expansion."""
    if n < 0:
        raise ValueError("negative index")
    a_prev, a_n, a_next = _a_with_negative(params, n)
    s, m, eps = params.s, params.m, params.eps
    v_n = params.v_at(n)
    s_n = gcd(a_n, s) if a_n != 0 else s
    mod = s // s_n
    if mod == 1:
        m_n = 0
    else:
        inv = pow(a_n // s_n, -1, mod)
        m_n = (-a_prev * inv) % mod
    xi_hat = Rational(s_n * v_n * m - eps * m_n, mod)
    pk = cf_of_rational(xi_hat - params.delta, parity=params.packet_parity())
    return PacketData(n=n, v_n=v_n, a_n=a_n, a_next=a_next, s_n=s_n,
                      m_n=m_n, xi_hat=xi_hat, packet=pk)


def packet_period(params: PatternParams) -> int:
    """Minimal l > 0 after which the packet sequence repeats, detected on
    the state (a_{n-1} mod s, a_n mod s) plus the index parity when v > 1
    (the parity drives the v_n alternation)."""
    s = params.s

    def state(a_prev, a_n, n):
        if params.v > 1:
            return (a_prev % s, a_n % s, n % 2)
        return (a_prev % s, a_n % s)

    a_prev, a_n = params.eps, 0
    start = state(a_prev, a_n, 0)
    n = 0
    while True:
        a_prev, a_n = a_n, params.v_at(n) * params.m * a_n + params.eps * a_prev
        n += 1
        if state(a_prev, a_n, n) == start:
            return n
        if n > 4 * s * s + 4:
            raise RuntimeError("packet period not found within bound")


def pattern_cf(params: PatternParams) -> PatternCf:
    """The purely periodic pattern word for xi - delta: one period of
    packets concatenated, with the indices where each packet starts."""
    ell = packet_period(params)
    word: list[int] = []
    boundaries: list[int] = []
    for n in range(ell):
        boundaries.append(len(word))
        word.extend(packet(params, n).packet.head)
    return PatternCf(cf=Cf((), tuple(word)), boundaries=tuple(boundaries),
                     packet_period=ell)


def boundary_convergents(params: PatternParams, count: int) -> list[Rational]:
    """delta + [P_0 .. P_{n-1}] for n = 1..count; equals f_xi^n(infinity)."""
    if count < 1:
        raise ValueError("need at least one boundary")
    out = []
    g = Lft.identity()
    for n in range(count):
        g = g @ _lft_of_terms(packet(params, n).packet.head)
        out.append(g.apply(INF) + params.delta)
    return out


@dataclass(frozen=True)
class RegimeVerdict:
    regime: str              # "simple" | "nonnegative" | "general"
    conj_below_half: bool    # |xi_conj| < 1/2
    conj_below_one: bool     # |xi_conj| < 1


def classify_regime(params: PatternParams) -> RegimeVerdict:
    """simple if m >= 2s + delta (|conj| < 1/2), nonnegative if
    m >= s + delta (|conj| < 1), otherwise general.  The exact conjugate
    bracket is computed independently and must agree."""
    s, m, delta = params.s, params.m, params.delta
    conj_abs = abs(params.xi_conj)
    below_half = conj_abs < Rational(1, 2)
    below_one = conj_abs < Rational(1)
    if m >= 2 * s + delta:
        regime = "simple"
    elif m >= s + delta:
        regime = "nonnegative"
    else:
        regime = "general"
    if (m >= 2 * s + delta) != below_half or (m >= s + delta) != below_one:
        raise AssertionError(
            f"threshold/bracket disagreement for {params}: "
            f"|conj|<1/2={below_half}, |conj|<1={below_one}")
    return RegimeVerdict(regime=regime, conj_below_half=below_half,
                         conj_below_one=below_one)


def is_pellian_iterate(params: PatternParams, n: int) -> bool:
    """True iff f_xi^n(infinity) solves the generalized Pell equation:
    (n even or v == 1) and s divides a_n."""
    if n < 0:
        raise ValueError("negative index")
    if n % 2 != 0 and params.v != 1:
        return False
    a_n = a_sequence(params, n)[n] if n > 0 else 0
    return a_n % params.s == 0


def family_scan(s: int, eps: int, v_residue: int, m_residue: int,
                samples: list[tuple[int, int]]) -> FamilyReport:
    """Fit every packet-leading term as alpha * (v_n m) + beta across
    samples sharing (v mod s, m mod s); non-leading terms must coincide.

    The fit comes from the first two samples with distinct abscissae and is
    verified exactly on the rest; any residual signals a bug.
    """
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    plist = []
    for v, m in samples:
        if v % s != v_residue % s or m % s != m_residue % s:
            raise ValueError(f"sample (v={v}, m={m}) leaves the residue "
                             f"class ({v_residue}, {m_residue}) mod {s}")
        plist.append(PatternParams(s=s, v=v, m=m, eps=eps))
    # samples with v == 1 have no parity alternation and may report half
    # the period of the others; compare over the common multiple
    ell = 1
    for p in plist:
        ell = lcm(ell, packet_period(p))
    fits = []
    for n in range(ell):
        packs = [packet(p, n).packet.head for p in plist]
        tails = {pk[1:] for pk in packs}
        if len(tails) != 1:
            raise ValueError(f"non-leading terms differ in packet {n}")
        xs = [Fraction(p.v_at(n) * p.m) for p in plist]
        ys = [Fraction(pk[0]) for pk in packs]
        alpha, beta = _fit_line(xs, ys, n)
        fits.append(PacketFit(alpha=alpha, beta=beta, tail=tuple(packs[0][1:])))
    return FamilyReport(s=s, eps=eps, v_residue=v_residue % s,
                        m_residue=m_residue % s, period=ell,
                        packets=tuple(fits), samples=tuple(samples))


def _fit_line(xs, ys, n):
    pair = next(((i, j) for i in range(len(xs)) for j in range(i + 1, len(xs))
                 if xs[i] != xs[j]), None)
    if pair is None:
        if len(set(ys)) != 1:
            raise ValueError(f"packet {n}: equal abscissae, unequal terms")
        return Fraction(0), ys[0]
    i, j = pair
    alpha = (ys[j] - ys[i]) / (xs[j] - xs[i])
    beta = ys[i] - alpha * xs[i]
    for x, y in zip(xs, ys):
        if alpha * x + beta != y:
            raise ValueError(f"packet {n}: leading term not linear "
                             f"(residual at x={x})")
    return alpha, beta
