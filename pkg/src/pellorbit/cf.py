"""Continued fraction machinery.

Finite expansions of rationals with parity control, the periodic expansion
of a quadratic surd by complete-quotient cycle detection (the independent
oracle everything else is checked against), convergents and semiconvergents,
concatenation transformations, and zero-term fusion.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import gcd, isqrt

from .exact import INF, Lft, QuadSurd, Rational


@dataclass(frozen=True)
class Cf:
    """Continued fraction as head terms plus an optional periodic tail.

    "Simple" status means head[0] is any integer and every later term
    (including all period terms) is >= 1.  Pattern-form fractions may carry
    zero or negative terms and are not simple.
    """

    head: tuple[int, ...]
    period: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.period is not None and len(self.period) == 0:
            raise ValueError("period, when present, must be nonempty")

    @property
    def is_finite(self) -> bool:
        return self.period is None

    def __len__(self):
        if not self.is_finite:
            raise ValueError("infinite continued fraction")
        return len(self.head)

    def terms(self):
        """Iterate terms forever (finite cfs stop)."""
        yield from self.head
        if self.period is not None:
            while True:
                yield from self.period

    def first_terms(self, n: int) -> list[int]:
        out = list(itertools.islice(self.terms(), n))
        if len(out) < n:
            raise ValueError(f"only {len(out)} terms available, wanted {n}")
        return out

    def is_simple(self) -> bool:
        rest = self.head[1:] + (self.period or ())
        return all(t >= 1 for t in rest)

    def value(self):
        """Exact value: Rational for finite, QuadSurd for periodic."""
        if self.is_finite:
            return _lft_of_terms(self.head).apply(INF)
        w = _lft_of_terms(self.period)
        tail = _attracting_fixed_point(w)
        if self.head:
            tail = _lft_of_terms(self.head).apply(tail)
        return tail

    def __str__(self):
        return format_cf(self)


def _lft_of_terms(terms) -> Lft:
    g = Lft.identity()
    for t in terms:
        g = g @ Lft(t, 1, 1, 0)
    return g


def _attracting_fixed_point(w: Lft) -> QuadSurd:
    """Fixed point of w with the larger |derivative denominator|; this is
    the limit of w^n(x), i.e. the value of the periodic tail."""
    a, b, c, d = w.entries()
    if c == 0:
        raise ValueError("periodic tail evaluates to a rational")
    disc = (a - d) * (a - d) + 4 * b * c
    if disc <= 0 or isqrt(disc) ** 2 == disc:
        raise ValueError("periodic tail is not a real quadratic irrational")
    y_plus = QuadSurd(a - d, 1, 2 * c, disc)
    y_minus = QuadSurd(a - d, -1, 2 * c, disc)
    dp = (y_plus * c + d)
    dm = (y_minus * c + d)
    return y_plus if dp * dp > dm * dm else y_minus


def cf_of_rational(x: Rational | int, parity: str = "shortest") -> Cf:
    """Simple finite expansion of x with the requested term-count parity.

    The two expansions of a rational differ in length by exactly 1, so
    parity "odd" or "even" picks a unique one; "shortest" gives the
    canonical Euclidean expansion.
    """
    if isinstance(x, int):
        x = Rational(x)
    if x.is_infinite:
        raise ValueError("cannot expand infinity")
    terms = []
    n, d = x.num, x.den
    while d != 0:
        q = n // d
        terms.append(q)
        n, d = d, n - q * d
    if parity not in ("shortest", "odd", "even"):
        raise ValueError(f"bad parity {parity!r}")
    if parity != "shortest" and len(terms) % 2 != (1 if parity == "odd" else 0):
        if len(terms) > 1 and terms[-1] == 1:
            terms.pop()
            terms[-1] += 1
        else:
            terms[-1] -= 1
            terms.append(1)
    return Cf(tuple(terms))


def cf_expand_surd(x: QuadSurd) -> Cf:
    """Eventually periodic simple expansion of a real quadratic irrational,
    by detecting repetition of the complete quotient (P, Q) in the standard
    (P + sqrt(D))/Q recursion.  Minimal period."""
    if x.is_rational:
        raise ValueError("input is rational; use cf_of_rational")
    # write x = (P + sqrt(D))/Q with Q | D - P^2
    if x.b > 0:
        P, Q, D = x.a, x.c, x.b * x.b * x.k
    else:
        P, Q, D = -x.a, -x.c, x.b * x.b * x.k
    if (D - P * P) % Q != 0:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    terms: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    while True:
        state = (P, Q)
        if state in seen:
            start = seen[state]
            return Cf(tuple(terms[:start]), tuple(terms[start:]))
        seen[state] = len(terms)
        # a = floor((P + sqrt(D))/Q), exactly
        if Q > 0:
            a = (P + isqrt(D)) // Q
        else:
            a = (-P - isqrt(D) - 1) // (-Q)
        terms.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q


def convergents(cf: Cf):
    """Yield (n, Rational) for n = 0, 1, 2, ... where n counts terms used."""
    p0, q0 = 0, 1   # value of empty prefix is infinity via (p1, q1)
    p1, q1 = 1, 0
    n = 0
    yield n, INF
    for t in cf.terms():
        p1, p0 = t * p1 + p0, p1
        q1, q0 = t * q1 + q0, q1
        n += 1
        yield n, Rational(p1, q1)


def convergent(cf: Cf, n: int) -> Rational:
    """Value of the first n terms; n = 0 gives infinity."""
    if n < 0:
        raise ValueError("negative term count")
    if cf.is_finite and n > len(cf.head):
        raise ValueError(f"only {len(cf.head)} terms available")
    for i, v in convergents(cf):
        if i == n:
            return v
    raise AssertionError("unreachable")


def locate_convergent(x: Rational, cf: Cf) -> int | None:
    """The unique n with convergent(cf, n) == x, else None.

    Denominators strictly increase after the second convergent, so the scan
    stops once they exceed the denominator of x.
    """
    if x.is_infinite:
        return 0
    target_q = x.den
    for n, v in convergents(cf):
        if n == 0:
            continue
        if v == x:
            return n
        # denominators strictly increase from the first term on
        if v.den > target_q:
            return None
    return None


def locate_semiconvergent(x: Rational, cf: Cf) -> tuple[int, int] | None:
    """(n, b) with 0 <= b <= c_n and [c_0..c_{n-1}, b] == x, else None.

    b == 0 is admitted even though it reproduces the (n-2)nd convergent.
    """
    if x.is_infinite:
        return None
    p, q = x.num, x.den
    # p0/q0 = p_{n-1}/q_{n-1}, pm/qm = p_{n-2}/q_{n-2};
    # the candidate [c_0..c_{n-1}, b] is (b p0 + pm)/(b q0 + qm), always in
    # lowest terms since consecutive convergents have determinant +-1
    p0, q0 = 1, 0
    pm, qm = 0, 1
    n = 0
    for c in cf.terms():
        if q0 > 0:
            b, rem = divmod(q - qm, q0)
            if rem == 0 and 0 <= b <= c and b * p0 + pm == p:
                return (n, b)
        elif x.is_integral() and 0 <= x.num <= c:
            return (0, x.num)
        p0, pm = c * p0 + pm, p0
        q0, qm = c * q0 + qm, q0
        n += 1
        if qm > q:
            return None
    return None


def concat_tail_lft(cf: Cf) -> Lft:
    """For a finite simple cf of p/q, the transformation
    x -> (p x + g)/(q x + h) equal to [c_0, ..., c_n, x].

    Its determinant is (-1)^(number of terms); g, h satisfy
    g q - h p = (-1)^n with h in the range picked out by the parity.
    """
    if not cf.is_finite:
        raise ValueError("concatenation tail needs a finite cf")
    if not cf.head:
        raise ValueError("empty continued fraction")
    g = _lft_of_terms(cf.head)
    # keep the representative with q > 0 (or p > 0 for integer values)
    if g.m21 < 0 or (g.m21 == 0 and g.m11 < 0):
        return LftRaw(-g.m11, -g.m12, -g.m21, -g.m22)
    return LftRaw(*g.entries())


class LftRaw(Lft):
    """An Lft whose stored entries keep the constructor's sign (still
    gcd-reduced).  Needed where a specific matrix representative matters,
    e.g. reading (p, g, q, h) off a concatenation tail."""

    def __init__(self, m11, m12, m21, m22):
        g = gcd(gcd(m11, m12), gcd(m21, m22))
        if g == 0:
            raise ValueError("zero matrix")
        vals = (m11 // g, m12 // g, m21 // g, m22 // g)
        if vals[0] * vals[3] - vals[1] * vals[2] == 0:
            raise ValueError("degenerate transformation")
        for name, v in zip(("m11", "m12", "m21", "m22"), vals):
            object.__setattr__(self, name, v)


def normalize_zeros(cf: Cf) -> Cf:
    """Eliminate zero terms with the fusion rule [.., x, 0, y, ..] = [.., x+y, ..].

    Input terms must be nonnegative (a leading zero is kept).  The value and
    the semiconvergent set are preserved.  Periodic inputs yield periodic
    outputs, verified exactly against the input value.
    """
    rest = cf.head[1:] + (cf.period or ())
    if any(t < 0 for t in rest):
        raise ValueError("fusion rule needs nonnegative terms")
    if cf.is_finite:
        fused = _fuse(list(cf.head))
        return Cf(tuple(fused))
    target = cf.value()
    for copies in (4, 8, 16, 32, 64):
        terms = list(cf.head) + list(cf.period) * copies
        fused = _fuse(terms, allow_trailing=True)
        settled = fused[:-2]
        if len(settled) < 4:
            continue
        found = _find_periodic(settled)
        if found is None:
            continue
        head_len, plen = found
        cand = Cf(tuple(settled[:head_len]),
                  tuple(settled[head_len:head_len + plen]))
        if cand.value() == target:
            return cand
    raise ValueError("no periodic normalization found "
                     "(alternating-zero tail or invalid input)")


def _fuse(terms: list[int], allow_trailing: bool = False) -> list[int]:
    out: list[int] = []
    i = 0
    while i < len(terms):
        t = terms[i]
        if t == 0 and out:
            if i + 1 < len(terms):
                out[-1] += terms[i + 1]
                i += 2
            elif allow_trailing:
                break
            else:
                raise ValueError("trailing zero term")
        else:
            out.append(t)
            i += 1
    return out


def _find_periodic(terms: list[int]) -> tuple[int, int] | None:
    """Minimal (head_len, period_len) so that terms[head_len:] is periodic,
    demanding at least two full periods of evidence."""
    n = len(terms)
    for plen in range(1, n // 2 + 1):
        for head_len in range(0, n - 2 * plen + 1):
            ok = all(terms[i] == terms[i + plen] for i in range(head_len, n - plen))
            if ok:
                return (head_len, plen)
    return None


# -- textual notation: [c0; c1, c2, (c3, c4)] ------------------------------

def format_cf(cf: Cf) -> str:
    parts = [str(t) for t in cf.head]
    if cf.period is not None:
        parts.append("(" + ", ".join(str(t) for t in cf.period) + ")")
    if not parts:
        return "[]"
    if len(parts) == 1:
        return f"[{parts[0]}]"
    return "[" + parts[0] + "; " + ", ".join(parts[1:]) + "]"


_CF_RE = re.compile(r"^\[\s*(.*?)\s*\]$")


def parse_cf(text: str) -> Cf:
    m = _CF_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a continued fraction literal: {text!r}")
    body = m.group(1)
    if not body:
        return Cf(())
    period = None
    pm = re.search(r"\(\s*([^)]*?)\s*\)\s*$", body)
    if pm:
        period = tuple(int(t) for t in re.split(r"[,\s]+", pm.group(1)) if t)
        body = body[:pm.start()].rstrip().rstrip(";,").strip()
    head = tuple(int(t) for t in re.split(r"[;,\s]+", body) if t) if body else ()
    return Cf(head, period if period else None)
