"""Exact rational Hilbert series: Laurent numerator over a multiset of
(1 - t^e) denominator factors, truncated expansion, closed forms, and exact
equality."""

from __future__ import annotations

from .ring import RingError, Weights


def _laurent_mul(p: dict, q: dict) -> dict:
    out = {}
    for d1, c1 in p.items():
        for d2, c2 in q.items():
            d = d1 + d2
            s = out.get(d, 0) + c1 * c2
            if s:
                out[d] = s
            else:
                out.pop(d, None)
    return out


def _laurent_sub(p: dict, q: dict) -> dict:
    out = dict(p)
    for d, c in q.items():
        s = out.get(d, 0) - c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def _one_minus(e: int) -> dict:
    if e == 0:
        return {}  # 1 - t^0 is the zero polynomial
    return {0: 1, e: -1}


class HilbertSeries:
    """numerator: {degree: int} Laurent polynomial; denominator: sorted tuple
    of positive integers e, one (1 - t^e) factor per entry."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: dict, denominator=()):
        self.numerator = {int(d): int(c) for d, c in numerator.items() if c}
        den = tuple(sorted(int(e) for e in denominator))
        if any(e <= 0 for e in den):
            raise RingError("denominator exponents must be positive")
        self.denominator = den

    @staticmethod
    def zero() -> "HilbertSeries":
        return HilbertSeries({})

    @staticmethod
    def free_ring(weights: Weights) -> "HilbertSeries":
        return HilbertSeries({0: 1}, weights.tuple)

    def scale_shift(self, shift: int) -> "HilbertSeries":
        return HilbertSeries({d + shift: c for d, c in self.numerator.items()}, self.denominator)

    def add(self, other: "HilbertSeries") -> "HilbertSeries":
        # common denominator via multiset union
        from collections import Counter

        d1, d2 = Counter(self.denominator), Counter(other.denominator)
        union = d1 | d2
        n1 = dict(self.numerator)
        for e, k in (union - d1).items():
            for _ in range(k):
                n1 = _laurent_mul(n1, _one_minus(e))
        n2 = dict(other.numerator)
        for e, k in (union - d2).items():
            for _ in range(k):
                n2 = _laurent_mul(n2, _one_minus(e))
        total = dict(n1)
        for d, c in n2.items():
            s = total.get(d, 0) + c
            if s:
                total[d] = s
            else:
                total.pop(d, None)
        return HilbertSeries(total, tuple(union.elements()))

    def sub(self, other: "HilbertSeries") -> "HilbertSeries":
        neg = HilbertSeries({d: -c for d, c in other.numerator.items()}, other.denominator)
        return self.add(neg)

    def expand(self, d_min: int, d_max: int):
        """Exact integer coefficients of the Laurent expansion on [d_min, d_max]."""
        if d_min > d_max:
            raise RingError("empty expansion window")
        if not self.numerator:
            return [0] * (d_max - d_min + 1)
        lo = min(self.numerator)
        # after factoring t^lo out of the numerator the series is an ordinary
        # power series; expand each 1/(1-t^e) geometrically up to the window top
        top = d_max - lo
        if top < 0:
            return [0] * (d_max - d_min + 1)
        coeffs = [0] * (top + 1)
        for d, c in self.numerator.items():
            if d - lo <= top:
                coeffs[d - lo] += c
        for e in self.denominator:
            # multiply by 1/(1-t^e): prefix-sum with stride e
            for i in range(e, top + 1):
                coeffs[i] += coeffs[i - e]
        out = []
        for d in range(d_min, d_max + 1):
            idx = d - lo
            out.append(coeffs[idx] if 0 <= idx <= top else 0)
        return out

    def coefficient(self, d: int) -> int:
        return self.expand(d, d)[0]

    def series_equal(self, other: "HilbertSeries") -> bool:
        return series_equal(self, other)

    def format(self) -> str:
        if not self.numerator:
            return "0"
        parts = []
        for d in sorted(self.numerator):
            c = self.numerator[d]
            body = "" if d == 0 else ("t" if d == 1 else "t^%d" % d)
            if not body:
                parts.append(("%+d" % c))
            elif c == 1:
                parts.append("+" + body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%+d*%s" % (c, body))
        num = "".join(parts).lstrip("+")
        if not self.denominator:
            return num
        den = "*".join("(1-t^%d)" % e for e in self.denominator)
        return "(%s)/(%s)" % (num, den)

    def __repr__(self):
        return self.format()

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return series_equal(self, other)

    def __hash__(self):
        raise TypeError("HilbertSeries equality is semantic; not hashable")


def series_equal(h1: HilbertSeries, h2: HilbertSeries) -> bool:
    """Exact equality by cross-multiplication against the union of factors."""
    from collections import Counter

    d1, d2 = Counter(h1.denominator), Counter(h2.denominator)
    n1 = dict(h1.numerator)
    for e, k in (d2 - d1).items():
        for _ in range(k):
            n1 = _laurent_mul(n1, _one_minus(e))
    n2 = dict(h2.numerator)
    for e, k in (d1 - d2).items():
        for _ in range(k):
            n2 = _laurent_mul(n2, _one_minus(e))
    return n1 == n2


def _product_one_minus(exponents) -> dict:
    out = {0: 1}
    for e in exponents:
        out = _laurent_mul(out, _one_minus(e))
    return out


def closed_form_ph(weights: Weights, i: int, n=None) -> HilbertSeries:
    """Closed-form Hilbert series of the i-th Poisson cohomology for a
    potential of degree n with all the regularity the balanced irreducible
    case enjoys.  Default n = a + b + c."""
    a, b, c = weights.tuple
    n0 = a + b + c
    if n is None:
        n = n0
    if i not in (0, 1, 2, 3):
        raise RingError("cohomology index must be 0..3")
    if n <= 0:
        raise RingError("potential degree must be positive")
    if i in (0, 1):
        return HilbertSeries({0: 1}, (n,))
    top = _product_one_minus((n - a, n - b, n - c))
    if i == 3:
        return HilbertSeries({d - n0: cc for d, cc in top.items()}, (n, a, b, c))
    # i == 2: (1/t^{a+b+c}) * (top/((1-t^n)(1-t^a)(1-t^b)(1-t^c)) - 1)
    full_den = _product_one_minus((n, a, b, c))
    num = _laurent_sub(top, full_den)
    return HilbertSeries({d - n0: cc for d, cc in num.items()}, (n, a, b, c))


def closed_form_lph2(weights: Weights, n: int) -> HilbertSeries:
    a, b, c = weights.tuple
    if n <= max(a, b, c):
        raise RingError("potential degree must exceed every weight")
    return closed_form_ph(weights, 2, n)


def closed_form_koszul_h1(a_p: int, b_p: int) -> HilbertSeries:
    """First Koszul homology of the x*y*z + g(x,y) family, in the regrading
    where x, y carry a_p, b_p: t^(c'+a'b') / (1 - t^c') with
    c' = a'b' - a' - b'.  Requires a', b' >= 3."""
    if a_p < 3 or b_p < 3:
        raise RingError("regraded weights must both be at least 3")
    c_p = a_p * b_p - a_p - b_p
    return HilbertSeries({c_p + a_p * b_p: 1}, (c_p,))


def euler_rhs(weights: Weights, n: int) -> HilbertSeries:
    """The rational function every truncated Poisson-cohomology table must
    telescope to: -(1/t^{3w+a+b+c}) (1-t^{w+a})(1-t^{w+b})(1-t^{w+c})
    / ((1-t^a)(1-t^b)(1-t^c)) with w = n-a-b-c."""
    a, b, c = weights.tuple
    w = n - a - b - c
    num = _product_one_minus((w + a, w + b, w + c))
    shift = -(3 * w + a + b + c)
    return HilbertSeries({d + shift: -cc for d, cc in num.items()}, (a, b, c))
