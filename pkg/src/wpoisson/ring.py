"""Exact coefficient fields, weighted monomials and sparse polynomials in x, y, z.

Monomials are plain exponent triples (i, j, k).  A polynomial is a dict from
exponent triple to a nonzero field element, together with the ambient weights
and coefficient field.  Everything is immutable by convention: no function in
this package mutates a Polynomial after construction.
"""

from __future__ import annotations

import math
from fractions import Fraction

VAR_NAMES = ("x", "y", "z")


class RingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """Arbitrary-precision rationals (the default coefficient field)."""

    name = "QQ"

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, ExtElem):
            raise RingError("cannot coerce an extension element into QQ")
        return Fraction(v)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_zero(self, v) -> bool:
        return v == 0

    def format(self, v) -> str:
        return format_rational(v)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def format_rational(v: Fraction) -> str:
    # reduced "p" or "p/q", never a float
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return "%d/%d" % (v.numerator, v.denominator)


class ExtElem:
    """Element of Q[s]/(m(s)), stored as a dense coefficient tuple of length deg(m)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "ExtensionField", coeffs):
        self.field = field
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != field.degree:
            raise RingError("extension element has wrong coefficient length")

    def __add__(self, other):
        other = self.field.coerce(other)
        return ExtElem(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self.field.coerce(other)
        return ExtElem(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self.field.coerce(other)
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.field.coerce(other)
        return self * self.field.inverse(other)

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return self.field.format(self)


class ExtensionField:
    """Q[s]/(m(s)) for a monic integer polynomial m, supplied as ascending
    coefficients [m0, m1, ..., 1].  Irreducibility of m is the caller's
    responsibility; arithmetic reduces mod m after every multiplication."""

    name = "QQ[s]"

    def __init__(self, modulus):
        mod = [Fraction(c) for c in modulus]
        while mod and mod[-1] == 0:
            mod.pop()
        if len(mod) < 2:
            raise RingError("modulus must have degree >= 1")
        if mod[-1] != 1:
            raise RingError("modulus must be monic")
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        # s^degree = -(m0 + m1 s + ... + m_{deg-1} s^{deg-1})
        self._top = tuple(-c for c in mod[:-1])

    def coerce(self, v):
        if isinstance(v, ExtElem):
            if v.field != self:
                raise RingError("element of a different extension field")
            return v
        if isinstance(v, (int, Fraction)):
            return ExtElem(self, [Fraction(v)] + [Fraction(0)] * (self.degree - 1))
        raise RingError("cannot coerce %r into %r" % (v, self))

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    @property
    def generator(self):
        if self.degree == 1:
            # s is congruent to a rational; still representable
            return ExtElem(self, [self._top[0]])
        return ExtElem(self, [0, 1] + [0] * (self.degree - 2))

    def is_zero(self, v) -> bool:
        return not bool(self.coerce(v))

    def _mul(self, u: ExtElem, v: ExtElem):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(u.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(v.coeffs):
                if b != 0:
                    prod[i + j] += a * b
        # reduce degrees >= d downward using s^d = self._top
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c == 0:
                continue
            prod[k] = Fraction(0)
            for t, m in enumerate(self._top):
                if m != 0:
                    prod[k - d + t] += c * m
        return ExtElem(self, prod[:d])

    def inverse(self, v: ExtElem):
        v = self.coerce(v)
        if not v:
            raise ZeroDivisionError("division by zero in extension field")
        # extended Euclid in Q[s] on (modulus, v)
        r0, r1 = list(self.modulus), list(v.coeffs)
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _poly_sub_q(t0, _poly_mul_q(q, t1))
        lead = next(c for c in reversed(r0) if c != 0)
        if any(c != 0 for c in r0[1:]):
            raise RingError("modulus is not coprime with the element; m reducible?")
        inv = [c / lead for c in t0]
        inv = (inv + [Fraction(0)] * self.degree)[: self.degree]
        return ExtElem(self, inv)

    def format(self, v) -> str:
        v = self.coerce(v)
        parts = []
        for i, c in enumerate(v.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(format_rational(c))
            else:
                base = "s" if i == 1 else "s^%d" % i
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append("-" + base)
                else:
                    parts.append(format_rational(c) + "*" + base)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += "+" + p if not p.startswith("-") else p
        return out

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("QQ[s]", self.modulus))

    def __repr__(self):
        return "QQ[s]/(%s)" % " + ".join(
            "%s*s^%d" % (format_rational(c), i) for i, c in enumerate(self.modulus) if c != 0
        )


def _poly_deg_q(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i] != 0:
            return i
    return -1


def _poly_sub_q(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [u - v for u, v in zip(a, b)]


def _poly_mul_q(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            if v != 0:
                out[i + j] += u * v
    return out


def _poly_divmod_q(a, b):
    a = list(a)
    db = _poly_deg_q(b)
    if db < 0:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(1, len(a))
    da = _poly_deg_q(a)
    while da >= db:
        f = a[da] / b[db]
        q[da - db] = f
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        da = _poly_deg_q(a)
    return q, a


# ---------------------------------------------------------------------------
# weights and monomials


class Weights:
    """Positive integer degrees (a, b, c) of x, y, z with gcd(a,b,c) = 1."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a: int, b: int, c: int):
        if not all(isinstance(v, int) and v >= 1 for v in (a, b, c)):
            raise RingError("weights must be positive integers")
        if math.gcd(a, math.gcd(b, c)) != 1:
            raise RingError("weights must have gcd 1, got (%d,%d,%d)" % (a, b, c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __setattr__(self, *a):
        raise AttributeError("Weights is immutable")

    @property
    def tuple(self):
        return (self.a, self.b, self.c)

    @property
    def n_default(self) -> int:
        return self.a + self.b + self.c

    def mono_degree(self, m) -> int:
        return self.a * m[0] + self.b * m[1] + self.c * m[2]

    def __eq__(self, other):
        return isinstance(other, Weights) and self.tuple == other.tuple

    def __hash__(self):
        return hash(self.tuple)

    def __repr__(self):
        return "Weights(%d,%d,%d)" % self.tuple


def mono_mul(m1, m2):
    return (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])


def mono_divides(m1, m2) -> bool:
    return m1[0] <= m2[0] and m1[1] <= m2[1] and m1[2] <= m2[2]


def mono_div(m1, m2):
    return (m1[0] - m2[0], m1[1] - m2[1], m1[2] - m2[2])


def mono_lcm(m1, m2):
    return (max(m1[0], m2[0]), max(m1[1], m2[1]), max(m1[2], m2[2]))


def mono_key(weights: Weights, m) -> tuple:
    """Sort key of the fixed monomial order: weighted degree first, then
    reverse-lexicographic tie-break (larger = later x-exponent deficit; for
    equal degrees the last nonzero entry of the exponent difference decides,
    negative meaning larger).  key(m1) < key(m2) iff m1 < m2 in the order."""
    return (weights.mono_degree(m), -m[2], -m[1], -m[0])


def mono_cmp_ge(weights: Weights, m1, m2) -> bool:
    return mono_key(weights, m1) >= mono_key(weights, m2)


def monomial_basis(weights: Weights, d: int):
    """All exponent triples of weighted degree exactly d, in the fixed order
    (ascending).  Empty for d < 0."""
    if d < 0:
        return []
    a, b, c = weights.tuple
    out = []
    for k in range(d // c + 1):
        rem_k = d - c * k
        for j in range(rem_k // b + 1):
            rem = rem_k - b * j
            if rem % a == 0:
                out.append((rem // a, j, k))
    out.sort(key=lambda m: mono_key(weights, m))
    return out


def count_monomials(weights: Weights, d: int) -> int:
    if d < 0:
        return 0
    a, b, c = weights.tuple
    total = 0
    for k in range(d // c + 1):
        rem_k = d - c * k
        total += sum(1 for j in range(rem_k // b + 1) if (rem_k - b * j) % a == 0)
    return total


# ---------------------------------------------------------------------------
# polynomials

UNDEFINED_DEGREE = "undefined"  # degree sentinel of the zero polynomial


class Polynomial:
    __slots__ = ("weights", "field", "terms", "_hash")

    def __init__(self, weights: Weights, field, terms):
        """terms: mapping exponent-triple -> coefficient; zeros are pruned."""
        self.weights = weights
        self.field = field
        clean = {}
        for m, coef in terms.items():
            coef = field.coerce(coef)
            if not field.is_zero(coef):
                clean[m] = coef
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(weights: Weights, field=QQ) -> "Polynomial":
        return Polynomial(weights, field, {})

    @staticmethod
    def constant(weights: Weights, value, field=QQ) -> "Polynomial":
        return Polynomial(weights, field, {(0, 0, 0): value})

    @staticmethod
    def monomial(weights: Weights, m, coef=1, field=QQ) -> "Polynomial":
        return Polynomial(weights, field, {tuple(m): coef})

    @staticmethod
    def variable(weights: Weights, v: str, field=QQ) -> "Polynomial":
        i = VAR_NAMES.index(v)
        m = tuple(1 if t == i else 0 for t in range(3))
        return Polynomial(weights, field, {m: 1})

    def _new(self, terms) -> "Polynomial":
        return Polynomial(self.weights, self.field, terms)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Weighted degree (max over terms); the zero polynomial returns the
        UNDEFINED_DEGREE sentinel, never an integer."""
        if not self.terms:
            return UNDEFINED_DEGREE
        return max(self.weights.mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.weights.mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial; error otherwise."""
        degs = {self.weights.mono_degree(m) for m in self.terms}
        if len(degs) != 1:
            raise RingError("polynomial is zero or not homogeneous")
        return degs.pop()

    def coefficient(self, m):
        return self.terms.get(tuple(m), self.field.zero)

    def leading_monomial(self):
        if not self.terms:
            raise RingError("zero polynomial has no leading monomial")
        return max(self.terms, key=lambda m: mono_key(self.weights, m))

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self, descending=True):
        ms = sorted(self.terms, key=lambda m: mono_key(self.weights, m), reverse=descending)
        return [(m, self.terms[m]) for m in ms]

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.weights != other.weights:
            raise RingError("polynomials carry different weights")
        if self.field != other.field:
            raise RingError("polynomials carry different coefficient fields")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ExtElem)):
            other = Polynomial.constant(self.weights, other, self.field)
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, coef in other.terms.items():
            s = terms.get(m, self.field.zero) + coef
            if self.field.is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ExtElem)):
            other = Polynomial.constant(self.weights, other, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExtElem)):
            c = self.field.coerce(other)
            if self.field.is_zero(c):
                return Polynomial.zero(self.weights, self.field)
            return self._new({m: co * c for m, co in self.terms.items()})
        self._check_compatible(other)
        out = {}
        zero = self.field.zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                s = out.get(m, zero) + c1 * c2
                out[m] = s
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise RingError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.constant(self.weights, 1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c):
        return self * c

    def mul_term(self, m, coef):
        """multiply by a single term coef * monomial(m)"""
        coef = self.field.coerce(coef)
        if self.field.is_zero(coef):
            return Polynomial.zero(self.weights, self.field)
        return self._new({mono_mul(mm, m): c * coef for mm, c in self.terms.items()})

    def monic(self) -> "Polynomial":
        """divide through by the leading coefficient"""
        lc = self.leading_coefficient()
        if lc == self.field.one:
            return self
        return self._new({m: c / lc for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.weights == other.weights
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            items = tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))
            self._hash = hash((self.weights, self.field, items))
        return self._hash

    def __repr__(self):
        from .textio import format_poly

        return format_poly(self)

    # -- calculus ------------------------------------------------------------

    def partial(self, v) -> "Polynomial":
        """Formal partial derivative with respect to x, y or z."""
        i = VAR_NAMES.index(v) if isinstance(v, str) else v
        out = {}
        for m, coef in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            dm = list(m)
            dm[i] = e - 1
            out[tuple(dm)] = coef * e
        return self._new(out)

    def substitute(self, images) -> "Polynomial":
        """Evaluate self at x,y,z -> images (three Polynomials)."""
        px, py, pz = images
        px._check_compatible(py)
        px._check_compatible(pz)
        pow_cache = [{0: Polynomial.constant(px.weights, 1, px.field)} for _ in range(3)]

        def power(idx, e):
            cache = pow_cache[idx]
            if e not in cache:
                base = (px, py, pz)[idx]
                cache[e] = power(idx, e - 1) * base
            return cache[e]

        acc = Polynomial.zero(px.weights, px.field)
        for m, coef in self.terms.items():
            term = Polynomial.constant(px.weights, coef, px.field)
            for idx in range(3):
                if m[idx]:
                    term = term * power(idx, m[idx])
            acc = acc + term
        return acc

    def homogeneous_component(self, d: int) -> "Polynomial":
        return self._new(
            {m: c for m, c in self.terms.items() if self.weights.mono_degree(m) == d}
        )


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise RingError("unknown op %r" % op)


def partial_derivative(f: Polynomial, v: str) -> Polynomial:
    return f.partial(v)


def homogeneous_component(f: Polynomial, d: int) -> Polynomial:
    return f.homogeneous_component(d)


# ---------------------------------------------------------------------------
# polynomial triples (derivation values / bivector components / form parts)


class PolyVector:
    __slots__ = ("f1", "f2", "f3")

    def __init__(self, f1: Polynomial, f2: Polynomial, f3: Polynomial):
        f1._check_compatible(f2)
        f1._check_compatible(f3)
        self.f1 = f1
        self.f2 = f2
        self.f3 = f3

    @property
    def weights(self):
        return self.f1.weights

    @property
    def field(self):
        return self.f1.field

    @property
    def comps(self):
        return (self.f1, self.f2, self.f3)

    @staticmethod
    def zero(weights: Weights, field=QQ) -> "PolyVector":
        z = Polynomial.zero(weights, field)
        return PolyVector(z, z, z)

    def is_zero(self) -> bool:
        return self.f1.is_zero() and self.f2.is_zero() and self.f3.is_zero()

    def __add__(self, other: "PolyVector") -> "PolyVector":
        return PolyVector(self.f1 + other.f1, self.f2 + other.f2, self.f3 + other.f3)

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        return PolyVector(self.f1 - other.f1, self.f2 - other.f2, self.f3 - other.f3)

    def __neg__(self):
        return PolyVector(-self.f1, -self.f2, -self.f3)

    def scale(self, f) -> "PolyVector":
        return PolyVector(self.f1 * f, self.f2 * f, self.f3 * f)

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        return "(%r, %r, %r)" % self.comps


def gradient(f: Polynomial) -> PolyVector:
    return PolyVector(f.partial(0), f.partial(1), f.partial(2))


def div(v: PolyVector) -> Polynomial:
    return v.f1.partial(0) + v.f2.partial(1) + v.f3.partial(2)


def curl(v: PolyVector) -> PolyVector:
    return PolyVector(
        v.f3.partial(1) - v.f2.partial(2),
        v.f1.partial(2) - v.f3.partial(0),
        v.f2.partial(0) - v.f1.partial(1),
    )


def dot(u: PolyVector, v: PolyVector) -> Polynomial:
    return u.f1 * v.f1 + u.f2 * v.f2 + u.f3 * v.f3


def cross(u: PolyVector, v: PolyVector) -> PolyVector:
    return PolyVector(
        u.f2 * v.f3 - u.f3 * v.f2,
        u.f3 * v.f1 - u.f1 * v.f3,
        u.f1 * v.f2 - u.f2 * v.f1,
    )
