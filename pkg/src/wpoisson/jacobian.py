"""Jacobian ideal machinery: Groebner bases under the fixed weighted order,
normal forms, Hilbert data of the singular quotient, GK-dimension, isolated
singularity detection, and gcd of the partials."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .hilbert import HilbertSeries
from .ring import (
    QQ,
    Polynomial,
    RingError,
    gradient,
    mono_divides,
    mono_div,
    mono_key,
    mono_lcm,
    mono_mul,
    monomial_basis,
)


class GroebnerBasis:
    """Reduced Groebner basis under the weighted-degree grevlex order.

    Elements are monic, no head divides another head, tails fully reduced.
    Construct through buchberger()."""

    __slots__ = ("polys", "weights", "field", "_heads")

    def __init__(self, polys, weights, field):
        self.polys = tuple(polys)
        self.weights = weights
        self.field = field
        self._heads = tuple(p.leading_monomial() for p in self.polys)

    def heads(self):
        return self._heads

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __repr__(self):
        return "GroebnerBasis(%s)" % (list(self.polys),)


def normal_form(f, basis):
    """remainder of full division of f by the basis; zero iff f lies in the
    ideal when the basis is a Groebner basis"""
    if isinstance(basis, GroebnerBasis):
        polys = basis.polys
        heads = basis.heads()
    else:
        polys = [g for g in basis if g.terms]
        heads = [g.leading_monomial() for g in polys]
    if not polys:
        return f
    out = f
    changed = True
    while changed:
        changed = False
        for m, coef in out.sorted_terms():
            for g, h in zip(polys, heads):
                if mono_divides(h, m):
                    factor = coef / g.terms[h]
                    out = out - g.mul_term(mono_div(m, h), factor)
                    changed = True
                    break
            if changed:
                break
    return out


def _s_polynomial(f, g):
    hf = f.leading_monomial()
    hg = g.leading_monomial()
    lcm = mono_lcm(hf, hg)
    one = f.field.one
    return f.mul_term(mono_div(lcm, hf), one / f.terms[hf]) - g.mul_term(
        mono_div(lcm, hg), one / g.terms[hg]
    )


def buchberger(gens):
    """reduced Groebner basis from a nonempty generator list"""
    gens = [g for g in gens if g.terms]
    if not gens:
        raise RingError("ideal needs at least one nonzero generator")
    weights = gens[0].weights
    field = gens[0].field
    basis = []
    for g in gens:
        r = normal_form(g, basis)
        if r.terms:
            basis.append(r.monic())

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        # normal strategy: smallest lcm degree first, then index order
        i, j = min(
            pairs,
            key=lambda p: (
                weights.mono_degree(
                    mono_lcm(basis[p[0]].leading_monomial(), basis[p[1]].leading_monomial())
                ),
                p,
            ),
        )
        pairs.discard((i, j))
        hi = basis[i].leading_monomial()
        hj = basis[j].leading_monomial()
        if mono_lcm(hi, hj) == mono_mul(hi, hj):
            continue  # coprime heads reduce to zero
        r = normal_form(_s_polynomial(basis[i], basis[j]), basis)
        if r.terms:
            basis.append(r.monic())
            k = len(basis) - 1
            pairs.update((t, k) for t in range(k))

    # inter-reduce: drop redundant heads, then reduce tails
    keep = []
    heads_seen = []
    for g in sorted(basis, key=lambda p: mono_key(weights, p.leading_monomial())):
        h = g.leading_monomial()
        if any(mono_divides(p, h) for p in heads_seen):
            continue
        keep.append(g)
        heads_seen.append(h)
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = normal_form(g, others)
        if r.terms:
            reduced.append(r.monic())
    reduced.sort(key=lambda p: mono_key(weights, p.leading_monomial()))
    gb = GroebnerBasis(reduced, weights, field)

    # Buchberger criterion sanity pass
    for f, g in combinations(gb.polys, 2):
        if normal_form(_s_polynomial(f, g), gb).terms:
            raise RingError("Groebner construction failed the S-pair criterion")
    return gb


@lru_cache(maxsize=256)
def jacobian_basis(omega):
    """cached Groebner basis of the ideal of partial derivatives"""
    grads = [g for g in gradient(omega).comps if g.terms]
    if not grads:
        raise RingError("all partial derivatives vanish")
    return buchberger(grads)


def _minimal_initial_gens(gb):
    out = []
    for h in sorted(gb.heads(), key=lambda m: mono_key(gb.weights, m)):
        if not any(mono_divides(p, h) for p in out):
            out.append(h)
    return out


def _initial_ideal_series(weights, heads):
    """Hilbert series of A modulo a monomial ideal, by inclusion-exclusion
    over lcms of the minimal generators"""
    if len(heads) > 20:
        raise RingError("initial ideal too large for inclusion-exclusion")
    num = {}
    for r in range(len(heads) + 1):
        for sub in combinations(heads, r):
            m = (0, 0, 0)
            for h in sub:
                m = mono_lcm(m, h)
            d = weights.mono_degree(m)
            sign = -1 if r % 2 else 1
            s = num.get(d, 0) + sign
            if s:
                num[d] = s
            else:
                num.pop(d, None)
    return HilbertSeries(num, weights.tuple)


def standard_monomials(weights, heads, d):
    """monomials of degree d outside the monomial ideal generated by heads"""
    return [m for m in monomial_basis(weights, d) if not any(mono_divides(h, m) for h in heads)]


def a_sing_hilbert(omega, bound):
    """Hilbert data of the singular quotient A/(partials of omega):
    ({d: dim for 0 <= d <= bound}, exact rational series)"""
    if not omega.terms or not omega.is_homogeneous():
        raise RingError("potential must be nonzero homogeneous")
    gb = jacobian_basis(omega)
    heads = _minimal_initial_gens(gb)
    weights = omega.weights
    dims = {d: len(standard_monomials(weights, heads, d)) for d in range(bound + 1)}
    return dims, _initial_ideal_series(weights, heads)


def _one_minus_t_multiplicity(num):
    """multiplicity of the root t=1 of a Laurent numerator dict"""
    if not num:
        return None
    coeffs = dict(num)
    mult = 0
    while sum(coeffs.values()) == 0:
        # p = (1-t) q  means  q_d = sum of p_e over e <= d
        degs = sorted(coeffs)
        q = {}
        acc = 0
        for d in range(degs[0], degs[-1] + 1):
            acc += coeffs.get(d, 0)
            if acc:
                q[d] = acc
        coeffs = q
        mult += 1
        if mult > 64:
            raise RingError("runaway multiplicity computation")
    return mult


def gkdim(omega):
    """GK-dimension of the singular quotient: order of the Hilbert series
    pole at t=1, in {0,1,2,3}"""
    _, series = a_sing_hilbert(omega, 0)
    v = _one_minus_t_multiplicity(series.numerator)
    if v is None:
        return 0
    return max(0, 3 - v)


def has_isolated_singularity(omega):
    """true iff the singular quotient is finite dimensional"""
    return gkdim(omega) == 0


def _main_variable(f, g):
    for v in (2, 1, 0):
        if any(m[v] for m in f.terms) or any(m[v] for m in g.terms):
            return v
    return None


def _as_univar(f, v):
    """split f into {exponent of variable v: coefficient Polynomial}"""
    split = {}
    for m, c in f.terms.items():
        rest = tuple(0 if i == v else m[i] for i in range(3))
        split.setdefault(m[v], {})[rest] = c
    return {e: Polynomial(f.weights, f.field, t) for e, t in split.items()}


def _from_univar(coeffs, v, weights, field):
    terms = {}
    for e, p in coeffs.items():
        for m, c in p.terms.items():
            mm = tuple(m[i] + (e if i == v else 0) for i in range(3))
            terms[mm] = terms.get(mm, field.zero) + c
    return Polynomial(weights, field, terms)


def _exact_div(f, g):
    """exact polynomial division f / g; raises when not exact"""
    if not g.terms:
        raise RingError("division by the zero polynomial")
    rem = f
    quot = Polynomial.zero(f.weights, f.field)
    hg = g.leading_monomial()
    cg = g.terms[hg]
    while rem.terms:
        hm = rem.leading_monomial()
        if not mono_divides(hg, hm):
            raise RingError("polynomial division is not exact")
        q = mono_div(hm, hg)
        factor = rem.terms[hm] / cg
        quot = quot + Polynomial.monomial(f.weights, q, factor, f.field)
        rem = rem - g.mul_term(q, factor)
    return quot


def _pseudo_rem(f, g, v):
    """pseudo-remainder in variable v: lc(g)^(deg f - deg g + 1) f = q g + r"""
    fu = _as_univar(f, v)
    gu = _as_univar(g, v)
    dg = max(gu)
    lcg = gu[dg]
    rem = f
    for _ in range(max(fu) - dg + 1):
        ru = _as_univar(rem, v) if rem.terms else {}
        dr = max(ru) if ru else -1
        if dr < dg:
            rem = rem * lcg
            continue
        shift = tuple(dr - dg if i == v else 0 for i in range(3))
        rem = rem * lcg - (g * ru[dr]).mul_term(shift, f.field.one)
    return rem


def _content(univar, weights, field):
    c = Polynomial.zero(weights, field)
    for p in univar.values():
        c = _gcd_pair(c, p)
    return c


def _primitive_part(f, v):
    u = _as_univar(f, v)
    c = _content(u, f.weights, f.field)
    return _from_univar({e: _exact_div(p, c) for e, p in u.items()}, v, f.weights, f.field), c


def _gcd_pair(f, g):
    """multivariate gcd: primitive-part recursion over one variable with a
    subresultant pseudo-remainder sequence"""
    if not f.terms:
        return g
    if not g.terms:
        return f
    v = _main_variable(f, g)
    if v is None:
        return Polynomial.constant(f.weights, 1, f.field)
    if max(m[v] for m in f.terms) < max(m[v] for m in g.terms):
        f, g = g, f
    fp, cf = _primitive_part(f, v)
    gp, cg = _primitive_part(g, v)
    cont = _gcd_pair(cf, cg)

    one = Polynomial.constant(f.weights, 1, f.field)
    gg = one
    hh = one
    while True:
        delta = max(_as_univar(fp, v)) - max(_as_univar(gp, v))
        r = _pseudo_rem(fp, gp, v)
        if not r.terms:
            break
        fp, gp = gp, _exact_div(r, gg * hh**delta)
        gg = _as_univar(fp, v)[max(_as_univar(fp, v))]
        if delta:
            hh = _exact_div(gg**delta, hh ** (delta - 1))
    prim, _ = _primitive_part(gp, v)
    return (cont * prim).monic()


def gcd_partials(omega):
    """gcd of the three partial derivatives, monic-normalized"""
    if omega.field is not QQ:
        raise RingError("gcd of partials is supported over the rationals only")
    grads = [g for g in gradient(omega).comps if g.terms]
    if not grads:
        raise RingError("all partial derivatives vanish")
    g = grads[0]
    for h in grads[1:]:
        g = _gcd_pair(g, h)
    return g.monic()
