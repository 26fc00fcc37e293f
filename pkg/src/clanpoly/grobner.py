"""Desk-scale Groebner machinery over the rationals.

Buchberger with the normal selection strategy and lcm-chain pruning,
explicit step budgets everywhere a computation could in principle run
away, squarefree monomial decompositions via minimal vertex covers,
multidegrees and K-polynomials from the Taylor inclusion-exclusion
table, and tangent cones through the two-pass homogenization route
(saturate by the homogenizing variable with it revlex-last, then read
lowest forms off a second basis that prefers high powers of it).
"""

import heapq
import time
from fractions import Fraction
from math import comb

from .zpoly import ZRing, ZPoly, matrix_ring
from .poly import Poly
from . import ideals
from .clans import closure_leq


class BudgetExceeded(RuntimeError):
    def __init__(self, stage, detail):
        super().__init__("%s budget exceeded: %s" % (stage, detail))
        self.stage = stage
        self.detail = detail


DEFAULT_BUDGET = {
    "max_pairs": 200000,
    "max_seconds": None,
    "max_table": 2000000,
}


def _budget(budget):
    out = dict(DEFAULT_BUDGET)
    if budget:
        out.update(budget)
    return out


# -- term orders ------------------------------------------------------

class TermOrder:
    """Wraps a key function on exponent tuples; bigger key = bigger
    monomial.  Keys must be consistent with multiplication, with the
    constant monomial smallest."""

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return "TermOrder(%s)" % self.name


def lex_order(priority):
    """Pure lex; priority lists variable indices most significant
    first."""
    pri = tuple(priority)

    def key(e):
        return tuple(e[k] for k in pri)

    return TermOrder("lex", key)


def grevlex_order(nvars, priority=None):
    """Graded reverse lexicographic; ties go to the monomial whose
    last-differing variable (in priority order) has the smaller
    exponent."""
    pri = tuple(priority) if priority is not None else tuple(range(nvars))
    rev = tuple(reversed(pri))

    def key(e):
        return (sum(e),) + tuple(-e[k] for k in rev)

    return TermOrder("grevlex", key)


def pq_lex_order(n, p):
    """The orbit-ideal order on an n x n matrix ring: lex, reading the
    bottom rows upward left to right, then the top rows downward."""
    ring = matrix_ring(n)
    pri = []
    for i in range(n, p, -1):
        for j in range(1, n + 1):
            pri.append(ring.index["z%d%d" % (i, j)])
    for i in range(1, p + 1):
        for j in range(1, n + 1):
            pri.append(ring.index["z%d%d" % (i, j)])
    order = lex_order(pri)
    order.name = "pq_lex(%d,%d)" % (p, n - p)
    return order


# -- monomial helpers -------------------------------------------------

def _lcm(a, b):
    return tuple(map(max, zip(a, b)))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _quotient(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _disjoint(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def leading_term(f, order):
    e = max(f.terms, key=order.key)
    return e, f.terms[e]


def _mono_times(f, exps, c):
    return ZPoly(f.ring, {tuple(map(sum, zip(e, exps))): cc * c
                          for e, cc in f.terms.items()})


def normal_form(f, basis, order, leads=None):
    """Full reduction: every term of the result is divisible by no
    basis lead.  basis entries must be nonzero."""
    if leads is None:
        leads = [leading_term(g, order) for g in basis]
    remainder = {}
    work = f
    while not work.is_zero():
        e, c = leading_term(work, order)
        hit = None
        for k, (le, lc) in enumerate(leads):
            if _divides(le, e):
                hit = (le, lc, basis[k])
                break
        if hit is None:
            remainder[e] = c
            work = ZPoly(work.ring, {k2: v for k2, v in work.terms.items()
                                     if k2 != e})
        else:
            le, lc, g = hit
            factor = Fraction(c, 1) / lc
            work = work - _mono_times(g, _quotient(e, le), factor)
    return ZPoly(f.ring, remainder)


def s_poly(f, g, order):
    ef, cf = leading_term(f, order)
    eg, cg = leading_term(g, order)
    l = _lcm(ef, eg)
    return _mono_times(f, _quotient(l, ef), Fraction(1, 1) / cf) - \
        _mono_times(g, _quotient(l, eg), Fraction(1, 1) / cg)


def _monic(f, order):
    _e, c = leading_term(f, order)
    if c == 1:
        return f
    inv = Fraction(1, 1) / c
    return ZPoly(f.ring, {e: cc * inv for e, cc in f.terms.items()})


def _pair_queue(leads, i):
    """New pairs (j, i) for a freshly appended element i."""
    out = []
    for j in range(i):
        out.append((j, i))
    return out


def buchberger(gens, order, budget=None):
    """Reduced Groebner basis, deterministic.  Normal strategy (pairs
    by lcm order key), Buchberger's coprimality and chain criteria."""
    b = _budget(budget)
    t0 = time.time()
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        return []
    ring = basis[0].ring
    basis = [_monic(g, order) for g in basis]
    leads = [leading_term(g, order)[0] for g in basis]
    # heap keyed by (lcm order key, pair); pairs only enter once, so
    # plain pushes keep selection identical to a min over the pending set
    heap = []
    for i in range(len(basis)):
        for j in range(i):
            heapq.heappush(heap, (order.key(_lcm(leads[j], leads[i])),
                                  (j, i)))
    done = set()
    steps = 0
    while heap:
        if b["max_seconds"] is not None and time.time() - t0 > b["max_seconds"]:
            raise BudgetExceeded("buchberger", "time at %d pairs" % steps)
        steps += 1
        if steps > b["max_pairs"]:
            raise BudgetExceeded("buchberger", "%d S-pairs" % steps)
        _key, pair = heapq.heappop(heap)
        done.add(pair)
        i, j = pair
        li, lj = leads[i], leads[j]
        if _disjoint(li, lj):
            continue
        l = _lcm(li, lj)
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _divides(leads[k], l):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in done and p2 in done:
                    skip = True
                    break
        if skip:
            continue
        s = s_poly(basis[i], basis[j], order)
        r = normal_form(s, basis, order,
                        leads=[(leads[k], 1) for k in range(len(basis))])
        if r.is_zero():
            continue
        r = _monic(r, order)
        basis.append(r)
        leads.append(leading_term(r, order)[0])
        for p in _pair_queue(leads, len(basis) - 1):
            heapq.heappush(heap, (order.key(_lcm(leads[p[0]], leads[p[1]])),
                                  p))
    # minimalize
    keep = []
    for i, le in enumerate(leads):
        if not any(_divides(leads[j], le) for j in keep if j != i):
            keep.append(i)
        else:
            continue
    minimal = []
    for i in keep:
        if not any(_divides(leads[j], leads[i]) for j in keep if j != i):
            minimal.append(i)
    basis = [basis[i] for i in minimal]
    # interreduce
    out = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        red = normal_form(g, others, order) if others else g
        out.append(_monic(red, order))
    out.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return out


def is_groebner_already(gens, order, budget=None):
    """Whether the given generators are themselves a Groebner basis:
    every S-polynomial reduces to zero against the input set.  Pairs
    certified by the coprime-lead or chain criterion are skipped;
    the rest are processed cheapest lcm first, so a failure verdict
    usually arrives long before a pass verdict would."""
    b = _budget(budget)
    t0 = time.time()
    basis = [g for g in gens if not g.is_zero()]
    if len(basis) <= 1:
        return True
    leads = [leading_term(g, order) for g in basis]
    exps = [e for e, _c in leads]
    pairs = sorted(((j, i) for i in range(len(basis)) for j in range(i)),
                   key=lambda ji: (order.key(_lcm(exps[ji[0]],
                                                  exps[ji[1]])), ji))
    done = set()
    steps = 0
    for (j, i) in pairs:
        done.add((j, i))
        if _disjoint(exps[i], exps[j]):
            continue
        l = _lcm(exps[i], exps[j])
        certified = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _divides(exps[k], l):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in done and p2 in done:
                    certified = True
                    break
        if certified:
            continue
        steps += 1
        if steps > b["max_pairs"]:
            raise BudgetExceeded("groebner-test", "%d S-pairs" % steps)
        if b["max_seconds"] is not None and \
                time.time() - t0 > b["max_seconds"]:
            raise BudgetExceeded("groebner-test", "time")
        s = s_poly(basis[i], basis[j], order)
        if not normal_form(s, basis, order, leads=leads).is_zero():
            return False
    return True


def initial_ideal(gens, order, budget=None, assume_groebner=False,
                  ring=None):
    """MonomialIdeal of lead terms of a Groebner basis of the input.
    The ring argument is only needed when gens is empty."""
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        if ring is None:
            raise ValueError("zero ideal needs an explicit ring")
        return MonomialIdeal(ring, [])
    if not assume_groebner:
        basis = buchberger(basis, order, budget)
    return MonomialIdeal(basis[0].ring,
                         [leading_term(g, order)[0] for g in basis])


# -- monomial ideals --------------------------------------------------

class MonomialIdeal:
    """Minimal generating monomials, as exponent tuples over a ring."""

    def __init__(self, ring, exps_list):
        self.ring = ring
        uniq = sorted(set(tuple(e) for e in exps_list),
                      key=lambda e: (sum(e), e))
        minimal = []
        for e in uniq:
            if not any(_divides(m, e) for m in minimal):
                minimal.append(e)
        self.gens = tuple(minimal)

    def __len__(self):
        return len(self.gens)

    def is_squarefree(self):
        return all(all(x <= 1 for x in e) for e in self.gens)

    def generator_names(self):
        """Each generator as a tuple of variable names (with
        multiplicity) for display."""
        out = []
        for e in self.gens:
            parts = []
            for k, ek in enumerate(e):
                parts.extend([self.ring.names[k]] * ek)
            out.append(tuple(parts))
        return out

    def supports(self):
        return [frozenset(k for k, ek in enumerate(e) if ek)
                for e in self.gens]

    def minimal_primes(self):
        """For squarefree ideals: the minimal vertex covers of the
        generator supports, each a tuple of variable names, sorted by
        (size, names)."""
        if not self.is_squarefree():
            raise ValueError("minimal primes need squarefree generators")
        edges = self.supports()
        covers = set()

        def descend(cover, remaining):
            live = [e for e in remaining if not (e & cover)]
            if not live:
                covers.add(frozenset(cover))
                return
            edge = min(live, key=lambda e: tuple(sorted(e)))
            for v in sorted(edge):
                descend(cover | {v}, live)

        descend(frozenset(), edges)
        minimal = [c for c in covers
                   if not any(d < c for d in covers)]
        named = [tuple(self.ring.names[k] for k in sorted(c))
                 for c in minimal]
        named.sort(key=lambda t: (len(t), t))
        return named


def taylor_table(mono, budget=None):
    """{exponent tuple: integer} with entry lcm(S) summing (-1)^|S|
    over generator subsets S, computed by sequential collapse."""
    b = _budget(budget)
    table = {tuple([0] * mono.ring.nvars): 1}
    for g in mono.gens:
        update = {}
        for m, c in table.items():
            l = _lcm(m, g)
            update[l] = update.get(l, 0) - c
        for l, c in update.items():
            s = table.get(l, 0) + c
            if s:
                table[l] = s
            elif l in table:
                del table[l]
        if len(table) > b["max_table"]:
            raise BudgetExceeded("taylor", "%d table entries" % len(table))
    return table


def _parse_zname(name):
    if len(name) != 3 or name[0] != "z":
        raise ValueError("not a matrix variable: %r" % (name,))
    return int(name[1]), int(name[2])


class NonEquidimensional(RuntimeError):
    def __init__(self, histogram):
        super().__init__("components not equidimensional: %s"
                         % (histogram,))
        self.histogram = histogram


def multidegree_report(mono, n, budget=None):
    """Multidegree of the quotient by a monomial ideal, graded by
    z_ij -> x_j - y_i.  Squarefree ideals go through minimal vertex
    covers; otherwise the general lowest-form-of-K route is used.
    Returns {poly, method, squarefree, equidimensional, histogram}."""
    ring = mono.ring
    if mono.is_squarefree():
        primes = mono.minimal_primes()
        sizes = sorted(set(len(c) for c in primes))
        histogram = {s: sum(1 for c in primes if len(c) == s)
                     for s in sizes}
        codim = sizes[0] if sizes else 0
        total = Poly.zero(n)
        for prime in primes:
            if len(prime) != codim:
                continue
            prod = Poly.one(n)
            for name in prime:
                i, j = _parse_zname(name)
                prod = prod * (Poly.x(n, j) - Poly.y(n, i))
            total = total + prod
        return {
            "poly": total,
            "method": "covers",
            "squarefree": True,
            "equidimensional": len(sizes) <= 1,
            "histogram": histogram,
        }
    table = taylor_table(mono, budget)
    weights = {}
    for k, name in enumerate(ring.names):
        i, j = _parse_zname(name)
        weights[k] = Poly.x(n, j) - Poly.y(n, i)
    total = Poly.zero(n)
    for m, c in table.items():
        prod = Poly.const(n, c)
        for k, ek in enumerate(m):
            if ek:
                prod = prod * (Poly.one(n) - weights[k]) ** ek
        total = total + prod
    lowest = _lowest_xy_form(total, n)
    return {
        "poly": lowest,
        "method": "k-expansion",
        "squarefree": False,
        "equidimensional": None,
        "histogram": None,
    }


def _lowest_xy_form(f, n):
    groups = {}
    for (xs, ys, b), c in f.items():
        d = sum(xs) + sum(ys)
        groups.setdefault(d, []).append((xs, ys, b, c))
    if not groups:
        return f
    d = min(groups)
    out = Poly.zero(n)
    for xs, ys, b, c in groups[d]:
        out = out + Poly.monomial(n, xs, ys, b, c)
    return out


def multidegree(mono, n, budget=None, require_equidimensional=True):
    report = multidegree_report(mono, n, budget)
    if require_equidimensional and report["squarefree"] and \
            not report["equidimensional"]:
        raise NonEquidimensional(report["histogram"])
    return report["poly"]


K_CONVENTIONS = ("x/y", "y/x")


def k_polynomial(mono, n, convention="x/y", budget=None):
    """K-polynomial of the quotient, from the Taylor table.  The
    convention fixes the monomial weight of z_ij: x_j/y_i or its
    reciprocal (calibrated once, then frozen by regression test)."""
    if convention not in K_CONVENTIONS:
        raise ValueError("unknown K convention: %r" % (convention,))
    ring = mono.ring
    table = taylor_table(mono, budget)
    out = Poly.zero(n)
    for m, c in table.items():
        xs = [0] * n
        ys = [0] * n
        for k, ek in enumerate(m):
            if not ek:
                continue
            i, j = _parse_zname(ring.names[k])
            if convention == "x/y":
                xs[j - 1] += ek
                ys[i - 1] -= ek
            else:
                ys[i - 1] += ek
                xs[j - 1] -= ek
        out = out + Poly.monomial(n, tuple(xs), tuple(ys), 0, c)
    return out


# -- tangent cones ----------------------------------------------------

_T_RINGS = {}


def _ring_with_t(ring):
    if ring.names not in _T_RINGS:
        _T_RINGS[ring.names] = ZRing(ring.names + ("t",))
    return _T_RINGS[ring.names]


def _homogenize(f, big):
    top = f.total_degree()
    out = {}
    for e, c in f.terms.items():
        out[e + (top - sum(e),)] = c
    return ZPoly(big, out)


def _strip_t_power(f):
    m = min(e[-1] for e in f.terms)
    if m == 0:
        return f
    return ZPoly(f.ring, {e[:-1] + (e[-1] - m,): c
                          for e, c in f.terms.items()})


def _dehomogenize(f, ring):
    out = {}
    for e, c in f.terms.items():
        k = e[:-1]
        out[k] = out.get(k, 0) + c
    return ZPoly(ring, {e: c for e, c in out.items() if c})


def _lowest_form(f):
    if f.is_zero():
        return f
    d = min(sum(e) for e in f.terms)
    return ZPoly(f.ring, {e: c for e, c in f.terms.items() if sum(e) == d})


def _hform_order(nvars_with_t):
    """On the homogenized ring: total degree, then the homogenizing
    variable's exponent descending, then grevlex on the rest.  On a
    homogeneous ideal this makes lead terms track lowest forms."""
    zcount = nvars_with_t - 1
    rev = tuple(reversed(range(zcount)))

    def key(e):
        return (sum(e), e[-1]) + tuple(-e[k] for k in rev)

    return TermOrder("hform", key)


def tangent_cone_monomials(gens, ring, budget=None):
    """in_grevlex of the lowest-form ideal at the origin, as a
    MonomialIdeal in the given ring.

    Two basis computations: first saturate the homogenized ideal by
    the homogenizing variable (revlex-last basis, strip t powers),
    then rebase under the order preferring high t, whose lead
    monomials' z-parts are exactly the lowest-form leads."""
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return MonomialIdeal(ring, [])
    if any(g.constant_term() for g in live):
        raise ValueError("origin is not on the zero set")
    big = _ring_with_t(ring)
    hom = [_homogenize(g, big) for g in live]
    sat_order = grevlex_order(big.nvars,
                              priority=list(range(big.nvars - 1)) +
                              [big.nvars - 1])
    g1 = buchberger(hom, sat_order, budget)
    g1 = [_strip_t_power(g) for g in g1]
    g2 = buchberger(g1, _hform_order(big.nvars), budget)
    order2 = _hform_order(big.nvars)
    return MonomialIdeal(ring, [leading_term(g, order2)[0][:-1] for g in g2])


def tangent_cone(gens, ring, budget=None):
    """Generators of the lowest-form ideal at the origin (the full
    polynomial forms, not just their lead monomials)."""
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return []
    if any(g.constant_term() for g in live):
        raise ValueError("origin is not on the zero set")
    big = _ring_with_t(ring)
    hom = [_homogenize(g, big) for g in live]
    sat_order = grevlex_order(big.nvars,
                              priority=list(range(big.nvars - 1)) +
                              [big.nvars - 1])
    g1 = buchberger(hom, sat_order, budget)
    g1 = [_strip_t_power(g) for g in g1]
    g2 = buchberger(g1, _hform_order(big.nvars), budget)
    raw = []
    seen = set()
    for g in g2:
        f = _lowest_form(_dehomogenize(g, ring)).integerized()
        fp = f.fingerprint()
        if fp not in seen:
            seen.add(fp)
            raw.append(f)
    # the forms are a Groebner basis of the lowest-form ideal under
    # grevlex, so lead-divisibility minimalization keeps a generating set
    glex = grevlex_order(ring.nvars)
    raw.sort(key=lambda f: glex.key(leading_term(f, glex)[0]))
    forms = []
    kept_leads = []
    for f in raw:
        le = leading_term(f, glex)[0]
        if not any(_divides(k, le) for k in kept_leads):
            forms.append(f)
            kept_leads.append(le)
    return forms


# -- Hilbert data -----------------------------------------------------

def graded_k_numerator(mono, budget=None):
    """Z-graded K-numerator of the quotient: coefficients of q^d,
    as a dict {degree: int}."""
    table = taylor_table(mono, budget)
    out = {}
    for m, c in table.items():
        d = sum(m)
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        elif d in out:
            del out[d]
    return out


def _divide_by_one_minus_q(coeffs):
    """Exact division of sum(c_d q^d) by (1 - q); raises on remainder."""
    if not coeffs:
        return {}
    top = max(coeffs)
    run = 0
    out = {}
    for d in range(top + 1):
        run += coeffs.get(d, 0)
        if run:
            out[d] = run
    if run != 0:
        raise ArithmeticError("division by (1-q) leaves a remainder")
    out.pop(top, None)
    return out


def h_polynomial(gamma, beta, budget=None):
    """Coefficient list of the local Hilbert-series numerator of the
    patch of gamma's variety at beta's base point: the graded
    K-numerator of the tangent cone, divided by (1-q)^(chart dim minus
    orbit-closure dim), exactly."""
    if (gamma.p, gamma.q) != (beta.p, beta.q):
        raise ValueError("clans live on different (p, q)")
    if not closure_leq(beta, gamma):
        raise ValueError("base point is not on the orbit closure")
    n = gamma.n
    pres = ideals.patch_ideal(gamma, beta)
    mono = tangent_cone_monomials(pres.generators, pres.ring, budget)
    coeffs = graded_k_numerator(mono, budget)
    drop = comb(n, 2) - gamma.dimension()
    for _ in range(drop):
        coeffs = _divide_by_one_minus_q(coeffs)
    if not coeffs:
        return [0]
    top = max(coeffs)
    return [coeffs.get(d, 0) for d in range(top + 1)]
