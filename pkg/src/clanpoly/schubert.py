"""Schubert and Grothendieck polynomials via the divided difference
recursion, plus expansion of polynomials in the Schubert basis.

Three memo caches, one per family seed.  Keys are one-line tuples; the
symmetric group size is implied by the tuple length.  Descent from the
long element always strips the smallest ascent, so every cached value
is reproducible.
"""

from fractions import Fraction

from .poly import Poly
from . import perms

_beta_cache = {}
_double_cache = {}
_single_cache = {}


def _seed_beta(n):
    f = Poly.one(n)
    b = Poly.beta(n)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            xi, yj = Poly.x(n, i), Poly.y(n, j)
            f = f * (xi - yj + b * xi * yj)
    return f


def _seed_double(n):
    f = Poly.one(n)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            f = f * (Poly.x(n, i) - Poly.y(n, j))
    return f


def _seed_single(n):
    f = Poly.one(n)
    for i in range(1, n):
        f = f * Poly.x(n, i) ** (n - i)
    return f


def _compute(w, cache, seed, step):
    got = cache.get(w)
    if got is not None:
        return got
    # walk up by smallest ascents until a cached ancestor or the top
    chain = []
    cur = w
    while cur not in cache:
        asc = next((i for i in range(1, len(cur)) if cur[i - 1] < cur[i]), 0)
        if not asc:
            cache[cur] = seed(len(cur))
            break
        chain.append((cur, asc))
        up = list(cur)
        up[asc - 1], up[asc] = up[asc], up[asc - 1]
        cur = tuple(up)
    for node, i in reversed(chain):
        cache[node] = step(cache_parent(cache, node, i), i)
    return cache[w]


def cache_parent(cache, node, i):
    up = list(node)
    up[i - 1], up[i] = up[i], up[i - 1]
    return cache[tuple(up)]


def beta_double_schubert(w):
    return _compute(tuple(w), _beta_cache, _seed_beta,
                    lambda f, i: f.beta_divided_difference(i))


def double_schubert(w):
    return _compute(tuple(w), _double_cache, _seed_double,
                    lambda f, i: f.divided_difference(i))


def single_schubert(w):
    return _compute(tuple(w), _single_cache, _seed_single,
                    lambda f, i: f.divided_difference(i))


def double_grothendieck(w):
    return beta_double_schubert(w).set_beta(1).k_substitute()


def single_grothendieck(w):
    return double_grothendieck(w).set_y_one()


def clear_caches():
    _beta_cache.clear()
    _double_cache.clear()
    _single_cache.clear()


def localization_divisor(w):
    """Product of (y_{w(i)} - y_{w(j)}) over inversions i < j.  Equals
    the double Schubert polynomial evaluated at X = Y_w."""
    n = len(w)
    f = Poly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                f = f * (Poly.y(n, w[i]) - Poly.y(n, w[j]))
    return f


def _lead_yb(f):
    """Lex-leading term of an x-free polynomial, as ((ys, b), coeff)."""
    best = None
    for (xs, ys, b), c in f.items():
        if any(xs):
            raise ValueError("x variable in coefficient position")
        key = ys + (b,)
        if best is None or key > best[0]:
            best = (key, c)
    ysb, c = best
    return ysb[:-1], ysb[-1], c


def exact_divide(g, d, max_steps=200000):
    """Exact division of x-free Laurent polynomials.  Raises if the
    quotient fails to be an integer Laurent polynomial."""
    n = g.n
    dys, db, dc = _lead_yb(d)
    q = Poly.zero(n)
    steps = 0
    while g:
        steps += 1
        if steps > max_steps:
            raise ArithmeticError("division step budget exceeded")
        gys, gb, gc = _lead_yb(g)
        frac = Fraction(gc, dc)
        if frac.denominator != 1:
            raise ArithmeticError("inexact coefficient in division")
        eb = gb - db
        eys = tuple(a - b for a, b in zip(gys, dys))
        if eb < 0:
            raise ArithmeticError("negative beta exponent in quotient")
        t = Poly.monomial(n, (0,) * n, eys, eb, int(frac))
        q = q + t
        g = g - t * d
    return q


def _localization_walk(f):
    """One pass of the triangular localization argument at beta = 0:
    walk a linear extension of Bruhat order, evaluate at X = Y_pi,
    divide by the basis element's own evaluation, subtract."""
    n = f.n
    out = {}
    order = sorted(perms.all_perms(n), key=lambda w: (perms.perm_length(w), w))
    rem = f
    for pi in order:
        if not rem:
            break
        val = rem.eval_x_at_perm(pi)
        if not val:
            continue
        div = double_schubert(pi).eval_x_at_perm(pi)
        c = exact_divide(val, div)
        out[pi] = c
        rem = rem - c * double_schubert(pi)
    if rem:
        raise ArithmeticError("expansion left a nonzero remainder")
    return out


def expand_in_schubert_basis(f, mode="beta"):
    """Coefficients {w: c_w} with f = sum of c_w * S_w, the S_w drawn
    from the family named by mode ("beta" or "double").

    The beta = 0 walk is sound because the basis vanishes at Y_pi for
    pi not above w.  With beta symbolic that vanishing fails (the
    values are beta multiples), so the general expansion peels one
    beta layer at a time, running the beta = 0 walk on each layer."""
    n = f.n
    if not f.within_staircase():
        raise ValueError("polynomial exceeds the staircase support")
    if mode == "double":
        out = _localization_walk(f)
        return {perms.strip_fixed(w): c for w, c in out.items()}
    if mode != "beta":
        raise ValueError("mode must be 'beta' or 'double'")
    out = {}
    rem = f
    k = 0
    while rem:
        if k > 500:
            raise ArithmeticError("beta layering failed to terminate")
        layer = rem.beta_layer(k)
        if layer:
            bk = Poly.beta(n) ** k
            for w, c in _localization_walk(layer).items():
                cw = c * bk
                out[w] = out.get(w, Poly.zero(n)) + cw
                rem = rem - cw * beta_double_schubert(w)
        k += 1
    return {perms.strip_fixed(w): c for w, c in out.items() if c}


def expand_single_trailing(f):
    """Expansion of an x-only polynomial over single Schubert
    polynomials by repeatedly peeling the grevlex-minimal monomial,
    whose exponent vector is the code of the next basis element.
    Stretches the variable universe when a code demands it."""
    if not f.x_only():
        raise ValueError("trailing-term expansion needs an x-only input")
    out = {}
    rem = f
    while rem:
        xs, c = rem.min_x_monomial_grevlex()
        w = perms.perm_from_code(xs)
        if len(w) > rem.n:
            rem = rem.extend(len(w))
        else:
            w = w + tuple(range(len(w) + 1, rem.n + 1))
        key = perms.strip_fixed(w)
        out[key] = out.get(key, 0) + c
        rem = rem - c * single_schubert(w)
    return {w: c for w, c in out.items() if c}
