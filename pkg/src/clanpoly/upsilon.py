"""The Upsilon family: matchless seeds, the weak-order recursion, four
specializations, and exhaustive edge-level verification.

A table for fixed (p, q) is filled level by level up the weak order.
Each non-matchless clan takes its value through its first incoming edge
(sorted by predecessor string, then position); verify_self_consistency
re-checks every other edge, which is strictly stronger than comparing a
sample of alternative paths.

Full tables are only cached through p+q = 5; beyond that the
beta-symbolic entries run to gigabytes, so the sweeps stream one level
at a time (the recursion never looks back more than one level) and
single values walk a seed-to-clan chain instead.
"""

from .poly import Poly
from . import perms, schubert
from .clans import WeakOrderGraph

_TABLES = {}
_TABLE_CAP = 5

FLAVORS = ("beta", "H_XY", "H_X", "K_XY", "K_X")


def upsilon_matchless(tau):
    """Seed value: the u factor takes its y arguments reversed."""
    if not tau.is_matchless():
        raise ValueError("matchless clan required")
    u = perms.u_of_clan(tau)
    v = perms.v_of_clan(tau)
    return schubert.beta_double_schubert(u).reverse_y() * \
        schubert.beta_double_schubert(v)


def _first_in(graph):
    first = {}
    for (lo, i, hi) in graph.edges:
        if hi not in first:
            first[hi] = (lo, i)
    return first


def _stream_levels(graph):
    """Yield (level, {clan: beta poly}) up the weak order, retaining
    only the previous level between steps."""
    first = _first_in(graph)
    prev = None
    for level in sorted(graph.by_level):
        cur = {}
        for clan in graph.by_level[level]:
            if level == 0:
                cur[clan] = upsilon_matchless(clan)
            else:
                pred, i = first[clan]
                cur[clan] = prev[pred].beta_divided_difference(i)
        yield level, cur
        prev = cur


class UpsilonTable:
    """All beta-symbolic Upsilon polynomials for one (p, q)."""

    def __init__(self, p, q):
        self.p = p
        self.q = q
        self.graph = WeakOrderGraph(p, q)
        self.entries = {}
        self.provenance = {}
        first = _first_in(self.graph)
        for level, cur in _stream_levels(self.graph):
            self.entries.update(cur)
            for clan in cur:
                if level == 0:
                    self.provenance[clan] = (str(clan), ())
                else:
                    pred, i = first[clan]
                    src, path = self.provenance[pred]
                    self.provenance[clan] = (src, path + ((str(pred), i),))

    def poly(self, clan):
        return self.entries[clan]

    def clans(self):
        return self.graph.nodes()


def table(p, q):
    key = (p, q)
    if key not in _TABLES:
        _TABLES[key] = UpsilonTable(p, q)
    return _TABLES[key]


def _chain_value(clan):
    """Walk first-in edges down to a matchless seed, then apply the
    divided differences back up.  Memory stays at one polynomial."""
    graph = WeakOrderGraph(clan.p, clan.q)
    first = _first_in(graph)
    chain = []
    c = clan
    while not c.is_matchless():
        pred, i = first[c]
        chain.append(i)
        c = pred
    f = upsilon_matchless(c)
    for i in reversed(chain):
        f = f.beta_divided_difference(i)
    return f


def upsilon(clan):
    key = (clan.p, clan.q)
    if key in _TABLES or clan.p + clan.q <= _TABLE_CAP:
        return table(clan.p, clan.q).poly(clan)
    return _chain_value(clan)


def _specialize_poly(f, flavor):
    if flavor == "beta":
        return f
    if flavor == "H_XY":
        return f.set_beta(0)
    if flavor == "H_X":
        return f.set_beta(0).set_y_zero()
    if flavor == "K_XY":
        return f.set_beta(1).k_substitute()
    if flavor == "K_X":
        return f.set_beta(1).k_substitute().set_y_one()
    raise ValueError("unknown flavor: %r" % (flavor,))


def specialize(clan, flavor):
    """One of the named specializations of the beta-symbolic value."""
    if flavor not in FLAVORS:
        raise ValueError("unknown flavor: %r" % (flavor,))
    return _specialize_poly(upsilon(clan), flavor)


def flavor_sweep_multi(p, q, flavors):
    """{flavor: {clan: poly}} for every (p, q) clan, all flavors from
    one pass of the two-level streaming window."""
    for flavor in flavors:
        if flavor not in FLAVORS:
            raise ValueError("unknown flavor: %r" % (flavor,))
    graph = WeakOrderGraph(p, q)
    out = {flavor: {} for flavor in flavors}
    for _level, cur in _stream_levels(graph):
        for clan, f in cur.items():
            for flavor in flavors:
                out[flavor][clan] = _specialize_poly(f, flavor)
    return out


def flavor_sweep(p, q, flavor):
    """{clan: specialized polynomial} for every (p, q) clan, built with
    the two-level streaming window.  The beta flavor would defeat the
    point at large sizes; it is allowed but only sensible when small."""
    return flavor_sweep_multi(p, q, (flavor,))[flavor]


def verify_self_consistency(p, q, on_edge=None):
    """Check every weak-order edge against the divided-difference
    recursion.  Returns a report dict; violations name the edge.

    Each clan's entry is defined through its first incoming edge, so
    that edge holds by construction; every other edge is recomputed
    and compared.  The streaming fill keeps two levels alive.  The
    on_edge callback, if given, sees (lo, i, hi, status) for every
    edge, status one of "defining" or "ok" or "violation"."""
    graph = WeakOrderGraph(p, q)
    first = _first_in(graph)
    violations = []
    clans = 0
    checked = 0
    prev = None
    for level, cur in _stream_levels(graph):
        clans += len(cur)
        if level:
            for clan in graph.by_level[level]:
                for (lo, i) in graph.in_edges(clan):
                    if (lo, i) == first[clan]:
                        if on_edge is not None:
                            on_edge(lo, i, clan, "defining")
                        continue
                    checked += 1
                    good = prev[lo].beta_divided_difference(i) == cur[clan]
                    if on_edge is not None:
                        on_edge(lo, i, clan, "ok" if good else "violation")
                    if not good:
                        violations.append({
                            "from": str(lo),
                            "position": i,
                            "to": str(clan),
                        })
        prev = cur
    return {
        "p": p,
        "q": q,
        "clans": clans,
        "edges": len(graph.edges),
        "checked": checked,
        "violations": violations,
        "ok": not violations,
    }


def check_symmetry(p, q, on_clan=None):
    """Negating a clan must reverse the y arguments of its polynomial.
    The negated clan lives on the (q, p) side.  Negation preserves the
    matching, hence the level, so the two sides stream in lockstep."""
    violations = []
    clans = 0

    def compare(cur, mirror):
        for clan, f in cur.items():
            neg = clan.negate()
            good = mirror[neg] == f.reverse_y()
            if on_clan is not None:
                on_clan(clan, neg, "ok" if good else "violation")
            if not good:
                violations.append({"clan": str(clan), "negated": str(neg)})

    if p == q:
        for _level, cur in _stream_levels(WeakOrderGraph(p, q)):
            clans += len(cur)
            compare(cur, cur)
    else:
        sides = zip(_stream_levels(WeakOrderGraph(p, q)),
                    _stream_levels(WeakOrderGraph(q, p)))
        for (l1, cur), (l2, mirror) in sides:
            assert l1 == l2
            clans += len(cur)
            compare(cur, mirror)
    return {
        "p": p,
        "q": q,
        "clans": clans,
        "violations": violations,
        "ok": not violations,
    }
