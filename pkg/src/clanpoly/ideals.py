"""Determinantal presentations: the orbit-closure ideal of a clan and
its affine patch ideals.

Everything lives in the generic matrix coordinates z_ij.  Generators
come in three families of minors, sized by the clan's rank data:

  R+ : minors of the lower-left  q x i  corner, size R_plus[i]
  R- : minors of the upper-left  p x i  corner, size R_minus[i]
  W  : minors of the n x (i+j) splice P_ij, size W[i][j], where P_ij
       stacks the upper-left p x i corner over zeros and then appends
       the first j full columns.

A requested size above the target's smaller dimension is vacuous and
emitted nowhere.  Zero minors are dropped and duplicates deduped, with
provenance kept per surviving generator.
"""

from itertools import combinations

from .zpoly import matrix_ring, det
from . import perms


def generic_matrix(n):
    ring = matrix_ring(n)
    return [[ring.var("z%d%d" % (i, j)) for j in range(1, n + 1)]
            for i in range(1, n + 1)]


def rank_vectors(clan):
    """(R_plus, R_minus, W) with R_* as n-tuples and W as a dict on
    pairs i < j."""
    n = clan.n
    pc = clan.plus_counts()
    mc = clan.minus_counts()
    cc = clan.cross_counts()
    r_plus = tuple(i + 1 - pc[i - 1] for i in range(1, n + 1))
    r_minus = tuple(i + 1 - mc[i - 1] for i in range(1, n + 1))
    w = {ij: ij[1] + c + 1 for ij, c in cc.items()}
    return r_plus, r_minus, w


class IdealPresentation:
    """A generator list plus, for each generator, where it came from:
    (family, size, row indices, column indices), all 1-based against
    the matrix the minors were taken in."""

    def __init__(self, ring, generators, provenance):
        self.ring = ring
        self.generators = generators
        self.provenance = provenance

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def origin_is_member(self):
        """Whether z = 0 lies on the zero set."""
        return all(g.constant_term() == 0 for g in self.generators)

    def generator_lines(self):
        return [str(g) for g in self.generators]

    def cas_script(self, name="I"):
        """A plain Singular-syntax script: one ring declaration over Q
        with degree reverse lexicographic order, then the ideal."""
        ring_line = "ring R = 0, (%s), dp;" % ", ".join(self.ring.names)
        if self.generators:
            body = ",\n  ".join(str(g) for g in self.generators)
            ideal_line = "ideal %s =\n  %s;" % (name, body)
        else:
            ideal_line = "ideal %s = 0;" % name
        return ring_line + "\n" + ideal_line + "\n"


def _minor_family(pres_gens, pres_prov, seen, entries, family, size,
                  rows, cols, tag):
    """Append all size x size minors of entries[rows][cols], skipping
    vacuous sizes, zero minors, and previously seen polynomials."""
    if size > min(len(rows), len(cols)) or size <= 0:
        return
    for rsub in combinations(rows, size):
        for csub in combinations(cols, size):
            m = det([[entries[r - 1][c - 1] for c in csub] for r in rsub])
            if m.is_zero():
                continue
            fp = m.fingerprint()
            if fp in seen:
                continue
            seen.add(fp)
            pres_gens.append(m)
            pres_prov.append((family, tag, rsub, csub))


def _three_families(clan, entries):
    """The shared minor recipe, on whichever matrix is supplied."""
    n = clan.n
    p = clan.p
    r_plus, r_minus, w = rank_vectors(clan)
    gens = []
    prov = []
    seen = set()
    low_rows = tuple(range(p + 1, n + 1))
    high_rows = tuple(range(1, p + 1))
    for i in range(1, n + 1):
        _minor_family(gens, prov, seen, entries, "R+", r_plus[i - 1],
                      low_rows, tuple(range(1, i + 1)), (i,))
    for i in range(1, n + 1):
        _minor_family(gens, prov, seen, entries, "R-", r_minus[i - 1],
                      high_rows, tuple(range(1, i + 1)), (i,))
    ring = entries[0][0].ring
    zero = ring.zero()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            size = w[(i, j)]
            if size > min(n, i + j):
                continue
            splice = [[entries[r - 1][c - 1] if r <= p else zero
                       for c in range(1, i + 1)] +
                      [entries[r - 1][c - 1] for c in range(1, j + 1)]
                      for r in range(1, n + 1)]
            _minor_family(gens, prov, seen, splice, "W", size,
                          tuple(range(1, n + 1)),
                          tuple(range(1, i + j + 1)), (i, j))
    return IdealPresentation(entries[0][0].ring, gens, prov)


def korbit_ideal(clan):
    """The determinantal ideal cutting out the orbit closure, inside
    the full generic matrix."""
    return _three_families(clan, generic_matrix(clan.n))


def korbit_ideal_r_only(clan):
    """Only the two R families (the candidate smaller presentation)."""
    n = clan.n
    p = clan.p
    entries = generic_matrix(n)
    r_plus, r_minus, _w = rank_vectors(clan)
    gens = []
    prov = []
    seen = set()
    for i in range(1, n + 1):
        _minor_family(gens, prov, seen, entries, "R+", r_plus[i - 1],
                      tuple(range(p + 1, n + 1)), tuple(range(1, i + 1)),
                      (i,))
    for i in range(1, n + 1):
        _minor_family(gens, prov, seen, entries, "R-", r_minus[i - 1],
                      tuple(range(1, p + 1)), tuple(range(1, i + 1)), (i,))
    return IdealPresentation(entries[0][0].ring, gens, prov)


def is_shuffled(clan, sigma):
    """Whether sigma sends pluses and left arc ends into 1..p and the
    rest into p+1..n."""
    if len(sigma) != clan.n:
        return False
    p = clan.p
    for pos0, c in enumerate(clan.word):
        low = c == "+" or (isinstance(c, int) and c > pos0)
        if low != (sigma[pos0] <= p):
            return False
    return True


def representative_flag_matrix(clan, sigma):
    """The 0/1 matrix whose columns span the distinguished flag: column
    i is e_{sigma(i)}, plus e_{sigma(j)} when i is the left end of an
    arc (i, j)."""
    if not is_shuffled(clan, sigma):
        raise ValueError("permutation is not shuffled for this clan")
    n = clan.n
    cols = []
    for pos0, c in enumerate(clan.word):
        col = [0] * n
        col[sigma[pos0] - 1] = 1
        if isinstance(c, int) and c > pos0:
            col[sigma[c] - 1] = 1
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def evaluate_at_matrix(poly, matrix):
    """Value of a z-polynomial at a constant matrix."""
    n = len(matrix)
    flat = [matrix[i][j] for i in range(n) for j in range(n)]
    return poly.eval_at(flat)


def vanishes_on(pres, matrix):
    return all(evaluate_at_matrix(g, matrix) == 0 for g in pres.generators)


def patch_matrix(beta):
    """The chart matrix for the clan's base point: the half-filled
    generic matrix of v(beta), bent by the arc unipotent."""
    n = beta.n
    ring = matrix_ring(n)
    v = perms.v_of_clan(beta)
    vinv = perms.inverse(v)
    m = [[None] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == v[j - 1]:
                m[i - 1][j - 1] = ring.one()
            elif j < vinv[i - 1]:
                m[i - 1][j - 1] = ring.var("z%d%d" % (i, j))
            else:
                m[i - 1][j - 1] = ring.zero()
    for (a, b) in beta.arcs():
        r = v[b]
        s = v[a]
        for c in range(n):
            m[r - 1][c] = m[r - 1][c] + m[s - 1][c]
    return m


def patch_ideal(gamma, beta):
    """The minor recipe of gamma, taken in the chart matrix of beta.
    Both clans must share (p, q)."""
    if (gamma.p, gamma.q) != (beta.p, beta.q):
        raise ValueError("clans live on different (p, q)")
    return _three_families(gamma, patch_matrix(beta))


def jacobian_rank_at_origin(pres):
    """Rank over Q of the generators' linear parts at z = 0."""
    from fractions import Fraction
    rows = []
    for g in pres.generators:
        lin = g.linear_part()
        if lin:
            rows.append(lin)
    rank = 0
    pivots = {}
    for lin in rows:
        row = {k: Fraction(c) for k, c in lin.items()}
        # elimination can introduce keys in pivot columns; re-check the lead
        while row:
            lead = min(row)
            if lead not in pivots:
                break
            piv = pivots[lead]
            factor = row[lead]
            for k, c in piv.items():
                s = row.get(k, 0) - factor * c
                if s:
                    row[k] = s
                elif k in row:
                    del row[k]
        if row:
            lead = min(row)
            inv = 1 / row[lead]
            pivots[lead] = {k: c * inv for k, c in row.items()}
            rank += 1
    return rank


def chart_dimension_at_origin(pres, n):
    """n*(n-1)/2 minus the Jacobian rank: the local dimension when the
    origin is a smooth point of the chart."""
    return n * (n - 1) // 2 - jacobian_rank_at_origin(pres)
