"""(p,q)-clans: signed partial matchings, weak order, and rank data.

A clan on n = p+q vertices assigns each vertex a '+', a '-', or a partner
vertex (arcs come in pairs).  Canonical text form writes arcs as repeated
labels numbered by left endpoint, e.g. "11+-" or "1212".
"""

from math import comb

_ARC_LABELS = "123456789abcdefghijklm"


class Clan:
    """Immutable clan; ``word`` holds '+'/'-' or the partner index (0-based)."""

    __slots__ = ("p", "q", "word", "_str")

    def __init__(self, p, q, word):
        self.p = p
        self.q = q
        self.word = tuple(word)
        self._str = None
        self._validate()

    def _validate(self):
        p, q, w = self.p, self.q, self.word
        if p < 0 or q < 0 or len(w) != p + q:
            raise ValueError("word length must be p+q")
        plus = minus = arcs = 0
        for i, c in enumerate(w):
            if c == "+":
                plus += 1
            elif c == "-":
                minus += 1
            else:
                if not isinstance(c, int) or not 0 <= c < len(w):
                    raise ValueError("bad entry %r" % (c,))
                if c == i or w[c] != i:
                    raise ValueError("arcs must come in matched pairs")
                if c > i:
                    arcs += 1
        if plus - minus != p - q:
            raise ValueError("sign counts violate p - q")
        if plus + minus + 2 * arcs != len(w):
            raise ValueError("inconsistent word")

    # -- basics --------------------------------------------------------

    @property
    def n(self):
        return self.p + self.q

    def __eq__(self, other):
        return (self.p, self.q, self.word) == (other.p, other.q, other.word)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.q, self.word))

    def __lt__(self, other):
        return str(self) < str(other)

    def __str__(self):
        if self._str is None:
            labels = {}
            out = []
            for i, c in enumerate(self.word):
                if c == "+" or c == "-":
                    out.append(c)
                elif i in labels:
                    out.append(labels[i])
                else:
                    lab = _ARC_LABELS[len(labels) // 2]
                    labels[i] = lab
                    labels[c] = lab
                    out.append(lab)
            self._str = "".join(out)
        return self._str

    def __repr__(self):
        return "Clan(%r, p=%d, q=%d)" % (str(self), self.p, self.q)

    def arcs(self):
        """Arc pairs (i, j) with i < j, 0-based, sorted by left endpoint."""
        return [(i, c) for i, c in enumerate(self.word)
                if isinstance(c, int) and c > i]

    def signs(self):
        return [(i, c) for i, c in enumerate(self.word) if isinstance(c, str)]

    def is_matchless(self):
        return not self.arcs()

    def is_noncrossing(self):
        a = self.arcs()
        for k, (i, j) in enumerate(a):
            for (s, t) in a[k + 1:]:
                if i < s < j < t:
                    return False
        return True

    # -- statistics ------------------------------------------------------

    def length(self):
        """Sum over arcs (i,j) of j - i - #{arcs (s,t): s < i < t < j}."""
        a = self.arcs()
        total = 0
        for (i, j) in a:
            inner = sum(1 for (s, t) in a if s < i < t < j)
            total += j - i - inner
        return total

    def dimension(self):
        return comb(self.p, 2) + comb(self.q, 2) + self.length()

    def plus_counts(self):
        """gamma(i;+) for i = 1..n: +'s and fully-contained arcs so far."""
        return self._prefix_counts("+")

    def minus_counts(self):
        return self._prefix_counts("-")

    def _prefix_counts(self, sign):
        # an arc counts only once both endpoints are inside the prefix
        out = []
        cnt = 0
        for i, c in enumerate(self.word):
            if c == sign or (isinstance(c, int) and c < i):
                cnt += 1
            out.append(cnt)
        return out

    def cross_counts(self):
        """gamma(i;j) = #{arcs with left end <= i < j < right end}, 1-based keys."""
        n = self.n
        a = self.arcs()
        out = {}
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                out[(i, j)] = sum(1 for (s, t) in a if s + 1 <= i and t + 1 > j)
        return out

    # -- sign flips and arc collapses -------------------------------------

    def negate(self):
        """Swap + and - keeping arcs; a (q,p)-clan."""
        w = tuple("-" if c == "+" else "+" if c == "-" else c
                  for c in self.word)
        return Clan(self.q, self.p, w)

    def hat(self):
        """Alias of negate, used in the lattice-path/flagging pipeline."""
        return self.negate()

    def tau_minus(self):
        """Replace left arc ends by '-' and right ends by '+' (non-crossing)."""
        return self._collapse("-", "+")

    def tau_plus(self):
        """Replace left arc ends by '+' and right ends by '-' (non-crossing)."""
        return self._collapse("+", "-")

    def _collapse(self, left, right):
        if not self.is_noncrossing():
            raise ValueError("arc collapse needs a non-crossing clan")
        w = [c if isinstance(c, str) else (left if c > i else right)
             for i, c in enumerate(self.word)]
        return Clan(self.p, self.q, w)


def parse_clan(text, p, q):
    """Parse canonical clan text like "11+-"; digits/letters pair arcs."""
    if len(text) != p + q:
        raise ValueError("clan text has length %d, expected %d"
                         % (len(text), p + q))
    first = {}
    word = [None] * len(text)
    for i, ch in enumerate(text):
        if ch == "+" or ch == "-":
            word[i] = ch
        elif ch in first:
            j = first.pop(ch)
            word[i] = j
            word[j] = i
        else:
            first[ch] = i
    if first:
        raise ValueError("unpaired arc labels: %s" % sorted(first))
    return Clan(p, q, word)


def enumerate_clans(p, q):
    """All (p,q)-clans, sorted by canonical string.

    Recursive placement at the leftmost free vertex: a '+', a '-', or an
    arc to a later free vertex.  Signs draw down the p and q budgets, an
    arc draws one from each.
    """
    n = p + q
    out = []
    word = [None] * n

    def place(start, plus_left, minus_left):
        i = start
        while i < n and word[i] is not None:
            i += 1
        if i == n:
            out.append(Clan(p, q, tuple(word)))
            return
        if plus_left:
            word[i] = "+"
            place(i + 1, plus_left - 1, minus_left)
            word[i] = None
        if minus_left:
            word[i] = "-"
            place(i + 1, plus_left, minus_left - 1)
            word[i] = None
        if plus_left and minus_left:
            for j in range(i + 1, n):
                if word[j] is None:
                    word[i], word[j] = j, i
                    place(i + 1, plus_left - 1, minus_left - 1)
                    word[i] = word[j] = None

    place(0, p, q)
    out.sort(key=str)
    return out


def clan_count(p, q):
    """Closed-form count: sum_k C(n,2k) (2k-1)!! C(n-2k, p-k)."""
    n = p + q
    total = 0
    for k in range(min(p, q) + 1):
        dfact = 1
        for m in range(2 * k - 1, 0, -2):
            dfact *= m
        total += comb(n, 2 * k) * dfact * comb(n - 2 * k, p - k)
    return total


def enumerate_matchless(p, q):
    return [c for c in enumerate_clans(p, q) if c.is_matchless()]


def _swap_positions(clan, i, j):
    """New clan with vertices i and j exchanged (0-based)."""
    w = list(clan.word)
    w[i], w[j] = w[j], w[i]
    # repoint partner references at the moved endpoints
    for k, c in enumerate(w):
        if isinstance(c, int):
            if c == i:
                w[k] = j
            elif c == j:
                w[k] = i
    return Clan(clan.p, clan.q, w)


def weak_cover(clan, i):
    """The clan s_i . clan when it covers, else None (i is 1-based).

    Cases: (b) opposite signs at i, i+1 become an arc; (a) the swap cases:
    sign before an arc end whose mate lies right of the pair, arc end with
    mate left of the pair before a sign, or two ends of different arcs
    with the left mate before the right mate.
    """
    n = clan.n
    if not 1 <= i <= n - 1:
        raise ValueError("index out of range")
    j, k = i - 1, i
    a, b = clan.word[j], clan.word[k]
    sa, sb = isinstance(a, str), isinstance(b, str)
    if sa and sb:
        if a != b:
            w = list(clan.word)
            w[j], w[k] = k, j
            return Clan(clan.p, clan.q, w)
        return None
    if sa and not sb:
        return _swap_positions(clan, j, k) if b > k else None
    if not sa and sb:
        return _swap_positions(clan, j, k) if a < j else None
    # both are arc ends; same arc when they point at each other
    if a == k:
        return None
    return _swap_positions(clan, j, k) if a < b else None


class WeakOrderGraph:
    """Weak order on (p,q)-clans, built by closure from the matchless ones."""

    def __init__(self, p, q):
        self.p = p
        self.q = q
        all_clans = enumerate_clans(p, q)
        by_level = {}
        edges = []
        seen = set()
        frontier = sorted(enumerate_matchless(p, q), key=str)
        level = 0
        while frontier:
            by_level[level] = frontier
            seen.update(frontier)
            nxt = set()
            for c in frontier:
                for i in range(1, p + q):
                    up = weak_cover(c, i)
                    if up is not None:
                        edges.append((c, i, up))
                        nxt.add(up)
            frontier = sorted(nxt, key=str)
            level += 1
        if len(seen) != len(all_clans):
            raise AssertionError("weak order closure missed some clans")
        self.by_level = by_level
        self.edges = sorted(edges, key=lambda e: (str(e[0]), e[1]))

    def nodes(self):
        return sorted((c for cs in self.by_level.values() for c in cs), key=str)

    def in_edges(self, clan):
        return [(c, i) for (c, i, up) in self.edges if up == clan]


def closure_leq(beta, gamma):
    """Rank-triple closure comparison; True when O_beta lies in the closure."""
    if (beta.p, beta.q) != (gamma.p, gamma.q):
        raise ValueError("clans must share (p, q)")
    for b, g in zip(beta.plus_counts(), gamma.plus_counts()):
        if b < g:
            return False
    for b, g in zip(beta.minus_counts(), gamma.minus_counts()):
        if b < g:
            return False
    bc = beta.cross_counts()
    gc = gamma.cross_counts()
    return all(bc[key] <= gc[key] for key in bc)


def lambda_partition(tau):
    """Lattice-path partition of a matchless clan: minuses right of each plus."""
    if not tau.is_matchless():
        raise ValueError("lambda is defined for matchless clans")
    word = tau.word
    out = []
    for i, c in enumerate(word):
        if c == "+":
            out.append(sum(1 for d in word[i + 1:] if d == "-"))
    return tuple(out)


def flagging(tau):
    """Positions (1-based) of the +'s of a matchless clan."""
    if not tau.is_matchless():
        raise ValueError("flagging is defined for matchless clans")
    return tuple(i + 1 for i, c in enumerate(tau.word) if c == "+")
