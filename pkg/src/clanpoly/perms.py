"""Permutation combinatorics: codes, diagrams, Bruhat order, clan labelings.

Permutations are tuples of 1-based images, w[i-1] = w(i).  Composition is
functional: multiply(u, v)(i) = u(v(i)), so multiply(w, s_i) swaps the
entries of w in positions i, i+1.
"""

from itertools import permutations as _itertools_perms


def identity(n):
    return tuple(range(1, n + 1))


def long_element(n):
    return tuple(range(n, 0, -1))


def perm_length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def code(w):
    """Lehmer code: c_i = #{j > i : w(j) < w(i)}."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i])
                 for i in range(n))


def perm_from_code(c):
    """Inverse of code.  The result lives in the smallest S_n that fits,
    at least S_len(c)."""
    n = len(c)
    for i, ci in enumerate(c, start=1):
        n = max(n, i + ci)
    padded = list(c) + [0] * (n - len(c))
    avail = list(range(1, n + 1))
    return tuple(avail.pop(ci) for ci in padded)


def descents(w):
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def multiply(u, v):
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w):
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def simple_transposition(n, i):
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def rothe_diagram(w):
    """Cells (i,j), 1-based, with w(i) > j and w^{-1}(j) > i."""
    wi = inverse(w)
    n = len(w)
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
            if w[i - 1] > j and wi[j - 1] > i}


def essential_set(w):
    """Southeast-maximal cells of the Rothe diagram."""
    d = rothe_diagram(w)
    return {(i, j) for (i, j) in d
            if (i + 1, j) not in d and (i, j + 1) not in d}


def is_vexillary(w):
    n = len(w)
    for b in range(1, n):
        for a in range(b):
            if w[a] <= w[b]:
                continue
            # w(a) > w(b): hunt for c < d right of b with
            # w(b) < w(a) < w(d) < w(c)
            for c in range(b + 1, n):
                if w[c] <= w[a]:
                    continue
                for d in range(c + 1, n):
                    if w[a] < w[d] < w[c]:
                        return False
    return True


def rank_matrix(w):
    n = len(w)
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            r[i][j] = r[i - 1][j] + (1 if w[i - 1] <= j else 0)
    return r


def bruhat_leq(v, w):
    """v <= w in strong Bruhat order, by rank-matrix dominance."""
    if len(v) != len(w):
        raise ValueError("permutations live in different symmetric groups")
    rv, rw = rank_matrix(v), rank_matrix(w)
    n = len(v)
    return all(rv[i][j] >= rw[i][j]
               for i in range(1, n + 1) for j in range(1, n + 1))


def reduced_word(w):
    """One reduced word (i_1,...,i_m) with w = s_{i_1} s_{i_2} ... s_{i_m},
    built by stripping the smallest descent."""
    cur = list(w)
    rev = []
    while True:
        for i in range(1, len(cur)):
            if cur[i - 1] > cur[i]:
                rev.append(i)
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
                break
        else:
            break
    return tuple(reversed(rev))


def strip_fixed(w):
    """Drop trailing fixed points, keeping at least one entry."""
    m = len(w)
    while m > 1 and w[m - 1] == m:
        m -= 1
    return w[:m]


def all_perms(n):
    return [tuple(p) for p in _itertools_perms(range(1, n + 1))]


def parse_perm(text):
    if "," in text:
        w = tuple(int(part) for part in text.split(","))
    else:
        w = tuple(int(ch) for ch in text)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("not a permutation: %r" % (text,))
    return w


def render_perm(w):
    if len(w) > 9:
        return ",".join(str(v) for v in w)
    return "".join(str(v) for v in w)


def u_of_clan(clan):
    """Left-to-right labeling: minus signs and left arc ends take 1..q,
    plus signs and right arc ends take q+1..n."""
    return _label(clan, low_chars="-", low_end="left")


def v_of_clan(clan):
    """Left-to-right labeling: plus signs and left arc ends take 1..p,
    minus signs and right arc ends take p+1..n."""
    return _label(clan, low_chars="+", low_end="left")


def _label(clan, low_chars, low_end):
    n = clan.n
    left_ends = {i for (i, j) in clan.arcs()}
    low = []
    for i in range(n):
        c = clan.word[i]
        if isinstance(c, str):
            if c in low_chars:
                low.append(i)
        elif (i in left_ends) == (low_end == "left"):
            low.append(i)
    out = [0] * n
    next_label = 1
    for i in low:
        out[i] = next_label
        next_label += 1
    for i in range(n):
        if not out[i]:
            out[i] = next_label
            next_label += 1
    return tuple(out)
