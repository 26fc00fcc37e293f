"""Sparse polynomials in the matrix coordinates z_ij.

Separate from the x/y/beta polynomials on purpose: Groebner work needs
per-variable exponents and rational scaling, so terms are keyed by
exponent tuples and coefficients may be ints or Fractions.  Everything
is exact; nothing here ever floats.
"""

from fractions import Fraction


class ZRing:
    """A fixed tuple of variable names.  Polynomials carry their ring
    and refuse to mix with another one."""

    def __init__(self, names):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {nm: k for k, nm in enumerate(self.names)}
        self.nvars = len(self.names)
        self._zero_exps = (0,) * self.nvars

    def zero(self):
        return ZPoly(self, {})

    def const(self, c):
        if not c:
            return self.zero()
        return ZPoly(self, {self._zero_exps: c})

    def one(self):
        return self.const(1)

    def var(self, name):
        k = self.index[name]
        e = [0] * self.nvars
        e[k] = 1
        return ZPoly(self, {tuple(e): 1})

    def monomial(self, exps, c=1):
        if len(exps) != self.nvars:
            raise ValueError("exponent length mismatch")
        if not c:
            return self.zero()
        return ZPoly(self, {tuple(exps): c})

    def __eq__(self, other):
        return isinstance(other, ZRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "ZRing(%d vars)" % self.nvars


_MATRIX_RINGS = {}


def matrix_ring(n):
    """The ring of an n x n generic matrix, variables z11..znn in
    row-major order.  Single-digit indices keep names unambiguous."""
    if n > 9:
        raise ValueError("matrix ring capped at 9x9 for unambiguous names")
    if n not in _MATRIX_RINGS:
        names = ["z%d%d" % (i, j)
                 for i in range(1, n + 1) for j in range(1, n + 1)]
        _MATRIX_RINGS[n] = ZRing(names)
    return _MATRIX_RINGS[n]


class ZPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or \
            (len(self.terms) == 1 and self.ring._zero_exps in self.terms)

    def constant_term(self):
        return self.terms.get(self.ring._zero_exps, 0)

    def num_terms(self):
        return len(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def fingerprint(self):
        return (self.ring.names, tuple(sorted(self.terms.items())))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return self.ring == other.ring and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        if self.ring != other.ring:
            raise ValueError("mixed rings")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return ZPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return ZPoly(self.ring,
                         {e: c * other for e, c in self.terms.items()})
        if self.ring != other.ring:
            raise ValueError("mixed rings")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(sum, zip(e1, e2)))
                s = get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return ZPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        """Multiply by a Fraction (or int) exactly."""
        return self * c

    # -- structure ----------------------------------------------------

    def monomials(self):
        """Exponent tuples, unordered."""
        return list(self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def linear_part(self):
        """{variable index: coefficient} of the degree-1 terms."""
        out = {}
        for e, c in self.terms.items():
            if sum(e) == 1:
                out[e.index(1)] = c
        return out

    def eval_at(self, values):
        """Evaluate at a full vector of values indexed like ring.names."""
        if len(values) != self.ring.nvars:
            raise ValueError("value vector length mismatch")
        total = 0
        for e, c in self.terms.items():
            v = c
            for k, ek in enumerate(e):
                if ek:
                    v *= values[k] ** ek
            total += v
        return total

    def substitute_vars(self, mapping):
        """Replace variables by polynomials; mapping is {index: ZPoly}.
        Unmapped variables stay themselves."""
        ring = self.ring
        cache = {}
        out = ring.zero()
        for e, c in self.terms.items():
            term = ring.const(c)
            for k, ek in enumerate(e):
                if not ek:
                    continue
                if k in mapping:
                    key = (k, ek)
                    if key not in cache:
                        cache[key] = mapping[k] ** ek
                    term = term * cache[key]
                else:
                    mono = [0] * ring.nvars
                    mono[k] = ek
                    term = term * ring.monomial(mono)
            out = out + term
        return out

    def integerized(self):
        """Clear denominators and content: the primitive integer form
        with the same sign as the leading-by-lex coefficient."""
        if not self.terms:
            return self
        from math import gcd
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        g = 0
        ints = {}
        for e, c in self.terms.items():
            v = int(c * den)
            ints[e] = v
            g = gcd(g, abs(v))
        lead = max(ints)
        sign = 1 if ints[lead] > 0 else -1
        return ZPoly(self.ring, {e: sign * v // g for e, v in ints.items()})

    # -- display ------------------------------------------------------

    def _render_monomial(self, e):
        parts = []
        for k, ek in enumerate(e):
            if ek == 1:
                parts.append(self.ring.names[k])
            elif ek > 1:
                parts.append("%s^%d" % (self.ring.names[k], ek))
        return "*".join(parts) if parts else "1"

    def sorted_terms(self):
        """Deterministic order: total degree descending, then exponent
        tuple descending (a graded-lex reading order)."""
        return sorted(self.terms.items(),
                      key=lambda ec: (-sum(ec[0]), tuple(-x for x in ec[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = self._render_monomial(e)
            if mono == "1":
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = "%s*%s" % (c, mono)
            if chunks and not body.startswith("-"):
                chunks.append("+" + body)
            else:
                chunks.append(body)
        return "".join(chunks)

    def __repr__(self):
        return "ZPoly(%s)" % self


def det(entries):
    """Determinant of a square grid of ZPoly entries, by column-subset
    Laplace expansion with memoization.  Zero entries are skipped, so
    sparse structured matrices stay cheap."""
    k = len(entries)
    if k == 0:
        raise ValueError("empty matrix")
    ring = None
    for row in entries:
        if len(row) != k:
            raise ValueError("matrix not square")
        for f in row:
            if ring is None:
                ring = f.ring
            elif f.ring != ring:
                raise ValueError("mixed rings")
    memo = {}

    def expand(cols):
        if not cols:
            return ring.one()
        if cols in memo:
            return memo[cols]
        r = k - len(cols)
        acc = ring.zero()
        for idx, c in enumerate(cols):
            f = entries[r][c]
            if f.is_zero():
                continue
            sub = expand(cols[:idx] + cols[idx + 1:])
            if sub.is_zero():
                continue
            piece = f * sub
            acc = acc + piece if idx % 2 == 0 else acc - piece
        memo[cols] = acc
        return acc

    return expand(tuple(range(k)))
