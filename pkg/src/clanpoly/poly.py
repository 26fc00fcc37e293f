"""Sparse exact polynomials in x_1..x_n, y_1..y_n (Laurent in y), and b.

Coefficients are arbitrary-precision ints.  A monomial is packed into a
single int, eight bits per exponent field, in the field order
x_1..x_n, y_1..y_n, b.  Monomial multiplication is then a single integer
addition.  The y fields carry an offset of 64 so that Laurent (negative)
y exponents stay representable; x and b exponents must be nonnegative.
"""

from fractions import Fraction

_W = 8
_MASK = 0xFF
_YOFF = 64

_ZERO_KEYS = {}


def _zero_key(n):
    # key encoding the monomial 1: offset bits in every y field
    key = _ZERO_KEYS.get(n)
    if key is None:
        key = 0
        for f in range(n, 2 * n):
            key |= _YOFF << (_W * f)
        _ZERO_KEYS[n] = key
    return key


def _decode(key, n):
    """Unpack a key into (x exponents, y exponents, b exponent)."""
    xs = tuple((key >> (_W * f)) & _MASK for f in range(n))
    ys = tuple(((key >> (_W * f)) & _MASK) - _YOFF for f in range(n, 2 * n))
    b = (key >> (_W * 2 * n)) & _MASK
    return xs, ys, b


def _encode(n, xs, ys, b):
    key = 0
    for f, e in enumerate(xs):
        if e < 0:
            raise ValueError("negative x exponent")
        key |= e << (_W * f)
    for f, e in enumerate(ys):
        if not -_YOFF <= e < _MASK - _YOFF:
            raise ValueError("y exponent out of range")
        key |= (e + _YOFF) << (_W * (n + f))
    if b < 0:
        raise ValueError("negative b exponent")
    key |= b << (_W * 2 * n)
    return key


def _grade(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Poly:
    """Immutable-by-convention sparse polynomial.

    ``terms`` maps packed monomial keys to nonzero int coefficients.
    Construct through the classmethods; arithmetic returns new instances.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        self.n = n
        self.terms = terms

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def const(cls, n, c):
        if c == 0:
            return cls(n, {})
        return cls(n, {_zero_key(n): c})

    @classmethod
    def one(cls, n):
        return cls.const(n, 1)

    @classmethod
    def x(cls, n, i):
        """The variable x_i, 1-indexed."""
        if not 1 <= i <= n:
            raise ValueError("x index out of range")
        return cls(n, {_zero_key(n) + (1 << (_W * (i - 1))): 1})

    @classmethod
    def y(cls, n, j, power=1):
        if not 1 <= j <= n:
            raise ValueError("y index out of range")
        return cls(n, {_zero_key(n) + (power << (_W * (n + j - 1))): 1})

    @classmethod
    def beta(cls, n):
        return cls(n, {_zero_key(n) + (1 << (_W * 2 * n)): 1})

    @classmethod
    def monomial(cls, n, xs, ys, b, coeff=1):
        if coeff == 0:
            return cls(n, {})
        return cls(n, {_encode(n, xs, ys, b): coeff})

    # -- basics ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Poly.const(self.n, other)
        return self.n == other.n and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def fingerprint(self):
        """Hashable canonical form, for dedup sets."""
        return (self.n, tuple(sorted(self.terms.items())))

    def num_terms(self):
        return len(self.terms)

    def constant_term(self):
        return self.terms.get(_zero_key(self.n), 0)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.n, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return Poly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.n, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return Poly(self.n, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly.zero(self.n)
            return Poly(self.n, {k: c * other for k, c in self.terms.items()})
        zero = _zero_key(self.n)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for k1, c1 in a.items():
            base = k1 - zero
            for k2, c2 in b.items():
                k = base + k2
                s = get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return Poly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        out = Poly.one(self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # -- divided differences -----------------------------------------

    def divided_difference(self, i):
        """(f - f with x_i,x_{i+1} swapped) / (x_i - x_{i+1}), exactly.

        Works monomial by monomial through the telescoping identity
        (u^a v^c - u^c v^a)/(u - v) = sum_{t=c}^{a-1} u^t v^{a+c-1-t}
        for a > c, so no polynomial division happens.
        """
        if not 1 <= i <= self.n - 1:
            raise ValueError("divided difference index out of range")
        sh1 = _W * (i - 1)
        sh2 = _W * i
        out = {}
        get = out.get
        for key, c in self.terms.items():
            a = (key >> sh1) & _MASK
            b = (key >> sh2) & _MASK
            if a == b:
                continue
            if a > b:
                lo, hi, cc = b, a, c
            else:
                lo, hi, cc = a, b, -c
            base = key - (a << sh1) - (b << sh2)
            s = lo + hi - 1
            for t in range(lo, hi):
                k = base + (t << sh1) + ((s - t) << sh2)
                v = get(k, 0) + cc
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Poly(self.n, out)

    def beta_divided_difference(self, i):
        """Divided difference of (1 - b*x_{i+1}) * f."""
        if not 1 <= i <= self.n - 1:
            raise ValueError("divided difference index out of range")
        shift = (1 << (_W * i)) + (1 << (_W * 2 * self.n))
        g = dict(self.terms)
        get = g.get
        for key, c in self.terms.items():
            k = key + shift
            v = get(k, 0) - c
            if v:
                g[k] = v
            else:
                del g[k]
        return Poly(self.n, g).divided_difference(i)

    # -- substitutions -----------------------------------------------

    def set_beta(self, value):
        """Specialize b to 0 or 1."""
        n = self.n
        shb = _W * 2 * n
        maskb = _MASK << shb
        if value == 0:
            return Poly(n, {k: c for k, c in self.terms.items()
                            if not (k & maskb)})
        if value == 1:
            out = {}
            get = out.get
            for k, c in self.terms.items():
                k2 = k & ~maskb
                v = get(k2, 0) + c
                if v:
                    out[k2] = v
                else:
                    del out[k2]
            return Poly(n, out)
        raise ValueError("b specializes to 0 or 1 only")

    def set_y_zero(self):
        """Specialize every y_j to 0; rejects Laurent terms."""
        n = self.n
        zero = _zero_key(n)
        ymask = 0
        for f in range(n, 2 * n):
            ymask |= _MASK << (_W * f)
        yzero = zero & ymask
        out = {}
        for k, c in self.terms.items():
            part = k & ymask
            if part == yzero:
                out[k] = c
            else:
                for f in range(n, 2 * n):
                    if ((k >> (_W * f)) & _MASK) < _YOFF:
                        raise ValueError("y -> 0 hits a negative exponent")
        return Poly(n, out)

    def set_y_one(self):
        """Specialize every y_j to 1."""
        n = self.n
        ymask = 0
        for f in range(n, 2 * n):
            ymask |= _MASK << (_W * f)
        yzero = _zero_key(n) & ymask
        out = {}
        get = out.get
        for k, c in self.terms.items():
            k2 = (k & ~ymask) | yzero
            v = get(k2, 0) + c
            if v:
                out[k2] = v
            else:
                del out[k2]
        return Poly(n, out)

    def reverse_y(self):
        """Substitute y_j -> y_{n+1-j}."""
        n = self.n
        out = {}
        get = out.get
        for k, c in self.terms.items():
            xs, ys, b = _decode(k, n)
            k2 = _encode(n, xs, ys[::-1], b)
            v = get(k2, 0) + c
            if v:
                out[k2] = v
            else:
                del out[k2]
        return Poly(n, out)

    def eval_x_at_perm(self, sigma):
        """Substitute x_i -> y_{sigma(i)}; sigma in one-line notation."""
        n = self.n
        out = {}
        get = out.get
        for k, c in self.terms.items():
            xs, ys, b = _decode(k, n)
            ys = list(ys)
            for i, e in enumerate(xs):
                if e:
                    ys[sigma[i] - 1] += e
            k2 = _encode(n, (0,) * n, ys, b)
            v = get(k2, 0) + c
            if v:
                out[k2] = v
            else:
                del out[k2]
        return Poly(n, out)

    def substitute(self, rules):
        """Substitute variables by Poly values.

        ``rules`` maps names like "x1", "y3", "b" to Poly values.  A
        variable occurring with a negative exponent needs an invertible
        (single-term, coefficient +-1) value; anything else raises, since
        the result would leave the Laurent ring.
        """
        n = self.n
        idx = {}
        for name, val in rules.items():
            if val.n != n:
                raise ValueError("substitution value in wrong ring")
            if name == "b":
                idx[2 * n] = val
            elif name[0] == "x":
                idx[int(name[1:]) - 1] = val
            elif name[0] == "y":
                idx[n + int(name[1:]) - 1] = val
            else:
                raise ValueError("unknown variable %r" % name)
        pow_cache = {}

        def power(f, e):
            val = pow_cache.get((f, e))
            if val is None:
                base = idx[f]
                if e >= 0:
                    val = base ** e
                else:
                    if len(base.terms) != 1:
                        raise ValueError("non-monomial value at negative exponent")
                    (bk, bc), = base.terms.items()
                    bxs, bys, bb = _decode(bk, n)
                    if bc not in (1, -1) or any(bxs) or bb:
                        raise ValueError("value not invertible in the Laurent ring")
                    inv = _encode(n, bxs, tuple(-v for v in bys), 0)
                    val = Poly(n, {inv: bc}) ** (-e)
                pow_cache[(f, e)] = val
            return val

        total = Poly.zero(n)
        for k, c in self.terms.items():
            xs, ys, b = _decode(k, n)
            exps = list(xs) + list(ys) + [b]
            rest_key = _zero_key(n)
            factors = []
            for f, e in enumerate(exps):
                if not e:
                    continue
                if f in idx:
                    factors.append(power(f, e))
                else:
                    # offsets are already baked into rest_key
                    rest_key += e << (_W * f)
            term = Poly(n, {rest_key: c})
            for fac in factors:
                term = term * fac
            total = total + term
        return total

    def k_substitute(self):
        """Substitute x_i -> 1 - x_i and y_j -> (1 - y_j)/y_j."""
        n = self.n
        rules = {}
        for i in range(1, n + 1):
            rules["x%d" % i] = Poly.one(n) - Poly.x(n, i)
            rules["y%d" % i] = Poly.y(n, i, -1) - Poly.one(n)
        return self.substitute(rules)

    # -- inspection --------------------------------------------------

    def deg_x(self):
        """Total degree in the x variables; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        n = self.n
        best = 0
        for k in self.terms:
            d = 0
            for f in range(n):
                d += (k >> (_W * f)) & _MASK
            if d > best:
                best = d
        return best

    def has_negative_coeff(self):
        return any(c < 0 for c in self.terms.values())

    def x_only(self):
        """True when no y or b variable occurs."""
        n = self.n
        tail = _zero_key(n)
        xmask = (1 << (_W * n)) - 1
        return all((k | xmask) == (tail | xmask) for k in self.terms)

    def within_staircase(self):
        """True if every x exponent vector is <= (n-1, n-2, ..., 0)."""
        n = self.n
        for k in self.terms:
            for f in range(n):
                if ((k >> (_W * f)) & _MASK) > n - 1 - f:
                    return False
        return True

    def min_x_monomial_grevlex(self):
        """Grevlex-minimal x monomial and its coefficient (x-only polys)."""
        if not self.terms:
            raise ValueError("zero polynomial")
        if not self.x_only():
            raise ValueError("not an x-only polynomial")
        n = self.n
        best = None
        best_key = None
        for k, c in self.terms.items():
            xs = tuple((k >> (_W * f)) & _MASK for f in range(n))
            g = _grade(xs)
            if best is None or g < best:
                best = g
                best_key = (xs, c)
        return best_key

    def coefficient_of(self, xs, ys, b):
        return self.terms.get(_encode(self.n, xs, ys, b), 0)

    def items(self):
        """Unordered terms as ((xs, ys, b), coeff)."""
        n = self.n
        return [(_decode(k, n), c) for k, c in self.terms.items()]

    def beta_layer(self, k):
        """Terms whose b exponent is exactly k, with the b factor
        stripped off."""
        n = self.n
        sh = _W * 2 * n
        out = {}
        for key, c in self.terms.items():
            if (key >> sh) == k:
                out[key - (k << sh)] = c
        return Poly(n, out)

    def extend(self, m):
        """Re-encode into a larger variable universe."""
        if m < self.n:
            raise ValueError("cannot shrink the universe")
        if m == self.n:
            return self
        pad = (0,) * (m - self.n)
        out = {}
        for (xs, ys, b), c in self.items():
            out[_encode(m, xs + pad, ys + pad, b)] = c
        return Poly(m, out)

    def evaluate(self, xs, ys, b):
        """Exact evaluation; Fractions keep Laurent terms exact."""
        n = self.n
        total = Fraction(0)
        for k, c in self.terms.items():
            xe, ye, be = _decode(k, n)
            v = Fraction(c)
            for e, val in zip(xe, xs):
                if e:
                    v *= Fraction(val) ** e
            for e, val in zip(ye, ys):
                if e:
                    v *= Fraction(val) ** e
            if be:
                v *= Fraction(b) ** be
            total += v
        return total

    # -- serialization -----------------------------------------------

    def sorted_terms(self):
        """Terms as ((xs, ys, b), coeff), leading term first."""
        n = self.n
        decorated = []
        for k, c in self.terms.items():
            xs, ys, b = _decode(k, n)
            decorated.append(((_grade(xs), _grade(ys), b), (xs, ys, b), c))
        decorated.sort(key=lambda t: t[0], reverse=True)
        return [(mono, c) for _, mono, c in decorated]

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (xs, ys, b), c in self.sorted_terms():
            vars_ = []
            for i, e in enumerate(xs):
                if e:
                    vars_.append("x%d" % (i + 1) + ("^%d" % e if e != 1 else ""))
            for j, e in enumerate(ys):
                if e:
                    vars_.append("y%d" % (j + 1) + ("^%d" % e if e != 1 else ""))
            if b:
                vars_.append("b" + ("^%d" % b if b != 1 else ""))
            mag = abs(c)
            if not vars_:
                body = str(mag)
            elif mag == 1:
                body = "*".join(vars_)
            else:
                body = str(mag) + "*" + "*".join(vars_)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        s = str(self)
        if len(s) > 60:
            s = s[:57] + "..."
        return "Poly(n=%d, %s)" % (self.n, s)
