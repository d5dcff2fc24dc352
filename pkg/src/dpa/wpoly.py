"""Polynomials over exact fields in weighted graded rings.

A polynomial is a dict {exponent tuple: nonzero coefficient} attached to a
WeightedRing.  The ring carries one or more gradings (one weight vector for a
weighted projective space, two for P1 x P1).
"""
import itertools
import re
from math import gcd

from gmpy2 import mpq

from .field import (QQ, NFElem, is_scalar, field_of, common_field, embed, zeta_in,
                    cyclotomic_field, to_mpq, conductor_lcm)


class ParseError(ValueError):
    pass


class WeightedRing:
    def __init__(self, names, weights=None, gradings=None):
        self.names = tuple(names)
        self.n = len(self.names)
        if gradings is None:
            weights = tuple(weights) if weights is not None else (1,) * self.n
            gradings = (weights,)
        self.gradings = tuple(tuple(g) for g in gradings)
        self.weights = self.gradings[0] if len(self.gradings) == 1 else tuple(
            sum(g[i] for g in self.gradings) for i in range(self.n))
        self.index = {s: i for i, s in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, WeightedRing) and self.names == other.names and self.gradings == other.gradings

    def __hash__(self):
        return hash((self.names, self.gradings))

    def __repr__(self):
        return "WeightedRing(%s; %s)" % (",".join(self.names), self.gradings)

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return Poly(self, {(0,) * self.n: mpq(1)})

    def const(self, c):
        if not c:
            return self.zero
        return Poly(self, {(0,) * self.n: c})

    def var(self, i):
        if isinstance(i, str):
            i = self.index[i]
        e = [0] * self.n
        e[i] = 1
        return Poly(self, {tuple(e): mpq(1)})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def monomial(self, exps, c=1):
        return Poly(self, {tuple(exps): mpq(c) if is_scalar(c) else c})

    def degree_of(self, exps, grading=0):
        w = self.gradings[grading]
        return sum(a * b for a, b in zip(exps, w))

    def multidegree(self, exps):
        return tuple(sum(a * b for a, b in zip(exps, g)) for g in self.gradings)

    def monomials_of_degree(self, d):
        """Exponent tuples of (multi)degree d, in decreasing order."""
        if isinstance(d, int):
            d = (d,) if len(self.gradings) == 1 else None
            if d is None:
                raise ValueError("multigraded ring needs a multidegree")
        w = self.weights
        total = sum(d) if len(self.gradings) > 1 else d[0]
        out = []

        def rec(i, left, acc):
            if i == self.n - 1:
                if left % w[i] == 0:
                    out.append(tuple(acc + [left // w[i]]))
                return
            for a in range(left // w[i], -1, -1):
                rec(i + 1, left - a * w[i], acc + [a])

        if self.n == 0:
            return [()]
        rec(0, total, [])
        out = [e for e in out if self.multidegree(e) == tuple(d)]
        out.sort(key=self.order_key, reverse=True)
        return out

    def order_key(self, e):
        """Graded lexicographic by weighted degree then lexicographic."""
        return (self.degree_of(e) if len(self.gradings) == 1 else sum(self.multidegree(e)), e)

    def parse(self, text, conductor=None):
        return parse_poly(text, self, conductor)

    def poly(self, terms):
        return Poly(self, {tuple(k): v for k, v in terms.items() if v})


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- arithmetic
    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if is_scalar(other) or isinstance(other, NFElem):
            return self.ring.const(mpq(other) if is_scalar(other) else other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e)
            v = c if v is None else v + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, NFElem):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        t = {}
        n = self.ring.n
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                v = t.get(e)
                p = c1 * c2
                t[e] = p if v is None else v + p
        return Poly(self.ring, {e: c for e, c in t.items() if c})

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, NFElem):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            return self.scale(mpq(1) / mpq(other))
        if isinstance(other, NFElem):
            return self.scale(other.inverse())
        if isinstance(other, Poly) and other.is_constant():
            return self / other.constant_coeff()
        return NotImplemented

    def __pow__(self, k):
        r = self.ring.one
        b = self
        while k:
            if k & 1:
                r = r * b
            k >>= 1
            if k:
                b = b * b
        return r

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).terms == {}

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.n, mpq(0))

    def coeff(self, exps):
        return self.terms.get(tuple(exps), mpq(0))

    # -- structure
    def field(self):
        F = QQ
        for c in self.terms.values():
            F = common_field(F, field_of(c))
        return F

    def degree(self, grading=0):
        if not self.terms:
            return -1
        return max(self.ring.degree_of(e, grading) for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def multidegrees(self):
        return {self.ring.multidegree(e) for e in self.terms}

    def is_homogeneous(self):
        return len(self.multidegrees()) <= 1

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def variables(self):
        return sorted({i for e in self.terms for i, a in enumerate(e) if a})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.order_key(t[0]), reverse=True)

    def leading_term(self):
        return self.sorted_terms()[0]

    def monic(self):
        if not self.terms:
            return self
        c = self.leading_term()[1]
        return self.scale(1 / c if not isinstance(c, NFElem) else c.inverse())

    def normalize_scalar(self):
        """Scale so the leading coefficient (ring order) is 1."""
        return self.monic()

    def derivative(self, i):
        if isinstance(i, str):
            i = self.ring.index[i]
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return Poly(self.ring, t)

    def evaluate(self, point):
        s = 0
        pw = [dict() for _ in range(self.ring.n)]
        for e, c in self.terms.items():
            v = c
            for i, a in enumerate(e):
                if a:
                    pa = pw[i].get(a)
                    if pa is None:
                        pa = point[i] ** a
                        pw[i][a] = pa
                    v = v * pa
                    if not v:
                        break
            s = s + v
        return s

    def subs(self, images, ring=None):
        """Substitute images[i] (a Poly or a number) for variable i."""
        if isinstance(images, dict):
            full = []
            for i in range(self.ring.n):
                full.append(images.get(i, images.get(self.ring.names[i], self.ring.var(i))))
            images = full
        if ring is None:
            ring = next((im.ring for im in images if isinstance(im, Poly)), self.ring)
        images = [im if isinstance(im, Poly) else ring.const(im) for im in images]
        cache = [{0: ring.one, 1: images[i]} for i in range(len(images))]

        def power(i, a):
            c = cache[i]
            if a not in c:
                b = max(k for k in c if k < a)
                c[a] = power(i, b) * power(i, a - b)
            return c[a]

        out = {}
        for e, c in self.terms.items():
            term = None
            for i, a in enumerate(e):
                if a:
                    p = power(i, a)
                    term = p if term is None else term * p
            if term is None:
                term = ring.one
            for e2, c2 in term.terms.items():
                v = out.get(e2)
                p = c * c2
                out[e2] = p if v is None else v + p
        return Poly(ring, {e: c for e, c in out.items() if c})

    def change_ring(self, ring, index_map):
        """Move to another ring, sending variable i to variable index_map[i]."""
        t = {}
        for e, c in self.terms.items():
            e2 = [0] * ring.n
            for i, a in enumerate(e):
                if a:
                    e2[index_map[i]] += a
            t[tuple(e2)] = c
        return Poly(ring, t)

    def map_coeffs(self, f):
        return Poly(self.ring, {e: f(c) for e, c in self.terms.items() if f(c)})

    def to_field(self, F):
        return Poly(self.ring, {e: embed(c, F) for e, c in self.terms.items()})

    def __repr__(self):
        return format_poly(self)

    __str__ = __repr__


def format_poly(p):
    if not p.terms:
        return "0"
    parts = []
    names = p.ring.names
    for e, c in p.sorted_terms():
        mon = "*".join(names[i] if a == 1 else "%s^%d" % (names[i], a) for i, a in enumerate(e) if a)
        if isinstance(c, NFElem) and not c.is_rational():
            cs = "(%s)" % c
        else:
            cs = _rat_str(c.to_rational() if isinstance(c, NFElem) else c)
        if not mon:
            parts.append(cs)
        elif cs == "1":
            parts.append(mon)
        elif cs == "-1":
            parts.append("-" + mon)
        else:
            parts.append(cs + "*" + mon)
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


def _rat_str(c):
    c = mpq(c)
    if c.denominator == 1:
        return str(int(c.numerator))
    return "%d/%d" % (int(c.numerator), int(c.denominator))


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character at %d in %r" % (pos, text))
        num, ident, op = m.groups()
        if num is not None:
            toks.append(("num", num))
        elif ident is not None:
            toks.append(("id", ident))
        else:
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return toks


def zeta_conductor(text):
    m = 1
    for k in re.findall(r"zeta\s*\(\s*(\d+)\s*\)", text):
        m = conductor_lcm(m, int(k))
    return m


def parse_poly(text, ring, conductor=None):
    """Parse polynomial text: `^` powers, optional `*`, rationals, zeta(m)."""
    if conductor is None:
        conductor = zeta_conductor(text)
    F = cyclotomic_field(conductor)
    toks = _tokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else (None, None)

    def take():
        t = peek()
        pos[0] += 1
        return t

    def split_ident(name):
        if name in ring.index:
            return [name]
        # greedy split of concatenated variable names, e.g. "xy" -> x*y
        out = []
        s = name
        names = sorted(ring.names, key=len, reverse=True)
        while s:
            for v in names:
                if s.startswith(v):
                    out.append(v)
                    s = s[len(v):]
                    break
            else:
                raise ParseError("unknown variable %r" % name)
        return out

    def atom():
        kind, val = take()
        if kind == "num":
            return ring.const(to_mpq(val))
        if kind == "id":
            if val == "zeta":
                if take() != ("op", "("):
                    raise ParseError("zeta needs (m)")
                k, m = take()
                if k != "num" or take() != ("op", ")"):
                    raise ParseError("bad zeta(m)")
                return ring.const(zeta_in(F, int(m)) if int(m) > 2 else (mpq(-1) if int(m) == 2 else mpq(1)))
            r = ring.one
            for v in split_ident(val):
                r = r * ring.var(v)
            return r
        if (kind, val) == ("op", "("):
            e = expr()
            if take() != ("op", ")"):
                raise ParseError("missing )")
            return e
        raise ParseError("unexpected token %r" % (val,))

    def power():
        a = atom()
        while peek() == ("op", "^"):
            take()
            sign = 1
            if peek() == ("op", "-"):
                take()
                sign = -1
            k, v = take()
            if k != "num":
                raise ParseError("exponent must be an integer")
            e = int(v) * sign
            if e < 0:
                if not a.is_constant():
                    raise ParseError("negative power of a non-constant")
                c = a.constant_coeff()
                a = ring.const((1 / c if not isinstance(c, NFElem) else c.inverse()) ** (-e))
            else:
                a = a ** e
        return a

    def term():
        sign = 1
        while peek()[1] in ("+", "-") and peek()[0] == "op":
            if take()[1] == "-":
                sign = -sign
        r = power()
        while True:
            k, v = peek()
            if (k, v) == ("op", "*"):
                take()
                r = r * power()
            elif (k, v) == ("op", "/"):
                take()
                d = power()
                if not d.is_constant() or not d.constant_coeff():
                    raise ParseError("division by a non-constant")
                r = r / d.constant_coeff()
            elif k in ("num", "id") or (k, v) == ("op", "("):
                r = r * power()
            else:
                break
        return -r if sign < 0 else r

    def expr():
        r = term()
        while peek()[0] == "op" and peek()[1] in ("+", "-"):
            if peek()[1] == "+":
                take()
                r = r + term()
            else:
                r = r + term()  # term() consumes the sign
        return r

    if not toks:
        raise ParseError("empty polynomial")
    res = expr()
    if pos[0] != len(toks):
        raise ParseError("trailing input in %r" % text)
    return res


def parse_number(text, conductor=None):
    ring = WeightedRing(())
    p = parse_poly(text, ring, conductor)
    return p.constant_coeff()


def graded_basis(ring, d):
    return ring.monomials_of_degree(d)


def homogenize_check(p):
    if not p.is_homogeneous():
        raise ValueError("polynomial is not (weighted) homogeneous: %s" % p)
    return p
