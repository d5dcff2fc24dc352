"""Exact arithmetic: rationals, cyclotomic fields and simple algebraic extensions.

Rationals are gmpy2.mpq.  An element of a simple extension F = B[a]/(m(a)) is a
coefficient tuple over the base field B, reduced modulo the monic modulus m.
Cyclotomic fields Q(zeta_m) are the extensions of Q by the m-th cyclotomic
polynomial.  Towers are allowed internally; the public helper `extend_field`
only ever builds one extension on top of a cyclotomic field.
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpq, mpz


class FieldError(Exception):
    pass


class ExtensionRequired(FieldError):
    """A computation needs roots of `factor` which do not lie in `field`."""

    def __init__(self, factor, field, msg=None):
        self.factor = factor
        self.field = field
        super().__init__(msg or "extension required: irreducible factor of degree %d over %s"
                         % (len(factor) - 1, field))


class NotIrreducible(FieldError):
    pass


class IrreducibilityUnknown(FieldError):
    pass


class IncompatibleFields(FieldError):
    pass


def to_mpq(x):
    if isinstance(x, str):
        x = x.strip()
        if "/" in x:
            p, q = x.split("/")
            return mpq(int(p), int(q))
        if "." in x:
            return mpq(Fraction(x))
        return mpq(int(x))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class RationalField:
    degree = 1
    base = None
    name = "QQ"
    conductor = 1

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, x):
        if isinstance(x, NFElem):
            if x.is_rational():
                return x.to_rational()
            raise IncompatibleFields("%s is not rational" % (x,))
        return to_mpq(x)

    def tower(self):
        return [self]

    def absolute_degree(self):
        return 1

    def is_extension(self):
        return False

    def cyclotomic_base(self):
        return self

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_get_qq, ())


QQ = RationalField()


def _get_qq():
    return QQ


def is_scalar(x):
    return isinstance(x, (int, type(mpq(0)), Fraction, type(mpz(0))))


def field_of(x):
    if isinstance(x, NFElem):
        return x.field
    return QQ


def common_field(F1, F2):
    if F1 is F2:
        return F1
    if F1 in F2.tower():
        return F2
    if F2 in F1.tower():
        return F1
    # cyclotomic fields sit inside one another via zeta_m -> zeta_M^(M/m)
    if F1.conductor is not None and F2.conductor is not None and F1.base is QQ and F2.base is QQ:
        return cyclotomic_field(conductor_lcm(F1.conductor, F2.conductor))
    for A, B in ((F1, F2), (F2, F1)):
        if A.conductor is not None and A.base is QQ and B is not QQ and _has_zeta(B, A.conductor):
            return B
    raise IncompatibleFields("no common field for %s and %s" % (F1, F2))


def embed(x, F):
    """Embed x (element of a subfield of F) into F."""
    if isinstance(x, NFElem):
        if x.field is F:
            return x
        if F is not QQ and x.field not in F.tower():
            return _embed_cyclotomic(x, F)
    if F is QQ:
        return QQ(x)
    b = embed(x, F.base)
    return NFElem(F, (b,) + (F.base.zero,) * (F.degree - 1))


def _has_zeta(F, m):
    try:
        zeta_in(F, m)
    except FieldError:
        return False
    return True


def _embed_cyclotomic(x, F):
    E = x.field
    if E.conductor is None or E.base is not QQ:
        raise IncompatibleFields("cannot embed %s into %s" % (E, F))
    z = zeta_in(F, E.conductor)
    r = F.zero
    p = F.one
    for c in x.c:
        if c:
            r = r + p * c
        p = p * z
    return r


def coerce_all(values, F=None):
    """Bring a list of numbers into their common field."""
    for v in values:
        G = field_of(v)
        F = G if F is None else common_field(F, G)
    if F is None:
        F = QQ
    return [embed(v, F) for v in values], F


class NumberField:
    """Simple extension base[a]/(modulus(a)); modulus is a monic list low->high."""

    def __init__(self, base, modulus, name="a", conductor=None):
        modulus = [embed(c, base) for c in modulus]
        lc = modulus[-1]
        if lc != base.one:
            inv = base.one / lc
            modulus = [c * inv for c in modulus]
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        if self.degree < 1:
            raise FieldError("modulus must have positive degree")
        self.name = name
        self.conductor = conductor
        self._neg_mod = [(j, -c) for j, c in enumerate(modulus[:-1]) if c]
        bz = base.zero
        self.zero = NFElem(self, (bz,) * self.degree)
        self.one = NFElem(self, (base.one,) + (bz,) * (self.degree - 1))
        if self.degree > 1:
            self.gen = NFElem(self, (bz, base.one) + (bz,) * (self.degree - 2))
        else:
            self.gen = NFElem(self, (-self.modulus[0],))
        self._tower = base.tower() + [self]

    def __call__(self, x):
        return embed(x, self) if not isinstance(x, str) else embed(to_mpq(x), self)

    def from_coeffs(self, coeffs):
        coeffs = [embed(c, self.base) for c in coeffs]
        return NFElem(self, tuple(self._reduce(coeffs)))

    def _reduce(self, c):
        d = self.degree
        c = list(c)
        bz = self.base.zero
        if len(c) < d:
            c.extend([bz] * (d - len(c)))
        for k in range(len(c) - 1, d - 1, -1):
            ck = c[k]
            if ck:
                off = k - d
                for j, mj in self._neg_mod:
                    c[off + j] = c[off + j] + ck * mj
        return c[:d]

    def tower(self):
        return self._tower

    def absolute_degree(self):
        return self.degree * self.base.absolute_degree()

    def is_extension(self):
        return self.conductor is None

    def cyclotomic_base(self):
        F = self
        while F.conductor is None:
            F = F.base
        return F

    def zeta(self, k=1):
        if self.conductor is None:
            return self.base.zeta(k)
        return self.gen ** (k % self.conductor)

    def __repr__(self):
        if self.conductor is not None:
            return "Q(zeta%d)" % self.conductor
        return "%s[%s]/(%s)" % (self.base, self.name, _poly_str(self.modulus, self.name))


def _poly_str(coeffs, var):
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mon = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
        cs = str(c)
        if mon == "":
            parts.append(cs if not isinstance(c, NFElem) or c.is_rational() else "(%s)" % cs)
        elif cs == "1":
            parts.append(mon)
        elif cs == "-1":
            parts.append("-" + mon)
        else:
            if isinstance(c, NFElem) and not c.is_rational():
                cs = "(%s)" % cs
            parts.append("%s*%s" % (cs, mon))
    if not parts:
        return "0"
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


class NFElem:
    __slots__ = ("field", "c", "_h")

    def __init__(self, field, c):
        self.field = field
        self.c = c
        self._h = None

    def _other(self, other):
        if isinstance(other, NFElem):
            if other.field is self.field:
                return self, other
            F = common_field(self.field, other.field)
            return embed(self, F), embed(other, F)
        if is_scalar(other):
            return self, embed(mpq(other), self.field)
        return None, None

    def __add__(self, other):
        a, b = self._other(other)
        if a is None:
            return NotImplemented
        return NFElem(a.field, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._other(other)
        if a is None:
            return NotImplemented
        return NFElem(a.field, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        a, b = self._other(other)
        if a is None:
            return NotImplemented
        return NFElem(a.field, tuple(y - x for x, y in zip(a.c, b.c)))

    def __neg__(self):
        return NFElem(self.field, tuple(-x for x in self.c))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if is_scalar(other):
            o = mpq(other)
            return NFElem(self.field, tuple(x * o for x in self.c))
        if not isinstance(other, NFElem):
            return NotImplemented
        if other.field is not self.field:
            F = common_field(self.field, other.field)
            if F is self.field and other.field in F.tower():
                # other lives in a proper subfield: scale coefficientwise
                o = embed(other, F.base)
                return NFElem(F, tuple(x * o for x in self.c))
            if F is other.field and self.field in F.tower():
                return other * self
            return embed(self, F) * embed(other, F)
        a, b = self.c, other.c
        F = self.field
        n = F.degree
        prod = [None] * (2 * n - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                t = ai * bj
                k = i + j
                prod[k] = t if prod[k] is None else prod[k] + t
        bz = F.base.zero
        prod = [bz if p is None else p for p in prod]
        return NFElem(F, tuple(F._reduce(prod)))

    def __rmul__(self, other):
        if is_scalar(other):
            return self.__mul__(other)
        return NotImplemented

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        from . import upoly
        F = self.field
        g, s, _ = upoly.xgcd(list(self.c), list(F.modulus), F.base)
        # g is a nonzero constant since modulus is irreducible (assumed)
        if len(g) != 1:
            raise FieldError("modulus is not irreducible: non-trivial gcd found")
        inv = F.base.one / g[0]
        return F.from_coeffs([x * inv for x in s])

    def __truediv__(self, other):
        if is_scalar(other):
            o = mpq(1) / mpq(other)
            return NFElem(self.field, tuple(x * o for x in self.c))
        if isinstance(other, NFElem):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if is_scalar(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int):
            e = int(e)
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __bool__(self):
        return any(self.c)

    def is_zero(self):
        return not any(self.c)

    def is_rational(self):
        if any(self.c[1:]):
            return False
        c0 = self.c[0]
        return c0.is_rational() if isinstance(c0, NFElem) else True

    def to_rational(self):
        c0 = self.c[0]
        return c0.to_rational() if isinstance(c0, NFElem) else c0

    def base_value(self):
        """Return the element as an element of the base field if it lies there."""
        if any(self.c[1:]):
            return None
        return self.c[0]

    def simplify(self):
        """Push the element down to the smallest field of its tower containing it."""
        x = self
        while isinstance(x, NFElem) and not any(x.c[1:]):
            x = x.c[0]
        return x

    def __eq__(self, other):
        if isinstance(other, NFElem):
            if other.field is self.field:
                return self.c == other.c
            try:
                a, b = self._other(other)
            except IncompatibleFields:
                return False
            return a.c == b.c
        if is_scalar(other):
            return self.is_rational() and self.to_rational() == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._h is None:
            s = self.simplify()
            if isinstance(s, NFElem):
                self._h = hash((id(s.field), s.c))
            else:
                self._h = hash(s)
        return self._h

    def __repr__(self):
        return _poly_str(self.c, _gen_name(self.field))

    __str__ = __repr__


def _gen_name(F):
    if F.conductor is not None:
        return "zeta(%d)" % F.conductor
    return F.name


def cyclotomic_poly(m):
    """Integer coefficients (low->high) of the m-th cyclotomic polynomial."""
    return list(_cyclo(m))


@lru_cache(maxsize=None)
def _cyclo(m):
    # x^m - 1 divided by all Phi_d, d | m, d < m
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            den = list(_cyclo(d))
            num = _int_exact_div(num, den)
    return tuple(num)


def _int_exact_div(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert not any(a), "inexact division"
    return q


def euler_phi(m):
    r = m
    p = 2
    n = m
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            r -= r // p
        p += 1
    if n > 1:
        r -= r // n
    return r


_CYCLO_FIELDS = {}


def cyclotomic_field(m):
    """Q(zeta_m); conductors 1 and 2 give QQ.  Odd m is replaced by 2m's field only if asked."""
    if m <= 2:
        return QQ
    F = _CYCLO_FIELDS.get(m)
    if F is None:
        F = NumberField(QQ, [mpq(c) for c in cyclotomic_poly(m)], name="zeta%d" % m, conductor=m)
        _CYCLO_FIELDS[m] = F
    return F


def zeta(m, k=1):
    """zeta_m^k as an element of Q(zeta_m)."""
    k %= m
    if m == 1:
        return mpq(1)
    if m == 2:
        return mpq(-1) if k else mpq(1)
    return cyclotomic_field(m).gen ** k


def zeta_in(F, m, k=1):
    """zeta_m^k inside the field F (which must contain the m-th roots of unity)."""
    k %= m
    if m <= 2 or k == 0:
        return embed(zeta(m, k), F) if F is not QQ else zeta(m, k)
    C = F.cyclotomic_base() if F is not QQ else QQ
    M = C.conductor
    # Q(zeta_M) contains zeta_m iff m | M, or m | 2M with M odd
    if M % m == 0:
        return embed(C.gen ** ((M // m) * k), F)
    if M % 2 == 1 and (2 * M) % m == 0:
        z = -C.gen ** ((M + 1) // 2)  # exp(pi i/M), a square root of zeta_M
        return embed(z ** ((2 * M // m) * k), F)
    raise FieldError("%s does not contain zeta_%d" % (F, m))


def cyclo_normalize(coeffs, m):
    """Reduce sum_k coeffs[k] zeta_m^k to canonical form.

    `coeffs` maps exponents (any integers) to rationals; it can also be a list.
    """
    if isinstance(coeffs, (list, tuple)):
        coeffs = dict(enumerate(coeffs))
    F = cyclotomic_field(m)
    if F is QQ:
        total = mpq(0)
        for k, c in coeffs.items():
            total += to_mpq(c) * (1 if m == 1 or k % 2 == 0 else -1)
        return total
    folded = [mpq(0)] * m
    for k, c in coeffs.items():
        folded[k % m] += to_mpq(c)
    return F.from_coeffs(folded)


def conductor_lcm(a, b):
    return a * b // gcd(a, b)


def extend_field(current, poly, cap=24):
    """Adjoin a root of the irreducible polynomial `poly` (coefficients over `current`).

    Only one extension on top of a cyclotomic field (or QQ) is allowed.
    Irreducibility is certified by factoring the norm over QQ; the norm degree is
    capped, beyond which the extension is refused.
    """
    from . import upoly
    if current is not QQ and current.is_extension():
        raise ExtensionRequired(poly, current, "second simultaneous extension refused")
    poly = [embed(c, current) for c in poly]
    poly = upoly.trim(poly)
    d = len(poly) - 1
    if d < 1:
        raise NotIrreducible("constant polynomial")
    if d * current.absolute_degree() > cap:
        raise IrreducibilityUnknown("norm degree %d exceeds cap %d" % (d * current.absolute_degree(), cap))
    _, facs = upoly.factor(poly, current)
    if len(facs) != 1 or facs[0][1] != 1:
        raise NotIrreducible("polynomial factors over %s" % current)
    if d == 1:
        raise NotIrreducible("linear polynomial: root already in field")
    return NumberField(current, poly, name="w")


def frac(x):
    """mpq -> Fraction (for display/serialization)."""
    x = mpq(x)
    return Fraction(int(x.numerator), int(x.denominator))


def format_rational(x):
    x = mpq(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return "%d/%d" % (int(x.numerator), int(x.denominator))
