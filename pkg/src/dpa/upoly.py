"""Univariate polynomials over an exact field, as coefficient lists (low -> high).

Factorization over QQ goes through sympy; over a simple extension it uses the
norm method (shift until the norm is squarefree, factor the norm over the base,
pull factors back by gcd).
"""
import sympy
from gmpy2 import mpq

from .field import QQ, NFElem, embed, FieldError, ExtensionRequired

FACTOR_NORM_CAP = 240


class FactorizationTooLarge(FieldError):
    pass


def trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def deg(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] = r[i] + c
    return trim(r)


def sub(p, q):
    r = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        r[i] = r[i] - c
    return trim(r)


def neg(p):
    return [-c for c in p]


def smul(c, p):
    if not c:
        return []
    return trim([c * x for x in p])


def mul(p, q):
    if not p or not q:
        return []
    r = [None] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if not b:
                continue
            t = a * b
            r[i + j] = t if r[i + j] is None else r[i + j] + t
    return trim([0 if x is None else x for x in r])


def divmod_(p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(trim(p))
    dq = len(q) - 1
    if len(r) - 1 < dq:
        return [], r
    inv = 1 / q[-1] if not isinstance(q[-1], NFElem) else q[-1].inverse()
    out = [0] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq]
        if c:
            c = c * inv
            out[k] = c
            for j in range(dq + 1):
                if q[j]:
                    r[k + j] = r[k + j] - c * q[j]
    return trim(out), trim(r[:dq])


def rem(p, q):
    return divmod_(p, q)[1]


def monic(p):
    p = trim(p)
    if not p:
        return p
    lc = p[-1]
    if lc == 1:
        return p
    inv = 1 / lc if not isinstance(lc, NFElem) else lc.inverse()
    return [c * inv for c in p]


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def xgcd(p, q, F=QQ):
    """Return (g, s, t) with s*p + t*q = g (g not normalized)."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    return r0, s0, t0


def deriv(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def evaluate(p, x):
    r = 0
    for c in reversed(p):
        r = r * x + c
    return r


def compose_linear(p, a, b):
    """p(a*x + b)."""
    r = []
    lin = trim([b, a])
    for c in reversed(p):
        r = add(mul(r, lin), [c] if c else [])
    return r


def pow_(p, e):
    r = [1]
    for _ in range(e):
        r = mul(r, p)
    return r


def sqf_list(p):
    """Yun's algorithm: list of (factor, multiplicity), factors monic and coprime."""
    p = monic(p)
    if len(p) <= 1:
        return []
    out = []
    dp = deriv(p)
    a = gcd(p, dp)
    b = divmod_(p, a)[0]
    c = divmod_(dp, a)[0]
    d = sub(c, deriv(b))
    i = 1
    while len(b) > 1:
        a = gcd(b, d)
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        if len(a) > 1:
            out.append((a, i))
        i += 1
        d = sub(c, deriv(b))
    return out


def sqf_part(p):
    p = monic(p)
    if len(p) <= 1:
        return p
    return monic(divmod_(p, gcd(p, deriv(p)))[0])


def resultant(p, q, F=QQ):
    """Res(p, q) over a field via the Euclidean algorithm."""
    p, q = trim(p), trim(q)
    if not p or not q:
        return F.zero
    res = F.one
    while True:
        dp, dq = len(p) - 1, len(q) - 1
        if dq == 0:
            return res * q[0] ** dp
        if dp == 0:
            return res * p[0] ** dq
        r = rem(p, q)
        if not r:
            return F.zero
        dr = len(r) - 1
        # Res(p,q) = (-1)^(dp*dq) lc(q)^(dp-dr) Res(q, r)
        if (dp * dq) % 2:
            res = -res
        res = res * q[-1] ** (dp - dr)
        p, q = q, r


def interpolate(xs, ys, F=QQ):
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = [coef[-1]]
    for i in range(n - 2, -1, -1):
        p = add(mul(p, [-xs[i], F.one]), [coef[i]])
    return trim(p)


# ---------------------------------------------------------------- factoring

_X = sympy.Symbol("x")


def _factor_qq(p):
    """Factor a squarefree-or-not polynomial over QQ; returns (lc, [(monic factor, e)])."""
    p = trim([mpq(c) for c in p])
    lc = p[-1]
    if len(p) == 2:
        return lc, [(monic(p), 1)]
    coeffs = [sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(p)]
    P = sympy.Poly(coeffs, _X, domain="QQ")
    _, facs = P.factor_list()
    out = []
    for f, e in facs:
        cs = [mpq(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(f.all_coeffs())]
        out.append((monic(cs), e))
    out.sort(key=lambda fe: (len(fe[0]), [str(c) for c in fe[0]]))
    return lc, out


def norm_poly(p, F):
    """Norm from F[x] down to F.base[x] of p in F[x]: Res_y(modulus(y), p(x, y))."""
    B = F.base
    d = len(p) - 1
    D = d * F.degree
    xs = [embed(mpq(i), B) for i in range(D + 1)]
    ys = []
    mod = list(F.modulus)
    pcs = [list(embed(c, F).c) for c in p]
    for x0 in xs:
        # sum_i p_i(y) x0^i as a polynomial in y over B
        acc = [B.zero] * F.degree
        pw = B.one
        for pc in pcs:
            for k in range(F.degree):
                if pc[k]:
                    acc[k] = acc[k] + pc[k] * pw
            pw = pw * x0
        ys.append(resultant(mod, trim(acc), B))
    return interpolate(xs, ys, B)


def factor(p, F=QQ, cap=FACTOR_NORM_CAP):
    """Factor p over F: (leading coeff, [(monic irreducible, multiplicity)])."""
    p = trim([embed(c, F) for c in p])
    if not p:
        raise ValueError("factor of zero polynomial")
    lc = p[-1]
    if len(p) == 1:
        return lc, []
    out = []
    for s, e in sqf_list(p):
        for f in _factor_sqf(s, F, cap):
            out.append((f, e))
    out.sort(key=lambda fe: (len(fe[0]), repr(fe[0])))
    return lc, out


def _factor_sqf(p, F, cap):
    p = monic(p)
    if len(p) == 2:
        return [p]
    if F is QQ:
        return [f for f, _ in _factor_qq(p)[1]]
    if (len(p) - 1) * F.absolute_degree() > cap:
        raise FactorizationTooLarge("norm degree %d exceeds cap %d"
                                    % ((len(p) - 1) * F.absolute_degree(), cap))
    B = F.base
    a = F.gen
    for k in [0, 1, -1, 2, -2, 3, -3, 4, 5, 6, 7]:
        shifted = compose_linear(p, F.one, a * (-k)) if k else p
        N = norm_poly(shifted, F)
        if len(gcd(N, deriv(N))) == 1:
            break
    else:
        raise FieldError("no squarefree norm shift found")
    _, nfacs = factor(N, B, cap)
    facs = []
    rest = shifted
    for g, _ in nfacs:
        h = gcd(rest, [embed(c, F) for c in g])
        if len(h) > 1:
            facs.append(compose_linear(h, F.one, a * k) if k else h)
            rest = divmod_(rest, h)[0]
    facs = [monic(f) for f in facs]
    return facs


def roots(p, F=QQ, cap=FACTOR_NORM_CAP):
    """Roots of p in F with multiplicity, plus the nonlinear irreducible factors."""
    _, facs = factor(p, F, cap)
    rts, nonlinear = [], []
    for f, e in facs:
        if len(f) == 2:
            rts.append((-f[0], e))
        else:
            nonlinear.append((f, e))
    return rts, nonlinear


def roots_or_raise(p, F=QQ):
    rts, nonlinear = roots(p, F)
    if nonlinear:
        raise ExtensionRequired(nonlinear[0][0], F)
    return rts


def is_irreducible(p, F=QQ, cap=FACTOR_NORM_CAP):
    _, facs = factor(p, F, cap)
    return len(facs) == 1 and facs[0][1] == 1
