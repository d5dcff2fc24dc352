"""Local analysis of curves on surfaces: power-series charts, germ types and lct.

A germ is a truncated power series in two local parameters (u, v), known modulo
(u, v)^(N+1).  Log canonical thresholds come from an explicit embedded
resolution by point blow-ups; precision is tracked through every blow-up so a
result is only returned when it is determined by the known terms.  The Newton
polygon formula is an independent route for nondegenerate germs.
"""
import itertools
from dataclasses import dataclass, field as dfield
from fractions import Fraction

from gmpy2 import mpq

from .field import QQ, NFElem, NumberField, common_field, field_of, embed, ExtensionRequired
from . import upoly
from .linalg import inverse, matvec
from .surface import normalize_point, ModelError, curve_singular_points
from .wpoly import WeightedRing, Poly


class TruncationInsufficient(Exception):
    pass


class DepthCap(Exception):
    pass


class NondegeneracyFailure(Exception):
    """Newton-nondegeneracy fails on some face."""


def _inv(c):
    return c.inverse() if isinstance(c, NFElem) else mpq(1) / c


# ------------------------------------------------------------ series helpers

def s_trunc(a, N):
    return {e: c for e, c in a.items() if e[0] + e[1] <= N and c}


def s_add(a, b):
    r = dict(a)
    for e, c in b.items():
        v = r.get(e)
        v = c if v is None else v + c
        if v:
            r[e] = v
        else:
            r.pop(e, None)
    return r


def s_scale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def s_mul(a, b, N):
    r = {}
    for (i1, j1), c1 in a.items():
        d1 = i1 + j1
        if d1 > N:
            continue
        for (i2, j2), c2 in b.items():
            if d1 + i2 + j2 > N:
                continue
            e = (i1 + i2, j1 + j2)
            v = r.get(e)
            p = c1 * c2
            r[e] = p if v is None else v + p
    return {e: c for e, c in r.items() if c}


def s_order(a):
    return min((i + j for (i, j), c in a.items() if c), default=None)


def s_eval_poly(p, subs, N):
    """p(subs) truncated at total degree N; subs[i] are series (dicts)."""
    cache = [dict() for _ in subs]
    one = {(0, 0): mpq(1)}

    def power(i, a):
        if a == 0:
            return one
        c = cache[i]
        if a not in c:
            if a == 1:
                c[a] = subs[i]
            else:
                h = a // 2
                c[a] = s_mul(power(i, h), power(i, a - h), N)
        return c[a]

    out = {}
    for e, coef in p.terms.items():
        t = None
        for i, a in enumerate(e):
            if a:
                pa = power(i, a)
                t = pa if t is None else s_mul(t, pa, N)
        if t is None:
            t = one
        for k, v in t.items():
            w = out.get(k)
            x = coef * v
            out[k] = x if w is None else w + x
    return {k: v for k, v in out.items() if v}


# ------------------------------------------------------------ germs

class Germ:
    """Truncated bivariate series: `terms` known modulo (u, v)^(N+1)."""

    def __init__(self, terms, N, field=None):
        self.terms = s_trunc(terms, N)
        self.N = N
        if field is None:
            field = QQ
            for c in self.terms.values():
                field = common_field(field, field_of(c))
        self.field = field

    def mult(self):
        m = s_order(self.terms)
        if m is None:
            raise TruncationInsufficient("germ vanishes to the known precision %d" % self.N)
        return m

    def tangent_cone(self):
        m = self.mult()
        return {e: c for e, c in self.terms.items() if e[0] + e[1] == m}

    def value_at_origin(self):
        return self.terms.get((0, 0), 0)

    def __repr__(self):
        parts = sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))
        s = " + ".join("(%s)*u^%d*v^%d" % (c, i, j) for (i, j), c in parts)
        return "Germ[%s + O(%d)]" % (s or "0", self.N + 1)


def germ_from_poly(text_or_poly, N=30):
    """A germ from an explicit polynomial in two variables (exact up to degree N)."""
    if isinstance(text_or_poly, str):
        names = _germ_var_names(text_or_poly)
        ring = WeightedRing(names, (1, 1))
        p = ring.parse(text_or_poly)
    else:
        p = text_or_poly
    terms = {}
    for e, c in p.terms.items():
        terms[(e[0], e[1])] = c
    deg = max((i + j for i, j in terms), default=0)
    return Germ(terms, max(N, deg))


def _germ_var_names(text):
    import re
    ids = [t for t in re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text) if t != "zeta"]
    singles = sorted({c for t in ids for c in t})
    for pair in (("x", "y"), ("u", "v"), ("s", "t")):
        if set(singles) <= set(pair):
            return pair
    if len(singles) <= 2:
        return tuple(singles + ["_v%d" % i for i in range(2 - len(singles))])
    raise ValueError("germ polynomials need at most two variables")


def squarefree_parts(s):
    """Squarefree decomposition of a polynomial: [(factor, multiplicity)].

    Over Q(zeta_m) the work is done by sympy in the algebraic field generated by
    exp(2 pi i/m), whose minimal polynomial is the m-th cyclotomic polynomial."""
    import sympy
    from .field import cyclo_normalize
    ring = s.ring
    F = s.field()
    if F is not QQ and (F.is_extension() or F.conductor is None):
        raise ValueError("squarefree decomposition over %s is not supported" % F)
    vs = sympy.symbols(" ".join("_v%d" % i for i in range(ring.n)) + " _pad")[:-1]
    if F is QQ:
        K, gen, m = sympy.QQ, sympy.Integer(1), None
    else:
        m = F.conductor
        gen = sympy.exp(2 * sympy.pi * sympy.I / m)
        K = sympy.QQ.algebraic_field(gen)

    def tosym(c):
        if isinstance(c, NFElem):
            return sum(sympy.Rational(int(a.numerator), int(a.denominator)) * gen ** i
                       for i, a in enumerate(c.c))
        return sympy.Rational(int(c.numerator), int(c.denominator))

    expr = 0
    for e, c in s.terms.items():
        t = tosym(c)
        for v, a in zip(vs, e):
            t = t * v ** a
        expr += t
    facs = sympy.sqf_list(sympy.Poly(expr, *vs, domain=K))[1]
    out = []
    for f, k in facs:
        terms = {}
        for mon, c in f.rep.to_dict().items():
            if m is None:
                terms[tuple(mon)] = mpq(int(c.numerator), int(c.denominator))
            else:
                coeffs = c.to_list()[::-1]
                terms[tuple(mon)] = cyclo_normalize([mpq(int(q.numerator), int(q.denominator))
                                                     for q in coeffs], m)
        out.append((Poly(ring, terms), k))
    return out


def germ_components(text_or_poly, N=30):
    """Reduced germs with multiplicities for a polynomial: f = prod f_i^k_i gives [(germ_i, k_i)]."""
    p = text_or_poly
    if isinstance(p, str):
        p = WeightedRing(_germ_var_names(p), (1, 1)).parse(p)
    return [(germ_from_poly(f, N), k) for f, k in squarefree_parts(p) if f.degree() > 0]


# ------------------------------------------------------------ local charts

@dataclass
class LocalChart:
    point: tuple
    field: object
    chart_vars: list
    params: tuple
    coords: list        # series for every ambient variable
    N: int

    def describe(self, ring):
        return "chart %s=1, parameters (%s)" % (
            ",".join(ring.names[v] for v in self.chart_vars),
            ", ".join(ring.names[p] for p in self.params))


def local_chart(X, P, N):
    """Local parameters at P on X and power-series expressions for all coordinates."""
    ring = X.ring
    P = normalize_point(ring, P)
    L = P.field
    P = list(P)
    chart_vars = []
    for grading in ring.gradings:
        idx = [i for i in range(ring.n) if grading[i]]
        ones = [i for i in idx if P[i] and grading[i] == 1]
        if ones:
            v = ones[0]
            lam = _inv(P[v])
            for i in idx:
                if P[i]:
                    P[i] = P[i] * lam ** grading[i]
        else:
            cand = [i for i in idx if P[i] and P[i] == 1]
            if not cand:
                raise ModelError("no usable chart at %s" % (P,))
            v = cand[0]
        chart_vars.append(v)
    affine = [i for i in range(ring.n) if i not in chart_vars]
    k = len(X.equations)
    if len(affine) - k != 2:
        raise ModelError("surface chart does not have dimension two")
    base = [embed(c, L) if L is not QQ else mpq(c) for c in P]
    # Jacobian at P with respect to the affine coordinates
    J = [[f.derivative(i).evaluate(base) for i in affine] for f in X.equations]
    params = None
    for pair in itertools.combinations(range(len(affine)), 2):
        dep = [j for j in range(len(affine)) if j not in pair]
        if not dep:
            params, deps, Jinv = pair, [], []
            break
        Jd = [[J[r][c] for c in dep] for r in range(k)]
        try:
            Jinv = inverse(Jd)
        except ZeroDivisionError:
            continue
        params, deps = pair, dep
        break
    if params is None:
        raise ModelError("surface is singular at %s" % (P,))
    coords = [None] * ring.n
    for v in chart_vars:
        coords[v] = {(0, 0): L.one if L is not QQ else mpq(1)}
    for t, j in enumerate(params):
        i = affine[j]
        s = {(1, 0) if t == 0 else (0, 1): mpq(1)}
        if base[i]:
            s[(0, 0)] = base[i]
        coords[i] = s
    dep_idx = [affine[j] for j in deps]
    phi = [dict() for _ in dep_idx]
    for i, ph in zip(dep_idx, phi):
        coords[i] = ({(0, 0): base[i]} if base[i] else {})
    for _ in range(N + 2):
        res = [s_eval_poly(f, coords, N) for f in X.equations]
        if all(not r for r in res):
            break
        # phi <- phi - Jinv * res
        for a, i in enumerate(dep_idx):
            corr = {}
            for b in range(k):
                if Jinv[a][b]:
                    corr = s_add(corr, s_scale(res[b], Jinv[a][b]))
            coords[i] = s_add(coords[i], s_scale(corr, -1))
    else:
        raise ModelError("local parametrization did not converge")
    return LocalChart(tuple(base), L, chart_vars, tuple(affine[j] for j in params), coords, N)


def extract_germ(X, s, P, N=8, chart=None):
    """The local equation of {s = 0} at P in local parameters, to order N."""
    if chart is None or chart.N < N:
        chart = local_chart(X, P, N)
    terms = s_eval_poly(s, chart.coords, N)
    return Germ(terms, N, chart.field)


# ------------------------------------------------------------ germ types

@dataclass
class GermType:
    kind: str          # "smooth", "A", "ordinary", "other", "none"
    k: int = 0
    lct: object = None

    def __str__(self):
        if self.kind == "A":
            return "A%d" % self.k
        if self.kind == "ordinary":
            return "ordinary %d-fold point" % self.k
        if self.kind == "other":
            return "multiplicity-%d singularity" % self.k
        return self.kind


def a_k_lct(k):
    return mpq(1, 2) + mpq(1, k + 1)


def _binary_form_sqf(T, m):
    """Is the binary form T (dict (i,j)->c, degree m) squarefree?"""
    cs = [T.get((m - j, j), 0) for j in range(m + 1)]  # coefficient of u^(m-j) v^j
    p = upoly.trim(cs)  # polynomial in c = v/u
    inf_mult = m - (len(p) - 1)
    if inf_mult > 1:
        return False
    return len(upoly.gcd(p, upoly.deriv(p))) <= 1


def classify_germ(g):
    """Smooth / A_k (via completing the square) / ordinary m-fold / other."""
    if g.value_at_origin():
        return GermType("none", 0, None)
    m = g.mult()
    if m == 1:
        return GermType("smooth", 0, mpq(1))
    if m == 2:
        k = _ak_index(g)
        return GermType("A", k, a_k_lct(k))
    if _binary_form_sqf(g.tangent_cone(), m):
        return GermType("ordinary", m, min(mpq(1), mpq(2, m)))
    return GermType("other", m, resolve_and_lct([(g, mpq(1))])[0])


def _ak_index(g):
    T = g.tangent_cone()
    a, b, c = T.get((2, 0), 0), T.get((1, 1), 0), T.get((0, 2), 0)
    if b * b - 4 * a * c:
        return 1
    terms = dict(g.terms)
    N = g.N
    if not a:
        # swap u and v so that the square is in the first variable
        terms = {(j, i): v for (i, j), v in terms.items()}
        a, c = c, a
    # u = U - (b/2a) V
    r = -b * _inv(2 * a) if b else 0
    if r:
        terms = _linear_change(terms, r, N)
    # solve dg/dU (phi(V), V) = 0
    gU = {}
    for (i, j), v in terms.items():
        if i:
            gU[(i - 1, j)] = v * i
    two_a = 2 * a
    phi = {}
    for _ in range(N + 2):
        val = _eval_u_series(gU, phi, N)
        if not val:
            break
        phi = _u_add(phi, {k: -v * _inv(two_a) for k, v in val.items()})
    h = _eval_u_series(terms, phi, N)
    if not h:
        raise TruncationInsufficient("A_k index not determined at precision %d" % N)
    return min(h) - 1


def _linear_change(terms, r, N):
    """Substitute u -> u + r v."""
    out = {}
    for (i, j), c in terms.items():
        # (u + r v)^i v^j
        for k in range(i + 1):
            coef = c * _binom(i, k) * (r ** (i - k))
            e = (k, j + i - k)
            if e[0] + e[1] > N:
                continue
            w = out.get(e)
            out[e] = coef if w is None else w + coef
    return {e: c for e, c in out.items() if c}


def _binom(n, k):
    from math import comb
    return comb(n, k)


def _u_add(a, b):
    r = dict(a)
    for k, v in b.items():
        w = r.get(k)
        w = v if w is None else w + v
        if w:
            r[k] = w
        else:
            r.pop(k, None)
    return r


def _eval_u_series(terms, phi, N):
    """sum c_ij phi(V)^i V^j modulo V^(N+1), phi a univariate series {k: c}."""
    powers = {0: {0: mpq(1)}}
    out = {}
    maxi = max((i for i, _ in terms), default=0)
    for i in range(1, maxi + 1):
        prev = powers[i - 1]
        cur = {}
        for k1, c1 in prev.items():
            for k2, c2 in phi.items():
                if k1 + k2 <= N:
                    w = cur.get(k1 + k2)
                    p = c1 * c2
                    cur[k1 + k2] = p if w is None else w + p
        powers[i] = {k: c for k, c in cur.items() if c}
    for (i, j), c in terms.items():
        for k, v in powers[i].items():
            if k + j <= N:
                w = out.get(k + j)
                p = c * v
                out[k + j] = p if w is None else w + p
    return {k: v for k, v in out.items() if v}


# ------------------------------------------------------------ Newton polygon

def newton_polygon(terms):
    """Lower convex hull vertices of the support (sorted by first exponent)."""
    pts = sorted(set(e for e, c in terms.items() if c))
    # keep minimal points
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # remove hull[-1] if it is not below segment hull[-2] -> p
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    # only the part that is decreasing in the second coordinate
    out = []
    for p in hull:
        if out and p[1] >= out[-1][1]:
            continue
        out.append(p)
    return out


def newton_lct(g):
    """min(1, 1/t0) where (t0, t0) is where the diagonal meets the Newton boundary.

    Requires nondegeneracy of every compact face and enough precision so that
    unknown terms cannot lie below the face met by the diagonal."""
    terms = g.terms
    if not terms:
        raise TruncationInsufficient("zero germ")
    if g.value_at_origin():
        raise ValueError("germ does not vanish at the origin")
    V = newton_polygon(terms)
    # faces
    for (x1, y1), (x2, y2) in zip(V, V[1:]):
        face = {e: c for e, c in terms.items() if (e[0] - x1) * (y2 - y1) - (e[1] - y1) * (x2 - x1) == 0}
        if not _face_nondegenerate(face, (x1, y1), (x2, y2)):
            raise NondegeneracyFailure("face %s-%s is degenerate" % ((x1, y1), (x2, y2)))
    # diagonal point
    t0 = None
    for (x1, y1), (x2, y2) in zip(V, V[1:]):
        # segment from (x1,y1) to (x2,y2) with x1 < x2, y1 > y2 ; find t with (t,t) on it
        # param: x = x1 + s (x2-x1), y = y1 + s (y2 - y1); x = y
        den = (x2 - x1) - (y2 - y1)
        s = mpq(y1 - x1, den)
        if 0 <= s <= 1:
            t0 = x1 + s * (x2 - x1)
            alpha, beta = mpq(y1 - y2), mpq(x2 - x1)
            # face line alpha*x + beta*y = const; check unknown terms lie above
            const = alpha * x1 + beta * y1
            if min(alpha, beta) * (g.N + 1) < const:
                raise TruncationInsufficient("precision too low for the Newton face")
            break
    if t0 is None:
        # diagonal meets a non-compact face: vertex on the diagonal side
        first, last = V[0], V[-1]
        if first[0] >= first[1]:
            t0 = mpq(first[0])  # horizontal ray y = first[1] ... vertex right of diagonal
            t0 = mpq(max(first))
        else:
            t0 = mpq(max(last[0], last[1]))
        if V[0][0] > 0 or V[-1][1] > 0:
            # non-convenient: the relevant ray is determined only if it is a coordinate ray
            pass
        for v in V:
            if v[0] == v[1]:
                t0 = mpq(v[0])
    return min(mpq(1), 1 / t0)


def _face_nondegenerate(face, p1, p2):
    (x1, y1), (x2, y2) = p1, p2
    from math import gcd
    dx, dy = x2 - x1, y1 - y2
    g = gcd(dx, dy)
    sx, sy = dx // g, dy // g
    # points p1 + k (sx, -sy), k = 0..g
    coeffs = []
    for k in range(g + 1):
        coeffs.append(face.get((x1 + k * sx, y1 - k * sy), 0))
    p = upoly.trim(coeffs)
    if not coeffs[0] or not coeffs[-1]:
        return False
    return len(upoly.gcd(p, upoly.deriv(p))) <= 1


# ------------------------------------------------------------ resolution

@dataclass
class BlowupNode:
    depth: int
    direction: str
    discrepancy: int
    multiplicity: object
    value: object
    field_degree: int = 1
    children: list = dfield(default_factory=list)
    kind: str = "point"  # "point": an infinitely near point; "blowup": its exceptional curve
    through: list = None  # discrepancies of older exceptional curves through the centre

    def to_dict(self):
        d = {"kind": self.kind, "depth": self.depth, "direction": self.direction}
        if self.kind == "blowup":
            d.update({"k": self.discrepancy, "mult": str(self.multiplicity),
                      "value": str(self.value), "through": list(self.through)})
        d["field_degree"] = self.field_degree
        d["children"] = [c.to_dict() for c in self.children]
        return d

    def count(self):
        return 1 + sum(c.count() for c in self.children)


DEPTH_CAP = 16  # blow-ups along one chain


def validate_tree(node):
    """Recompute k(E) = 1 + sum of k over older curves through the centre, and
    (k+1)/m, for every blow-up in the certificate."""
    if node.kind == "blowup":
        if node.discrepancy != 1 + sum(node.through):
            return False
        if node.value != mpq(node.discrepancy + 1) / node.multiplicity:
            return False
    return all(validate_tree(c) for c in node.children)


def resolve_and_lct(components, ext_budget=3, depth_cap=None):
    """lct at the origin of the pair (A^2, sum a_i C_i) for germs C_i with coefficients a_i.

    Returns (lct, list of BlowupNode roots).  Raises TruncationInsufficient when the
    known terms do not determine the resolution."""
    comps = []
    value = None
    for g, a in components:
        a = mpq(a)
        if g.value_at_origin():
            continue  # does not pass through the point
        if not a:
            continue
        comps.append((dict(g.terms), g.N, a, g.field))
        v = 1 / a
        value = v if value is None else min(value, v)
    if not comps:
        return None, []
    F = QQ
    for c in comps:
        F = common_field(F, c[3])
    germs = [(t, N, a) for t, N, a, _ in comps]
    root = BlowupNode(0, "origin", 0, 0, None, F.absolute_degree() if F is not QQ else 1)
    vals = []
    _resolve(germs, [], F, 0, ext_budget, vals, root, depth_cap or DEPTH_CAP)
    for v in vals:
        value = min(value, v)
    return value, [root]


def _mult(terms, N):
    m = s_order(terms)
    if m is None:
        raise TruncationInsufficient("germ vanishes to the known precision %d" % N)
    return m


def _linear_part(terms):
    return (terms.get((1, 0), 0), terms.get((0, 1), 0))


def _is_snc(germs, excs):
    forms = []
    for t, N, a in germs:
        if _mult(t, N) != 1:
            return False
        forms.append(_linear_part(t))
    for axis, k, m in excs:
        forms.append((1, 0) if axis == "u" else (0, 1))
    if len(forms) > 2:
        return False
    if len(forms) == 2:
        (a1, b1), (a2, b2) = forms
        return bool(a1 * b2 - a2 * b1)
    return True


def _resolve(germs, excs, F, depth, budget, vals, node, cap):
    if _is_snc(germs, excs):
        return
    if depth >= cap:
        raise DepthCap("no simple normal crossings after %d blow-ups" % cap)
    mults = [_mult(t, N) for t, N, a in germs]
    kE = 1 + sum(k for _, k, _ in excs)
    mE = sum(a * m for (t, N, a), m in zip(germs, mults)) + sum(m for _, _, m in excs)
    val = mpq(kE + 1) / mE
    vals.append(val)
    child_node = BlowupNode(depth + 1, node.direction, kE, mE, val,
                            F.absolute_degree() if F is not QQ else 1, kind="blowup",
                            through=[k for _, k, _ in excs])
    node.children.append(child_node)
    # tangent directions: T(1, c) for chart 1, multiplicity at [0:1] for chart 2
    T = [F.one if F is not QQ else mpq(1)]
    total = 0
    for (t, N, a), m in zip(germs, mults):
        cs = [t.get((m - j, j), 0) for j in range(m + 1)]
        T = upoly.mul(T, upoly.trim(cs))
        total += m
    inf_mult = total - (len(T) - 1)
    has_u = any(ax == "u" for ax, _, _ in excs)
    has_v = any(ax == "v" for ax, _, _ in excs)
    exc_u = [(ax, k, m) for ax, k, m in excs if ax == "u"]
    exc_v = [(ax, k, m) for ax, k, m in excs if ax == "v"]
    new_exc_data = (kE, mE)
    directions = []   # (chart, c, field)
    if inf_mult >= 2 or (inf_mult >= 1 and has_u):
        directions.append((2, None, F))
    zero_root_mult = 0
    if len(T) > 1:
        while zero_root_mult < len(T) and not T[zero_root_mult]:
            zero_root_mult += 1
    if zero_root_mult >= 2 or (zero_root_mult >= 1 and has_v):
        directions.append((1, 0, F))
    # other multiple roots of T
    Tnz = T[zero_root_mult:] if len(T) > 1 else T
    if len(Tnz) > 2:
        for q, e in upoly.sqf_list(Tnz):
            if e < 2:
                continue
            rts, nonlin = upoly.roots(q, F)
            for r, _ in rts:
                directions.append((1, r, F))
            for qq, _ in nonlin:
                if budget <= 0:
                    raise ExtensionRequired(qq, F, "tangent direction needs a further extension")
                L = NumberField(F, qq, name="d%d" % (depth + 1))
                directions.append((1, L.gen, L))
    for chart, c, L in directions:
        new_germs = []
        for (t, N, a), m in zip(germs, mults):
            if L is not F:
                t = {e: embed(x, L) for e, x in t.items()}
            nt = _transform(t, m, chart, c, N - m)
            if nt.get((0, 0)):
                continue
            new_germs.append((nt, N - m, a))
        new_excs = []
        if chart == 1:
            new_excs.append(("u", kE, mE))
            if c == 0 and exc_v:
                new_excs.extend(exc_v)
        else:
            new_excs.append(("v", kE, mE))
            if exc_u:
                new_excs.extend(exc_u)
        desc = "[0:1]" if chart == 2 else "[1:%s]" % (c,)
        sub = BlowupNode(depth + 1, desc, None, None, None, L.absolute_degree() if L is not QQ else 1)
        child_node.children.append(sub)
        _resolve(new_germs, new_excs, L, depth + 1, budget - (0 if L is F else 1), vals, sub, cap)


def _transform(t, m, chart, c, Nnew):
    """Strict transform of the germ t (multiplicity m) in the blow-up chart at direction c."""
    out = {}
    if chart == 2:
        for (i, j), x in t.items():
            e = (i, i + j - m)
            if e[0] + e[1] <= Nnew:
                out[e] = out.get(e, 0) + x
        return {e: x for e, x in out.items() if x}
    # chart 1: u = u1, v = u1 (c + v1)
    for (i, j), x in t.items():
        base = i + j - m
        if not c:
            e = (base, j)
            if e[0] + e[1] <= Nnew:
                out[e] = out.get(e, 0) + x
            continue
        cp = [1]
        for k in range(j + 1):
            # term binom(j,k) c^(j-k) v1^k
            e = (base, k)
            if e[0] + e[1] > Nnew:
                break
            coef = x * _binom(j, k) * (c ** (j - k))
            out[e] = out.get(e, 0) + coef
    return {e: x for e, x in out.items() if x}


# ------------------------------------------------------------ global pairs

@dataclass
class LocalLct:
    point: object
    value: object
    germ_types: list
    tree: list
    precision: int


def local_lct(X, P, components, N=8, max_N=48):
    """lct at P of the pair (X, sum a_i {s_i = 0}); components = [(section, a_i)]."""
    last = None
    while N <= max_N:
        try:
            chart = local_chart(X, P, N)
            germs = [(extract_germ(X, s, P, N, chart), a) for s, a in components]
            val, tree = resolve_and_lct(germs)
            types = []
            for g, a in germs:
                if not g.value_at_origin():
                    try:
                        types.append(str(classify_germ(g)))
                    except TruncationInsufficient:
                        types.append("undetermined")
            if last is not None and last == val:
                return LocalLct(P, val, types, tree, N)
            if val is None:
                return LocalLct(P, None, types, tree, N)
            last = val
            N += 4
        except TruncationInsufficient:
            N += 4
    if last is not None:
        return LocalLct(P, last, [], [], N - 4)
    raise TruncationInsufficient("precision cap %d reached at %s" % (max_N, P))


def pair_singular_points(X, sections):
    """Points where the union of the curves {s_i = 0} is singular."""
    prod = None
    for s in sections:
        prod = s if prod is None else prod * s
    return curve_singular_points(X, prod)


def log_pair_lct(X, components, points=None):
    """Global lct of (X, sum a_i C_i); returns (value, worst LocalLct records, all records)."""
    comps = [(s, mpq(a)) for s, a in components]
    value = min(1 / a for _, a in comps)
    if points is None:
        points = pair_singular_points(X, [s for s, _ in comps])
    records = []
    for P in points:
        rec = local_lct(X, P, comps)
        records.append(rec)
        if rec.value is not None:
            value = min(value, rec.value)
    worst = [r for r in records if r.value == value]
    return value, worst, records


def curve_lct(X, s):
    """lct(X, C) for a reduced curve C = {s = 0}."""
    return log_pair_lct(X, [(s, 1)])
