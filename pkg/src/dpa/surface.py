"""Del Pezzo surface models: equations, anticanonical sections, points, charts."""
import itertools
from math import gcd

from gmpy2 import mpq

from .field import QQ, NFElem, common_field, field_of, embed, cyclotomic_field
from .wpoly import WeightedRing, Poly
from . import groebner as gb
from .linalg import det


class ModelError(ValueError):
    pass


KINDS = ("P2", "P1xP1", "sextic", "quartic", "cubic", "quadric_pair", "descriptor")

_KIND_DEGREE = {"P2": 9, "P1xP1": 8, "sextic": 1, "quartic": 2, "cubic": 3, "quadric_pair": 4}


def surface_key(e):
    """Weighted-degree order used for normal forms: ties broken towards early variables last."""
    return (sum(e), tuple(-a for a in e))


class SurfaceModel:
    def __init__(self, kind, ring, equations, field=None, label=None, descriptor=None):
        if kind not in KINDS:
            raise ModelError("unknown surface kind %r" % kind)
        self.kind = kind
        self.ring = ring
        self.equations = list(equations)
        self.label = label
        self.descriptor = descriptor or {}
        F = field or QQ
        for f in self.equations:
            F = common_field(F, f.field())
        self.field = F
        if kind == "descriptor":
            self.degree = int(self.descriptor["degree"])
        else:
            self.degree = _KIND_DEGREE[kind]
        self._check_shape()
        w = ring.weights
        if len(ring.gradings) == 1:
            self._key = lambda e: (sum(a * b for a, b in zip(e, w)), tuple(-a for a in e))
        else:
            self._key = lambda e: (sum(e), tuple(-a for a in e))
        self._gb = None
        self._smooth = None

    # ---------------------------------------------------------------- shape
    def _check_shape(self):
        k, r = self.kind, self.ring
        expect = {
            "P2": ((1, 1, 1), 0, None),
            "sextic": ((1, 1, 2, 3), 1, 6),
            "quartic": ((1, 1, 1, 2), 1, 4),
            "cubic": ((1, 1, 1, 1), 1, 3),
            "quadric_pair": ((1, 1, 1, 1, 1), 2, 2),
        }
        if k == "descriptor":
            return
        if k == "P1xP1":
            if r.n != 4 or len(r.gradings) != 2 or self.equations:
                raise ModelError("P1xP1 needs four bigraded variables and no equations")
            return
        weights, neq, d = expect[k]
        if tuple(r.weights) != weights:
            raise ModelError("%s needs weights %s, got %s" % (k, weights, r.weights))
        if len(self.equations) != neq:
            raise ModelError("%s needs %d equation(s)" % (k, neq))
        for f in self.equations:
            if not f.is_homogeneous() or f.degree() != d:
                raise ModelError("equation %s is not homogeneous of degree %d" % (f, d))

    # ---------------------------------------------------------------- sections
    def anticanonical_degree(self, n):
        if self.kind == "P2":
            return 3 * n
        if self.kind == "P1xP1":
            return (2 * n, 2 * n)
        return n

    def h0_anticanonical(self, n):
        if n == 0:
            return 1
        return n * (n + 1) * self.degree // 2 + 1

    def ideal_basis(self):
        if self._gb is None:
            polys = [dict(f.terms) for f in self.equations]
            self._gb = gb.groebner(polys, self._key) if polys else []
        return self._gb

    def normal_form(self, p):
        G = self.ideal_basis()
        if not G:
            return p
        return Poly(self.ring, gb.reduce(dict(p.terms), G, self._key))

    def standard_monomials_of_degree(self, d):
        G = self.ideal_basis()
        leads = [gb.lead(g, self._key)[0] for g in G]
        mons = self.ring.monomials_of_degree(d)
        return [m for m in mons if not any(all(a <= b for a, b in zip(l, m)) for l in leads)]

    def anticanonical_basis(self, n):
        if self.kind == "descriptor":
            raise ModelError("descriptor models carry no equations")
        basis = self.standard_monomials_of_degree(self.anticanonical_degree(n))
        return basis

    def degree_basis(self, d):
        return self.standard_monomials_of_degree(d)

    def section_from_vector(self, basis, v):
        return Poly(self.ring, {m: c for m, c in zip(basis, v) if c})

    def vector_of_section(self, basis, s):
        nf = self.normal_form(s)
        idx = {m: i for i, m in enumerate(basis)}
        F = self.field
        v = [F.zero] * len(basis)
        for e, c in nf.terms.items():
            if e not in idx:
                raise ModelError("section not in the given graded piece")
            v[idx[e]] = c
        return v

    def contains_section(self, s):
        return not self.normal_form(s)

    # ---------------------------------------------------------------- points
    def variable_groups(self):
        """For each grading, the indices of the variables it involves."""
        return [[i for i in range(self.ring.n) if g[i]] for g in self.ring.gradings]

    def charts(self):
        """Disjoint affine pieces: one chosen variable set to 1 per grading,
        earlier variables of that grading set to 0."""
        groups = self.variable_groups()
        choices = []
        for grp in groups:
            choices.append([(grp[k], grp[:k]) for k in range(len(grp))])
        for combo in itertools.product(*choices):
            ones = [c[0] for c in combo]
            zeros = [z for c in combo for z in c[1]]
            yield ones, zeros

    def normalize_point(self, P):
        return normalize_point(self.ring, P)

    def on_surface(self, P):
        return all(not f.evaluate(P) for f in self.equations)

    def solve(self, extra, ext_budget=None):
        """Points of X (over finite extensions) where all `extra` sections vanish."""
        return solve_on(self.ring, self.equations + list(extra), ext_budget=ext_budget)

    def has_common_zero(self, extra):
        return has_zero_on(self.ring, self.equations + list(extra))

    def jacobian_minors(self, extra=()):
        return jacobian_minors(self.ring, self.equations + list(extra))

    def is_smooth(self):
        if self.kind in ("P2", "P1xP1"):
            return True
        if self._smooth is None:
            self._smooth = not self.singular_points_exist()
        return self._smooth

    def singular_points_exist(self):
        for ones, zeros in self.charts():
            sysm = _chart_system(self.ring, self.equations, ones, zeros, jacobian=True)
            if sysm is None:
                continue
            polys, free = sysm
            if not polys and free:
                return True
            if gb.has_common_zero(polys, len(free)):
                return True
        return False

    def __repr__(self):
        return "SurfaceModel(%s, K^2=%d%s)" % (self.kind, self.degree,
                                               ", %s" % self.label if self.label else "")


# -------------------------------------------------------------------- points

class Point(tuple):
    """Normalized weighted point; `field` is the field of definition used."""

    def __new__(cls, coords, field=None):
        t = super().__new__(cls, coords)
        F = field
        if F is None:
            F = QQ
            for c in coords:
                F = common_field(F, field_of(c))
        t.field = F
        return t

    def conjugates(self, base=None):
        b = base.absolute_degree() if base is not None else self.field.cyclotomic_base().absolute_degree() \
            if self.field is not QQ else 1
        return self.field.absolute_degree() // b if self.field is not QQ else 1

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self) + "]"


def _inv(c):
    return c.inverse() if isinstance(c, NFElem) else mpq(1) / c


def _bezout(ws):
    """Integers a with sum a_i w_i = gcd(ws)."""
    a = [0] * len(ws)
    a[0] = 1
    g = ws[0]
    for i in range(1, len(ws)):
        # extended gcd of g and ws[i]
        old_r, r = g, ws[i]
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        a = [x * old_s for x in a]
        a[i] = old_t
        g = old_r
    return a, g


def normalize_point(ring, P):
    P = list(P)
    F = QQ
    for c in P:
        F = common_field(F, field_of(c))
    P = [embed(c, F) if F is not QQ else c for c in P]
    for grading in ring.gradings:
        idx = [i for i in range(ring.n) if grading[i]]
        nz = [i for i in idx if P[i]]
        if not nz:
            raise ModelError("point has all coordinates of a grading zero")
        ones = [i for i in nz if grading[i] == 1]
        if ones:
            lam = _inv(P[ones[0]])
        else:
            ws = [grading[i] for i in nz]
            a, g = _bezout(ws)
            if g != 1:
                raise ModelError("point lies on a quotient-singular stratum of the ambient space")
            mu = 1
            for i, ai in zip(nz, a):
                mu = mu * (P[i] ** ai)
            lam = _inv(mu)
        for i in idx:
            if P[i]:
                P[i] = P[i] * lam ** grading[i]
    return Point(tuple(_simplify(c) for c in P), F)


def _simplify(c):
    return c


def point_equal(ring, P, Q):
    return normalize_point(ring, P) == normalize_point(ring, Q)


# -------------------------------------------------------------------- solving

def jacobian_minors(ring, polys, variables=None):
    if variables is None:
        variables = list(range(ring.n))
    k = len(polys)
    J = [[f.derivative(v) for v in variables] for f in polys]
    out = []
    for cols in itertools.combinations(range(len(variables)), k):
        M = [[J[r][c] for c in cols] for r in range(k)]
        d = _poly_det(M, ring)
        if d:
            out.append(d)
    return out


def _poly_det(M, ring):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = ring.zero
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _poly_det(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def _chart_system(ring, polys, ones, zeros, jacobian=False, extra_jac=()):
    """Dehomogenize polys on the chart; returns (dict polys over the free vars, free var indices)."""
    fixed = set(ones) | set(zeros)
    free = [i for i in range(ring.n) if i not in fixed]
    vals = {}
    for i in ones:
        vals[i] = 1
    for i in zeros:
        vals[i] = 0
    allp = list(polys)
    if jacobian:
        # minors with respect to the affine coordinates of the chart (zeros are still coordinates)
        coords = [i for i in range(ring.n) if i not in set(ones)]
        allp = allp + jacobian_minors(ring, polys, coords)
    out = []
    for p in allp:
        d = {}
        for e, c in p.terms.items():
            skip = False
            for i in zeros:
                if e[i]:
                    skip = True
                    break
            if skip:
                continue
            e2 = tuple(e[i] for i in free)
            v = d.get(e2)
            d[e2] = c if v is None else v + c
        d = {e: c for e, c in d.items() if c}
        if d:
            if len(d) == 1 and not any(next(iter(d))):
                return None  # nonzero constant: empty chart
            out.append(d)
    return out, free


def solve_on(ring, polys, ext_budget=None, jacobian_of=None):
    """All points of the weighted (multi)projective space where polys vanish.

    Returns normalized Points (one per Galois orbit over the chart fields).
    Raises groebner.PositiveDimensional for infinite solution sets.
    """
    pts = []
    seen = set()
    groups = [[i for i in range(ring.n) if g[i]] for g in ring.gradings]
    choices = [[(grp[k], grp[:k]) for k in range(len(grp))] for grp in groups]
    for combo in itertools.product(*choices):
        ones = [c[0] for c in combo]
        zeros = [z for c in combo for z in c[1]]
        sysm = _chart_system(ring, polys, ones, zeros)
        if sysm is None:
            continue
        dpolys, free = sysm
        if not dpolys:
            if free:
                raise gb.PositiveDimensional("no equations on a chart")
            sols = [()]
        else:
            sols = gb.solve(dpolys, len(free), ext_budget=ext_budget)
        for s in sols:
            P = [None] * ring.n
            for i in ones:
                P[i] = 1
            for i in zeros:
                P[i] = 0
            for i, v in zip(free, s):
                P[i] = v
            F = QQ
            for c in P:
                F = common_field(F, field_of(c))
            P = [embed(c, F) if F is not QQ else mpq(c) for c in P]
            Q = normalize_point(ring, P)
            if Q not in seen:
                seen.add(Q)
                pts.append(Q)
    return pts


def has_zero_on(ring, polys):
    groups = [[i for i in range(ring.n) if g[i]] for g in ring.gradings]
    choices = [[(grp[k], grp[:k]) for k in range(len(grp))] for grp in groups]
    for combo in itertools.product(*choices):
        ones = [c[0] for c in combo]
        zeros = [z for c in combo for z in c[1]]
        sysm = _chart_system(ring, polys, ones, zeros)
        if sysm is None:
            continue
        dpolys, free = sysm
        if not dpolys:
            return True
        if gb.has_common_zero(dpolys, len(free)):
            return True
    return False


def curve_singular_points(X, s, ext_budget=None):
    """Singular points of the curve {s = 0} on X (points of X where s and the
    Jacobian minors of (equations, s) vanish)."""
    ring = X.ring
    polys = X.equations + [s]
    pts = []
    seen = set()
    for ones, zeros in X.charts():
        sysm = _chart_system(ring, polys, ones, zeros, jacobian=True)
        if sysm is None:
            continue
        dpolys, free = sysm
        if not dpolys and free:
            raise gb.PositiveDimensional("curve singular along a whole chart")
        for sol in gb.solve(dpolys, len(free), ext_budget=ext_budget):
            P = [None] * ring.n
            for i in ones:
                P[i] = 1
            for i in zeros:
                P[i] = 0
            for i, v in zip(free, sol):
                P[i] = v
            F = QQ
            for c in P:
                F = common_field(F, field_of(c))
            P = [embed(c, F) if F is not QQ else mpq(c) for c in P]
            Q = normalize_point(ring, P)
            if Q not in seen:
                seen.add(Q)
                pts.append(Q)
    return pts


# -------------------------------------------------------------------- constructors

def p2(names="xyz", field=None, label=None):
    return SurfaceModel("P2", WeightedRing(tuple(names), (1, 1, 1)), [], field, label)


def p1xp1(names=("x0", "x1", "y0", "y1"), field=None, label=None):
    ring = WeightedRing(names, gradings=[(1, 1, 0, 0), (0, 0, 1, 1)])
    return SurfaceModel("P1xP1", ring, [], field, label)


def sextic(eq, names="xyzt", label=None):
    ring = WeightedRing(tuple(names), (1, 1, 2, 3))
    f = ring.parse(eq) if isinstance(eq, str) else eq
    return SurfaceModel("sextic", ring, [f], label=label)


def quartic(eq, names="xyzt", label=None):
    ring = WeightedRing(tuple(names), (1, 1, 1, 2))
    f = ring.parse(eq) if isinstance(eq, str) else eq
    return SurfaceModel("quartic", ring, [f], label=label)


def cubic(eq, names="xyzt", label=None):
    ring = WeightedRing(tuple(names), (1, 1, 1, 1))
    f = ring.parse(eq) if isinstance(eq, str) else eq
    return SurfaceModel("cubic", ring, [f], label=label)


def quadric_pair(q1, q2, names=("x0", "x1", "x2", "x3", "x4"), label=None):
    ring = WeightedRing(tuple(names), (1,) * 5)
    f1 = ring.parse(q1) if isinstance(q1, str) else q1
    f2 = ring.parse(q2) if isinstance(q2, str) else q2
    return SurfaceModel("quadric_pair", ring, [f1, f2], label=label)


def descriptor(degree, label=None, **data):
    d = dict(data)
    d["degree"] = degree
    return SurfaceModel("descriptor", WeightedRing(()), [], label=label, descriptor=d)
