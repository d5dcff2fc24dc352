"""lct(X, G) for del Pezzo surfaces: decision rules by degree.

Every rule records what it used in the certificate.  A value is only called
exact when lower == upper; otherwise the result is an interval and the
certificate says what is missing.
"""
from dataclasses import dataclass, field as dfield
import itertools

from gmpy2 import mpq

from .field import QQ, NFElem, common_field, field_of, embed, ExtensionRequired, format_rational
from . import groebner as gb
from . import upoly
from .wpoly import WeightedRing, Poly
from .surface import _chart_system, jacobian_minors, normalize_point, ModelError, curve_singular_points
from .group import ProjAuto, FiniteGroupAction, identity_auto
from .invariants import semi_invariant_lines, semi_invariant_sections
from .germ import (squarefree_parts, log_pair_lct, local_lct, extract_germ, classify_germ, TruncationInsufficient,
                   DepthCap)
from .orbits import (orbit, orbits_of_length_at_most, has_fixed_point, lct_p1, p1_orbit_lengths)


class Undecided(Exception):
    """The rules in force cannot settle the question; the message names the obstruction."""


class HypothesisMissing(Exception):
    pass


# value sets proved for each rule; exact results are checked against them
RULE_VALUES = {
    "dP1-lct-lct1": {mpq(5, 6), mpq(1)},
    "dP1-lct-lct2": {mpq(5, 3), mpq(2)},
    "dP2-lct-lct1": {mpq(3, 4), mpq(5, 6), mpq(1)},
    "dP2-lct-lct2": {mpq(15, 8), mpq(2)},
    "dP3-lct-lct1": {mpq(2, 3), mpq(5, 6), mpq(1)},
    "dP3-Clebsch-lookup": {mpq(2)},
    "dP3-Fermat-lookup": {mpq(4)},
    "dP4-2K": {mpq(2)},
    "dP4-Gamma": {mpq(1)},
    "dP5-table": {mpq(2), mpq(1), mpq(4, 5), mpq(1, 2)},
    "dP7": {mpq(1, 3)},
    "GAFA": {mpq(1), mpq(5, 6), mpq(3, 4), mpq(2, 3), mpq(1, 2), mpq(1, 3)},
}

DP5_TABLE = {120: mpq(2), 60: mpq(2), 20: mpq(1), 10: mpq(4, 5), 5: mpq(4, 5), 1: mpq(1, 2)}


@dataclass
class LctResult:
    lower: object
    upper: object
    rule: str
    certificate: dict = dfield(default_factory=dict)

    @property
    def exact(self):
        return self.lower is not None and self.upper is not None and self.lower == self.upper

    @property
    def value(self):
        return self.lower if self.exact else None

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError("lower bound %s exceeds upper bound %s" % (self.lower, self.upper))

    def describe(self):
        if self.exact:
            return "lct = %s  [%s]" % (format_rational(self.value), self.rule)
        lo = "-inf" if self.lower is None else format_rational(self.lower)
        hi = "+inf" if self.upper is None else format_rational(self.upper)
        return "%s <= lct <= %s  [%s]" % (lo, hi, self.rule)

    def to_dict(self):
        return {"lower": None if self.lower is None else format_rational(self.lower),
                "upper": None if self.upper is None else format_rational(self.upper),
                "exact": self.exact,
                "value": format_rational(self.value) if self.exact else None,
                "rule": self.rule,
                "certificate": _jsonable(self.certificate)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if type(x).__name__ == "mpq":
        return format_rational(x)
    if hasattr(x, "to_dict"):
        return x.to_dict()
    return str(x)


# ------------------------------------------------------------ curves

def _sympy_sqf(X, s):
    """Squarefree decomposition of a section as an ambient polynomial: [(factor, multiplicity)]."""
    try:
        return squarefree_parts(s)
    except ValueError as exc:
        raise Undecided(str(exc))


def section_lct(X, s, ext_budget=2):
    """lct(X, {s = 0}) with the local records; handles non-reduced sections over QQ."""
    try:
        v, worst, recs = log_pair_lct(X, [(s, 1)], points=_singular_points(X, s, ext_budget))
        return v, recs
    except gb.PositiveDimensional:
        comps = _sympy_sqf(X, s)
        if all(k == 1 for _, k in comps):
            raise Undecided("curve %s is singular along a curve on X" % s)
        prod = None
        for f, _ in comps:
            prod = f if prod is None else prod * f
        pts = _singular_points(X, prod, ext_budget)
        v, worst, recs = log_pair_lct(X, [(f, k) for f, k in comps], points=pts)
        return v, recs


def _singular_points(X, s, ext_budget):
    return curve_singular_points(X, s, ext_budget=ext_budget)


def _ext_ring(ring):
    names = ring.names + ("_c",)
    gradings = tuple(tuple(g) + (0,) for g in ring.gradings)
    return WeightedRing(names, gradings=gradings)


def _lift(p, R):
    return Poly(R, {e + (0,): c for e, c in p.terms.items()})


def pencil_singular_members(X, s0, s1, ext_budget=2):
    """(point, c) with the member s0 + c*s1 singular at the point, plus singular points of s1."""
    ring = X.ring
    R = _ext_ring(ring)
    cvar = R.var(ring.n)
    sc = _lift(s0, R) + cvar * _lift(s1, R)
    eqs = [_lift(f, R) for f in X.equations]
    out = []
    seen = set()
    for ones, zeros in X.charts():
        coords = [i for i in range(ring.n) if i not in set(ones)]
        polys = eqs + [sc] + jacobian_minors(R, eqs + [sc], coords)
        sysm = _chart_system(R, polys, ones, zeros)
        if sysm is None:
            continue
        dpolys, free = sysm
        for sol in gb.solve(dpolys, len(free), ext_budget=ext_budget):
            P = [None] * ring.n
            for i in ones:
                P[i] = 1
            for i in zeros:
                P[i] = 0
            c = None
            for i, v in zip(free, sol):
                if i == ring.n:
                    c = v
                else:
                    P[i] = v
            F = QQ
            for x in P + [c]:
                F = common_field(F, field_of(x))
            P = [embed(x, F) if F is not QQ else mpq(x) for x in P]
            Q = normalize_point(ring, P)
            key = (Q, c)
            if key not in seen:
                seen.add(key)
                out.append((Q, c))
    for Q in curve_singular_points(X, s1, ext_budget=ext_budget):
        out.append((Q, None))
    return out


def pencil_lct(X, s0, s1):
    """min over members D of the pencil <s0, s1> of lct(X, D), with the worst members."""
    best = mpq(1)
    worst = []
    details = []
    for P, c in pencil_singular_members(X, s0, s1):
        s = s1 if c is None else s0 + s1 * c
        rec = local_lct(X, P, [(s, 1)])
        details.append({"member": "s1" if c is None else "s0 + (%s)*s1" % (c,), "point": str(P),
                        "lct": rec.value, "germs": rec.germ_types})
        if rec.value < best:
            best, worst = rec.value, [details[-1]]
        elif rec.value == best:
            worst.append(details[-1])
    return best, worst, details


def lct_n(X, G, n):
    """lct_n(X, G): min over invariant curves in |-nK| of n * lct; None if there are none."""
    curves, fams = semi_invariant_lines(X, G, n)
    best, info = None, []
    for c in curves:
        v, recs = section_lct(X, c.section)
        germs = sorted({t for r in recs for t in r.germ_types})
        info.append({"curve": str(c.section), "lct": v, "germs": germs or ["smooth"],
                     "contribution": n * v})
        best = n * v if best is None else min(best, n * v)
    for f in fams:
        if len(f.sections) == 2:
            try:
                v, worst, details = pencil_lct(X, f.sections[0], f.sections[1])
            except gb.PositiveDimensional:
                raise Undecided("pencil <%s, %s> has a member singular along a curve"
                                % tuple(f.sections))
            germs = sorted({t for d in details for t in d["germs"]})
            info.append({"family": [str(s) for s in f.sections], "lct": v, "germs": germs or ["smooth"],
                         "contribution": n * v})
        elif n == 1 and len(f.sections) == len(X.anticanonical_basis(1)):
            v = gafa_lct_trivial(X)
            info.append({"family": "all of |-K|", "lct": v, "contribution": v})
        else:
            raise Undecided("invariant family of dimension %d in |-%dK|" % (len(f.sections) - 1, n))
        best = n * v if best is None else min(best, n * v)
    return best, info


def lct_upper_from_invariant_curves(X, G, n_max=6):
    """(upper bound, witness) from invariant curves in |-nK|, n <= n_max."""
    best, witness = None, None
    for n in range(1, n_max + 1):
        try:
            v, info = lct_n(X, G, n)
        except (Undecided, ExtensionRequired):
            continue  # a weaker bound is still a bound
        if v is not None and (best is None or v < best):
            best = v
            witness = min(info, key=lambda d: d["contribution"])
            witness = dict(witness, n=n)
    return best, witness


def invariant_curve_degrees(X, G, n_max):
    out = {}
    for n in range(1, n_max + 1):
        curves, fams = semi_invariant_lines(X, G, n)
        out[n] = ([str(c.section) for c in curves], [[str(s) for s in f.sections] for f in fams])
    return out


def first_invariant_degree(X, G, n_max=6):
    """xi: the smallest n such that |-nK| contains a G-invariant curve."""
    for n in range(1, n_max + 1):
        curves, fams = semi_invariant_lines(X, G, n)
        if curves or fams:
            return n
    return None


# ------------------------------------------------------------ trivial group

def _sextic_forms(X):
    """(f4, f6) as univariate coefficient pairs when X is t^2 = z^3 + z f4 + f6 (up to scalars)."""
    F = X.equations[0]
    ring = X.ring
    f4, f6 = {}, {}
    a = b = None
    for e, c in F.terms.items():
        x, y, z, t = e
        if t == 2:
            a = c
        elif z == 3:
            b = c
        elif z == 1 and t == 0:
            f4[x] = c
        elif z == 0 and t == 0:
            f6[x] = c
        else:
            raise Undecided("sextic equation not in the form t^2 = z^3 + z f4 + f6")
    if a is None or b is None:
        raise Undecided("sextic equation lacks t^2 or z^3")
    return f4, f6


def _binary_common_root(p, q, dp, dq):
    """Do binary forms (dicts x-exponent -> coeff, degrees dp, dq) share a root on P^1?"""
    if not p:
        return bool(q) or True
    if not q:
        return True
    # root at infinity [1:0] means y | form, i.e. the x^d coefficient vanishes
    if not p.get(dp) and not q.get(dq):
        return True
    pu = upoly.trim([p.get(i, 0) for i in range(dp + 1)])
    qu = upoly.trim([q.get(i, 0) for i in range(dq + 1)])
    return len(upoly.gcd(pu, qu)) > 1


def has_cuspidal_anticanonical(X):
    f4, f6 = _sextic_forms(X)
    return _binary_common_root(f4, f6, 4, 6)


def has_tacnodal_anticanonical(X):
    """A member of |-K| on the double plane has a tacnode iff the branch quartic
    has a hyperflex, i.e. the quartic is tangent to its Hessian somewhere."""
    ring = X.ring
    F = X.equations[0]
    B = Poly(ring, {e: c for e, c in F.terms.items() if e[3] == 0})
    if any(e[3] not in (0, 2) for e in F.terms):
        raise Undecided("quartic equation not in the form t^2 = f4")
    xs = [0, 1, 2]
    grad = [B.derivative(i) for i in xs]
    H = [[g.derivative(j) for j in xs] for g in grad]
    hess = _det3(H)
    hgrad = [hess.derivative(i) for i in xs]
    minors = []
    for i, j in itertools.combinations(range(3), 2):
        m = grad[i] * hgrad[j] - grad[j] * hgrad[i]
        if m:
            minors.append(m)
    P2 = WeightedRing(ring.names[:3], (1, 1, 1))
    drop = lambda p: Poly(P2, {e[:3]: c for e, c in p.terms.items()})
    from .surface import has_zero_on
    return has_zero_on(P2, [drop(B), drop(hess)] + [drop(m) for m in minors])


def _det3(M):
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def has_eckardt_point(X):
    """Points where the Hessian form vanishes on the tangent plane (tangent section = 3 concurrent lines)."""
    F = X.equations[0]
    n = X.ring.n
    g = [F.derivative(i) for i in range(n)]
    H = [[gi.derivative(j) for j in range(n)] for gi in g]
    pairs = list(itertools.combinations(range(n), 2))
    eqs = []
    for (i, j), (k, l) in itertools.combinations_with_replacement(pairs, 2):
        p = g[j] * g[l] * H[i][k] - g[j] * g[k] * H[i][l] - g[i] * g[l] * H[j][k] + g[i] * g[k] * H[j][l]
        if p:
            eqs.append(p)
    return X.has_common_zero(eqs)


def gafa_lct_trivial(X):
    """lct(X) for the trivial group, by degree and the existence scans."""
    d = X.degree
    if X.kind == "P2":
        return mpq(1, 3)
    if X.kind == "P1xP1":
        return mpq(1, 2)
    if d == 1:
        return mpq(5, 6) if has_cuspidal_anticanonical(X) else mpq(1)
    if d == 2:
        return mpq(3, 4) if has_tacnodal_anticanonical(X) else mpq(5, 6)
    if d == 3:
        return mpq(2, 3) if has_eckardt_point(X) else mpq(3, 4)
    if d == 4:
        return mpq(2, 3)
    if d in (5, 6):
        return mpq(1, 2)
    if d == 8 and X.descriptor.get("model") == "P1xP1":
        return mpq(1, 2)
    return mpq(1, 3)


# ------------------------------------------------------------ group facts

def tau_in(X, G):
    """Is the involution t -> -t (last variable) an element of G?"""
    ring = X.ring
    imgs = [ring.var(i) for i in range(ring.n)]
    imgs[-1] = -imgs[-1]
    return G.contains(ProjAuto.from_images(ring, imgs))


def gamma_subgroup(X):
    """The sign-change group Z_2^4 of a diagonal quadric pair."""
    ring = X.ring
    gens = []
    for k in range(1, 5):
        imgs = [ring.var(i) for i in range(5)]
        imgs[k] = -imgs[k]
        gens.append(imgs)
    return FiniteGroupAction(ring, gens, name="Gamma")


def contains_subgroup(G, H):
    return all(G.contains(h) for h in H.generators)


def swaps_factors(G):
    ring = G.ring
    g1 = ring.gradings[0]
    for g in G.generators:
        for i in range(ring.n):
            for j in range(ring.n):
                if g.M[i][j] and bool(g1[i]) != bool(g1[j]):
                    return True
    return False


def picard_hypothesis(X, G, hyp):
    """Is the G-invariant part of Pic(X) generated by -K_X?  (derived or attested)"""
    if "picard_generated_by_K" in hyp:
        return bool(hyp["picard_generated_by_K"]), "attested"
    if X.kind == "P2":
        return True, "Pic(P^2) = Z"
    if X.kind == "P1xP1":
        return swaps_factors(G), "factor swap"
    if X.kind in ("sextic", "quartic") and G is not None and tau_in(X, G):
        return True, "contains the Bertini/Geiser involution"
    if X.kind == "quadric_pair" and G is not None and contains_subgroup(G, gamma_subgroup(X)):
        return True, "contains the sign-change group"
    return False, "not established"


def product_factors(G):
    """(G1, G2) when G acts on P1 x P1 without swapping and equals G1 x G2, else None."""
    if swaps_factors(G):
        return None
    from .group import pgl2_group
    A = [[[g.M[0][0], g.M[0][1]], [g.M[1][0], g.M[1][1]]] for g in G.generators]
    B = [[[g.M[2][2], g.M[2][3]], [g.M[3][2], g.M[3][3]]] for g in G.generators]
    G1 = pgl2_group([a for a in A if not _is_scalar2(a)])
    G2 = pgl2_group([b for b in B if not _is_scalar2(b)])
    if G1.order * G2.order != G.order:
        return None
    return G1, G2


def _is_scalar2(a):
    return not a[0][1] and not a[1][0] and a[0][0] == a[1][1]


# ------------------------------------------------------------ classify

P1XP1_SYSTEMS = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)]


def classify(X, G=None, hypotheses=None, n_max=None):
    hyp = dict(hypotheses or {})
    if X.kind == "descriptor":
        return _classify_descriptor(X, hyp)
    if G is None:
        G = FiniteGroupAction(X.ring, [identity_auto(X.ring)])
    cert = {"group_order": G.order, "group": G.label()}
    base = gafa_lct_trivial(X)
    if G.order == 1:
        return LctResult(base, base, "GAFA", cert)
    d = X.degree
    if X.kind == "P2":
        return _classify_p2(X, G, hyp, cert, base, n_max or 3)
    if X.kind == "P1xP1":
        return _classify_p1xp1(X, G, hyp, cert, base, n_max or 2)
    if d == 1:
        return _classify_dp1(X, G, hyp, cert, base)
    if d == 2:
        return _classify_dp2(X, G, hyp, cert, base)
    if d == 3:
        return _classify_dp3(X, G, hyp, cert, base)
    if d == 4:
        return _classify_dp4(X, G, hyp, cert, base)
    raise ModelError("no rules for %r" % X)


def _general(X, G, hyp, cert, base, upper, rule, n_max=3):
    """Fallback: lower from lct(X) and weak exceptionality, upper from invariant curves."""
    lower = base
    pic, why = picard_hypothesis(X, G, hyp)
    cert["picard"] = why
    if pic:
        if G.is_abelian():
            upper = mpq(1) if upper is None else min(upper, mpq(1))
            cert["abelian"] = True
        if not has_fixed_point(X, G):
            lower = max(lower, mpq(1))
            cert["fixed_points"] = False
    u, w = lct_upper_from_invariant_curves(X, G, n_max)
    if u is not None and (upper is None or u < upper):
        upper = u
        cert["upper_witness"] = w
    return LctResult(lower, upper, rule, cert)


def _classify_dp1(X, G, hyp, cert, base):
    if not tau_in(X, G):
        cert["obstruction"] = "G does not contain the Bertini involution"
        return _general(X, G, hyp, cert, base, None, "general")
    v1, info1 = lct_n(X, G, 1)
    cert["invariant_curves_n1"] = info1
    if v1 is not None:
        return LctResult(v1, v1, "dP1-lct-lct1", cert)
    v2, info2 = lct_n(X, G, 2)
    cert["invariant_curves_n2"] = info2
    cert["lct_2"] = v2
    return LctResult(v2, v2, "dP1-lct-lct2", cert)


def _classify_dp2(X, G, hyp, cert, base):
    if not tau_in(X, G):
        cert["obstruction"] = "G does not contain the Geiser involution"
        return _general(X, G, hyp, cert, base, None, "general")
    v1, info1 = lct_n(X, G, 1)
    cert["invariant_curves_n1"] = info1
    if v1 is not None:
        return LctResult(v1, v1, "dP2-lct-lct1", cert)
    v2, info2 = lct_n(X, G, 2)
    cert["invariant_curves_n2"] = info2
    cert["lct_2"] = v2
    recs, fams = orbits_of_length_at_most(X, G, 3)
    three = [r for r in recs if r.length == 3]
    cert["orbits_of_length_3"] = [[str(p) for p in r.points] for r in three]
    if not three and not fams:
        cert["rule_note"] = "no orbits of length 3"
        return LctResult(mpq(2), mpq(2), "dP2-lct-lct2", cert)
    v3, info3 = lct_n(X, G, 3)
    cert["invariant_curves_n3"] = info3
    cert["lct_3"] = v3
    vals = [v for v in (v2, v3) if v is not None]
    v = min(vals)
    return LctResult(v, v, "dP2-lct-lct2", cert)


def _classify_dp3(X, G, hyp, cert, base):
    curves, fams = semi_invariant_lines(X, G, 1)
    empty = not curves and not fams
    cert["invariant_in_K"] = not empty
    full = hyp.get("full_automorphism_group", False)
    if empty and full and G.order == 120:
        cert["premises"] = "order 120, no invariant curve in |-K|"
        try:
            xi = first_invariant_degree(X, G, 3)
            recs, fams2 = orbits_of_length_at_most(X, G, X.h0_anticanonical(xi - 1))
            if xi is not None and not recs and not fams2:
                cert["cross_check"] = "smallest orbit longer than h0(-(xi-1)K) with xi = %d" % xi
        except (Undecided, ExtensionRequired, gb.PositiveDimensional):
            pass
        return LctResult(mpq(2), mpq(2), "dP3-Clebsch-lookup", cert)
    if empty and full and G.order == 648:
        cert["premises"] = "order 648, no invariant curve in |-K|"
        return LctResult(mpq(4), mpq(4), "dP3-Fermat-lookup", cert)
    pic, why = picard_hypothesis(X, G, hyp)
    cert["picard"] = why
    if not empty and pic:
        v1, info1 = lct_n(X, G, 1)
        cert["invariant_curves_n1"] = info1
        return LctResult(v1, v1, "dP3-lct-lct1", cert)
    return _general(X, G, hyp, cert, base, None, "general")


def _classify_dp4(X, G, hyp, cert, base):
    Gamma = gamma_subgroup(X)
    if G.order == 16 and contains_subgroup(G, Gamma):
        fixed = has_fixed_point(X, G)
        cert["fixed_points"] = fixed
        if not fixed:
            return LctResult(mpq(1), mpq(1), "dP4-Gamma", cert)
    curves, fams = semi_invariant_lines(X, G, 1)
    empty = not curves and not fams
    cert["invariant_in_K"] = not empty
    full = hyp.get("full_automorphism_group", False)
    if empty and full and G.order in (96, 160) and contains_subgroup(G, Gamma):
        cert["premises"] = "order %d containing the sign-change group, no invariant curve in |-K|" % G.order
        if G.order == 160:
            recs, fams5 = orbits_of_length_at_most(X, G, 5)
            cert["orbits_of_length_5"] = [[str(p) for p in r.points] for r in recs if r.length == 5]
        return LctResult(mpq(2), mpq(2), "dP4-2K", cert)
    if not empty and full:
        return LctResult(base, mpq(1), "dP4-K", cert) if base == 1 else _general(
            X, G, hyp, cert, base, mpq(1), "dP4-K")
    return _general(X, G, hyp, cert, base, None, "general")


def _classify_p2(X, G, hyp, cert, base, n_max):
    found = {}
    for d in (1, 2, 3):
        curves, fams = semi_invariant_sections(X, G, d)
        found[d] = [str(c.section) for c in curves] + ["family" for _ in fams]
    cert["invariant_curves_L_2L_3L"] = found
    if any(found.values()):
        u, w = lct_upper_from_invariant_curves(X, G, n_max)
        upper = mpq(1) if u is None else min(u, mpq(1))
        return LctResult(base, upper, "complete-answer", cert)
    u, w = lct_upper_from_invariant_curves(X, G, n_max)
    cert["upper_witness"] = w
    lower = mpq(4, 3)
    upper = u
    if upper is not None and upper <= lower:
        # only the inequality is proved; do not promote to an exact value
        cert["note"] = "upper bound from invariant curves meets the proved lower bound"
    return LctResult(lower, upper if upper is None or upper > lower else None, "complete-answer", cert)


def _classify_p1xp1(X, G, hyp, cert, base, n_max):
    pf = product_factors(G)
    if pf is not None:
        G1, G2 = pf
        l1, l2 = lct_p1(G1), lct_p1(G2)
        cert["factors"] = {"G1": G1.order, "G2": G2.order, "lct_p1": [l1, l2]}
        v = min(l1, l2)
        return LctResult(v, v, "lct-product", cert)
    found = {}
    for a, b in P1XP1_SYSTEMS:
        curves, fams = semi_invariant_sections(X, G, (a, b))
        found["%d,%d" % (a, b)] = [str(c.section) for c in curves] + ["family" for _ in fams]
    cert["invariant_curves"] = found
    if any(found.values()):
        return LctResult(base, mpq(1), "smooth-quadric", cert)
    return LctResult(mpq(5, 4), None, "smooth-quadric", cert)


def _classify_descriptor(X, hyp):
    d = X.degree
    order = int(hyp.get("group_order", X.descriptor.get("group_order", 1)))
    cert = {"group_order": order}
    base = gafa_lct_trivial(X)
    if order == 1:
        return LctResult(base, base, "GAFA", cert)
    if d == 7:
        return LctResult(mpq(1, 3), mpq(1, 3), "dP7", cert)
    if d == 8:
        if X.descriptor.get("model") == "P1xP1":
            raise ModelError("use the P1xP1 model")
        return LctResult(base, mpq(1, 2), "dP8", cert)
    if d == 6:
        return LctResult(base, mpq(1), "dP6", cert)
    if d == 5:
        if order in DP5_TABLE:
            v = DP5_TABLE[order]
            return LctResult(v, v, "dP5-table", cert)
        return LctResult(base, None, "dP5-table", dict(cert, obstruction="order %d not in the table" % order))
    raise ModelError("descriptor of degree %d has no rules" % d)


def check_value_set(res):
    """Exact results must lie in the value set proved for their rule."""
    if not res.exact or res.rule not in RULE_VALUES:
        return True
    return res.value in RULE_VALUES[res.rule]
