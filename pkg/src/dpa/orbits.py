"""Orbits, fixed loci and complete lists of short orbits.

A point has orbit length d exactly when its stabilizer has index d, so every
orbit of length <= k lies in the fixed locus of some subgroup of index <= k.
Fixed loci are computed as zero sets on X; nothing is sampled.
"""
from dataclasses import dataclass, field as dfield
from math import gcd

from .field import QQ, common_field, embed, ExtensionRequired
from . import groebner as gb
from .surface import normalize_point, solve_on, ModelError
from .wpoly import Poly


@dataclass
class OrbitRecord:
    points: list
    stabilizer_order: int
    found_by: str = ""

    @property
    def length(self):
        return len(self.points)

    def __repr__(self):
        return "OrbitRecord(length=%d, stabilizer=%d, %s)" % (
            self.length, self.stabilizer_order, self.points[:3])


@dataclass
class FixedCurve:
    """A subgroup of small index fixes a whole curve: infinitely many short orbits."""
    subgroup_order: int
    index: int
    generators: list = dfield(default_factory=list)

    def __repr__(self):
        return "FixedCurve(index=%d)" % self.index


def orbit(G, P, limit=10000):
    """Full orbit of P with the stabilizer order."""
    ring = G.ring
    P = normalize_point(ring, P)
    pts = [P]
    seen = {P}
    i = 0
    while i < len(pts):
        Q = pts[i]
        for g in G.generators:
            R = g.apply_point(Q)
            if R not in seen:
                seen.add(R)
                pts.append(R)
                if len(pts) > limit:
                    raise ModelError("orbit larger than %d" % limit)
        i += 1
    if G.order % len(pts):
        raise ModelError("orbit length %d does not divide |G| = %d" % (len(pts), G.order))
    return OrbitRecord(pts, G.order // len(pts), "seed %s" % (P,))


def stabilizer(G, P):
    P = normalize_point(G.ring, P)
    return [i for i, g in enumerate(G.elements) if g.apply_point(P) == P]


def fixed_equations(ring, g):
    """Sections vanishing exactly where g fixes the point: g(P) and P are weighted-proportional."""
    imgs = g.images()
    xs = [ring.var(i) for i in range(ring.n)]
    eqs = []
    for grading in ring.gradings:
        idx = [i for i in range(ring.n) if grading[i]]
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                i, j = idx[a], idx[b]
                wi, wj = grading[i], grading[j]
                d = gcd(wi, wj)
                p = imgs[i] ** (wj // d) * xs[j] ** (wi // d) - imgs[j] ** (wi // d) * xs[i] ** (wj // d)
                if p:
                    eqs.append(p)
    return eqs


def fixed_locus(X, G, H=None, ext_budget=None):
    """Points of X fixed by the subgroup H (element indices; default all of G).

    Returns (points, None), or ([], FixedCurve) when a curve is fixed pointwise."""
    if H is None:
        H = range(G.order)
    gens = G.small_generating_set(H) if len(H) > 1 else []
    eqs = []
    for gi in gens:
        eqs.extend(fixed_equations(X.ring, G.elements[gi]))
    try:
        pts = solve_on(X.ring, X.equations + eqs, ext_budget=ext_budget)
    except gb.PositiveDimensional:
        return [], FixedCurve(len(H), G.order // len(H), gens)
    return pts, None


def has_fixed_point(X, G):
    """True iff some point of X (over the algebraic closure) is fixed by all of G."""
    eqs = []
    for g in G.generators:
        eqs.extend(fixed_equations(X.ring, g))
    return X.has_common_zero(eqs)


def orbits_of_length_at_most(X, G, k):
    """All orbits of length <= k (one representative per Galois class of points),
    plus FixedCurve certificates when a whole curve has short orbits."""
    records, families = [], []
    seen = set()
    for d in range(1, k + 1):
        if G.order % d:
            continue
        for H in G.subgroups_of_index(d):
            pts, fam = fixed_locus(X, G, H)
            if fam is not None:
                families.append(fam)
                continue
            for P in pts:
                if P in seen:
                    continue
                rec = orbit(G, P)
                rec.found_by = "fixed by a subgroup of index %d" % d
                for Q in rec.points:
                    seen.add(Q)
                if rec.length <= k:
                    records.append(rec)
    records.sort(key=lambda r: (r.length, str(r.points[0])))
    return records, families


def has_orbit_of_length(X, G, k):
    recs, fams = orbits_of_length_at_most(X, G, k)
    return any(r.length == k for r in recs), recs, fams


# ------------------------------------------------------------ the projective line

def p1_orbit_lengths(G):
    """Lengths of the non-generic orbits of a finite group acting on P^1.

    Stabilizers of points are cyclic, and a nontrivial element fixes exactly the
    two roots of its fixed-point form u*(c u + d v) - v*(a u + b v); elements
    sharing that form (up to scalar) make up the stabilizer."""
    forms = []
    for g in G.elements[1:]:
        (a, b), (c, d) = g.M
        q = (c, d - a, -b)  # coefficients of u^2, uv, v^2
        forms.append(_normalize_triple(q))
    lengths = []
    for q in set(forms):
        stab = 1 + sum(1 for f in forms if f == q)
        lengths.append(G.order // stab)
    return sorted(lengths)


def _normalize_triple(q):
    piv = next(x for x in q if x)
    inv = piv.inverse() if hasattr(piv, "inverse") else 1 / piv
    return tuple(x * inv for x in q)


def smallest_orbit_p1(G):
    ls = p1_orbit_lengths(G)
    return min(ls) if ls else G.order


def lct_p1(G):
    """lct(P^1, G) = (length of the smallest orbit) / 2."""
    from gmpy2 import mpq
    return mpq(smallest_orbit_p1(G), 2)
