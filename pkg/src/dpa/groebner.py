"""Groebner bases and zero-dimensional solving over exact fields.

Polynomials here are plain dicts {exponent tuple: coefficient}.  The solver
computes a grevlex basis, reads off the eliminant of one variable as a minimal
polynomial in the quotient algebra, splits it over the current field and
recurses on each root.  Roots outside the field cost one simple extension.
"""
from gmpy2 import mpq

from .field import QQ, NFElem, common_field, field_of, embed, NumberField, ExtensionRequired, FieldError
from . import upoly
from .linalg import kernel_basis


class PositiveDimensional(Exception):
    """The system has infinitely many solutions."""


def grevlex(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex(e):
    return e


def weighted_grevlex(weights):
    def key(e):
        return (sum(a * w for a, w in zip(e, weights)), tuple(-x for x in reversed(e)))
    return key


def _inv(c):
    return c.inverse() if isinstance(c, NFElem) else mpq(1) / c


def poly_field(polys):
    F = QQ
    for p in polys:
        for c in p.values():
            F = common_field(F, field_of(c))
    return F


def lead(p, key):
    m = max(p, key=key)
    return m, p[m]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_mul(f, g, c, shift):
    """f - c * x^shift * g (in place on a copy)."""
    f = dict(f)
    for e, v in g.items():
        e2 = tuple(a + b for a, b in zip(e, shift))
        w = f.get(e2)
        t = c * v
        if w is None:
            f[e2] = -t
        else:
            w = w - t
            if w:
                f[e2] = w
            else:
                del f[e2]
    return f


def reduce(f, G, key, leads=None):
    """Full normal form of f modulo the list G (each with cached leading data)."""
    if leads is None:
        leads = [lead(g, key) for g in G]
    f = dict(f)
    rem = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for g, (lm, lc) in zip(G, leads):
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                f = _sub_mul(f, g, c * _inv(lc), shift)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _monic(p, key):
    if not p:
        return p
    _, c = lead(p, key)
    inv = _inv(c)
    return {e: v * inv for e, v in p.items()}


def spoly(f, g, key):
    lf, cf = lead(f, key)
    lg, cg = lead(g, key)
    l = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(l, lf))
    sg = tuple(a - b for a, b in zip(l, lg))
    a = {}
    for e, v in f.items():
        a[tuple(x + y for x, y in zip(e, sf))] = v * _inv(cf)
    return _sub_mul(a, g, _inv(cg), sg)


def groebner(polys, key=grevlex):
    """Reduced Groebner basis (monic) of the ideal generated by polys."""
    G = []
    for p in polys:
        p = {e: c for e, c in p.items() if c}
        if p:
            G.append(_monic(p, key))
    if not G:
        return []
    if any(not any(lead(g, key)[0]) for g in G):
        n = len(next(iter(G[0])))
        return [{(0,) * n: mpq(1)}]
    leads = [lead(g, key) for g in G]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        # normal selection strategy
        pairs.sort(key=lambda ij: key(tuple(max(a, b) for a, b in zip(leads[ij[0]][0], leads[ij[1]][0]))))
        i, j = pairs.pop(0)
        li, lj = leads[i][0], leads[j][0]
        l = tuple(max(a, b) for a, b in zip(li, lj))
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        chain = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(leads[k][0], l) and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        h = reduce(spoly(G[i], G[j], key), G, key, leads)
        if h:
            h = _monic(h, key)
            G.append(h)
            leads.append(lead(h, key))
            if not any(leads[-1][0]):
                n = len(leads[-1][0])
                return [{(0,) * n: mpq(1)}]
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return _interreduce(G, key)


def _interreduce(G, key):
    # minimalize
    G = [g for g in G if g]
    G.sort(key=lambda g: key(lead(g, key)[0]))
    minimal = []
    for g in G:
        lg = lead(g, key)[0]
        if not any(_divides(lead(h, key)[0], lg) for h in minimal):
            minimal = [h for h in minimal if not _divides(lg, lead(h, key)[0])]
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lg, cg = lead(g, key)
        tail = dict(g)
        del tail[lg]
        r = reduce(tail, others, key) if others else tail
        r[lg] = cg
        out.append(_monic(r, key))
    out.sort(key=lambda g: key(lead(g, key)[0]))
    return out


def is_unit_ideal(G):
    return len(G) == 1 and len(G[0]) == 1 and not any(next(iter(G[0])))


def is_zero_dimensional(G, nvars, key=grevlex):
    if is_unit_ideal(G):
        return True
    pure = set()
    for g in G:
        lm = lead(g, key)[0]
        nz = [i for i, a in enumerate(lm) if a]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == nvars


def standard_monomials(G, nvars, key=grevlex, limit=5000):
    leads = [lead(g, key)[0] for g in G]
    start = (0,) * nvars
    if any(_divides(l, start) for l in leads):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                e = list(m)
                e[i] += 1
                e = tuple(e)
                if e in seen or any(_divides(l, e) for l in leads):
                    continue
                seen.add(e)
                nxt.append(e)
                if len(seen) > limit:
                    raise PositiveDimensional("quotient too large or infinite")
        frontier = nxt
    return sorted(seen, key=key)


def minimal_polynomial(G, var, nvars, F, key=grevlex):
    """Minimal polynomial of x_var in the quotient algebra (low -> high)."""
    basis = standard_monomials(G, nvars, key)
    idx = {m: i for i, m in enumerate(basis)}
    leads = [lead(g, key) for g in G]
    vecs = []
    cur = {(0,) * nvars: F.one}
    step = tuple(1 if i == var else 0 for i in range(nvars))
    while True:
        nf = reduce(cur, G, key, leads)
        v = [F.zero] * len(basis)
        for e, c in nf.items():
            v[idx[e]] = c
        vecs.append(v)
        # dependency among vecs?
        k = len(vecs)
        A = [[vecs[j][i] for j in range(k)] for i in range(len(basis))]
        ker = kernel_basis(A, k, F) if A else [[F.one] * k]
        if ker:
            c = ker[0]
            return upoly.monic(upoly.trim(c))
        cur = {tuple(a + b for a, b in zip(e, step)): c for e, c in nf.items()}


def substitute_var(p, var, value):
    """Substitute x_var = value and drop that variable."""
    out = {}
    pw = {}
    for e, c in p.items():
        a = e[var]
        if a:
            v = pw.get(a)
            if v is None:
                v = value ** a
                pw[a] = v
            c = c * v
        e2 = e[:var] + e[var + 1:]
        w = out.get(e2)
        w = c if w is None else w + c
        out[e2] = w
    return {e: c for e, c in out.items() if c}


def solve(polys, nvars, F=None, ext_budget=None, key=grevlex):
    """All solutions of a zero-dimensional system, as tuples of field elements.

    Raises PositiveDimensional for non-finite solution sets and ExtensionRequired
    when more simple extensions than `ext_budget` would be needed.
    """
    polys = [p for p in polys if p]
    if F is None:
        F = poly_field(polys)
    else:
        F = common_field(F, poly_field(polys))
    if ext_budget is None:
        ext_budget = 0 if (F is not QQ and F.is_extension()) else 1
    if nvars == 0:
        if any(polys):
            return []
        return [()]
    polys = [{e: embed(c, F) for e, c in p.items()} for p in polys]
    G = groebner(polys, key)
    if is_unit_ideal(G):
        return []
    if not G:
        raise PositiveDimensional("no equations")
    if not is_zero_dimensional(G, nvars, key):
        raise PositiveDimensional("solution set is not finite")
    mp = minimal_polynomial(G, 0, nvars, F, key)
    rts, nonlinear = upoly.roots(mp, F)
    sols = []
    branches = [(r, F, ext_budget) for r, _ in rts]
    for q, _ in nonlinear:
        if ext_budget <= 0:
            raise ExtensionRequired(q, F)
        L = NumberField(F, q, name="w%d" % _ext_counter())
        branches.append((L.gen, L, ext_budget - 1))
    for r, L, budget in branches:
        sub = [substitute_var(g, 0, r) for g in G]
        for s in solve(sub, nvars - 1, L, budget, key):
            sols.append((r,) + tuple(s))
    return sols


_EXT = [0]


def _ext_counter():
    _EXT[0] += 1
    return _EXT[0]


def has_common_zero(polys, nvars):
    """Existence of a common zero over the algebraic closure (Nullstellensatz)."""
    G = groebner([p for p in polys if p])
    return not is_unit_ideal(G) if G else True


def poly_to_dict(p):
    return dict(p.terms)


def dict_to_poly(d, ring):
    from .wpoly import Poly
    return Poly(ring, dict(d))
