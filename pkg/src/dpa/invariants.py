"""Semi-invariant sections: G-invariant curves in graded pieces of the coordinate ring.

A curve {s = 0} is G-invariant iff g^* s is proportional to s for every g, i.e.
s is a common eigenvector of the induced (pullback) matrices of the generators.
Common eigenspaces are found by splitting with one generator at a time.  The
twisted Reynolds projector gives an independent route used in the checks.
"""
from dataclasses import dataclass, field as dfield

from gmpy2 import mpq

from .field import QQ, NFElem, NumberField, common_field, field_of, embed, ExtensionRequired
from . import upoly
from .linalg import kernel_basis, matmul, matvec, rank, span_basis, identity
from .surface import ModelError


@dataclass
class InvariantCurve:
    section: object
    degree: object
    eigenvalues: tuple = ()
    n: int = None

    def __repr__(self):
        return "InvariantCurve(%s)" % (self.section,)


@dataclass
class InvariantFamily:
    """A linear system of dimension >= 1 all of whose members are G-invariant."""
    sections: list
    degree: object
    eigenvalues: tuple = ()
    n: int = None

    @property
    def dimension(self):
        return len(self.sections) - 1

    def __repr__(self):
        return "InvariantFamily(<%s>)" % ", ".join(str(s) for s in self.sections)


def _inv(c):
    return c.inverse() if isinstance(c, NFElem) else mpq(1) / c


def induced_matrix(X, g, basis):
    """Matrix (columns = images) of the pullback g^* on the span of the basis monomials."""
    ring = X.ring
    imgs = g.images()
    cols = []
    for m in basis:
        mono = ring.monomial(m)
        cols.append(X.vector_of_section(basis, mono.subs(imgs)))
    n = len(basis)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _scalar_of_power(G, gi, degree):
    """The scalar by which (g^k)^* acts on sections of the given degree (k = order)."""
    g = G.elements[gi]
    k = G.element_order(gi)
    M = identity(G.ring.n, g.field())
    for _ in range(k):
        M = matmul(M, g.M)
    ring = G.ring
    if len(ring.gradings) == 1:
        i = next(i for i in range(ring.n) if ring.weights[i] == 1)
        return k, M[i][i] ** degree
    lam = mpq(1)
    for grading, d in zip(ring.gradings, degree):
        i = next(i for i in range(ring.n) if grading[i] == 1)
        lam = lam * M[i][i] ** d
    return k, lam


def _swaps_factors(g):
    ring = g.ring
    if len(ring.gradings) < 2:
        return False
    g1 = ring.gradings[0]
    for i in range(ring.n):
        for j in range(ring.n):
            if g.M[i][j] and bool(g1[i]) != bool(g1[j]):
                return True
    return False


def common_eigenspaces(X, G, degree, basis=None):
    """[(basis vectors of a common eigenspace, eigenvalues on generators)]."""
    if basis is None:
        basis = X.degree_basis(degree)
    n = len(basis)
    if n == 0:
        return [], basis
    if isinstance(degree, tuple) and len(degree) == 2 and degree[0] != degree[1]:
        if any(_swaps_factors(g) for g in G.generators):
            return [], basis
    F = X.field
    for g in G.generators:
        F = common_field(F, g.field())
    spaces = [([[F.one if i == j else F.zero for j in range(n)] for i in range(n)], ())]
    data = []
    for gi in G.gen_index:
        g = G.elements[gi]
        A = induced_matrix(X, g, basis)
        k, c = _scalar_of_power(G, gi, degree)
        # eigenvalues mu of the pullback satisfy mu^k = c
        rts, nonlinear = upoly.roots([-c] + [0] * (k - 1) + [1], F)
        data.append((len(nonlinear) > 0, gi, A, rts, nonlinear))
    # generators whose eigenvalues all lie in F go first; later ones only act on small spaces
    data.sort(key=lambda d: d[0])
    for _, gi, A, rts, nonlinear in data:
        new = []
        for W, chars in spaces:
            Wt = [[W[j][i] for j in range(len(W))] for i in range(n)]  # n x dimW
            AW = matmul(A, Wt)
            for mu, _ in rts:
                M = [[AW[i][j] - mu * Wt[i][j] for j in range(len(W))] for i in range(n)]
                ker = kernel_basis(M, len(W), F)
                if ker:
                    vecs = []
                    for kv in ker:
                        v = [F.zero] * n
                        for a, w in zip(kv, W):
                            if a:
                                v = [vi + a * wi for vi, wi in zip(v, w)]
                        vecs.append(v)
                    new.append((span_basis(vecs, n, F), chars + (mu,)))
            for q, _ in nonlinear:
                # eigenvectors in W for a root theta of q exist only over F(theta)
                L = NumberField(F, q, name="theta")
                th = L.gen
                M = [[embed(AW[i][j], L) - th * embed(Wt[i][j], L) for j in range(len(W))] for i in range(n)]
                if kernel_basis(M, len(W), L):
                    raise ExtensionRequired(q, F, "semi-invariant sections need eigenvalues outside %s" % F)
        spaces = new
    return spaces, basis


def _poly_of_matrix_times(q, A, Wt):
    # q(A) W via Horner
    n = len(Wt)
    m = len(Wt[0]) if Wt else 0
    R = [[0] * m for _ in range(n)]
    for c in reversed(q):
        R = matmul(A, R)
        if c:
            R = [[R[i][j] + c * Wt[i][j] for j in range(m)] for i in range(n)]
    return R


def semi_invariant_sections(X, G, degree, basis=None, n_label=None):
    """Invariant curves (1-dim eigenspaces) and invariant families (dim >= 2)."""
    spaces, basis = common_eigenspaces(X, G, degree, basis)
    curves, families = [], []
    for W, chars in spaces:
        secs = [X.section_from_vector(basis, v) for v in W]
        if len(secs) == 1:
            curves.append(InvariantCurve(secs[0], degree, chars, n_label))
        else:
            families.append(InvariantFamily(secs, degree, chars, n_label))
    return curves, families


def semi_invariant_lines(X, G, n):
    """G-invariant curves in |-nK_X| (sections of anticanonical degree n)."""
    if X.kind == "descriptor":
        raise ModelError("descriptor models have no sections")
    d = X.anticanonical_degree(n)
    return semi_invariant_sections(X, G, d, X.anticanonical_basis(n), n)


def character_of(X, G, s, degree=None):
    """lambda(g) with g^* s = lambda(g) s for every element, or None if s is not semi-invariant."""
    if degree is None:
        degree = s.degree() if len(X.ring.gradings) == 1 else tuple(sorted(s.multidegrees())[0])
    basis = X.degree_basis(degree)
    v = X.vector_of_section(basis, s)
    piv = next(i for i, x in enumerate(v) if x)
    lam = []
    for g in G.elements:
        w = X.vector_of_section(basis, g.pullback(s))
        c = w[piv] * _inv(v[piv])
        if any(wi != c * vi for wi, vi in zip(w, v)):
            return None
        lam.append(c)
    return lam


def is_semi_invariant(X, G, s):
    for g in G.generators:
        p = X.normal_form(g.pullback(s))
        q = X.normal_form(s)
        e, c = next(iter(q.terms.items()))
        r = p.coeff(e) * _inv(c)
        if X.normal_form(p - q * r):
            return False
    return True


def reynolds_projector(X, G, degree, s):
    """(1/|G|) sum_g lambda(g)^-1 g^* for the character of s; a projector onto the
    common eigenspace containing s."""
    basis = X.degree_basis(degree)
    lam = character_of(X, G, s, degree)
    if lam is None:
        raise ValueError("section is not semi-invariant")
    n = len(basis)
    F = X.field
    for g in G.generators:
        F = common_field(F, g.field())
    P = [[F.zero] * n for _ in range(n)]
    for g, l in zip(G.elements, lam):
        A = induced_matrix(X, g, basis)
        li = _inv(l)
        for i in range(n):
            for j in range(n):
                if A[i][j]:
                    P[i][j] = P[i][j] + li * A[i][j]
    inv = mpq(1, G.order)
    return [[x * inv for x in r] for r in P], basis


def base_points(X, sections):
    """Common zeros on X of the given sections."""
    return X.solve(list(sections))


def invariant_summary(X, G, n):
    curves, fams = semi_invariant_lines(X, G, n)
    return {"n": n, "curves": [str(c.section) for c in curves],
            "families": [[str(s) for s in f.sections] for f in fams]}
