"""Exact dense linear algebra over the fields of `field`.

Matrices are lists of rows.  Kernels come in reduced echelon normal form, so
kernel bases (and hence eigenlines) are canonical.
"""
from gmpy2 import mpq

from .field import QQ, NFElem, coerce_all, common_field, field_of, ExtensionRequired
from . import upoly


class ExactMatrix:
    """Thin wrapper: rows of field elements together with their common field."""

    def __init__(self, rows, field=None):
        rows = [list(r) for r in rows]
        flat = [x for r in rows for x in r]
        vals, F = coerce_all(flat, field)
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        it = iter(vals)
        self.rows = [[next(it) for _ in range(self.ncols)] for _ in range(self.nrows)]
        self.field = F

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return ExactMatrix(matmul(self.rows, other.rows))
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def apply(self, v):
        return matvec(self.rows, v)

    def __repr__(self):
        return "ExactMatrix(%r)" % (self.rows,)


def _inv(x):
    return x.inverse() if isinstance(x, NFElem) else mpq(1) / x


def identity(n, F=QQ):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def matmul(A, B):
    n, m = len(A), len(B[0]) if B else 0
    out = []
    Bt = list(zip(*B))
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            s = 0
            for a, b in zip(Ai, Bt[j]):
                if a and b:
                    s = s + a * b
            row.append(s)
        out.append(row)
    return out


def matvec(A, v):
    out = []
    for row in A:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = s + a * b
        out.append(s)
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def rref(A):
    """Reduced row echelon form; returns (R, pivot columns)."""
    R = [list(r) for r in A]
    nr = len(R)
    nc = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        p = None
        for i in range(r, nr):
            if R[i][c]:
                p = i
                break
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = _inv(R[r][c])
        R[r] = [x * inv if x else x for x in R[r]]
        piv_row = R[r]
        nz = [(j, x) for j, x in enumerate(piv_row) if x]
        for i in range(nr):
            if i != r:
                f = R[i][c]
                if f:
                    Ri = R[i]
                    for j, x in nz:
                        Ri[j] = Ri[j] - f * x
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(A):
    return len(rref(A)[1])


def kernel_basis(A, ncols=None, F=None):
    """Basis of {v : A v = 0} in reduced echelon normal form.

    Each basis vector has a 1 in one free column and 0 in the other free columns.
    """
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if F is None:
        F = QQ
        for r in A:
            for x in r:
                if isinstance(x, NFElem):
                    F = common_field(F, x.field)
    R, pivots = rref(A) if A else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(R, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def solve_linear(A, b):
    """One solution x of A x = b, or None."""
    n = len(A[0]) if A else 0
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    R, piv = rref(aug)
    if n in piv:
        return None
    x = [0] * n
    for row, pc in zip(R, piv):
        x[pc] = row[n]
    return x


def inverse(A):
    n = len(A)
    F = QQ
    for r in A:
        for x in r:
            F = common_field(F, field_of(x))
    aug = [list(r) + e for r, e in zip(A, identity(n, F))]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in R]


def det(A):
    R = [list(r) for r in A]
    n = len(R)
    d = 1
    for c in range(n):
        p = None
        for i in range(c, n):
            if R[i][c]:
                p = i
                break
        if p is None:
            return 0
        if p != c:
            R[c], R[p] = R[p], R[c]
            d = -d
        d = d * R[c][c]
        inv = _inv(R[c][c])
        for i in range(c + 1, n):
            f = R[i][c]
            if f:
                f = f * inv
                R[i] = [a - f * b for a, b in zip(R[i], R[c])]
    return d


def charpoly(A):
    """Characteristic polynomial det(xI - A), low -> high, via Hessenberg reduction."""
    n = len(A)
    H = [list(r) for r in A]
    for m in range(1, n - 1):
        p = None
        for i in range(m, n):
            if H[i][m - 1]:
                p = i
                break
        if p is None:
            continue
        if p != m:
            H[m], H[p] = H[p], H[m]
            for r in H:
                r[m], r[p] = r[p], r[m]
        inv = _inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = H[i][m - 1]
            if u:
                u = u * inv
                H[i] = [a - u * b for a, b in zip(H[i], H[m])]
                for r in H:
                    r[m] = r[m] + u * r[i]
    # recurrence for Hessenberg characteristic polynomials
    polys = [[1]]
    for k in range(1, n + 1):
        pk = upoly.mul([-H[k - 1][k - 1], 1], polys[k - 1])
        prod = 1
        for i in range(1, k):
            prod = prod * H[k - i][k - i - 1]
            if not prod:
                break
            pk = upoly.sub(pk, upoly.smul(prod * H[k - i - 1][k - 1], polys[k - i - 1]))
        polys.append(pk)
    return polys[n]


def eigenspaces(A, F=None):
    """[(eigenvalue, basis of eigenspace)] for eigenvalues in the field of A.

    Raises ExtensionRequired (carrying the partial result) if the characteristic
    polynomial does not split.
    """
    n = len(A)
    if F is None:
        F = QQ
        for r in A:
            for x in r:
                F = common_field(F, field_of(x))
    cp = charpoly(A)
    rts, nonlinear = upoly.roots(cp, F)
    out = []
    for lam, _ in rts:
        M = [[A[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
        out.append((lam, kernel_basis(M, n, F)))
    if nonlinear:
        err = ExtensionRequired(nonlinear[0][0], F)
        err.partial = out
        raise err
    return out


def eigen_lines(A, F=None):
    """Deduplicated (eigenvalue, line) pairs; lines are eigenspace basis vectors."""
    return [(lam, v) for lam, basis in eigenspaces(A, F) for v in basis]


def eigenspace_for(A, lam, F=None):
    n = len(A)
    M = [[A[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    return kernel_basis(M, n, F)


def intersect_subspaces(U, V, n, F=QQ):
    """Intersection of the spans of the vectors U and V (lists of length-n vectors)."""
    if not U or not V:
        return []
    # solve sum a_i u_i - sum b_j v_j = 0
    cols = [list(u) for u in U] + [[-x for x in v] for v in V]
    A = [[cols[k][i] for k in range(len(cols))] for i in range(n)]
    ker = kernel_basis(A, len(cols), F)
    out = []
    for k in ker:
        w = [F.zero] * n
        for a, u in zip(k[:len(U)], U):
            if a:
                w = [wi + a * ui for wi, ui in zip(w, u)]
        out.append(w)
    return span_basis(out, n, F)


def span_basis(vectors, n, F=QQ):
    """Canonical basis (rref rows) of the span of the vectors."""
    if not vectors:
        return []
    R, _ = rref([list(v) for v in vectors])
    return R


def normalize_vector(v):
    """Scale so that the first nonzero entry is 1."""
    for x in v:
        if x:
            inv = _inv(x)
            return [y * inv if y else y for y in v]
    return list(v)
