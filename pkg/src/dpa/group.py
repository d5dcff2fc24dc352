"""Finite groups of automorphisms of weighted projective models.

An automorphism is given by the images of the coordinate variables.  Maps that
send each variable to a linear form in variables of the same weight (or, for
P1 x P1, of the same or the swapped factor) are stored as matrices; elements are
normalized modulo the rescaling x_i -> lambda^{w_i} x_i so that equal
automorphisms compare equal.  Closure is a breadth-first search over right
multiplication by generators, which also yields a word for every element.
"""
from collections import Counter, deque
from math import gcd

from gmpy2 import mpq

from .field import QQ, NFElem, common_field, field_of, embed
from .wpoly import Poly
from .linalg import matmul, matvec, identity, det
from .surface import normalize_point


class GroupError(Exception):
    pass


class GroupTooLarge(GroupError):
    pass


class NotAnAutomorphism(GroupError):
    pass


class UnsupportedMapShape(GroupError):
    pass


def _inv(c):
    return c.inverse() if isinstance(c, NFElem) else mpq(1) / c


class ProjAuto:
    """Automorphism of a (multi)weighted projective space, as a normalized matrix."""

    __slots__ = ("ring", "M", "_key")

    def __init__(self, ring, M, normalize=True):
        self.ring = ring
        self.M = [list(r) for r in M]
        if normalize:
            self._normalize()
        self._key = tuple(tuple(r) for r in self.M)

    @classmethod
    def from_images(cls, ring, images, conductor=None):
        """images: list of Poly (or text) giving the image of each variable."""
        imgs = [ring.parse(s, conductor) if isinstance(s, str) else s for s in images]
        if len(imgs) != ring.n:
            raise GroupError("need one image per variable")
        M = []
        for i, p in enumerate(imgs):
            row = [0] * ring.n
            for e, c in p.terms.items():
                if sum(e) != 1:
                    raise UnsupportedMapShape("image of %s is not linear: %s" % (ring.names[i], p))
                j = e.index(1)
                if ring.weights[j] != ring.weights[i]:
                    raise UnsupportedMapShape("image of %s mixes weights" % ring.names[i])
                row[j] = c
            M.append(row)
        F = QQ
        for r in M:
            for x in r:
                F = common_field(F, field_of(x))
        M = [[embed(x, F) if F is not QQ else mpq(x) for x in r] for r in M]
        if not det(M):
            raise NotAnAutomorphism("singular linear map")
        return cls(ring, M)

    def _normalize(self):
        ring = self.ring
        for grading in ring.gradings:
            rows = [i for i in range(ring.n) if grading[i]]
            lam = None
            for i in rows:
                if grading[i] != 1:
                    continue
                for x in self.M[i]:
                    if x:
                        lam = _inv(x)
                        break
                if lam is not None:
                    break
            if lam is None:
                raise UnsupportedMapShape("cannot normalize: no weight-one row in a grading")
            for i in rows:
                w = grading[i]
                f = lam ** w
                self.M[i] = [x * f if x else x for x in self.M[i]]

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, ProjAuto) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def compose(self, other):
        """self o other (apply other first)."""
        return ProjAuto(self.ring, matmul(self.M, other.M))

    def images(self):
        ring = self.ring
        out = []
        for r in self.M:
            p = ring.zero
            for j, c in enumerate(r):
                if c:
                    p = p + ring.var(j) * c
            out.append(p)
        return out

    def apply_point(self, P):
        return normalize_point(self.ring, matvec(self.M, list(P)))

    def pullback(self, s):
        """s o g, the pullback of a section."""
        return s.subs(self.images())

    def is_identity(self):
        return self == identity_auto(self.ring)

    def field(self):
        F = QQ
        for r in self.M:
            for x in r:
                F = common_field(F, field_of(x))
        return F

    def block(self, weight):
        idx = [i for i in range(self.ring.n) if self.ring.weights[i] == weight]
        return idx, [[self.M[i][j] for j in idx] for i in idx]

    def __repr__(self):
        names = self.ring.names
        return "(" + ", ".join("%s->%s" % (n, p) for n, p in zip(names, self.images())) + ")"


def identity_auto(ring):
    return ProjAuto(ring, identity(ring.n))


def _in_field(g, F):
    if F is QQ:
        return g
    return ProjAuto(g.ring, [[embed(x, F) for x in r] for r in g.M], normalize=False)


def preserves(X, g):
    """Does g map X to itself?  (Pullbacks of equations lie in the ideal.)"""
    for f in X.equations:
        if X.normal_form(g.pullback(f)):
            return False
    return True


class FiniteGroupAction:
    def __init__(self, ring, generators, bound=1500, name=None, conductor=None):
        self.ring = ring
        self.name = name
        raw = [g if isinstance(g, ProjAuto) else ProjAuto.from_images(ring, g, conductor)
               for g in generators]
        # one field for all matrices, so equal maps get equal keys
        F = QQ
        for g in raw:
            F = common_field(F, g.field())
        self.field = F
        gens = []
        for g in raw:
            g = _in_field(g, F)
            if g not in gens:
                gens.append(g)
        self.generators = gens
        e = _in_field(identity_auto(ring), F)
        self.elements = [e]
        self.index = {e: 0}
        self.words = [()]
        self.rmul = []
        queue = deque([0])
        while queue:
            i = queue.popleft()
            row = []
            for k, s in enumerate(gens):
                h = self.elements[i].compose(s)
                j = self.index.get(h)
                if j is None:
                    j = len(self.elements)
                    if j >= bound:
                        raise GroupTooLarge("closure exceeded %d elements" % bound)
                    self.elements.append(h)
                    self.index[h] = j
                    self.words.append(self.words[i] + (k,))
                    queue.append(j)
                row.append(j)
            self.rmul.append(row)
        self.gen_index = [self.index[s] for s in gens]
        self._orders = None
        self._inverse = None
        self._classes = None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def mul(self, i, j):
        """Index of elements[i] o elements[j]."""
        for k in self.words[j]:
            i = self.rmul[i][k]
        return i

    def element_order(self, i):
        if self._orders is None:
            self._orders = [None] * self.order
        if self._orders[i] is None:
            k, j = 1, i
            while j != 0:
                j = self.mul(j, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    def inverse(self, i):
        if self._inverse is None:
            self._inverse = [None] * self.order
        if self._inverse[i] is None:
            o = self.element_order(i)
            j = 0
            for _ in range(o - 1):
                j = self.mul(j, i)
            self._inverse[i] = j
        return self._inverse[i]

    def power(self, i, k):
        j = 0
        for _ in range(k % self.element_order(i)):
            j = self.mul(j, i)
        return j

    def conjugate(self, g, h):
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inverse(h))

    def contains(self, g):
        if not isinstance(g, ProjAuto):
            g = ProjAuto.from_images(self.ring, g)
        return g in self.index

    def index_of(self, g):
        if not isinstance(g, ProjAuto):
            g = ProjAuto.from_images(self.ring, g)
        return self.index.get(g)

    def conjugacy_classes(self):
        if self._classes is None:
            seen = set()
            classes = []
            for g in range(self.order):
                if g in seen:
                    continue
                cl = {self.conjugate(g, h) for h in range(self.order)}
                seen |= cl
                classes.append(sorted(cl))
            self._classes = classes
        return self._classes

    def subgroup_closure(self, gens):
        """Element set (frozenset of indices) generated by the given indices."""
        gens = [g for g in gens if g != 0]
        H = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in H:
                    H.add(y)
                    queue.append(y)
        return frozenset(H)

    def subgroup(self, element_indices, name=None):
        """A FiniteGroupAction for the subgroup generated by the given element indices."""
        gens = [self.elements[i] for i in element_indices if i != 0]
        if not gens:
            gens = [self.elements[0]]
        return FiniteGroupAction(self.ring, gens, name=name)

    def commutator_subgroup(self):
        comms = set()
        for a in range(self.order):
            for b in self.gen_index:
                c = self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))
                comms.add(c)
        # normal closure of commutators of elements with generators
        H = self.subgroup_closure(list(comms))
        while True:
            extra = {self.conjugate(h, g) for h in H for g in self.gen_index} - H
            if not extra:
                return H
            H = self.subgroup_closure(list(H | extra))

    def is_abelian(self):
        for a in self.gen_index:
            for b in self.gen_index:
                if self.mul(a, b) != self.mul(b, a):
                    return False
        return True

    def abelian_invariants(self):
        """Invariant factors of the abelianization (via its element orders)."""
        D = self.commutator_subgroup()
        n = self.order // len(D)
        # cosets of D and orders in the quotient
        coset = {}
        reps = []
        for g in range(self.order):
            if g in coset:
                continue
            k = len(reps)
            reps.append(g)
            for d in D:
                coset[self.mul(g, d)] = k
        orders = []
        for r in reps:
            k, j = 1, r
            while coset[j] != coset[0]:
                j = self.mul(j, r)
                k += 1
            orders.append(k)
        return _abelian_type(n, orders)

    def linear_characters(self):
        """All homomorphisms G -> Q/Z, as lists of values k/e (mpq) indexed by element."""
        inv = self.abelian_invariants()
        e = 1
        for d in inv:
            e = e * d // gcd(e, d)
        ngen = len(self.gen_index)
        chars = []

        def assign(vals):
            # value on every element via words; check all edges
            v = [None] * self.order
            v[0] = 0
            for i in range(self.order):
                v[i] = sum(vals[k] for k in self.words[i]) % e
            for i in range(self.order):
                for k in range(ngen):
                    if v[self.rmul[i][k]] != (v[i] + vals[k]) % e:
                        return None
            return v

        def rec(k, vals):
            if k == ngen:
                v = assign(vals)
                if v is not None:
                    chars.append([mpq(x, e) for x in v])
                return
            for a in range(e):
                rec(k + 1, vals + [a])

        if e ** ngen > 200000:
            raise GroupError("too many character candidates")
        rec(0, [])
        return chars

    def order_histogram(self):
        return dict(sorted(Counter(self.element_order(i) for i in range(self.order)).items()))

    def label(self):
        inv = self.abelian_invariants()
        hist = self.order_histogram()
        return "order %d, abelianization %s, element orders %s" % (
            self.order, "x".join("Z%d" % d for d in inv) if inv else "1",
            " ".join("%d:%d" % kv for kv in hist.items()))

    def subgroups_of_index(self, k, cap=20000):
        """All subgroups of index exactly k, as frozensets of element indices."""
        n = self.order
        if n % k:
            return []
        h = n // k
        cyclic = {}
        for g in range(n):
            if h % self.element_order(g) == 0:
                C = self.subgroup_closure([g])
                cyclic.setdefault(C, g)
        found = set(cyclic)
        frontier = list(found)
        gens_of = {C: [g] for C, g in cyclic.items()}
        while frontier:
            nxt = []
            for H in frontier:
                if len(H) == h:
                    continue
                for C, g in cyclic.items():
                    if g in H:
                        continue
                    J = self._join_bounded(H, gens_of[H] + [g], h)
                    if J is None or J in found:
                        continue
                    found.add(J)
                    gens_of[J] = gens_of[H] + [g]
                    nxt.append(J)
                    if len(found) > cap:
                        raise GroupError("subgroup lattice too large")
            frontier = nxt
        return sorted((H for H in found if len(H) == h), key=lambda H: sorted(H))

    def _join_bounded(self, H, gens, h):
        S = set(H)
        queue = list(S)
        while queue:
            x = queue.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in S:
                    S.add(y)
                    if len(S) > h:
                        return None
                    queue.append(y)
        if h % len(S):
            return None
        return frozenset(S)

    def small_generating_set(self, H):
        """A few elements generating the subgroup H (greedy)."""
        H = set(H)
        gens = []
        cur = frozenset([0])
        for g in sorted(H, key=lambda x: -self.element_order(x)):
            if g not in cur:
                gens.append(g)
                cur = self.subgroup_closure(gens)
                if len(cur) == len(H):
                    break
        return gens

    def __repr__(self):
        return "FiniteGroupAction(order %d%s)" % (self.order, ", %s" % self.name if self.name else "")


def _abelian_type(n, orders):
    """Invariant factors of an abelian group of order n from its element-order multiset."""
    # count elements of order dividing d for prime powers to get p-primary parts
    from sympy import factorint
    cnt = Counter(orders)
    inv_p = []
    for p, a in factorint(n).items():
        # number of elements x with p^j x = 0 determines partition
        def c(j):
            return sum(v for o, v in cnt.items() if (p ** j) % o == 0)
        # c(j) = p^{sum_i min(j, lambda_i)}
        logs = []
        j = 1
        while True:
            cj = c(j)
            lg = 0
            while p ** (lg + 1) <= cj:
                lg += 1
            logs.append(lg)
            if lg == a:
                break
            j += 1
        # number of parts >= j is logs[j-1] - logs[j-2]
        parts = []
        prev = 0
        counts_ge = []
        for lg in logs:
            counts_ge.append(lg - prev)
            prev = lg
        for j in range(len(counts_ge)):
            ge = counts_ge[j]
            ge_next = counts_ge[j + 1] if j + 1 < len(counts_ge) else 0
            parts.extend([p ** (j + 1)] * (ge - ge_next))
        inv_p.append(sorted(parts, reverse=True))
    # combine into invariant factors
    width = max((len(x) for x in inv_p), default=0)
    facs = []
    for i in range(width):
        d = 1
        for parts in inv_p:
            if i < len(parts):
                d *= parts[i]
        facs.append(d)
    return sorted(facs)


def product_group(ring, gens1, gens2, extra=()):
    """Generators of G1 x G2 acting on P1 x P1 (each factor given by 2x2 matrices)."""
    out = []
    F = QQ
    for A in list(gens1) + list(gens2):
        for r in A:
            for x in r:
                F = common_field(F, field_of(x))
    one, zero = F.one, F.zero
    I2 = [[one, zero], [zero, one]]
    for A in gens1:
        out.append(_block(A, I2, F))
    for B in gens2:
        out.append(_block(I2, B, F))
    for M in extra:
        out.append(M)
    return [ProjAuto(ring, M) for M in out]


def _block(A, B, F):
    z = F.zero
    e = lambda x: embed(x, F) if F is not QQ else mpq(x)
    return [[e(A[0][0]), e(A[0][1]), z, z],
            [e(A[1][0]), e(A[1][1]), z, z],
            [z, z, e(B[0][0]), e(B[0][1])],
            [z, z, e(B[1][0]), e(B[1][1])]]


def pgl2_group(gens):
    """Finite subgroup of PGL2 acting on P1 from 2x2 matrices."""
    from .wpoly import WeightedRing
    ring = WeightedRing(("u", "v"), (1, 1))
    F = QQ
    for A in gens:
        for r in A:
            for x in r:
                F = common_field(F, field_of(x))
    mats = [[[embed(x, F) if F is not QQ else mpq(x) for x in r] for r in A] for A in gens]
    return FiniteGroupAction(ring, [ProjAuto(ring, M) for M in mats] or [identity_auto(ring)])
