from hypothesis import given, settings, strategies as st

from dpa.invariants import (semi_invariant_lines, semi_invariant_sections, reynolds_projector,
                            is_semi_invariant, character_of, induced_matrix)
from dpa.linalg import matmul
from dpa.specfile import catalog_entry


def _spec(key, name=None):
    s = catalog_entry(key)
    return s.model(), s.group(name or s.default_group())


def test_klein_double_cover():
    X, G = _spec("dp2-klein", "z2x7:3")
    assert semi_invariant_lines(X, G, 1) == ([], [])
    curves, fams = semi_invariant_lines(X, G, 2)
    assert [str(c.section) for c in curves] == ["t"] and fams == []


def test_plane_klein_quartic():
    X, G = _spec("p2-klein")
    for d in (1, 2, 3):
        assert semi_invariant_sections(X, G, d) == ([], [])
    curves, fams = semi_invariant_sections(X, G, 4)
    assert not fams and len(curves) == 1
    ring = X.ring
    assert X.normal_form(curves[0].section) == ring.parse("x^3*y + y^3*z + z^3*x")


def test_dihedral_pencil():
    # the invariant members of |-2K| form the pencil <xy, z>
    X, G = _spec("dp1-d12")
    curves, fams = semi_invariant_lines(X, G, 2)
    assert curves == [] and len(fams) == 1
    assert sorted(str(s) for s in fams[0].sections) == ["x*y", "z"]


def test_epsilon3_has_no_invariant_anticanonical_curve():
    X, G = _spec("dp4-epsilon3")
    assert semi_invariant_lines(X, G, 1) == ([], [])


CASES = [("dp2-klein", "full", 2), ("dp2-klein", "z2x7:3", 3), ("dp1-d12", "full", 2),
         ("dp3-s4cubic", "full", 1), ("dp3-s4cubic", "full", 2), ("dp2-z2cubed", "full", 1),
         ("dp4-epsilon5", "gamma", 1)]


@settings(max_examples=len(CASES), deadline=None)
@given(st.sampled_from(CASES))
def test_sections_are_semi_invariant(case):
    key, name, n = case
    X, G = _spec(key, name)
    curves, fams = semi_invariant_lines(X, G, n)
    for s in [c.section for c in curves] + [s for f in fams for s in f.sections]:
        assert is_semi_invariant(X, G, s)
        lam = character_of(X, G, s, X.anticanonical_degree(n))
        assert lam is not None
        for g, l in zip(G.elements, lam):
            assert X.normal_form(g.pullback(s) - s * l) == X.normal_form(s * 0)


@settings(max_examples=5, deadline=None)
@given(st.sampled_from(CASES[:5]))
def test_projector_idempotent(case):
    key, name, n = case
    X, G = _spec(key, name)
    curves, _ = semi_invariant_lines(X, G, n)
    if not curves:
        return
    s = curves[0].section
    P, basis = reynolds_projector(X, G, X.anticanonical_degree(n), s)
    assert matmul(P, P) == P
    v = X.vector_of_section(basis, s)
    assert [sum(P[i][j] * v[j] for j in range(len(v))) for i in range(len(v))] == v
    # the projector commutes with every generator
    for g in G.generators:
        A = induced_matrix(X, g, basis)
        assert matmul(A, P) == matmul(P, A)
