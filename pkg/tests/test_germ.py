from gmpy2 import mpq
from hypothesis import given, settings, strategies as st
import pytest

from dpa import germ as germ_mod
from dpa.germ import (germ_from_poly, germ_components, newton_lct, resolve_and_lct, classify_germ, a_k_lct,
                      validate_tree, DepthCap, NondegeneracyFailure, local_lct, extract_germ)
from dpa.specfile import catalog_entry
from dpa.wpoly import WeightedRing

R = WeightedRing(("x", "y"), (1, 1))

# values from the Newton polygon; the resolution route must agree
TABLE = [("x*y", 1), ("x^2 + y^3", "5/6"), ("x^2 + y^4", "3/4"), ("x^3 + y^3", "2/3"),
         ("x^2 + y^5", "7/10"), ("x^3 + y^4", "7/12"), ("x^3 + y^5", "8/15"), ("x^2*y + y^4", "5/8"),
         ("x^4 + y^4", "1/2"), ("x", 1), ("x^2 - y^2", 1)]

POOL = [p for p, _ in TABLE] + ["x^2 + x*y^2 + y^5", "y*(x^2 - y^3)", "x^5 + x^2*y^2 + y^5"]


def lct(text):
    return resolve_and_lct([(germ_from_poly(text), 1)])[0]


@pytest.mark.parametrize("poly,value", TABLE)
def test_two_routes(poly, value):
    g = germ_from_poly(poly)
    assert newton_lct(g) == mpq(value)
    assert lct(poly) == mpq(value)


@pytest.mark.parametrize("k", range(1, 7))
def test_a_k(k):
    poly = "y^2 + x^%d" % (k + 1)
    assert lct(poly) == a_k_lct(k) == mpq(1, 2) + mpq(1, k + 1)
    t = classify_germ(germ_from_poly(poly))
    assert (t.kind, t.k) == ("A", k)


def test_cusp_tree():
    value, (root,) = resolve_and_lct([(germ_from_poly("x^2 + y^3"), 1)])
    assert value == mpq(5, 6)
    blowups = []

    def walk(n):
        if n.kind == "blowup":
            blowups.append((n.discrepancy, n.multiplicity))
        for c in n.children:
            walk(c)
    walk(root)
    assert sorted(blowups) == [(1, 2), (2, 3), (4, 6)]
    assert validate_tree(root)


def test_validate_tree_catches_tampering():
    _, (root,) = resolve_and_lct([(germ_from_poly("x^2 + y^5"), 1)])
    node = root.children[0]
    node.value = node.value + 1
    assert not validate_tree(root)


def test_degenerate_face():
    with pytest.raises(NondegeneracyFailure):
        newton_lct(germ_from_poly("(x + y)^2 + y^3"))
    assert lct("(x + y)^2 + y^3") == mpq(5, 6)


def test_depth_cap(monkeypatch):
    with pytest.raises(DepthCap):
        resolve_and_lct([(germ_from_poly("y^2 + x^31"), 1)], depth_cap=4)
    monkeypatch.setattr(germ_mod, "DEPTH_CAP", 2)
    with pytest.raises(DepthCap):
        resolve_and_lct([(germ_from_poly("x^2 + y^3"), 1)])


def test_coefficients():
    g = germ_from_poly("x^2 + y^3")
    assert resolve_and_lct([(g, mpq(1, 2))])[0] == mpq(5, 3)
    line = germ_from_poly("x")
    assert resolve_and_lct([(line, 1), (germ_from_poly("y"), 1)])[0] == 1
    assert resolve_and_lct([(line, 3)])[0] == mpq(1, 3)


def test_ordinary_points():
    for m in range(2, 6):
        poly = " + ".join("x^%d" % m if i == 0 else "y^%d" % m for i in range(2))
        assert lct(poly) == min(mpq(1), mpq(2, m))


def _change(poly, a, b, c, d):
    p = R.parse(poly)
    return p.subs([R.parse("(%s)*x + (%s)*y" % (a, b)), R.parse("(%s)*x + (%s)*y" % (c, d))])


coef = st.integers(-4, 4)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(POOL), coef, coef, coef, coef)
def test_linear_change_invariance(poly, a, b, c, d):
    if a * d - b * c == 0:
        return
    assert resolve_and_lct([(germ_from_poly(_change(poly, a, b, c, d)), 1)])[0] == lct(poly)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(POOL), coef, coef, coef)
def test_unit_invariance(poly, a, b, c):
    p = R.parse(poly) * R.parse("1 + (%d)*x + (%d)*y + (%d)*x*y^2" % (a, b, c))
    assert resolve_and_lct([(germ_from_poly(p), 1)])[0] == lct(poly)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(POOL), st.integers(1, 3))
def test_power(poly, k):
    assert resolve_and_lct(germ_components(R.parse(poly) ** k))[0] == lct(poly) / k
    assert resolve_and_lct([(germ_from_poly(poly), k)])[0] == lct(poly) / k


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(POOL))
def test_multiplicity_bounds(poly):
    g = germ_from_poly(poly)
    m = g.mult()
    assert mpq(1, m) <= lct(poly) <= min(mpq(1), mpq(2, m))


def test_klein_configuration():
    # tangent sections at P1 = [1:0:0:0]: a cusp {y=0} and a smooth branch {z=0}
    spec = catalog_entry("dp2-klein")
    X, ring = spec.model(), spec.ring()
    P = [mpq(1), mpq(0), mpq(0), mpq(0)]
    comps = [(ring.parse(v), 1) for v in ("y", "z", "x")]
    rec = local_lct(X, P, comps)
    assert rec.value == mpq(5, 8)
    assert sorted(rec.germ_types) == ["A2", "smooth"]
    assert classify_germ(extract_germ(X, ring.parse("y"), P)).k == 2
