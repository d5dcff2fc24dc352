from gmpy2 import mpq
from hypothesis import given, settings, strategies as st
import pytest

from dpa.field import zeta
from dpa.wpoly import WeightedRing, ParseError

R = WeightedRing(("x", "y", "z", "t"), (1, 1, 2, 3))


def test_parse_and_print_round_trip():
    p = R.parse("zeta(8)*x^2*z - 3/2*y^2*z + (zeta(3)+1)*t*x - t^2", 24)
    assert R.parse(str(p), 24) == p


def test_weighted_degree():
    f = R.parse("t^2 - z^3 - x*y*(x^4 - y^4)")
    assert f.is_homogeneous()
    assert f.degree() == 6
    assert not R.parse("t + x").is_homogeneous()
    assert len(R.monomials_of_degree(2)) == 4  # x^2, xy, y^2, z


def test_parse_errors():
    with pytest.raises(ParseError):
        R.parse("x +* y")
    with pytest.raises(ParseError):
        R.parse("w^2")


def test_derivative_and_evaluate():
    f = R.parse("x^3*y + 2*z*t")
    assert f.derivative(0) == R.parse("3*x^2*y")
    assert f.derivative(3) == R.parse("2*z")
    assert f.evaluate([1, 2, 3, 4]) == 26


def test_subs_with_cyclotomic_images():
    f = R.parse("x^8 + y^8")
    g = f.subs([R.parse("zeta(8)*x"), R.parse("zeta(8)^7*y"), R.var(2), R.var(3)])
    assert g == f


polys = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-5, 5)),
                 min_size=1, max_size=5)


def _mk(terms):
    S = WeightedRing(("x", "y"), (1, 1))
    p = S.zero
    for i, j, c in terms:
        p = p + S.monomial((i, j), mpq(c))
    return p


@settings(max_examples=50, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    p, q, r = _mk(a), _mk(b), _mk(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert (p - p).is_zero()


@settings(max_examples=30, deadline=None)
@given(polys, polys)
def test_leibniz_rule(a, b):
    p, q = _mk(a), _mk(b)
    assert (p * q).derivative(0) == p.derivative(0) * q + p * q.derivative(0)
