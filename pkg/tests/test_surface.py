from dpa.surface import (sextic, quartic, cubic, quadric_pair, p2, p1xp1, descriptor,
                         normalize_point, ModelError)
import pytest
from gmpy2 import mpq


def test_anticanonical_dimensions():
    # h0(-nK) = 1 + n(n+1)K^2/2 on a del Pezzo surface
    X = sextic("t^2 - z^3 - x*y*(x^4 - y^4)")
    assert [X.h0_anticanonical(n) for n in (1, 2, 3)] == [2, 4, 7]
    Y = quartic("t^2 - x^3*y - y^3*z - z^3*x")
    assert [Y.h0_anticanonical(n) for n in (1, 2)] == [3, 7]
    Z = cubic("x^3 + y^3 + z^3 + t^3")
    assert [Z.h0_anticanonical(n) for n in (1, 2)] == [4, 10]
    assert p2().h0_anticanonical(1) == 10
    assert p1xp1().h0_anticanonical(1) == 9


def test_smoothness():
    assert cubic("x^3 + y^3 + z^3 + t^3").is_smooth()
    assert cubic("x^3 + y^3 + z^3 + t^3 - (x + y + z + t)^3").is_smooth()
    assert not cubic("x*y*z - t^3").is_smooth()
    assert quartic("t^2 - x^4 - y^4 - z^4 - 3*x^2*y^2 - 5*x^2*z^2 - 7*y^2*z^2").is_smooth()
    # the coefficient choice (2, 3, 5) is singular
    assert not quartic("t^2 - x^4 - y^4 - z^4 - 2*x^2*y^2 - 3*x^2*z^2 - 5*y^2*z^2").is_smooth()
    assert sextic("t^2 - z^3 - x*y*(x^4 - y^4)").is_smooth()


def test_shape_checks():
    with pytest.raises(ModelError):
        cubic("x^2*y + t")
    with pytest.raises(ModelError):
        quadric_pair("x0^2 + x1^2", "x2^3")


def test_solve_returns_galois_representatives():
    X = cubic("x^3 + y^3 + z^3 + t^3")
    pts = X.solve([X.ring.parse("x"), X.ring.parse("y")])
    assert len(pts) == 2  # t = -z and the conjugate pair t^2 - z t + z^2 = 0
    for P in pts:
        assert X.on_surface(P)


def test_weighted_point_normalization():
    X = sextic("t^2 - z^3 - x*y*(x^4 - y^4)")
    assert normalize_point(X.ring, [2, 0, 1, 1]) == normalize_point(X.ring, [1, 0, mpq(1, 4), mpq(1, 8)])


def test_descriptor():
    D = descriptor(5)
    assert D.degree == 5 and D.kind == "descriptor"
