from gmpy2 import mpq
from hypothesis import given, settings, strategies as st
import pytest

from dpa.field import (QQ, cyclotomic_field, zeta, zeta_in, extend_field, common_field, embed,
                       cyclotomic_poly, euler_phi, cyclo_normalize, format_rational,
                       NotIrreducible, IncompatibleFields)
from dpa import upoly

rats = st.builds(mpq, st.integers(-30, 30), st.integers(1, 12))


def elems(m):
    F = cyclotomic_field(m)
    return st.lists(rats, min_size=F.degree, max_size=F.degree).map(F.from_coeffs)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5, 7, 8, 12]).flatmap(lambda m: st.tuples(elems(m), elems(m), elems(m))))
def test_field_axioms(abc):
    a, b, c = abc
    F = a.field
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    assert a * F.one == a
    if a:
        assert a * a.inverse() == F.one
        assert (b / a) * a == b


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == [-1, 1]
    assert cyclotomic_poly(4) == [1, 0, 1]
    assert cyclotomic_poly(12) == [1, 0, -1, 0, 1]
    for m in (3, 5, 7, 8, 9, 12, 15, 24):
        assert len(cyclotomic_poly(m)) - 1 == euler_phi(m)
        assert cyclotomic_field(m).degree == euler_phi(m)


def test_zeta_orders():
    for m in (3, 4, 5, 7, 8, 24):
        z = zeta(m)
        assert z ** m == 1
        assert all(z ** k != 1 for k in range(1, m))


def test_compositum_of_cyclotomic_fields():
    a = zeta(8) + zeta(3)
    assert a.field is cyclotomic_field(24)
    assert zeta(3) * zeta(8) == zeta(24) ** 11
    assert common_field(cyclotomic_field(3), cyclotomic_field(6)).degree == 2
    assert zeta(6) == -zeta(3) ** 2
    assert zeta(12) ** 3 == zeta(4)
    assert embed(zeta(4), cyclotomic_field(20)) == zeta(20) ** 5


def test_zeta_in_odd_conductor():
    F = cyclotomic_field(3)
    assert zeta_in(F, 6) == -zeta(3) ** 2
    with pytest.raises(Exception):
        zeta_in(F, 4)


def test_cyclo_normalize_folds_exponents():
    assert cyclo_normalize({3: 1}, 3) == 1
    assert cyclo_normalize({0: 1, 1: 1, 2: 1}, 3) == 0
    assert cyclo_normalize([0, 1], 2) == -1


def test_extensions():
    L = extend_field(QQ, [-2, 0, 1])
    assert L.gen ** 2 == 2
    with pytest.raises(NotIrreducible):
        extend_field(QQ, [-4, 0, 1])
    M = extend_field(cyclotomic_field(3), [-2, 0, 0, 1])
    assert M.absolute_degree() == 6
    assert M.gen ** 3 == 2


def test_extension_over_other_cyclotomic_field_is_incompatible():
    L = extend_field(cyclotomic_field(3), [-2, 0, 1])
    with pytest.raises(IncompatibleFields):
        common_field(L, extend_field(cyclotomic_field(5), [-2, 0, 1]))


def test_factor_and_roots():
    c, facs = upoly.factor([-1, 0, 0, 0, 1], QQ)
    assert sorted(len(f) - 1 for f, _ in facs) == [1, 1, 2]
    rts, rest = upoly.roots([1, 0, 1], cyclotomic_field(4))
    assert {r for r, _ in rts} == {zeta(4), -zeta(4)} and not rest
    rts, rest = upoly.roots([1, 0, 1], QQ)
    assert not rts and len(rest) == 1


def test_format_rational():
    assert format_rational(mpq(5, 3)) == "5/3"
    assert format_rational(mpq(4)) == "4"
