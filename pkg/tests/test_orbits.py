from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from dpa.field import zeta
from dpa.group import pgl2_group
from dpa.orbits import (orbit, stabilizer, has_fixed_point, orbits_of_length_at_most,
                        p1_orbit_lengths, lct_p1)
from dpa.specfile import catalog_entry

P1 = [mpq(1), mpq(0), mpq(0), mpq(0)]


def test_klein_orbits():
    spec = catalog_entry("dp2-klein")
    assert orbit(spec.group("full"), P1).length == 24
    G = spec.group("z2x7:3")
    rec = orbit(G, P1)
    assert rec.length == 3 and rec.stabilizer_order == 14
    assert len(stabilizer(G, P1)) == 14


def test_klein_short_orbits():
    spec = catalog_entry("dp2-klein")
    X, G = spec.model(), spec.group("z2x7:3")
    assert not has_fixed_point(X, G)
    recs, fams = orbits_of_length_at_most(X, G, 3)
    assert fams == [] and [r.length for r in recs] == [3]
    assert set(recs[0].points) == set(orbit(G, P1).points)


def test_gamma_has_no_fixed_point():
    for key in ("dp4-epsilon3", "dp4-epsilon5"):
        spec = catalog_entry(key)
        assert not has_fixed_point(spec.model(), spec.group("gamma"))


def test_abelian_fixed_points():
    spec = catalog_entry("dp2-z2cubed")
    assert not has_fixed_point(spec.model(), spec.group())


pts = st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any)


@settings(max_examples=25, deadline=None)
@given(pts, st.sampled_from(["p2-klein", "p2-hessian"]))
def test_orbit_length_divides_order(p, key):
    G = catalog_entry(key).group()
    rec = orbit(G, [mpq(c) for c in p])
    assert rec.length * rec.stabilizer_order == G.order
    assert len(stabilizer(G, rec.points[0])) == rec.stabilizer_order


def test_binary_groups():
    i, e = zeta(4), zeta(5)
    A4 = pgl2_group([[[1, 0], [0, -1]], [[0, 1], [1, 0]], [[1, i], [1, -i]]])
    D5 = pgl2_group([[[e, 0], [0, 1]], [[0, 1], [1, 0]]])
    C3 = pgl2_group([[[zeta(3), 0], [0, 1]]])
    assert sorted(set(p1_orbit_lengths(A4))) == [4, 6]
    assert sorted(set(p1_orbit_lengths(D5))) == [2, 5]
    assert (lct_p1(A4), lct_p1(D5), lct_p1(C3)) == (2, 1, mpq(1, 2))
