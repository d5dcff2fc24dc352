from gmpy2 import mpq
import pytest

from dpa.field import zeta
from dpa.group import (FiniteGroupAction, ProjAuto, pgl2_group, preserves, UnsupportedMapShape,
                       NotAnAutomorphism)
from dpa.orbits import orbit
from dpa.specfile import catalog_entry

# orders of the image in the automorphism group, from the group labels
ORDERS = [
    ("dp1-s4", "full", 144),
    ("dp1-d12", "full", 12),
    ("dp2-klein", "full", 336),
    ("dp2-klein", "z2x7:3", 42),
    ("dp2-z2cubed", "full", 8),
    ("dp3-clebsch", "full", 120),
    ("dp3-fermat", "full", 648),
    ("dp3-s4cubic", "full", 24),
    ("dp4-epsilon3", "full", 96),
    ("dp4-epsilon5", "full", 160),
    ("dp4-epsilon5", "gamma", 16),
    ("p2-klein", "psl27", 168),
    ("p2-hessian", "hessian", 216),
    ("p2-hessian", "hessian72", 72),
    ("p1xp1", "a4xa4", 144),
    ("p1xp1", "d5xa5", 600),
]


@pytest.mark.parametrize("key,name,order", ORDERS)
def test_catalog_group_orders(key, name, order):
    G = catalog_entry(key).group(name)
    assert G.order == order


@pytest.mark.parametrize("key,name,generic", [
    ("p2-klein", "psl27", [1, 2, 5]),
    ("p2-hessian", "hessian", [1, 2, 5]),
    ("dp3-clebsch", "full", [1, 2, 5, 11]),
    ("dp3-s4cubic", "full", [1, 2, 5, 11]),
    ("dp4-epsilon3", "full", [1, 2, 5, 11, 17]),
])
def test_order_matches_generic_orbit(key, name, generic):
    # a second route to |G|: the orbit of a point with trivial stabilizer,
    # built from the generators alone
    G = catalog_entry(key).group(name)
    assert orbit(G, [mpq(c) for c in generic]).length == G.order


@pytest.mark.parametrize("key", ["dp1-s4", "dp2-klein", "dp3-fermat", "dp4-epsilon5"])
def test_elements_preserve_surface(key):
    spec = catalog_entry(key)
    X, G = spec.model(), spec.group()
    for g in G.elements[:: max(1, G.order // 12)]:
        assert preserves(X, g)


def test_group_tables():
    G = catalog_entry("dp3-s4cubic").group()
    for i in range(G.order):
        assert G.mul(i, G.inverse(i)) == 0
        assert G.order % G.element_order(i) == 0
    assert not G.is_abelian()
    assert G.abelian_invariants() == [2]
    assert catalog_entry("dp2-z2cubed").group().is_abelian()


def test_subgroups_of_index():
    G = catalog_entry("dp3-s4cubic").group()
    assert len(G.subgroups_of_index(1)) == 1
    assert len(G.subgroups_of_index(2)) == 1  # A4
    assert len(G.subgroups_of_index(3)) == 3  # the three D4
    assert len(G.subgroups_of_index(4)) == 4  # the four S3
    for H in G.subgroups_of_index(6):
        assert len(H) == 4


def test_subgroup_containment():
    spec = catalog_entry("dp2-klein")
    full, sub = spec.group("full"), spec.group("z2x7:3")
    assert all(full.contains(g) for g in sub.elements)


def test_weight_mismatch_rejected():
    R = catalog_entry("dp1-s4").ring()
    with pytest.raises(UnsupportedMapShape):
        ProjAuto.from_images(R, ["x", "y", "z", "x^3"])
    with pytest.raises(UnsupportedMapShape):
        ProjAuto.from_images(R, ["x", "y", "z", "z"])
    with pytest.raises(NotAnAutomorphism):
        ProjAuto.from_images(R, ["x", "x", "z", "t"])


def test_weighted_scalars_act_trivially():
    R = catalog_entry("dp1-s4").ring()
    g = ProjAuto.from_images(R, ["-x", "-y", "z", "-t"])
    assert g.is_identity()


def test_binary_polyhedral_images():
    i, e = zeta(4), zeta(5)
    A4 = pgl2_group([[[1, 0], [0, -1]], [[0, 1], [1, 0]], [[1, i], [1, -i]]])
    A5 = pgl2_group([[[e ** 3, 0], [0, e ** 2]], [[0, -1], [1, 0]],
                     [[e ** 4 - e, e ** 2 - e ** 3], [e ** 2 - e ** 3, e - e ** 4]]])
    D5 = pgl2_group([[[e, 0], [0, 1]], [[0, 1], [1, 0]]])
    assert (A4.order, A5.order, D5.order) == (12, 60, 10)
    assert A4.abelian_invariants() == [3]
    assert A5.abelian_invariants() == []
