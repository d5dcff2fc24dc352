from gmpy2 import mpq
import pytest

from dpa.engine import (classify, check_value_set, gafa_lct_trivial, lct_upper_from_invariant_curves,
                        LctResult, RULE_VALUES)
from dpa.field import zeta
from dpa.group import pgl2_group
from dpa.invariants import semi_invariant_lines
from dpa.orbits import lct_p1
from dpa.specfile import catalog_entry, catalog_keys

# exact values from the lemmas and examples each entry is anchored to
EXACT = [
    ("dp1-d12", "full", "2", "dP1-lct-lct2"),
    ("dp2-klein", "z2x7:3", "15/8", "dP2-lct-lct2"),
    ("dp2-z2cubed", "full", "1", "dP2-lct-lct1"),
    ("dp3-clebsch", "full", "2", "dP3-Clebsch-lookup"),
    ("dp3-fermat", "full", "4", "dP3-Fermat-lookup"),
    ("dp3-s4cubic", "full", "1", "dP3-lct-lct1"),
    ("dp4-epsilon3", "full", "2", "dP4-2K"),
    ("dp4-epsilon5", "full", "2", "dP4-2K"),
    ("dp4-epsilon5", "gamma", "1", "dP4-Gamma"),
    ("p1xp1", "a4xa4", "2", "lct-product"),
    ("p1xp1", "d5xa5", "1", "lct-product"),
    ("p1xp1", "trivial", "1/2", "GAFA"),
    ("dp7", "z2", "1/3", "dP7"),
]

# (surface, subgroup, group) with the subgroup contained in the group
CHAINS = [
    ("dp2-klein", "z2x7:3", "full"), ("dp4-epsilon3", "gamma", "full"),
    ("dp4-epsilon5", "gamma", "full"), ("p2-hessian", "hessian72", "hessian"),
    ("dp5", "a5", "s5"), ("dp5", "d5", "a5"), ("dp5", "z5", "d5"), ("dp5", "d5", "z5:z4"),
    ("dp5", "trivial", "z5"), ("dp7", "trivial", "z2"), ("p1xp1", "trivial", "d5xa5"),
]

FINITE_AUT = ["dp1-s4", "dp1-d12", "dp2-klein", "dp2-z2cubed", "dp3-clebsch", "dp3-fermat",
              "dp3-s4cubic", "dp4-epsilon3", "dp4-epsilon5"]


@pytest.mark.parametrize("key,group,value,rule", EXACT)
def test_exact_values(lct_of, key, group, value, rule):
    r = lct_of(key, group)
    assert r.exact and r.value == mpq(value) and r.rule == rule
    assert check_value_set(r)


def test_klein_certificate(lct_of):
    r = lct_of("dp2-klein", "z2x7:3")
    assert r.certificate["lct_2"] == 2


@pytest.mark.parametrize("key,group", [("p2-klein", "psl27"), ("p2-hessian", "hessian"),
                                       ("p2-hessian", "hessian72")])
def test_plane_intervals(lct_of, key, group):
    r = lct_of(key, group)
    assert r.lower == mpq(4, 3) and not r.exact and r.upper == 2


def test_big_degree_bounds(lct_of):
    assert lct_of("dp6", "full").upper == 1
    assert lct_of("dp8", "z2").upper == mpq(1, 2)
    table = {"s5": 2, "a5": 2, "z5:z4": 1, "d5": mpq(4, 5), "z5": mpq(4, 5), "trivial": mpq(1, 2)}
    for name, v in table.items():
        assert lct_of("dp5", name).value == v


def _binary(name):
    i, e = zeta(4), zeta(5)
    gens = {
        "a4": [[[1, 0], [0, -1]], [[0, 1], [1, 0]], [[1, i], [1, -i]]],
        "a5": [[[e ** 3, 0], [0, e ** 2]], [[0, -1], [1, 0]],
               [[e ** 4 - e, e ** 2 - e ** 3], [e ** 2 - e ** 3, e - e ** 4]]],
        "d5": [[[e, 0], [0, 1]], [[0, 1], [1, 0]]],
    }[name]
    return pgl2_group(gens)


@pytest.mark.parametrize("name,f1,f2", [("a4xa4", "a4", "a4"), ("d5xa5", "d5", "a5")])
def test_product_rule(lct_of, name, f1, f2):
    r = lct_of("p1xp1", name)
    l1, l2 = lct_p1(_binary(f1)), lct_p1(_binary(f2))
    assert r.value == min(l1, l2)
    # the Shokurov criterion on each factor: lct > 1 iff no orbit of length <= 2
    assert (r.value > 1) == (l1 > 1 and l2 > 1)
    assert sorted(map(mpq, r.certificate["factors"]["lct_p1"])) == sorted([l1, l2])


@pytest.mark.parametrize("key", [k for k in catalog_keys() if catalog_entry(k).kind != "descriptor"])
def test_trivial_group(key):
    X = catalog_entry(key).model()
    r = classify(X, None)
    assert r.rule == "GAFA" and r.value == gafa_lct_trivial(X)
    assert r.value in RULE_VALUES["GAFA"]


@pytest.mark.parametrize("key,sub,group", CHAINS)
def test_group_monotonicity(lct_of, key, sub, group):
    a, b = lct_of(key, sub), lct_of(key, group)
    if a.exact and b.exact:
        assert a.value <= b.value
    if a.lower is not None and b.upper is not None:
        assert a.lower <= b.upper


@pytest.mark.parametrize("key,group,value,rule", [e for e in EXACT if catalog_entry(e[0]).kind != "descriptor"])
def test_upper_bound_sound(lct_of, key, group, value, rule):
    # every invariant curve found in |-nK|, n <= 2, bounds the exact value from above
    spec = catalog_entry(key)
    u, _ = lct_upper_from_invariant_curves(spec.model(), spec.group(group), 2)
    if u is not None:
        assert mpq(value) <= u


@pytest.mark.parametrize("key", FINITE_AUT)
def test_exceeds_one_iff_no_invariant_anticanonical_curve(lct_of, key):
    spec = catalog_entry(key)
    r = lct_of(key)
    curves, fams = semi_invariant_lines(spec.model(), spec.group(), 1)
    above = r.lower is not None and r.lower > 1
    assert above == (not curves and not fams)


def test_result_bounds_ordered():
    with pytest.raises(ValueError):
        LctResult(mpq(2), mpq(1), "x")
