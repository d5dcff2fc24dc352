import pytest
import yaml

from dpa.specfile import (parse_spec, serialize_spec, catalog_keys, catalog_entry, load_catalog,
                          SpecError, WeightMismatch, DoesNotPreserveIdeal)

BASE = """
spec_version: 1
key: fermat-like
kind: quartic
variables: [x, y, z, t]
weights: [1, 1, 1, 2]
equations: ["t^2 - x^4 - y^4 - z^4"]
groups:
  g:
    generators:
      - ["y", "x", "z", "t"]
expected:
  - {group: g, exceeds_one: false, anchor: "example"}
"""


def test_round_trip():
    spec = parse_spec(BASE)
    again = parse_spec(serialize_spec(spec))
    assert again.to_dict() == spec.to_dict()
    assert spec.group("g").order == 2


@pytest.mark.parametrize("key", catalog_keys())
def test_catalog_round_trip(key):
    spec = catalog_entry(key)
    assert parse_spec(serialize_spec(spec), validate=False).to_dict() == spec.to_dict()


def test_catalog():
    keys = catalog_keys()
    assert len(keys) >= 12 and len(set(keys)) == len(keys)
    assert len(load_catalog()) == len(keys)
    spec = catalog_entry("dp1-s4")
    assert spec.ring().parse(spec.equations[0]) == spec.ring().parse("t^2 - z^3 - x*y*(x^4 - y^4)")
    with pytest.raises(KeyError):
        catalog_entry("nope")


def _bad(**changes):
    doc = yaml.safe_load(BASE)
    doc.update(changes)
    return doc


def test_weight_mismatch():
    with pytest.raises(WeightMismatch) as e:
        parse_spec(_bad(groups={"g": {"generators": [["x", "y", "z", "x"]]}}))
    assert e.value.location.startswith("groups.g")


def test_does_not_preserve():
    with pytest.raises(DoesNotPreserveIdeal):
        parse_spec(_bad(groups={"g": {"generators": [["2*x", "y", "z", "t"]]}}))


@pytest.mark.parametrize("changes,where", [
    ({"spec_version": 2}, "spec_version"),
    ({"kind": "cubic3fold"}, "kind"),
    ({"weights": [1, 1, 1]}, "weights"),
    ({"equations": ["t^2 - x^4 +"]}, "equations"),
    ({"expected": [{"group": "h", "anchor": "x"}]}, "expected"),
])
def test_located_errors(changes, where):
    with pytest.raises(SpecError) as e:
        parse_spec(_bad(**changes))
    assert where in str(e.value.location)


def test_malformed_yaml():
    with pytest.raises(SpecError):
        parse_spec("key: [unclosed")
