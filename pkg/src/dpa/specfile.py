"""Surface/group input documents (YAML, `spec_version: 1`) and the built-in catalog.

A document names an ambient kind, coordinates, equations, a cyclotomic
conductor, named groups given by per-variable images, attested hypotheses,
and expected results.  Exact numbers are strings ("5/3", "zeta(8)^3").
"""
from dataclasses import dataclass, field as dfield
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import yaml

from .surface import SurfaceModel, ModelError, KINDS
from .wpoly import WeightedRing, ParseError, zeta_conductor
from .field import conductor_lcm
from .group import FiniteGroupAction, ProjAuto, GroupError, preserves

SPEC_VERSION = 1

_WEIGHTS = {
    "P2": (1, 1, 1),
    "sextic": (1, 1, 2, 3),
    "quartic": (1, 1, 1, 2),
    "cubic": (1, 1, 1, 1),
    "quadric_pair": (1, 1, 1, 1, 1),
}


class SpecError(ValueError):
    def __init__(self, message, location=None):
        self.location = location
        super().__init__("%s: %s" % (location, message) if location else message)


class WeightMismatch(SpecError):
    pass


class DoesNotPreserveIdeal(SpecError):
    pass


@dataclass
class GroupSpec:
    name: str
    generators: list = dfield(default_factory=list)
    full_automorphism_group: bool = False
    hypotheses: dict = dfield(default_factory=dict)
    order: int = None
    label: str = None

    def hypothesis_values(self):
        out = {}
        for k, v in self.hypotheses.items():
            out[k] = v["value"] if isinstance(v, dict) and "value" in v else v
        out["full_automorphism_group"] = self.full_automorphism_group
        if self.order is not None:
            out.setdefault("group_order", self.order)
        return out


@dataclass
class Expectation:
    group: str
    anchor: str
    value: str = None
    lower: str = None
    upper: str = None
    exact: bool = None
    exceeds_one: bool = None
    rule: str = None
    invariants: dict = None  # {"n": 2, "curves": 4, "families": 0}
    orbit: dict = None  # {"point": [...], "length": 24}

    def to_dict(self):
        d = {"group": self.group}
        for k in ("value", "lower", "upper", "exact", "exceeds_one", "rule", "invariants", "orbit"):
            v = getattr(self, k)
            if v is not None:
                d[k] = v
        d["anchor"] = self.anchor
        return d


@dataclass
class SurfaceSpec:
    key: str
    kind: str
    variables: list = dfield(default_factory=list)
    weights: list = None
    gradings: list = None
    conductor: int = 1
    equations: list = dfield(default_factory=list)
    descriptor: dict = dfield(default_factory=dict)
    groups: dict = dfield(default_factory=dict)
    expected: list = dfield(default_factory=list)
    label: str = None
    notes: str = None

    def __post_init__(self):
        self._ring = None
        self._model = None
        self._groups = {}

    # ---------------------------------------------------------------- builders
    def ring(self):
        if self._ring is None:
            if self.gradings:
                self._ring = WeightedRing(tuple(self.variables), gradings=[tuple(g) for g in self.gradings])
            else:
                self._ring = WeightedRing(tuple(self.variables), tuple(self.weights or ()))
        return self._ring

    def model(self):
        if self._model is None:
            if self.kind == "descriptor":
                self._model = SurfaceModel("descriptor", WeightedRing(()), [], label=self.label,
                                           descriptor=dict(self.descriptor))
            else:
                R = self.ring()
                eqs = [R.parse(e, self.conductor) for e in self.equations]
                self._model = SurfaceModel(self.kind, R, eqs, label=self.label)
        return self._model

    def default_group(self):
        for name, g in self.groups.items():
            if g.full_automorphism_group:
                return name
        return next(iter(self.groups), None)

    def group(self, name=None):
        """The group action (None for descriptor kinds, which carry only an order)."""
        name = name or self.default_group()
        if name not in self.groups:
            raise SpecError("no group named %r (have %s)" % (name, ", ".join(self.groups)), "groups")
        if self.kind == "descriptor":
            return None
        if name not in self._groups:
            gs = self.groups[name]
            R = self.ring()
            gens = gs.generators or [list(self.variables)]
            self._groups[name] = FiniteGroupAction(R, gens, bound=5000, name=gs.label or name,
                                                   conductor=self.conductor)
        return self._groups[name]

    def hypotheses(self, name=None):
        name = name or self.default_group()
        return self.groups[name].hypothesis_values()

    # ---------------------------------------------------------------- output
    def to_dict(self):
        d = {"spec_version": SPEC_VERSION, "key": self.key}
        if self.label:
            d["label"] = self.label
        d["kind"] = self.kind
        if self.kind == "descriptor":
            d["descriptor"] = dict(self.descriptor)
        else:
            d["variables"] = list(self.variables)
            if self.gradings:
                d["gradings"] = [list(g) for g in self.gradings]
            else:
                d["weights"] = list(self.weights)
            d["conductor"] = self.conductor
            d["equations"] = list(self.equations)
        groups = {}
        for name, g in self.groups.items():
            gd = {}
            if g.label:
                gd["label"] = g.label
            if g.generators:
                gd["generators"] = [list(x) for x in g.generators]
            if g.order is not None:
                gd["order"] = g.order
            gd["full_automorphism_group"] = g.full_automorphism_group
            if g.hypotheses:
                gd["hypotheses"] = dict(g.hypotheses)
            groups[name] = gd
        d["groups"] = groups
        if self.expected:
            d["expected"] = [e.to_dict() for e in self.expected]
        if self.notes:
            d["notes"] = self.notes
        return d


# -------------------------------------------------------------------- parsing

def _need(d, k, loc):
    if k not in d:
        raise SpecError("missing field %r" % k, loc)
    return d[k]


def _rational_text(v, loc):
    if v is None:
        return None
    try:
        return str(Fraction(str(v)))
    except (ValueError, ZeroDivisionError):
        raise SpecError("not an exact rational: %r" % (v,), loc)


def parse_spec(text, validate=True):
    """Parse a YAML document (or an already-loaded mapping) into a SurfaceSpec."""
    if isinstance(text, str):
        try:
            doc = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            loc = "line %d, column %d" % (mark.line + 1, mark.column + 1) if mark else None
            raise SpecError("malformed YAML (%s)" % getattr(e, "problem", e), loc)
    else:
        doc = text
    if not isinstance(doc, dict):
        raise SpecError("document must be a mapping")
    if doc.get("spec_version") != SPEC_VERSION:
        raise SpecError("unsupported spec_version %r" % doc.get("spec_version"), "spec_version")
    key = str(doc.get("key") or doc.get("label") or "unnamed")
    kind = _need(doc, "kind", "kind")
    if kind not in KINDS:
        raise SpecError("unknown kind %r (one of %s)" % (kind, ", ".join(KINDS)), "kind")
    spec = SurfaceSpec(key=key, kind=kind, label=doc.get("label"), notes=doc.get("notes"))
    if kind == "descriptor":
        spec.descriptor = dict(_need(doc, "descriptor", "descriptor"))
        if "degree" not in spec.descriptor:
            raise SpecError("descriptor needs a degree", "descriptor")
    else:
        spec.variables = [str(v) for v in _need(doc, "variables", "variables")]
        if len(set(spec.variables)) != len(spec.variables):
            raise SpecError("repeated variable names", "variables")
        if kind == "P1xP1":
            spec.gradings = [list(g) for g in doc.get("gradings", [[1, 1, 0, 0], [0, 0, 1, 1]])]
            if any(len(g) != len(spec.variables) for g in spec.gradings):
                raise SpecError("grading length differs from the number of variables", "gradings")
        else:
            spec.weights = list(doc.get("weights", _WEIGHTS[kind]))
            if len(spec.weights) != len(spec.variables):
                raise SpecError("%d weights for %d variables" % (len(spec.weights), len(spec.variables)),
                                "weights")
        spec.equations = [str(e) for e in doc.get("equations", [])]
        m = int(doc.get("conductor", 1))
        for e in spec.equations:
            m = conductor_lcm(m, zeta_conductor(e))
        spec.conductor = m
    groups = doc.get("groups") or {}
    if not isinstance(groups, dict):
        raise SpecError("groups must be a mapping name -> group", "groups")
    for name, gd in groups.items():
        loc = "groups.%s" % name
        gd = gd or {}
        gens = [[str(s) for s in g] for g in gd.get("generators", [])]
        spec.groups[str(name)] = GroupSpec(
            name=str(name), generators=gens,
            full_automorphism_group=bool(gd.get("full_automorphism_group", False)),
            hypotheses=dict(gd.get("hypotheses") or {}),
            order=int(gd["order"]) if gd.get("order") is not None else None,
            label=gd.get("label"))
        if kind != "descriptor":
            for j, g in enumerate(gens):
                for s in g:
                    spec.conductor = conductor_lcm(spec.conductor, zeta_conductor(s))
                if len(g) != len(spec.variables):
                    raise SpecError("generator needs %d images, got %d" % (len(spec.variables), len(g)),
                                    "%s.generators[%d]" % (loc, j))
        elif spec.groups[str(name)].order is None:
            raise SpecError("descriptor groups need an order", loc)
    for i, ed in enumerate(doc.get("expected") or []):
        loc = "expected[%d]" % i
        if not isinstance(ed, dict):
            raise SpecError("expectation must be a mapping", loc)
        anchor = ed.get("anchor")
        if not anchor:
            raise SpecError("expectation without an anchor", loc)
        g = str(ed.get("group", spec.default_group()))
        if g not in spec.groups:
            raise SpecError("unknown group %r" % g, loc)
        spec.expected.append(Expectation(
            group=g, anchor=str(anchor),
            value=_rational_text(ed.get("value"), loc + ".value"),
            lower=_rational_text(ed.get("lower"), loc + ".lower"),
            upper=_rational_text(ed.get("upper"), loc + ".upper"),
            exact=ed.get("exact"), exceeds_one=ed.get("exceeds_one"), rule=ed.get("rule"),
            invariants=ed.get("invariants"), orbit=ed.get("orbit")))
    if validate:
        validate_spec(spec)
    return spec


def validate_spec(spec):
    """Homogeneity, weight compatibility of generators, and ideal preservation."""
    if spec.kind == "descriptor":
        return spec
    R = spec.ring()
    for i, e in enumerate(spec.equations):
        try:
            R.parse(e, spec.conductor)
        except (ParseError, ValueError) as exc:
            raise SpecError(str(exc), "equations[%d]" % i)
    try:
        X = spec.model()
    except ModelError as exc:
        raise SpecError(str(exc), "equations")
    # canonical text for the equations
    spec.equations = [str(f) for f in X.equations]
    for name, gs in spec.groups.items():
        for j, g in enumerate(gs.generators):
            loc = "groups.%s.generators[%d]" % (name, j)
            _check_weights(R, g, spec.conductor, loc)
            try:
                aut = ProjAuto.from_images(R, g, spec.conductor)
            except (GroupError, ParseError, ValueError) as exc:
                raise SpecError(str(exc), loc)
            if not preserves(X, aut):
                raise DoesNotPreserveIdeal("generator does not map the surface to itself", loc)
    return spec


def _check_weights(R, images, m, loc):
    for i, s in enumerate(images):
        try:
            p = R.parse(s, m)
        except (ParseError, ValueError) as exc:
            raise SpecError(str(exc), "%s[%d]" % (loc, i))
        for e in p.terms:
            if sum(e) != 1:
                raise SpecError("image of %s is not linear" % R.names[i], "%s[%d]" % (loc, i))
            j = e.index(1)
            if len(R.gradings) == 1 and R.weights[j] != R.weights[i]:
                raise WeightMismatch("%s (weight %d) sent to a multiple of %s (weight %d)" % (
                    R.names[i], R.weights[i], R.names[j], R.weights[j]), "%s[%d]" % (loc, i))


def serialize_spec(spec):
    return yaml.safe_dump(spec.to_dict(), sort_keys=False, allow_unicode=True, width=100)


# -------------------------------------------------------------------- catalog

@lru_cache(maxsize=None)
def _catalog_docs():
    text = resources.files("dpa").joinpath("data/catalog.yaml").read_text(encoding="utf-8")
    return tuple(d for d in yaml.safe_load_all(text) if d)


def catalog_keys():
    return [d["key"] for d in _catalog_docs()]


_CATALOG = {}


def catalog_entry(key):
    if key not in _CATALOG:
        for d in _catalog_docs():
            if d["key"] == key:
                _CATALOG[key] = parse_spec(d)
                break
        else:
            raise KeyError("no catalog entry %r" % key)
    return _CATALOG[key]


def load_catalog():
    return {k: catalog_entry(k) for k in catalog_keys()}
