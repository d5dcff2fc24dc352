"""Running catalog entries and checking their expected results."""
from dataclasses import dataclass

from gmpy2 import mpq

from .engine import classify, Undecided, HypothesisMissing
from .field import ExtensionRequired, FieldError
from .groebner import PositiveDimensional
from .germ import TruncationInsufficient, DepthCap
from .invariants import semi_invariant_lines, semi_invariant_sections
from .orbits import orbit, orbits_of_length_at_most

# failures of the engine that are reported rather than raised
ENGINE_ERRORS = (Undecided, HypothesisMissing, ExtensionRequired, FieldError, PositiveDimensional,
                 TruncationInsufficient, DepthCap)


def run_classify(spec, group=None, n_max=None):
    """Classify one (surface, group) pair; returns the report document."""
    name = group or spec.default_group()
    G = spec.group(name)
    res = classify(spec.model(), G, spec.hypotheses(name), n_max=n_max)
    return {"key": spec.key, "group": name, "label": spec.groups[name].label,
            "result": res.to_dict(), "summary": res.describe()}, res


def invariants_report(spec, n=None, degree=None, group=None):
    name = group or spec.default_group()
    G = spec.group(name)
    X = spec.model()
    if degree is not None:
        curves, fams = semi_invariant_sections(X, G, degree)
    else:
        curves, fams = semi_invariant_lines(X, G, n)
    return {"key": spec.key, "group": name, "n": n, "degree": degree,
            "curves": [str(c.section) for c in curves],
            "families": [[str(s) for s in f.sections] for f in fams]}


def orbits_report(spec, k, group=None):
    name = group or spec.default_group()
    G = spec.group(name)
    recs, fams = orbits_of_length_at_most(spec.model(), G, k)
    return {"key": spec.key, "group": name, "k": k,
            "orbits": [{"length": r.length, "stabilizer_order": r.stabilizer_order,
                        "points": [str(p) for p in r.points]} for r in recs],
            "fixed_curves": [{"index": f.index, "subgroup_order": f.subgroup_order} for f in fams]}


def _number(spec, text):
    p = spec.ring().parse(str(text), spec.conductor)
    if not p:
        return mpq(0)
    (e, c), = p.terms.items()
    if any(e):
        raise ValueError("not a number: %r" % text)
    return c


@dataclass
class Check:
    key: str
    group: str
    what: str
    expected: str
    got: str
    ok: bool
    anchor: str

    def line(self):
        return "%s  %s[%s] %s: expected %s, got %s  (%s)" % (
            "ok  " if self.ok else "FAIL", self.key, self.group, self.what, self.expected, self.got,
            self.anchor)

    def to_dict(self):
        return dict(self.__dict__)


def check_entry(spec, n_max=None, cache=None):
    """All expectations of one catalog entry, in document order."""
    cache = {} if cache is None else cache
    out = []
    for exp in spec.expected:
        g = exp.group

        def result():
            if g not in cache:
                try:
                    cache[g] = run_classify(spec, g, n_max)[1]
                except ENGINE_ERRORS as e:
                    cache[g] = e
            return cache[g]

        if exp.invariants is not None:
            inv = exp.invariants
            rep = invariants_report(spec, n=inv.get("n"), degree=inv.get("degree"), group=g)
            got = {"curves": len(rep["curves"]), "families": len(rep["families"])}
            want = {k: inv[k] for k in ("curves", "families") if k in inv}
            where = "n=%s" % inv["n"] if "n" in inv else "degree %s" % inv.get("degree")
            out.append(Check(spec.key, g, "invariant curves at %s" % where, str(want),
                             str({k: got[k] for k in want}), all(got[k] == v for k, v in want.items()),
                             exp.anchor))
        if exp.orbit is not None:
            P = [_number(spec, c) for c in exp.orbit["point"]]
            rec = orbit(spec.group(g), P)
            out.append(Check(spec.key, g, "orbit length of %s" % exp.orbit["point"],
                             str(exp.orbit["length"]), str(rec.length),
                             rec.length == int(exp.orbit["length"]), exp.anchor))
        if exp.value is not None or exp.lower is not None or exp.upper is not None or exp.exceeds_one is not None:
            r = result()
            if isinstance(r, Exception):
                out.append(Check(spec.key, g, "lct", _describe_exp(exp), "%s: %s" % (type(r).__name__, r),
                                 False, exp.anchor))
                continue
            ok = True
            if exp.value is not None:
                ok = ok and r.exact and r.value == mpq(exp.value)
            if exp.lower is not None:
                ok = ok and r.lower == mpq(exp.lower)
            if exp.upper is not None:
                ok = ok and r.upper == mpq(exp.upper)
            if exp.exact is not None:
                ok = ok and r.exact == bool(exp.exact)
            if exp.rule is not None:
                ok = ok and r.rule == exp.rule
            if exp.exceeds_one is not None:
                if r.lower is not None and r.lower > 1:
                    gt = True
                elif r.upper is not None and r.upper <= 1:
                    gt = False
                else:
                    gt = None
                ok = ok and gt == bool(exp.exceeds_one)
            out.append(Check(spec.key, g, "lct", _describe_exp(exp), r.describe(), ok, exp.anchor))
    return out


def _describe_exp(exp):
    parts = []
    if exp.value is not None:
        parts.append("lct = %s" % exp.value)
    if exp.lower is not None:
        parts.append("lower %s" % exp.lower)
    if exp.upper is not None:
        parts.append("upper %s" % exp.upper)
    if exp.exact is not None:
        parts.append("exact" if exp.exact else "not exact")
    if exp.exceeds_one is not None:
        parts.append("lct > 1" if exp.exceeds_one else "lct <= 1")
    if exp.rule:
        parts.append("[%s]" % exp.rule)
    return ", ".join(parts)


def verify_catalog(specs, n_max=None):
    checks = []
    for spec in specs:
        checks.extend(check_entry(spec, n_max))
    return checks
