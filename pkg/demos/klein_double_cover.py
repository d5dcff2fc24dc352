"""The double plane branched in the Klein quartic, with the order-42 group."""
from gmpy2 import mpq

from dpa.germ import local_lct
from dpa.invariants import semi_invariant_lines
from dpa.orbits import orbit
from dpa.report import run_classify
from dpa.specfile import catalog_entry

spec = catalog_entry("dp2-klein")
X, ring = spec.model(), spec.ring()
G = spec.group("z2x7:3")
print("|Aut| =", spec.group("full").order, " |G| =", G.order)
for n in (1, 2):
    curves, fams = semi_invariant_lines(X, G, n)
    print("invariant curves in |-%dK|:" % n, [str(c.section) for c in curves] or "none")

P1 = [mpq(1), mpq(0), mpq(0), mpq(0)]
print("orbit of [1:0:0:0]: %d under Aut, %d under G"
      % (orbit(spec.group("full"), P1).length, orbit(G, P1).length))

# tangent sections at the three points: each is cuspidal at its own point
rec = local_lct(X, P1, [(ring.parse(v), 1) for v in ("y", "z", "x")])
print("local lct of C1 + C2 + C3 at [1:0:0:0]:", rec.value, rec.germ_types)

doc, res = run_classify(spec, "z2x7:3")
print(res.describe(), " lct_2 =", res.certificate["lct_2"])
