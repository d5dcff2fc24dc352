"""lct on P1 x P1 for products of binary polyhedral images, against lct_p1 of the factors."""
from dpa.field import format_rational
from dpa.report import run_classify
from dpa.specfile import catalog_entry

spec = catalog_entry("p1xp1")
for name in spec.groups:
    doc, res = run_classify(spec, name)
    print("%-8s %s" % (name, res.describe()))
    f = res.certificate.get("factors")
    if f:
        print("         factor orders %s, %s; lct_p1 %s" % (f["G1"], f["G2"], ", ".join(map(format_rational, f["lct_p1"]))))
