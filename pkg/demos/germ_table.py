"""lct of plane curve germs by the Newton polygon and by blowing up."""
from dpa.field import format_rational
from dpa.germ import germ_from_poly, newton_lct, resolve_and_lct, classify_germ, NondegeneracyFailure

GERMS = ["x*y", "x^2 + y^3", "x^2 + y^4", "x^3 + y^3", "x^2 + y^5", "x^3 + y^4",
         "x^2*y + y^4", "(x + y)^2 + y^3"]

for poly in GERMS:
    g = germ_from_poly(poly)
    value, (tree,) = resolve_and_lct([(g, 1)])
    try:
        nl = format_rational(newton_lct(g))
    except NondegeneracyFailure:
        nl = "-"
    print("%-18s %-27s newton %-5s resolution %-5s (%d nodes)" % (
        poly, classify_germ(g), nl, format_rational(value), tree.count()))
