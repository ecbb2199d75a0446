"""Growth rates as certified real algebraic numbers, with their number class.

Each rate comes as an isolating interval around the largest real root of
the reversed denominator; the class (Salem, Pisot, Perron) is decided
exactly where possible and labelled heuristic otherwise.
"""

from coxgrowth import corpus
from coxgrowth.growth import growth_series
from coxgrowth.roots import classify_number, growth_rate

names = ["triangle-7-3", "triangle-8-3", "triangle-inf-3", "tetrahedral-353",
         "lanner-5333", "lambert-q", "makarov", "kaplinskaja"]

for name in names:
    f = growth_series(corpus.get(name).graph)
    tau = growth_rate(f)
    cls = classify_number(tau.poly, tau)
    lo, hi = tau.interval_strings(12)
    flags = ", ".join(sorted(cls.flags)) or "-"
    print(f"{name:16s} tau = {tau.decimal(7)}  in [{lo}, {hi}]  deg {tau.poly.degree:2d}  {flags}")

# how each flag was decided for the Lanner group
tau = growth_rate(growth_series(corpus.get("lanner-5333").graph))
print(classify_number(tau.poly, tau).as_dict())
