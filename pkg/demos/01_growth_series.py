"""Growth series of a few Coxeter groups.

Finite groups give polynomials (Poincare polynomials), affine and
hyperbolic ones give rational functions with a pole inside the unit disc
or on it.  Run with ``python3 demos/01_growth_series.py``.
"""

from coxgrowth.graph import symbol_to_graph
from coxgrowth.growth import euler_characteristic, growth_series, reciprocity_type, series_coefficients

# a finite group: the numerator is [2][3][4], the order is 24
f = growth_series(symbol_to_graph("[3,3]"))
print("A3   numerator:", f.numerator, " f(1) =", f.numerator(1))

# affine: the triangle group [3,6] grows polynomially
f = growth_series(symbol_to_graph("[3,6]"))
print("[3,6] first coefficients:", series_coefficients(f, 10))

# the hyperbolic triangle group [7,3]
f = growth_series(symbol_to_graph("[7,3]"))
print("[7,3] numerator  :", f.numerator)
print("[7,3] denominator:", f.denominator)
print("[7,3] a_0..a_15  :", series_coefficients(f, 15))
print("reciprocity      :", reciprocity_type(f))
print("Euler char.      :", euler_characteristic(f))

# a compact 4-dimensional simplex group, denominator of degree 60
f = growth_series(symbol_to_graph("[5,3,3,3]"))
print("[5,3,3,3] denominator degree", f.denominator.degree, "reciprocity", reciprocity_type(f))
