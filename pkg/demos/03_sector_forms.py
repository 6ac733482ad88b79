"""Sector forms on the line and their operator calculus.

A sector n-form is a map from the n-th iterated tangent space that is
linear in each tangent variable.  Degree 1 gives classical one-forms
f(x) dx; degree 2 already holds more: g(x) v1 v2 + h(x) d.  Cofaces
differentiate, codegeneracies restrict along lifts, symmetries permute
tangent levels, and the alternating sum of cofaces is an exterior
derivative that squares to zero.

Run me:  python3 demos/03_sector_forms.py
"""

from sectorforms import (
    FinMap,
    Poly,
    PolyMap,
    SectorForm,
    apply_cardinal_map,
    codegeneracy,
    coface,
    exterior_derivative,
    fundamental_derivative,
    is_alternating,
    is_sector_form,
    line_one_form,
    line_two_form,
    symmetry,
)

x = Poly.var(1, 0)

# -- the multilinearity test is a first-class operation -------------------

good = line_one_form(x * x)          # x^2 dx
v = Poly.var(2, 1)
bad = SectorForm(1, 1, 1, PolyMap(2, 1, (v * v,)))   # v^2 is quadratic
print("x^2 v is a sector form:", is_sector_form(good))
print("v^2  is a sector form:", is_sector_form(bad))

# -- derivatives -----------------------------------------------------------

w0 = SectorForm(0, 1, 1, PolyMap(1, 1, (x * x * x,)))
print("\nfundamental derivative of x^3:", fundamental_derivative(w0).body)

w1 = line_one_form(x * x)
print("fundamental derivative of x^2 v:", fundamental_derivative(w1).body)
print("exterior derivative of x^2 v:", exterior_derivative(w1).body,
      "  # every 1-form on the line is closed")

# the richer degree-2 story: g v1 v2 + h d
g, h = x.scale(3), x * x
w2 = line_two_form(g, h)
print("\nomega = 3x v1 v2 + x^2 d")
print("exterior derivative:", exterior_derivative(w2).body)
print("coface at position 2:", coface(w2, 2).body)
print("codegeneracy:", codegeneracy(w2, 1).body, " # restores h(x) v")
print("symmetry fixes it:", symmetry(w2, 1).body == w2.body)
print("alternating?", is_alternating(w2), " # only the zero 2-form on R is")

# d ; d = 0, exactly
dd = exterior_derivative(exterior_derivative(w2))
print("d(d omega) = 0:", dd.is_zero)

# -- arbitrary maps of cardinals act on forms ------------------------------

skip = FinMap(1, 2, (1,))     # the coface 1 -> 2 missing the value 2
acted = apply_cardinal_map(w1, skip)
print("\nacting by the skip 1->2 equals the coface at 2:",
      acted.body == coface(w1, 2).body)
