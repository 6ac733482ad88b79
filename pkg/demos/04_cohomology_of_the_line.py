"""Desk-scale sector cohomology of the line, computed exactly.

Enumerate degree-bounded sector forms, assemble the exterior-derivative
boundary maps as exact rational matrices, and read off kernel, image,
and cohomology ranks.  The constants are the only closed 0-forms, every
1-form is exact, and the only closed 2-form on the line is zero, so the
first three cohomology ranks are 1, 0, 0.

Run me:  python3 demos/04_cohomology_of_the_line.py
"""

from sectorforms import complex_report, sector_basis, singular_basis

# -- bases of degree-bounded sector forms ---------------------------------

for d in (0, 2, 4):
    dims = [len(sector_basis(n, 1, d)) for n in (0, 1, 2)]
    print(f"degree bound {d}: space dimensions by level = {dims}")
print("  # level 1 is d+1 (forms f(x) v), level 2 is 2(d+1) (g v1 v2 + h d)")

sing = [len(singular_basis(n, 1, 4)) for n in (0, 1, 2)]
print("singular (alternating) dimensions at bound 4:", sing,
      " # no nonzero singular 2-forms on the line")

# -- the complex and its cohomology ---------------------------------------

report = complex_report(m=1, d=4, n_max=2)
print("\nlevel dimensions:      ", report.dims)
print("kernel dimensions:     ", report.kernel_dims)
print("boundary ranks (d+1):  ", report.image_ranks_raised)
print("H^0, H^1, H^2:         ", report.cohomology)
print("singular H^0..H^2:     ", report.singular_cohomology)
print("boundary squares to 0: ", report.complex_verified)

# the plane works too, at small degree bounds
plane = complex_report(m=2, d=1, n_max=1)
print("\non the plane (bound 1, one level):")
print("dims:", plane.dims, " H:", plane.cohomology)
