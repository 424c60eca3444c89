"""
Complex hyperplanes as real flats
=================================

A hyperplane in C^d becomes a (2d-2)-flat in R^{2d} under the
coordinatewise (real, imaginary) map, and incidences survive the trip in
both directions.  That reduction carries point/hyperplane incidence
problems over C into the real toolkit; with it, embedded versions of the
real grid construction witness the complex bound's tightness.
"""

from fractions import Fraction
from random import Random

from inclab import (
    ComplexHyperplane,
    ComplexRational,
    contains,
    embed_complex_hyperplane,
    embed_complex_point,
)

# the plane i*z1 + z3 = 1 + i in C^3
i = ComplexRational(0, 1)
h = ComplexHyperplane((i, ComplexRational(0, 0), ComplexRational(1, 0)),
                      ComplexRational(1, 1))
flat = embed_complex_hyperplane(h)
print(f"C^3 hyperplane -> {flat.dim}-flat in R^{flat.ambient_dim}")
print("real equations:")
for row, c in zip(flat.equations, flat.rhs):
    terms = " + ".join(f"{a}*x{j}" for j, a in enumerate(row) if a != 0)
    print(f"  {terms} = {c}")

rng = Random(3)


def rand_complex():
    return ComplexRational(
        Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
    )


# points on the hyperplane stay on the flat; points off it stay off
on_count = off_count = 0
for _ in range(200):
    z1, z2 = rand_complex(), rand_complex()
    if rng.random() < 0.5:
        z3 = h.b - i * z1          # solved onto the hyperplane
    else:
        z3 = rand_complex()        # almost surely off it
    point = (z1, z2, z3)
    inside = h.contains(point)
    assert inside == contains(flat, embed_complex_point(point))
    on_count += inside
    off_count += not inside

print(f"\nmembership preserved on {on_count} incident and {off_count}"
      " non-incident random points")
