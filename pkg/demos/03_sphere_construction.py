"""
Sphere lower-bound construction
===============================

Bucketing an integer grid by exact squared distance to the origin leaves
one sphere holding a positive fraction of the points.  Spheres carry no
three collinear points, which upgrades the forbidden pattern from pairs
to triples: with normals admissible for (d-2)-subspaces, no three points
share more than t_measured hyperplanes.
"""

from inclab import (
    ConstructionConfig,
    IncidenceInstance,
    build_sphere_construction,
    find_collinear_triple,
    find_kst,
    verify_construction,
)

cfg = ConstructionConfig(d=4, m=150, n=400, seed=7, s=3)
out = build_sphere_construction(cfg)

radius_sq = sum(c * c for c in out.points[0].coords)
print(f"points: {len(out.points)} on the sphere |x|^2 = {radius_sq}")
print(f"hyperplanes: {len(out.flats)} ({out.padding_start} core)")
print(f"normals |V| = {len(out.normals_used)}, measured t = {out.t_measured}")
for note in out.notes:
    print("  note:", note)

# every point has the same exact squared norm
assert {sum(c * c for c in p.coords) for p in out.points} == {radius_sq}

# a line meets a sphere at most twice: checked exhaustively
assert find_collinear_triple(out.points) is None
print("\nno three points are collinear: verified exhaustively")

# triple freeness at the measured parameter
inst = IncidenceInstance(out.points, out.flats, 3, out.t_measured + 1)
assert find_kst(inst) is None
print(f"no K_(3,{out.t_measured + 1}): verified")

report = verify_construction(out, s=3, t=out.t_measured + 1)
print(f"\ncore count = {report.core_count} (predicted {report.predicted_count})")
print(f"counts agree across strategies: {report.counts_agree}")
print(f"predicted lower-bound exponents (m, n): {report.predicted_exponents}")
