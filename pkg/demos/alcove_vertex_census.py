"""Vertices of the dilated fundamental alcove, listed and classified.

The fundamental alcove is cut out by the simple roots and the highest
root; dilating it by an integer r keeps the corner at the origin and
pushes the far wall out to level r.  Its vertices are the points whose
simple-coweight coordinates are integers divided by the matching mark.
"""

from fractions import Fraction

from alcove import (
    alcove_vertex,
    build_root_datum,
    enumerate_scaled_alcove_vertices,
    is_special,
    max_two_rho,
    growth_exponent,
    parse_type,
    vertex_type,
)

b2 = build_root_datum(parse_type("B2"))

# the corners of the alcove itself are the type representatives
print("alcove corners of B2:")
for i in range(b2.rank + 1):
    v = alcove_vertex(b2, i)
    tag = "special" if is_special(b2, v) else "not special"
    print(f"  corner {i}: {v}  ({tag})")
print()

for r in (1, 2, 3):
    vs = enumerate_scaled_alcove_vertices(b2, r)
    counts = [0] * (b2.rank + 1)
    for x in vs.points:
        counts[vertex_type(b2, x)] += 1
    print(f"B2 alcove dilated by {r}: {len(vs.points)} vertices, "
          f"{counts} by type")

# the census at r = 2 in full
print()
print("the r = 2 vertices:")
for x in enumerate_scaled_alcove_vertices(b2, 2).points:
    print(f"  {tuple(str(c) for c in x)}  type {vertex_type(b2, x)}")

# the height functional 2rho peaks at a corner of the dilated alcove,
# and the peak value grows linearly with slope D
print()
for name in ("A3", "C3", "G2"):
    datum = build_root_datum(parse_type(name))
    d = growth_exponent(datum)
    for r in (1, 2, 3):
        peak = max_two_rho(datum, r)
        assert peak == r * d
        print(f"{name}: max 2rho over the r={r} alcove is {peak} = {r} * {d}")

# counts never exceed the obvious box bound prod(floor(N r / c_i) + 1)
print()
g2 = build_root_datum(parse_type("G2"))
r = 3
n = len(enumerate_scaled_alcove_vertices(g2, r).points)
box = 1
for c in g2.highest_root_coeffs:
    box *= (g2.scale * r) // c + 1
print(f"G2 r={r}: {n} vertices inside the box bound {box}")
assert n <= box
