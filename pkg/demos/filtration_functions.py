"""Concave functions on roots and the filtration indices they measure.

A filtration is described by a concave function: a value at zero plus
a value on every root of both signs.  Vertices give the basic examples
(the function a -> -a(x)), finite vertex sets give their pointwise
maximum, and the optimization step bumps each value to the next
filtration jump.  The index between two nested filtrations is a power
of q whose exponent sums ceiling differences root by root.
"""

from fractions import Fraction as F

from alcove import (
    build_root_datum,
    filtration_contains,
    index_exponent,
    is_concave,
    omega_function,
    optimize,
    origin,
    parabolic_shift,
    parse_type,
    point_function,
    pointwise_max,
    quotient_exponents,
    shift,
)

a2 = build_root_datum(parse_type("A2"))
o = origin(a2)
x = (F(1), F(0))

fo = point_function(a2, o)
fx = point_function(a2, x)
print("point function at o, sampled:")
for root in a2.positive_roots:
    print(f"  value at {root}: {fo(root)}, at -{root}: {fo(tuple(-c for c in root))}")
print(f"concave: {is_concave(a2, fo)}")

# the pointwise maximum over a vertex set is again concave
fmax = omega_function(a2, [o, x])
print(f"omega function of {{o, x}} concave: {is_concave(a2, fmax)}")

# optimization bumps each root value to its next jump; the pointwise
# max of two optimized functions stays concave here
g = optimize(a2, shift(fmax, F(1)))
h = pointwise_max(g, optimize(a2, shift(fx, F(1))))
print(f"optimized shift concave: {is_concave(a2, g)}")
print(f"pointwise max concave:   {is_concave(a2, h)}")

# the omega function dominates each of its point functions, so the
# pair gives a filtration index: exponent of q, root by root
lower = shift(fx, F(2))
upper = shift(fmax, F(2))
idx = index_exponent(a2, lower, upper)
print(f"index exponent: {idx.exponent}")
print(f"per-root contributions: {idx.per_root_contributions}")

# vertex quotient exponents drive the ball-counting polynomials
for point in (o, x, (F(2), F(1))):
    e = quotient_exponents(a2, point)
    print(f"quotient exponent at {tuple(map(str, point))}: {e}")

# deeper filtrations at x sit inside shallower ones at y when every
# root value moves by at most the level gap
y = (F(1), F(1))
print(f"level 3 at x inside level 1 at y: {filtration_contains(a2, x, 3, y, 1)}")
print(f"level 1 at x inside level 0 at y: {filtration_contains(a2, x, 1, y, 0)}")

# parabolic shift: how many positive roots a Levi subset misses
b3 = build_root_datum(parse_type("B3"))
for levi in ([], [1], [1, 2], [1, 2, 3]):
    print(f"B3 parabolic shift for Levi {levi}: {parabolic_shift(b3, levi)}")
