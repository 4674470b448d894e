"""Ball cardinalities as polynomials in a formal q.

Summing q to the quotient exponent over the vertices of the dilated
alcove gives a lower bound for the vertex count of the radius-r ball;
multiplying by the gamma polynomial (the q-analogue of the point
count of the flag variety) gives the matching upper bound.  Degrees
grow linearly with slope D, the growth exponent, and the two-sided
index sandwich packages the same census for index sums.
"""

from fractions import Fraction

from alcove import (
    ball_sum,
    build_root_datum,
    cind_sandwich,
    gamma_polynomial,
    growth_exponent,
    parse_type,
    quotient_ball_sum,
    theorem_table,
)

a2 = build_root_datum(parse_type("A2"))

print(f"gamma polynomial of A2: {gamma_polynomial(a2).render()}")
for r in (0, 1, 2, 3):
    rep = ball_sum(a2, r)
    print(f"A2 r={r}: lower {rep.lower_poly.render()}")
    print(f"        upper {rep.upper_poly.render()}")
    assert rep.upper_poly == rep.gamma_poly * rep.lower_poly

# degree of the lower bound is r * D exactly at these radii
d = growth_exponent(a2)
for r in (1, 2, 3):
    rep = ball_sum(a2, r)
    print(f"A2 degree at r={r}: {rep.lower_poly.degree} (rD = {r * d})")

# exact evaluation survives huge numbers; q = 3 on G2 at radius 4
g2 = build_root_datum(parse_type("G2"))
rep = ball_sum(g2, 4)
print(f"G2 r=4: {rep.vertex_count_chamber} chamber vertices, "
      f"lower bound at q=3 is {rep.lower_poly.evaluate(3)}")

# capping the level truncates the exponents
print(f"A2 quotient sum r=2 uncapped: {quotient_ball_sum(a2, 2, 2).render()}")
print(f"A2 quotient sum r=2 capped at 1: {quotient_ball_sum(a2, 2, 1).render()}")

# the growth table in one sweep
table = theorem_table(6)
print()
print("type  D      lower  upper")
for row in table.rows:
    name = f"{row.rstype.family}{row.rstype.rank}"
    print(f"{name:<5} {str(row.growth_exponent):<6} "
          f"{str(row.cdim_lower):<6} {row.cdim_upper}")

# a two-sided bound for a level-5 index sum over the radius-0 ball
rep = cind_sandwich(a2, 0, 5)
print()
print(f"A2 sandwich R=0 r=5:")
print(f"  lower: census radius {rep.lower_radius}, "
      f"poly {rep.lower_poly.render()}, divided by {rep.lower_divisor}")
print(f"  upper: census radius {rep.upper_radius} capped at level "
      f"{rep.upper_level}, poly degree {rep.upper_poly.degree}")
for q in (2, 3, 5):
    lo = Fraction(rep.lower_poly.evaluate(q), rep.lower_divisor)
    hi = rep.upper_poly.evaluate(q)
    print(f"  at q={q}: {lo} <= {hi}")
