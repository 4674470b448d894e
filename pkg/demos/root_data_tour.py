"""A tour of the root data behind every other computation.

Each irreducible type is built from its Cartan matrix alone: positive
roots by closure under simple reflections, the highest root, the mark
of each simple root inside it, and the coefficient vector of the sum
of all positive roots.  Everything is exact; no floats appear.
"""

from math import prod

from alcove import build_root_datum, growth_exponent, parse_type, weyl_degrees

for name in ("A2", "B3", "C3", "D4", "F4", "G2"):
    datum = build_root_datum(parse_type(name))
    print(f"== {name} ==")
    print("Cartan matrix:")
    for row in datum.cartan:
        print("   ", row)
    print(f"positive roots: {len(datum.positive_roots)}")
    # roots are integer vectors in the simple-root basis
    print(f"  first few: {datum.positive_roots[:3]}")
    print(f"  highest:   {datum.positive_roots[-1]}")
    print(f"marks (highest root coefficients): {datum.highest_root_coeffs}")
    print(f"sum-of-positive-roots coefficients: {datum.two_rho_coeffs}")
    print(f"denominator scale (lcm of marks): {datum.scale}")
    # the growth exponent is the largest ratio of the two vectors
    ratios = [
        f"{cp}/{c}"
        for cp, c in zip(datum.two_rho_coeffs, datum.highest_root_coeffs)
    ]
    print(f"coefficient ratios: {ratios}")
    print(f"growth exponent D = {growth_exponent(datum)}")
    degrees = weyl_degrees(datum)
    print(f"Weyl degrees {degrees}, group order {prod(degrees)}")
    print()
