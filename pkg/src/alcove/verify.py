"""Self-check suites for the command line.

Each suite returns (passed, payload).  The payload is JSON-ready and
records what was checked; suites are deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .apartment import (
    in_scaled_alcove,
    is_vertex,
    iter_scaled_alcove_vertices,
    origin,
)
from .cartan import RootSystemType, build_root_datum, parse_type, positive_root_count
from .distance import iter_wall_ball_points, simplicial_distances, wall_distance
from .growth import (
    ball_sum,
    cind_sandwich,
    gamma_polynomial,
    growth_exponent,
    theorem_table,
)
from .moyprasad import (
    index_exponent,
    is_concave,
    omega_function,
    point_function,
    pointwise_max,
    optimize,
    shift,
)

SUITE_NAMES = (
    "metric",
    "polytope",
    "table",
    "growth",
    "sandwich",
    "concavity",
    "g2-gap",
)


def _point_str(point) -> list[str]:
    return [str(t) for t in point]


def verify_metric(seed: int = 0, budget: int | None = None) -> tuple[bool, dict]:
    """Wall metric axioms on sampled vertex triples."""
    rng = random.Random(seed)
    passed = True
    per_type = []
    for name in ("A2", "B2", "G2"):
        datum = build_root_datum(parse_type(name))
        ball = sorted(iter_wall_ball_points(datum, origin(datum), 2, budget=budget))
        identity_ok = all(wall_distance(datum, x, x, check=False).d == 0 for x in ball)
        symmetric_ok = True
        definite_ok = True
        triangle_ok = True
        trials = 300
        for _ in range(trials):
            x, y, z = (ball[rng.randrange(len(ball))] for _ in range(3))
            dxy = wall_distance(datum, x, y, check=False).d
            dyx = wall_distance(datum, y, x, check=False).d
            dyz = wall_distance(datum, y, z, check=False).d
            dxz = wall_distance(datum, x, z, check=False).d
            if dxy != dyx:
                symmetric_ok = False
            if (dxy == 0) != (x == y):
                definite_ok = False
            if dxz > dxy + dyz:
                triangle_ok = False
        ok = identity_ok and symmetric_ok and definite_ok and triangle_ok
        passed = passed and ok
        per_type.append(
            {
                "type": name,
                "ball_size": len(ball),
                "triples": trials,
                "identity": identity_ok,
                "symmetry": symmetric_ok,
                "definiteness": definite_ok,
                "triangle": triangle_ok,
            }
        )
    return passed, {"checks": per_type}


def _grid_vertex_oracle(datum, r: int) -> set:
    """Brute force: scan the full 1/scale grid over the dilated alcove."""
    scale = datum.scale
    marks = datum.highest_root_coeffs
    axes = [range(0, r * scale // c + 1) for c in marks]
    found = set()
    for a in product(*axes):
        if sum(c * v for c, v in zip(marks, a)) > r * scale:
            continue
        point = tuple(Fraction(v, scale) for v in a)
        if is_vertex(datum, point):
            found.add(point)
    return found


def verify_polytope(budget: int | None = None) -> tuple[bool, dict]:
    """Dilated-alcove vertex enumeration against a full-grid scan."""
    passed = True
    cases = []
    for name, radii in (("A1", (0, 1, 2, 3)), ("A2", (1, 2, 3)), ("B2", (1, 2, 3)), ("G2", (1, 2))):
        datum = build_root_datum(parse_type(name))
        for r in radii:
            fast = set(iter_scaled_alcove_vertices(datum, r, budget=budget))
            slow = _grid_vertex_oracle(datum, r)
            inside = all(in_scaled_alcove(datum, r, p) for p in fast)
            ok = fast == slow and inside
            passed = passed and ok
            cases.append(
                {"type": name, "radius": r, "count": len(slow), "match": ok}
            )
    return passed, {"cases": cases}


def _expected_growth(rstype: RootSystemType) -> Fraction:
    family, d = rstype.family, rstype.rank
    if family == "A":
        n = d // 2
        return Fraction(n * (n + 1)) if d % 2 == 0 else Fraction((n + 1) ** 2)
    if family == "B":
        if d == 2:
            return Fraction(3)
        if d == 3:
            return Fraction(5)
        return Fraction(d * d, 2)
    if family == "C":
        return Fraction(d * (d + 1), 2)
    if family == "D":
        return Fraction(d * (d - 1), 2)
    if family == "E":
        return {6: Fraction(16), 7: Fraction(27), 8: Fraction(46)}[d]
    if family == "F":
        return Fraction(11)
    return Fraction(10, 3)


def verify_table(max_classical_rank: int = 12) -> tuple[bool, dict]:
    """Growth exponent table against the closed-form family formulas."""
    table = theorem_table(max_classical_rank)
    passed = True
    mismatches = []
    for row in table.rows:
        expected = _expected_growth(row.rstype)
        lower = -(-expected.numerator // expected.denominator)
        upper = positive_root_count(row.rstype)
        if (
            row.growth_exponent != expected
            or row.cdim_lower != lower
            or row.cdim_upper != upper
        ):
            passed = False
            mismatches.append(str(row.rstype))
    return passed, {
        "rows": len(table.rows),
        "max_classical_rank": max_classical_rank,
        "mismatches": mismatches,
    }


def verify_growth(budget: int | None = None) -> tuple[bool, dict]:
    """Ball census bounds: degree window, factorization, type counts."""
    passed = True
    cases = []
    for name, radii in (("A2", (1, 2, 3)), ("B2", (1, 2, 3)), ("C3", (1, 2)), ("G2", (1, 2))):
        datum = build_root_datum(parse_type(name))
        exponent = growth_exponent(datum)
        num_pos = len(datum.positive_roots)
        for r in radii:
            report = ball_sum(datum, r, budget=budget)
            ok = report.max_two_rho == r * exponent
            ok = ok and report.upper_poly == gamma_polynomial(datum) * report.lower_poly
            ok = ok and sum(report.per_type_counts) == report.vertex_count_chamber
            ok = ok and report.lower_poly.evaluate(1) == report.vertex_count_chamber
            degree = report.lower_poly.degree
            ok = ok and r * exponent - num_pos <= degree <= r * exponent
            if r == 1:
                ok = ok and report.per_type_counts == (1,) * (datum.rank + 1)
            passed = passed and ok
            cases.append(
                {
                    "type": name,
                    "radius": r,
                    "vertices": report.vertex_count_chamber,
                    "degree": degree,
                    "ok": ok,
                }
            )
    return passed, {"cases": cases}


def verify_sandwich(budget: int | None = None) -> tuple[bool, dict]:
    """Two-sided bound reports: radius arithmetic and numeric ordering."""
    passed = True
    cases = []
    for name in ("A2", "B2", "G2"):
        datum = build_root_datum(parse_type(name))
        for R, r in ((0, 3), (1, 4)):
            report = cind_sandwich(datum, R, r, budget=budget)
            ok = report.lower_radius == r - R - 2
            ok = ok and report.lower_divisor == datum.rank + 1
            ok = ok and report.upper_radius == 2 + (r + 1) * sum(
                datum.highest_root_coeffs
            )
            ok = ok and report.upper_level == r + 1
            ok = ok and report.lower_empty == (report.lower_radius < 0)
            if not report.lower_empty:
                for q0 in (2, 3):
                    low = Fraction(
                        report.lower_poly.evaluate(q0), report.lower_divisor
                    )
                    if low > report.upper_poly.evaluate(q0):
                        ok = False
            passed = passed and ok
            cases.append({"type": name, "R": R, "r": r, "ok": ok})
    return passed, {"cases": cases}


def verify_concavity(seed: int = 0) -> tuple[bool, dict]:
    """Closure of concavity under the function calculus."""
    rng = random.Random(seed)
    passed = True
    cases = []
    for name in ("A2", "B2", "G2"):
        datum = build_root_datum(parse_type(name))
        scale = datum.scale
        ok = True
        trials = 20
        for _ in range(trials):
            x = tuple(
                Fraction(rng.randrange(-3 * scale, 3 * scale + 1), scale)
                for _ in range(datum.rank)
            )
            y = tuple(
                Fraction(rng.randrange(-3 * scale, 3 * scale + 1), scale)
                for _ in range(datum.rank)
            )
            fx = point_function(datum, x)
            fy = point_function(datum, y)
            omega = omega_function(datum, (x, y))
            ok = ok and is_concave(datum, fx)
            ok = ok and is_concave(datum, omega)
            ok = ok and is_concave(datum, optimize(datum, omega))
            ok = ok and is_concave(datum, shift(fx, 2))
            ok = ok and pointwise_max(fx, fy).values == omega.values
            result = index_exponent(datum, shift(fx, 1), shift(omega, 1))
            ok = ok and result.exponent >= 0
        passed = passed and ok
        cases.append({"type": name, "trials": trials, "ok": ok})
    return passed, {"cases": cases}


def verify_g2_gap(budget: int | None = None) -> tuple[bool, dict]:
    """Wall vs simplicial metric: equality spot check and the gap witness."""
    passed = True
    a2 = build_root_datum(parse_type("A2"))
    a2_ball = sorted(iter_wall_ball_points(a2, origin(a2), 2, budget=budget))
    equal_ok = True
    for x in a2_ball:
        dists = simplicial_distances(a2, x, 6, check=False)
        for y in a2_ball:
            if dists.get(y) != wall_distance(a2, x, y, check=False).d:
                equal_ok = False
    passed = passed and equal_ok

    g2 = build_root_datum(parse_type("G2"))
    g2_ball = sorted(iter_wall_ball_points(g2, origin(g2), 4, budget=budget))
    witness = None
    monotone_ok = True
    pairs = 0
    for x in g2_ball:
        dists = simplicial_distances(g2, x, 8, check=False)
        for y in g2_ball:
            pairs += 1
            wall = wall_distance(g2, x, y, check=False).d
            simp = dists.get(y)
            if simp is None:
                simp = 9
            if simp < wall:
                monotone_ok = False
            if simp > wall and witness is None:
                witness = {
                    "x": _point_str(x),
                    "y": _point_str(y),
                    "wall": wall,
                    "simplicial": simp,
                }
        if witness is not None:
            break
    passed = passed and monotone_ok and witness is not None
    return passed, {
        "a2_equality": equal_ok,
        "a2_ball_size": len(a2_ball),
        "g2_ball_size": len(g2_ball),
        "g2_pairs_checked": pairs,
        "g2_monotone": monotone_ok,
        "g2_witness": witness,
    }


def run_suites(
    names, *, seed: int = 0, budget: int | None = None
) -> tuple[bool, dict]:
    """Run the named suites in canonical order; (all passed, results)."""
    chosen = list(names) if names else list(SUITE_NAMES)
    runners = {
        "metric": lambda: verify_metric(seed=seed, budget=budget),
        "polytope": lambda: verify_polytope(budget=budget),
        "table": lambda: verify_table(),
        "growth": lambda: verify_growth(budget=budget),
        "sandwich": lambda: verify_sandwich(budget=budget),
        "concavity": lambda: verify_concavity(seed=seed),
        "g2-gap": lambda: verify_g2_gap(budget=budget),
    }
    results = {}
    all_passed = True
    for name in SUITE_NAMES:
        if name not in chosen:
            continue
        passed, payload = runners[name]()
        results[name] = {"passed": passed, **payload}
        all_passed = all_passed and passed
    return all_passed, results
