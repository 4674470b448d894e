"""Affine apartment geometry in simple-root coordinates.

A point is the tuple of exact rationals t_i = alpha_i(x).  The closed
fundamental alcove is t_i >= 0 with alpha_0(x) <= 1 for the highest
root alpha_0; its corners are the origin and omega_i / c_i where c_i
are the marks.  Vertices of the simplicial structure are points where
the integral roots span full rank; every vertex of type i sits on the
(1/c_i)-grid, which is what the enumerators exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Iterator

from .cartan import Root, RootDatum, eval_root
from .errors import (
    DimensionMismatchError,
    EnumerationLimitError,
    FoldLimitError,
    NotAVertexError,
    ValidationError,
)

Point = tuple[Fraction, ...]

DEFAULT_ENUMERATION_BUDGET = 100_000_000
DEFAULT_FOLD_LIMIT = 1_000_000


def as_point(datum: RootDatum, values: Iterable) -> Point:
    try:
        point = tuple(Fraction(v) for v in values)
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise ValidationError(f"coordinates are not rational numbers: {err}") from err
    if len(point) != datum.rank:
        raise DimensionMismatchError(
            f"expected {datum.rank} coordinates, got {len(point)}"
        )
    return point


def origin(datum: RootDatum) -> Point:
    return tuple(Fraction(0) for _ in range(datum.rank))


def alcove_vertex(datum: RootDatum, i: int) -> Point:
    """Corner v_i of the fundamental alcove; v_0 is the origin."""
    if not 0 <= i <= datum.rank:
        raise ValidationError(f"alcove corner index must lie in 0..{datum.rank}")
    if i == 0:
        return origin(datum)
    c = datum.highest_root_coeffs[i - 1]
    return tuple(
        Fraction(1, c) if j == i - 1 else Fraction(0) for j in range(datum.rank)
    )


@dataclass(frozen=True)
class AffineRoot:
    """alpha + k as a function on the apartment."""

    root: Root
    offset: int


def eval_affine(datum: RootDatum, affine: AffineRoot, x) -> Fraction:
    return eval_root(datum, affine.root, as_point(datum, x)) + affine.offset


def in_scaled_alcove(datum: RootDatum, r, x) -> bool:
    """Membership in rC: t_i >= 0 for all i and alpha_0(x) <= r."""
    r = Fraction(r)
    if r < 0:
        raise ValidationError("scaling factor must be nonnegative")
    point = as_point(datum, x)
    if any(t < 0 for t in point):
        return False
    height = sum(
        (Fraction(c) * t for c, t in zip(datum.highest_root_coeffs, point)),
        Fraction(0),
    )
    return height <= r


def scaled_coords(datum: RootDatum, x) -> tuple[int, ...] | None:
    """Coordinates times the global scale, or None when x is off-grid.

    Every vertex lies on the (1/scale)-grid, so None means "not a
    vertex" for callers that only care about vertices.
    """
    out = []
    for t in as_point(datum, x):
        v = t * datum.scale
        if v.denominator != 1:
            return None
        out.append(int(v))
    return tuple(out)


def _int_rank(rows: list[Root], d: int) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows]
    rank = 0
    for col in range(d):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        head = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            v = mat[r][col]
            if v:
                row = mat[r]
                ref = mat[rank]
                mat[r] = [head * a - v * b for a, b in zip(row, ref)]
        rank += 1
        if rank == d or rank == len(mat):
            break
    return rank


class _VertexTester:
    """Memoized full-rank test keyed by the set of integral roots."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.memo: dict[int, bool] = {}

    def from_mask(self, mask: int) -> bool:
        ok = self.memo.get(mask)
        if ok is None:
            pos = self.datum.positive_roots
            rows = [pos[i] for i in range(len(pos)) if mask >> i & 1]
            ok = _int_rank(rows, self.datum.rank) == self.datum.rank
            self.memo[mask] = ok
        return ok

    def scaled(self, a: tuple[int, ...], denom: int) -> bool:
        mask = 0
        bit = 1
        for root in self.datum.positive_roots:
            if sum(c * v for c, v in zip(root, a)) % denom == 0:
                mask |= bit
            bit <<= 1
        return self.from_mask(mask)


def is_vertex(datum: RootDatum, x) -> bool:
    """True iff the roots taking integer values at x span full rank."""
    point = as_point(datum, x)
    a = scaled_coords(datum, point)
    if a is None:
        return False
    return _VertexTester(datum).scaled(a, datum.scale)


def is_special(datum: RootDatum, x) -> bool:
    """True iff every root takes an integer value at x."""
    point = as_point(datum, x)
    a = scaled_coords(datum, point)
    if a is None:
        return False
    N = datum.scale
    return all(
        sum(c * v for c, v in zip(root, a)) % N == 0 for root in datum.positive_roots
    )


def _fold(
    datum: RootDatum,
    main: Point,
    companions: tuple[Point, ...],
    max_steps: int,
) -> tuple[Point, ...]:
    """Fold main into the closed alcove, dragging companions along.

    The representative is unique, so the coroot-lattice pre-translation
    below only shortens the reflection walk; the walk itself applies
    the lowest-index violated wall first (simple walls in order, then
    the affine wall of the highest root).
    """
    d = datum.rank
    cartan = datum.cartan
    marks = datum.highest_root_coeffs
    u = datum.alpha0_coroot_row
    pts = [list(main)] + [list(c) for c in companions]
    t = pts[0]

    ainv = datum.cartan_inverse
    lattice_coords = [
        sum(ainv[i][j] * t[j] for j in range(d)) for i in range(d)
    ]
    units = [floor(v) for v in lattice_coords]
    if any(units):
        shift = [
            sum(cartan[j][i] * units[i] for i in range(d)) for j in range(d)
        ]
        for p in pts:
            for j in range(d):
                p[j] -= shift[j]

    steps = 0
    while True:
        wall = None
        for i in range(d):
            if t[i] < 0:
                wall = i
                break
        if wall is not None:
            for p in pts:
                pi = p[wall]
                for j in range(d):
                    p[j] -= pi * cartan[j][wall]
        else:
            height = sum(m * v for m, v in zip(marks, t))
            if height <= 1:
                break
            for p in pts:
                g = sum(m * v for m, v in zip(marks, p)) - 1
                for j in range(d):
                    p[j] -= g * u[j]
        steps += 1
        if steps > max_steps:
            raise FoldLimitError(f"folding exceeded {max_steps} reflections")
    return tuple(tuple(p) for p in pts)


def fold_to_alcove(datum: RootDatum, x, *, max_steps: int = DEFAULT_FOLD_LIMIT) -> Point:
    """Unique representative of x in the closed fundamental alcove."""
    return _fold(datum, as_point(datum, x), (), max_steps)[0]


def fold_pair(
    datum: RootDatum, x, y, *, max_steps: int = DEFAULT_FOLD_LIMIT
) -> tuple[Point, Point]:
    """Fold x into the alcove and move y by the same isometry."""
    folded = _fold(datum, as_point(datum, x), (as_point(datum, y),), max_steps)
    return folded[0], folded[1]


def _vertex_type_folded(datum: RootDatum, folded: Point) -> int:
    if all(v == 0 for v in folded):
        return 0
    for i in range(datum.rank):
        corner = Fraction(1, datum.highest_root_coeffs[i])
        if folded[i] == corner and all(
            folded[j] == 0 for j in range(datum.rank) if j != i
        ):
            return i + 1
    raise NotAVertexError(f"{folded} is not an alcove corner")


def vertex_type(datum: RootDatum, x, *, check: bool = True) -> int:
    """Index in 0..d of the alcove corner the vertex folds onto."""
    point = as_point(datum, x)
    if check and not is_vertex(datum, point):
        raise NotAVertexError(f"{point} is not a vertex")
    return _vertex_type_folded(datum, fold_to_alcove(datum, point))


@dataclass(frozen=True)
class VertexSet:
    """Deterministically ordered vertices with counts per type 0..d."""

    points: tuple[Point, ...]
    per_type_counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)


def _make_vertex_set(datum: RootDatum, points: Iterable[Point]) -> VertexSet:
    ordered = tuple(sorted(points))
    counts = [0] * (datum.rank + 1)
    for p in ordered:
        counts[_vertex_type_folded(datum, fold_to_alcove(datum, p))] += 1
    return VertexSet(points=ordered, per_type_counts=tuple(counts))


def _maximal_denominators(datum: RootDatum) -> list[int]:
    values = sorted(set(datum.highest_root_coeffs) | {1})
    return [c for c in values if not any(o != c and o % c == 0 for o in values)]


class _Budget:
    def __init__(self, budget: int | None):
        self.limit = DEFAULT_ENUMERATION_BUDGET if budget is None else budget
        if self.limit <= 0:
            raise ValidationError("budget must be positive")
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise EnumerationLimitError(
                f"enumeration examined more than {self.limit} candidate points"
            )


def _iter_region(
    datum: RootDatum,
    denom: int,
    bounds: list[tuple[int, int]],
    cap: tuple[tuple[int, ...], int] | None,
    budget: _Budget,
    tester: _VertexTester,
) -> Iterator[tuple[int, ...]]:
    """Vertices of one (1/denom)-grid region, as scaled integer tuples.

    bounds are inclusive per-axis ranges in grid units; cap optionally
    adds sum(w_j a_j) <= limit with positive weights and nonnegative
    axes, which prunes the walk to the simplex it describes.
    """
    d = datum.rank
    pos = datum.positive_roots
    npos = len(pos)
    cols = [
        [(idx, pos[idx][j]) for idx in range(npos) if pos[idx][j]] for j in range(d)
    ]
    partial = [0] * npos
    coords = [0] * d

    def walk(j: int, cap_left: int) -> Iterator[tuple[int, ...]]:
        if j == d:
            budget.spend()
            mask = 0
            bit = 1
            for v in partial:
                if v % denom == 0:
                    mask |= bit
                bit <<= 1
            if tester.from_mask(mask):
                yield tuple(coords)
            return
        lo, hi = bounds[j]
        if cap is not None and cap[0][j] > 0:
            hi = min(hi, cap_left // cap[0][j])
        if hi < lo:
            return
        coords[j] = lo
        for idx, coeff in cols[j]:
            partial[idx] += coeff * lo
        while True:
            if cap is None:
                yield from walk(j + 1, 0)
            else:
                yield from walk(j + 1, cap_left - cap[0][j] * coords[j])
            if coords[j] == hi:
                break
            coords[j] += 1
            for idx, coeff in cols[j]:
                partial[idx] += coeff
        for idx, coeff in cols[j]:
            partial[idx] -= coeff * coords[j]
        coords[j] = 0

    yield from walk(0, cap[1] if cap is not None else 0)


def iter_scaled_alcove_vertices(
    datum: RootDatum, r: int, *, budget: int | None = None
) -> Iterator[Point]:
    """Vertices of rC, deduplicated across denominators, unordered."""
    if not isinstance(r, int) or r < 0:
        raise ValidationError("scaling factor must be a nonnegative integer")
    state = _Budget(budget)
    tester = _VertexTester(datum)
    marks = datum.highest_root_coeffs
    seen: set[Point] = set()
    for denom in _maximal_denominators(datum):
        bounds = [(0, (r * denom) // marks[j]) for j in range(datum.rank)]
        cap = (marks, r * denom)
        for a in _iter_region(datum, denom, bounds, cap, state, tester):
            point = tuple(Fraction(v, denom) for v in a)
            if point not in seen:
                seen.add(point)
                yield point


def enumerate_scaled_alcove_vertices(
    datum: RootDatum, r: int, *, budget: int | None = None
) -> VertexSet:
    """All vertices of the r-scaled closed alcove, with type counts."""
    return _make_vertex_set(datum, iter_scaled_alcove_vertices(datum, r, budget=budget))


def iter_box_vertices(
    datum: RootDatum, lo, hi, *, budget: int | None = None
) -> Iterator[Point]:
    """Vertices in the coordinate box [lo, hi], unordered."""
    low = as_point(datum, lo)
    high = as_point(datum, hi)
    if any(a > b for a, b in zip(low, high)):
        raise ValidationError("box bounds must satisfy lo <= hi componentwise")
    state = _Budget(budget)
    tester = _VertexTester(datum)
    seen: set[Point] = set()
    for denom in _maximal_denominators(datum):
        bounds = [
            (ceil(low[j] * denom), floor(high[j] * denom)) for j in range(datum.rank)
        ]
        for a in _iter_region(datum, denom, bounds, None, state, tester):
            point = tuple(Fraction(v, denom) for v in a)
            if point not in seen:
                seen.add(point)
                yield point


def enumerate_box_vertices(
    datum: RootDatum, lo, hi, *, budget: int | None = None
) -> VertexSet:
    return _make_vertex_set(datum, iter_box_vertices(datum, lo, hi, budget=budget))


def vertex_set_to_dict(vs: VertexSet) -> dict:
    return {
        "points": [[str(c) for c in p] for p in vs.points],
        "per_type_counts": list(vs.per_type_counts),
        "count": len(vs.points),
    }
