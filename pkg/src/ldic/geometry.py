"""Exact rational convex polygons in the non-negative rate quadrant.

A :class:`RateRegion` is kept in canonical form: vertices are listed
counter-clockwise starting from the lexicographically smallest one, and
the halfplane list holds one primitive integer row per edge. Two regions
are equal iff their vertex lists are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm
from typing import Iterable, Sequence

from ldic import kernels

Point = tuple[Fraction, Fraction]


class EmptyRegionError(ValueError):
    """The halfplane system excludes the origin."""


class UnboundedRegionError(ValueError):
    """The halfplane system does not bound the non-negative quadrant."""


@dataclass(frozen=True)
class HalfPlane:
    """``a1*R1 + a2*R2 <= b``."""

    a1: Fraction
    a2: Fraction
    b: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "b"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a1 == 0 and self.a2 == 0:
            raise ValueError("halfplane needs a non-zero normal")

    def contains(self, point: Point) -> bool:
        return self.a1 * point[0] + self.a2 * point[1] <= self.b

    def primitive(self) -> tuple[int, int, int]:
        """Integer row with the same solution set and coprime entries."""
        den = lcm(self.a1.denominator, self.a2.denominator, self.b.denominator)
        row = [int(v * den) for v in (self.a1, self.a2, self.b)]
        g = gcd(*row)
        return row[0] // g, row[1] // g, row[2] // g

    def __str__(self) -> str:
        return f"{fmt(self.a1)}*R1 + {fmt(self.a2)}*R2 <= {fmt(self.b)}"


def fmt(x: Fraction | int) -> str:
    """Canonical text for a rational: ``"p/q"`` or plain digits."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True, eq=False)
class RateRegion:
    halfplanes: tuple[HalfPlane, ...]
    vertices: tuple[Point, ...]

    def __eq__(self, other):
        if not isinstance(other, RateRegion):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def contains(self, point: Point) -> bool:
        return all(h.contains(point) for h in self.halfplanes)

    def mirrored(self) -> RateRegion:
        """Reflection across ``R1 = R2``."""
        return from_halfplanes([HalfPlane(h.a2, h.a1, h.b) for h in self.halfplanes])

    def axis_max(self, axis: int) -> Fraction:
        return max(v[axis - 1] for v in self.vertices)

    def vertex_strings(self) -> list[list[str]]:
        return [[fmt(x), fmt(y)] for x, y in self.vertices]

    def __str__(self) -> str:
        return " ".join(f"({fmt(x)},{fmt(y)})" for x, y in self.vertices)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _ccw_order(points: list[Point]) -> list[Point]:
    """Order extreme points counter-clockwise from the lexicographic minimum."""
    start = min(points)
    rest = [p for p in points if p != start]

    def cmp(a: Point, b: Point) -> int:
        c = _cross(start, a, b)
        if c > 0:
            return -1
        if c < 0:
            return 1
        # collinear with start: only possible for segments
        return -1 if a < b else (1 if a > b else 0)

    rest.sort(key=cmp_to_key(cmp))
    return [start] + rest


def _prune_collinear(ring: list[Point]) -> list[Point]:
    if len(ring) < 3:
        return ring
    out = []
    n = len(ring)
    for k in range(n):
        if _cross(ring[k - 1], ring[k], ring[(k + 1) % n]) != 0:
            out.append(ring[k])
    return out


def _is_bounded(rows: Sequence[tuple[int, int, int]]) -> bool:
    # Recession cone of a 2-D system is generated by axis directions or
    # directions along some constraint line; test each candidate ray.
    candidates = {(1, 0), (0, 1)}
    for a1, a2, _ in rows:
        for d in ((a2, -a1), (-a2, a1)):
            if d[0] >= 0 and d[1] >= 0 and d != (0, 0):
                candidates.add(d)
    for d in candidates:
        if all(a1 * d[0] + a2 * d[1] <= 0 for a1, a2, _ in rows):
            return False
    return True


def from_halfplanes(hs: Iterable[HalfPlane]) -> RateRegion:
    """Canonical region ``{R >= 0 : every halfplane holds}``.

    Raises :class:`EmptyRegionError` when the origin is infeasible and
    :class:`UnboundedRegionError` when the system leaves a direction open.
    """
    rows = {h.primitive() for h in hs}
    rows.update({(-1, 0, 0), (0, -1, 0)})
    rows = sorted(rows)
    bad = [r for r in rows if r[2] < 0]
    if bad:
        raise EmptyRegionError(f"origin violates {HalfPlane(*bad[0])}")
    if not _is_bounded(rows):
        raise UnboundedRegionError("halfplane system is unbounded in the quadrant")

    raw = kernels.polygon_vertices(rows)
    points = [(Fraction(xn, d), Fraction(yn, d)) for xn, yn, d in raw]
    ring = _prune_collinear(_ccw_order(points))

    if len(ring) >= 3:
        keep = []
        n = len(ring)
        for k in range(n):
            a, b = ring[k], ring[(k + 1) % n]
            pts = [_as_triple(a), _as_triple(b)]
            for r, c in zip(rows, kernels.tight_counts(rows, pts)):
                if c == 2:
                    keep.append(r)
                    break
    else:
        pts = [_as_triple(v) for v in ring]
        keep = [r for r, c in zip(rows, kernels.tight_counts(rows, pts)) if c > 0]
    return RateRegion(tuple(HalfPlane(*r) for r in keep), tuple(ring))


def _as_triple(p: Point) -> tuple[int, int, int]:
    d = lcm(p[0].denominator, p[1].denominator)
    return int(p[0] * d), int(p[1] * d), d


def box(r1_max, r2_max) -> RateRegion:
    return from_halfplanes([HalfPlane(1, 0, r1_max), HalfPlane(0, 1, r2_max)])


def sup_linear(r: RateRegion, c1, c2) -> Fraction:
    """Maximum of ``c1*R1 + c2*R2`` over the region."""
    c1, c2 = Fraction(c1), Fraction(c2)
    return max(c1 * x + c2 * y for x, y in r.vertices)


def boundary_max(r: RateRegion, fixed_axis: int, v) -> Fraction | None:
    """Largest free coordinate on the slice ``R_fixed = v``; ``None`` if empty."""
    v = Fraction(v)
    fa = fixed_axis - 1
    fr = 1 - fa
    verts = r.vertices
    best = None
    n = len(verts)
    edges = [(verts[k], verts[(k + 1) % n]) for k in range(n)] if n > 1 else [(verts[0], verts[0])]
    for a, b in edges:
        lo, hi = sorted((a[fa], b[fa]))
        if not lo <= v <= hi:
            continue
        if a[fa] == b[fa]:
            cand = max(a[fr], b[fr])
        else:
            t = (v - a[fa]) / (b[fa] - a[fa])
            cand = a[fr] + t * (b[fr] - a[fr])
        if best is None or cand > best:
            best = cand
    return best


def breakpoints(r: RateRegion, axis: int) -> list[Fraction]:
    """Distinct vertex coordinates along ``axis`` (where boundary_max bends)."""
    return sorted({v[axis - 1] for v in r.vertices})


def subset(a: RateRegion, b: RateRegion) -> bool:
    return all(b.contains(v) for v in a.vertices)


def equals(a: RateRegion, b: RateRegion) -> bool:
    return a.vertices == b.vertices
