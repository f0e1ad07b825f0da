"""Exact dyadic rationals and the adjacency structure the game lives on.

A dyadic rational num/2**depth is stored normalized (depth 0, or odd num).
Depth-k points form a uniform grid of spacing 2**-k; two points are adjacent
when nothing of depth up to max(their depths) lies strictly between them,
which collapses to |u - v| == 2**-max(depth(u), depth(v)).  All arithmetic is
integer-exact; Python integers never wrap, so no overflow guard is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


@dataclass(frozen=True)
class Dyadic:
    """num / 2**depth in lowest terms."""

    num: int
    depth: int

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        num, depth = self.num, self.depth
        while depth > 0 and num % 2 == 0:
            num //= 2
            depth -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "depth", depth)

    def scaled(self, k: int) -> int:
        """Numerator over the common denominator 2**k; requires k >= depth."""
        return self.num << (k - self.depth)

    def __lt__(self, other: "Dyadic") -> bool:
        k = max(self.depth, other.depth)
        return self.scaled(k) < other.scaled(k)

    def __le__(self, other: "Dyadic") -> bool:
        k = max(self.depth, other.depth)
        return self.scaled(k) <= other.scaled(k)

    def __gt__(self, other: "Dyadic") -> bool:
        return other < self

    def __ge__(self, other: "Dyadic") -> bool:
        return other <= self

    def __float__(self) -> float:
        return self.num / (1 << self.depth)

    def __str__(self) -> str:
        if self.depth == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.depth}"

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        k = max(self.depth, other.depth)
        return Dyadic(self.scaled(k) - other.scaled(k), k)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        k = max(self.depth, other.depth)
        return Dyadic(self.scaled(k) + other.scaled(k), k)

    def to_pair(self) -> tuple[int, int]:
        return (self.num, self.depth)


def from_pair(pair: Iterable[int]) -> Dyadic:
    num, depth = pair
    return Dyadic(int(num), int(depth))


def adjacent(u: Dyadic, v: Dyadic) -> bool:
    """Closed form: |u - v| equals the grid spacing at the deeper of the two."""
    if u == v:
        raise ValueError("adjacency is only defined for distinct points")
    k = max(u.depth, v.depth)
    return abs(u.scaled(k) - v.scaled(k)) == 1


def adjacent_definitional(u: Dyadic, v: Dyadic) -> bool:
    """Oracle form: enumerate the grid points strictly between u and v.

    A point of depth <= k is a multiple of 2**-k, so materializing those
    multiples inside the open interval is a direct restatement of "no other
    point of the union between them".  Test/verification use only.
    """
    if u == v:
        raise ValueError("adjacency is only defined for distinct points")
    lo, hi = (u, v) if u < v else (v, u)
    k = max(u.depth, v.depth)
    between = [Dyadic(m, k) for m in range(lo.scaled(k) + 1, hi.scaled(k))]
    return len(between) == 0


def midpoint(u: Dyadic, v: Dyadic) -> Dyadic:
    """Midpoint of an adjacent ordered pair; depth is exactly max(depths) + 1."""
    if not u < v:
        raise ValueError(f"midpoint requires u < v, got {u} and {v}")
    if not adjacent(u, v):
        raise ValueError(f"midpoint requires an adjacent pair, got {u} and {v}")
    k = max(u.depth, v.depth)
    return Dyadic(u.scaled(k) + v.scaled(k), k + 1)


def upper_neighbors(x: Dyadic, max_depth: int) -> list[Dyadic]:
    """All v > x adjacent to x with depth(v) <= max_depth, ascending."""
    if max_depth < x.depth:
        raise ValueError(f"depth bound {max_depth} below depth of {x}")
    out = [x + Dyadic(1, k) for k in range(max_depth, x.depth - 1, -1)]
    return out


def lower_neighbors(x: Dyadic, max_depth: int) -> list[Dyadic]:
    """All v < x adjacent to x with depth(v) <= max_depth, ascending."""
    if max_depth < x.depth:
        raise ValueError(f"depth bound {max_depth} below depth of {x}")
    return [x - Dyadic(1, k) for k in range(x.depth, max_depth + 1)]


@dataclass(frozen=True)
class Truncation:
    """Finite slice of the grid graph: |x| <= range_, depth(x) <= max_depth."""

    range_: int
    max_depth: int

    def __post_init__(self) -> None:
        if self.range_ < 1:
            raise ValueError("range must be positive")
        if self.max_depth < 0:
            raise ValueError("max depth must be nonnegative")

    def vertices(self) -> list[Dyadic]:
        """All 2 * range_ * 2**max_depth + 1 vertices, ascending."""
        span = self.range_ << self.max_depth
        return [Dyadic(m, self.max_depth) for m in range(-span, span + 1)]

    def __contains__(self, x: Dyadic) -> bool:
        return x.depth <= self.max_depth and (
            Dyadic(-self.range_, 0) <= x <= Dyadic(self.range_, 0)
        )

    def edges(self) -> Iterator[tuple[Dyadic, Dyadic]]:
        verts = self.vertices()
        for i, u in enumerate(verts):
            for v in verts[i + 1 :]:
                if adjacent(u, v):
                    yield (u, v)


def is_monotone_path(points: list[Dyadic]) -> bool:
    """Whether a strictly increasing point list steps only along edges."""
    for a, b in zip(points, points[1:]):
        if not a < b:
            raise ValueError("input must be strictly increasing without duplicates")
    return all(adjacent(a, b) for a, b in zip(points, points[1:]))


PointSet = tuple[Dyadic, ...]  # sorted ascending

ORIGIN = Dyadic(0, 0)
ONE = Dyadic(1, 0)


def successor_positions(points: PointSet) -> list[Dyadic]:
    """Positions a move can create from a sorted point set, one per slot.

    Matches the normalized rules: the very first point is 0, extensions step
    to the next integer, interior insertions take the midpoint.  Entry i is
    the resolved position of slot i.
    """
    if not points:
        return [ORIGIN]
    out = [points[0] - ONE]
    for a, b in zip(points, points[1:]):
        out.append(midpoint(a, b))
    out.append(points[-1] + ONE)
    return out


def reachable_sets(max_rounds: int) -> list[set[PointSet]]:
    """Point sets reachable after exactly r rounds, for r = 0..max_rounds.

    Expansion is memoized over sets rather than move sequences: two move
    orders producing the same set have identical futures.
    """
    if max_rounds < 0:
        raise ValueError("round count must be nonnegative")
    levels: list[set[PointSet]] = [{()}]
    for _ in range(max_rounds):
        nxt: set[PointSet] = set()
        for points in levels[-1]:
            for i, pos in enumerate(successor_positions(points)):
                nxt.add(points[:i] + (pos,) + points[i:])
        levels.append(nxt)
    return levels


def reachable_positions(max_rounds: int) -> set[Dyadic]:
    """Every position occurring in some legal move sequence of length <= max_rounds."""
    out: set[Dyadic] = set()
    for level in reachable_sets(max_rounds):
        for points in level:
            out.update(points)
    return out
