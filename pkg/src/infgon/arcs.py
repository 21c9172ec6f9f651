"""Primitive arc arithmetic on the infinity-gon.

Vertices of the infinity-gon are the integers.  An edge is an ordered pair
(left, right) with left < right; it is a *side* when right == left + 1 and an
*arc* (potentially flippable) when right >= left + 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BadEdge, NotAdjacentCover

# Vertex indices are conceptually unbounded; we cap them so downstream integer
# arithmetic stays inside machine range with room for window arithmetic.
MAX_INDEX = 2**60


class PassSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True, order=True)
class Edge:
    left: int
    right: int

    def __post_init__(self):
        if not isinstance(self.left, int) or not isinstance(self.right, int):
            raise BadEdge(f"edge endpoints must be integers, got ({self.left!r}, {self.right!r})")
        if self.left >= self.right:
            raise BadEdge(f"edge requires left < right, got ({self.left}, {self.right})")
        if abs(self.left) > MAX_INDEX or abs(self.right) > MAX_INDEX:
            raise BadEdge(f"edge index out of supported range: ({self.left}, {self.right})")

    def is_side(self) -> bool:
        return self.right == self.left + 1

    def is_arc(self) -> bool:
        return self.right >= self.left + 2

    @property
    def span(self) -> int:
        return self.right - self.left

    def as_pair(self) -> tuple[int, int]:
        return (self.left, self.right)

    def to_json(self) -> list[int]:
        return [self.left, self.right]

    @classmethod
    def from_json(cls, data) -> "Edge":
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise BadEdge(f"edge JSON must be a two-element array, got {data!r}")
        return cls(int(data[0]), int(data[1]))

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


def side(i: int) -> Edge:
    return Edge(i, i + 1)


def crosses(a: Edge, b: Edge) -> bool:
    """Strict interleaving of endpoints; sides cross nothing."""
    return a.left < b.left < a.right < b.right or b.left < a.left < b.right < a.right


def passes_over(a: Edge, b: Edge) -> bool:
    """True iff a covers b (endpoints allowed to coincide) and a != b."""
    return a != b and a.left <= b.left and b.right <= a.right


def pass_side(cover: Edge, inner: Edge) -> PassSide:
    """Which way a *minimal* cover passes over the edge beneath it.

    A minimal cover shares exactly one endpoint with the covered edge: the
    left one (the cover sticks out to the right) or the right one (it sticks
    out to the left).
    """
    if not passes_over(cover, inner):
        raise NotAdjacentCover(f"{cover} does not pass over {inner}")
    shares_left = cover.left == inner.left
    shares_right = cover.right == inner.right
    if shares_left == shares_right:
        raise NotAdjacentCover(
            f"{cover} passes over {inner} but is not endpoint-adjacent; only minimal covers have a side"
        )
    return PassSide.RIGHT if shares_left else PassSide.LEFT
