"""Vertices and metric structure of the Hamming graph H(m, q).

Vertices are m-tuples of symbols from {0, ..., q-1}; two vertices are
adjacent when they differ in exactly one entry, so graph distance is
Hamming distance.  Vertices are ordered lexicographically, which agrees
with the base-q value of the tuple (see ``vertex_index``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

from .caps import ResourceCapError, vertex_cap

__all__ = [
    "Vertex",
    "distance",
    "sphere",
    "ball",
    "all_vertices",
    "space_size",
    "vertex_index",
    "vertex_from_index",
    "neighbours",
]


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex of H(m, q): ``entries`` over the alphabet {0, ..., q-1}."""

    entries: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.q}")
        if not self.entries:
            raise ValueError("vertex needs at least one entry")
        for e in self.entries:
            if not 0 <= e < self.q:
                raise ValueError(f"entry {e} outside alphabet [0, {self.q})")

    @property
    def m(self) -> int:
        return len(self.entries)

    def replace(self, position: int, symbol: int) -> "Vertex":
        new = list(self.entries)
        new[position] = symbol
        return Vertex(tuple(new), self.q)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def _check_compatible(u: Vertex, v: Vertex) -> None:
    if u.q != v.q or u.m != v.m:
        raise ValueError(f"vertices from different spaces: H({u.m},{u.q}) vs H({v.m},{v.q})")


def distance(u: Vertex, v: Vertex) -> int:
    """Hamming distance: the number of entries where u and v differ."""
    _check_compatible(u, v)
    return sum(1 for a, b in zip(u.entries, v.entries) if a != b)


def space_size(m: int, q: int) -> int:
    if m < 1 or q < 2:
        raise ValueError(f"need m >= 1 and q >= 2, got m={m} q={q}")
    return q**m


def all_vertices(m: int, q: int) -> Iterator[Vertex]:
    """All q**m vertices of H(m, q) in lexicographic order."""
    n = space_size(m, q)
    if n > vertex_cap():
        raise ResourceCapError(f"H({m},{q}) has {n} vertices, over the cap {vertex_cap()}")
    for entries in product(range(q), repeat=m):
        yield Vertex(entries, q)


def sphere(center: Vertex, radius: int) -> set[Vertex]:
    """Vertices at distance exactly ``radius`` from ``center``.

    Enumerated directly by choosing the disagreeing positions and the
    replacement symbols, so no ambient enumeration is needed.
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    m, q = center.m, center.q
    if radius > m:
        return set()
    out: set[Vertex] = set()
    for positions in combinations(range(m), radius):
        for symbols in product(range(q - 1), repeat=radius):
            new = list(center.entries)
            for pos, s in zip(positions, symbols):
                # skip the original symbol so the entry really changes
                new[pos] = s if s < center.entries[pos] else s + 1
            out.add(Vertex(tuple(new), center.q))
    return out


def ball(center: Vertex, radius: int) -> set[Vertex]:
    """Vertices at distance at most ``radius`` from ``center``."""
    out: set[Vertex] = set()
    for r in range(min(radius, center.m) + 1):
        out |= sphere(center, r)
    return out


def vertex_index(v: Vertex) -> int:
    """Rank of v in lexicographic order, i.e. its base-q value."""
    idx = 0
    for e in v.entries:
        idx = idx * v.q + e
    return idx


def vertex_from_index(idx: int, m: int, q: int) -> Vertex:
    if not 0 <= idx < space_size(m, q):
        raise ValueError(f"index {idx} out of range for H({m},{q})")
    entries = [0] * m
    for i in range(m - 1, -1, -1):
        idx, entries[i] = divmod(idx, q)
    return Vertex(tuple(entries), q)


def neighbours(v: Vertex) -> Iterable[Vertex]:
    """The m(q-1) vertices adjacent to v."""
    for pos in range(v.m):
        for s in range(v.q):
            if s != v.entries[pos]:
                yield v.replace(pos, s)
