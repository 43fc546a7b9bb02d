"""Permutations of {1, ..., d} and the cycle-notation codec.

Points are 1-based. Composition applies the right factor first, so
``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm


class ParseError(ValueError):
    """Malformed cycle notation; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..d} stored as its image map.

    ``image[i - 1]`` is the image of point ``i``.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if len(image) < 1:
            raise ValueError("permutation must act on at least one point")
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        image = list(range(1, degree + 1))
        seen = set()
        for cycle in cycles:
            cycle = list(cycle)
            for x in cycle:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice")
                seen.add(x)
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                image[x - 1] = y
        return cls(tuple(image))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        return self.image[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, e: int) -> Permutation:
        return power(self, e)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.image, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, start=1))

    def moved_points(self) -> list[int]:
        return [i for i, x in enumerate(self.image, start=1) if x != i]

    def order(self) -> int:
        return lcm(*partition_of(self))

    def apply_to_set(self, points) -> frozenset[int]:
        return frozenset(self(x) for x in points)

    def __str__(self):
        return print_permutation(self)

    def __repr__(self):
        return f"Permutation({print_permutation(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``: first apply ``q``, then ``p``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.image
    return Permutation(tuple(pi[x - 1] for x in q.image))


def power(p: Permutation, e: int) -> Permutation:
    """Return ``p`` composed with itself ``e`` times (negative ``e`` inverts)."""
    image = [0] * p.degree
    for cycle in cycle_decomposition(p):
        n = len(cycle)
        for pos, x in enumerate(cycle):
            image[x - 1] = cycle[(pos + e) % n]
    return Permutation(tuple(image))


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``p`` covering every point, fixed points included.

    Each cycle starts at its smallest element and the cycles are sorted by
    that element.
    """
    seen = [False] * (p.degree + 1)
    cycles = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = p(start)
        while x != start:
            seen[x] = True
            cycle.append(x)
            x = p(x)
        cycles.append(tuple(cycle))
    return cycles


def partition_of(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths of ``p`` (1-cycles included), ascending."""
    return tuple(sorted(len(c) for c in cycle_decomposition(p)))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(,)|(\d+)|(\S))")


def _parse_cycles(text: str) -> list[list[int]]:
    cycles = []
    current = None
    expect_point = False
    pos = 0
    # skip trailing whitespace so the token loop can stop cleanly
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        pos = m.end()
        lpar, rpar, comma, number, other = m.groups()
        if other is not None:
            raise ParseError(f"unexpected character {other!r}", start)
        if lpar:
            if current is not None:
                raise ParseError("nested '('", start)
            current = []
            expect_point = False
        elif rpar:
            if current is None:
                raise ParseError("unmatched ')'", start)
            if expect_point:
                raise ParseError("expected a point after ','", start)
            cycles.append(current)
            current = None
        elif comma:
            if current is None or not current or expect_point:
                raise ParseError("misplaced ','", start)
            expect_point = True
        else:
            if current is None:
                raise ParseError("point outside of a cycle", start)
            value = int(number)
            if value < 1:
                raise ParseError("points must be >= 1", start)
            current.append(value)
            expect_point = False
    if current is not None:
        raise ParseError("unterminated cycle", len(text))
    if not cycles:
        raise ParseError("empty input", 0)
    return cycles


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(1 2)(3, 4, 5)"`` or ``"()"``.

    Without ``degree`` the degree is the largest point mentioned.
    """
    cycles = _parse_cycles(text)
    empties = [c for c in cycles if not c]
    if empties and len(cycles) > 1:
        raise ParseError("'()' cannot be combined with other cycles", text.index("("))
    points = [x for c in cycles for x in c]
    if degree is None:
        if not points:
            raise ValueError("cannot infer the degree of '()'; pass degree")
        degree = max(points)
    if degree < 2:
        raise ValueError(f"degree must be at least 2, got {degree}")
    if points and max(points) > degree:
        raise ValueError(f"point {max(points)} exceeds degree {degree}")
    if len(set(points)) != len(points):
        raise ValueError("a point is repeated across cycles")
    return Permutation.from_cycles([c for c in cycles if c], degree)


def print_permutation(p: Permutation, include_fixed: bool = False) -> str:
    parts = []
    for cycle in cycle_decomposition(p):
        if len(cycle) == 1 and not include_fixed:
            continue
        parts.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(parts) or "()"
