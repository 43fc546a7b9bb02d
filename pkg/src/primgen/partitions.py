"""Relatively prime partitions, m-partitions and special m-partitions.

A partition is a sequence of positive integers; its sum is the degree ``d``.
Certificates refer to parts by their index in the sequence that was passed
in, so results do not depend on how the caller orders the parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Sequence

ORACLE_MAX_PARTS = 12


@dataclass(frozen=True)
class MPartitionCertificate:
    parts: tuple[int, ...]
    m: int
    k: int
    groups: tuple[tuple[int, ...], ...]

    def group_values(self) -> list[list[int]]:
        return [[self.parts[i] for i in g] for g in self.groups]

    def verify(self) -> bool:
        d = sum(self.parts)
        if self.m * self.k != d or not (1 < self.m < d and 1 < self.k < d):
            return False
        if len(self.groups) != self.k or not 1 < self.k < len(self.parts):
            return False
        return _groups_cover(self.groups, range(len(self.parts)), self.parts, self.m)

    def to_dict(self) -> dict:
        return {"kind": "m-partition", "m": self.m, "k": self.k,
                "groups": self.group_values()}


@dataclass(frozen=True)
class SpecialMPartitionCertificate:
    parts: tuple[int, ...]
    m: int
    largest_part_index: int
    k: int
    groups: tuple[tuple[int, ...], ...]

    @property
    def largest_part(self) -> int:
        return self.parts[self.largest_part_index]

    def group_values(self) -> list[list[int]]:
        return [[self.parts[i] for i in g] for g in self.groups]

    def verify(self, strict: bool = False) -> bool:
        d = sum(self.parts)
        n_l = self.largest_part
        if n_l != max(self.parts) or self.parts.count(n_l) != 1:
            return False
        if n_l % self.m or d % self.m or not 1 < self.m < n_l:
            return False
        if self.k != (d - n_l) // self.m or self.k < 1 or len(self.groups) != self.k:
            return False
        if strict and not 1 < self.k < len(self.parts) - 1:
            return False
        rest = [i for i in range(len(self.parts)) if i != self.largest_part_index]
        return _groups_cover(self.groups, rest, self.parts, self.m)

    def to_dict(self) -> dict:
        return {"kind": "special-m-partition", "m": self.m, "k": self.k,
                "largest_part": self.largest_part, "groups": self.group_values()}


@dataclass(frozen=True)
class PartitionClass:
    parts: tuple[int, ...]
    distinct: bool
    relatively_prime: bool
    m_partition: MPartitionCertificate | None = None
    special_m_partition: SpecialMPartitionCertificate | None = None


def _groups_cover(groups, indices, parts, m) -> bool:
    flat = [i for g in groups for i in g]
    if sorted(flat) != sorted(indices) or any(not g for g in groups):
        return False
    return all(sum(parts[i] for i in g) == m for g in groups)


def is_distinct(parts: Sequence[int]) -> bool:
    return len(set(parts)) == len(parts)


def is_distinct_relatively_prime(parts: Sequence[int]) -> bool:
    """Distinct parts that are pairwise coprime."""
    if not is_distinct(parts):
        return False
    return all(gcd(a, b) == 1 for a, b in combinations(parts, 2))


def _require_distinct(parts):
    if any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive: {list(parts)}")
    if not is_distinct(parts):
        raise ValueError(f"definition applies to distinct parts only: {list(parts)}")


def nontrivial_divisors(n: int) -> list[int]:
    return [m for m in range(2, n) if n % m == 0]


def equal_sum_grouping(parts: Sequence[int], indices: Sequence[int], m: int, k: int):
    """Split ``parts[i] for i in indices`` into ``k`` groups each summing to ``m``.

    Parts are placed largest first into the first group with room; groups with
    the same remaining capacity are interchangeable, so only the first of them
    is tried. Returns a tuple of index groups, or None.
    """
    if k < 1 or sum(parts[i] for i in indices) != m * k:
        return None
    order = sorted(indices, key=lambda i: (-parts[i], i))
    if order and parts[order[0]] > m:
        return None
    room = [m] * k
    groups: list[list[int]] = [[] for _ in range(k)]

    def place(pos):
        if pos == len(order):
            return True
        i = order[pos]
        tried = set()
        for g in range(k):
            if room[g] < parts[i] or room[g] in tried:
                continue
            tried.add(room[g])
            room[g] -= parts[i]
            groups[g].append(i)
            if place(pos + 1):
                return True
            groups[g].pop()
            room[g] += parts[i]
        return False

    if not place(0):
        return None
    # every group is full once all parts are placed, since the sums match
    return tuple(tuple(sorted(g)) for g in groups)


def find_m_partition(parts: Sequence[int]) -> MPartitionCertificate | None:
    """First m-partition certificate, trying divisors ``m`` of ``d`` in ascending order."""
    parts = tuple(parts)
    _require_distinct(parts)
    d, l = sum(parts), len(parts)
    if l < 2:
        return None
    for m in nontrivial_divisors(d):
        k = d // m
        if not 1 < k < l:
            continue
        groups = equal_sum_grouping(parts, range(l), m, k)
        if groups is not None:
            return MPartitionCertificate(parts, m, k, groups)
    return None


def find_special_m_partition(parts: Sequence[int], strict: bool = False
                             ) -> SpecialMPartitionCertificate | None:
    """First special m-partition certificate, or None.

    By default any number ``k >= 1`` of groups is allowed for the non-largest
    parts. ``strict=True`` requires ``1 < k < l - 1`` literally.
    """
    parts = tuple(parts)
    _require_distinct(parts)
    d, l = sum(parts), len(parts)
    if l < 2:
        return None
    n_l = max(parts)
    top = parts.index(n_l)
    rest = [i for i in range(l) if i != top]
    for m in nontrivial_divisors(d):
        if n_l % m or m >= n_l:
            continue
        k = (d - n_l) // m
        if k < 1 or (strict and not 1 < k < l - 1):
            continue
        groups = equal_sum_grouping(parts, rest, m, k)
        if groups is not None:
            return SpecialMPartitionCertificate(parts, m, top, k, groups)
    return None


def classify_partition(parts: Sequence[int], strict: bool = False) -> PartitionClass:
    parts = tuple(parts)
    distinct = is_distinct(parts)
    coprime = is_distinct_relatively_prime(parts)
    if not distinct:
        return PartitionClass(parts, False, False)
    return PartitionClass(parts, True, coprime,
                          find_m_partition(parts),
                          find_special_m_partition(parts, strict=strict))


def oracle_grouping_exists(parts: Sequence[int], m: int, k: int) -> bool:
    """Decide by enumerating set partitions whether ``parts`` splits into ``k`` groups of sum ``m``.

    Every set partition is generated exactly once by choosing, for the lowest
    unassigned index, the full subset of remaining indices that shares its
    group. Independent of :func:`equal_sum_grouping`.
    """
    parts = list(parts)
    if len(parts) > ORACLE_MAX_PARTS:
        raise ValueError(f"oracle enumerates at most {ORACLE_MAX_PARTS} parts, got {len(parts)}")

    def search(remaining: tuple[int, ...], blocks_left: int) -> bool:
        if not remaining:
            return blocks_left == 0
        if blocks_left == 0:
            return False
        head, tail = remaining[0], remaining[1:]
        for size in range(len(tail) + 1):
            for mates in combinations(tail, size):
                if parts[head] + sum(parts[i] for i in mates) != m:
                    continue
                left = tuple(i for i in tail if i not in mates)
                if search(left, blocks_left - 1):
                    return True
        return False

    return search(tuple(range(len(parts))), k)
