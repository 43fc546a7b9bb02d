"""Permutation groups given by generators: orbits, blocks, stabilizer chains.

Internally permutations are 0-based tuples and ``_mul(p, q)`` applies ``q``
first, matching :func:`primgen.perm.compose`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .perm import Permutation

DEFAULT_MAX_DEGREE = 64


class IntransitiveGroupError(ValueError):
    pass


class DegreeBoundError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a permutation group on {1..degree}; repeats are dropped."""

    degree: int
    generators: tuple[Permutation, ...]

    def __post_init__(self):
        gens = tuple(dict.fromkeys(self.generators))
        if not gens:
            raise ValueError("need at least one generator")
        if self.degree < 2:
            raise ValueError(f"degree must be at least 2, got {self.degree}")
        for g in gens:
            if g.degree != self.degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {self.degree}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *generators: Permutation) -> GeneratorSet:
        return cls(generators[0].degree, tuple(generators))

    def points(self) -> range:
        return range(1, self.degree + 1)


@dataclass(frozen=True)
class BlockSystem:
    """A partition of {1..d} into equal-size blocks, stored in canonical order."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=min))
        object.__setattr__(self, "blocks", blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def as_sorted_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def is_invariant_under(self, g: GeneratorSet) -> bool:
        """Check that every generator maps each block onto a block of the system."""
        members = set(self.blocks)
        covered = sorted(x for b in self.blocks for x in b)
        if covered != list(g.points()) or len({len(b) for b in self.blocks}) != 1:
            return False
        return all(gen.apply_to_set(b) in members for gen in g.generators for b in self.blocks)


def is_block(g: GeneratorSet, block: Iterable[int]) -> bool:
    """True iff every generator maps ``block`` to itself or to a disjoint set.

    Checking generators suffices: for a finite group the translates of a block
    under the generators determine those under all elements.
    """
    block = frozenset(block)
    translates = {block}
    queue = deque([block])
    while queue:
        b = queue.popleft()
        for gen in g.generators:
            c = gen.apply_to_set(b)
            if c in translates:
                continue
            if any(c & t for t in translates):
                return False
            translates.add(c)
            queue.append(c)
    return True


def orbit(g: GeneratorSet, point: int) -> list[int]:
    """Points reachable from ``point``, in breadth-first discovery order."""
    if not 1 <= point <= g.degree:
        raise ValueError(f"point {point} outside 1..{g.degree}")
    seen = {point}
    found = [point]
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for gen in g.generators:
            y = gen(x)
            if y not in seen:
                seen.add(y)
                found.append(y)
                queue.append(y)
    return found


def orbits(g: GeneratorSet) -> list[list[int]]:
    result, seen = [], set()
    for x in g.points():
        if x not in seen:
            o = orbit(g, x)
            seen.update(o)
            result.append(o)
    return result


def is_transitive(g: GeneratorSet) -> bool:
    return len(orbit(g, 1)) == g.degree


def _require_transitive(g: GeneratorSet):
    if not is_transitive(g):
        raise IntransitiveGroupError("blocks and primitivity are defined here for transitive groups only")


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return None
        # keep the smaller label as representative
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return x, y


def _minimal_block_classes(g: GeneratorSet, a: int, b: int) -> _UnionFind:
    uf = _UnionFind(g.degree)
    pending = deque()
    merged = uf.union(a, b)
    if merged:
        pending.append(merged)
    while pending:
        x, y = pending.popleft()
        for gen in g.generators:
            step = uf.union(gen(x), gen(y))
            if step:
                pending.append(step)
    return uf


def minimal_block_containing(g: GeneratorSet, a: int, b: int) -> frozenset[int]:
    """Smallest block of the group containing both ``a`` and ``b``."""
    _require_transitive(g)
    if a == b:
        raise ValueError("need two distinct points")
    for x in (a, b):
        if not 1 <= x <= g.degree:
            raise ValueError(f"point {x} outside 1..{g.degree}")
    uf = _minimal_block_classes(g, a, b)
    root = uf.find(a)
    return frozenset(x for x in g.points() if uf.find(x) == root)


def is_primitive(g: GeneratorSet) -> bool:
    _require_transitive(g)
    return all(len(minimal_block_containing(g, 1, b)) == g.degree for b in range(2, g.degree + 1))


def block_systems(g: GeneratorSet) -> list[BlockSystem]:
    """Non-trivial block systems generated by the minimal blocks containing {1, b}."""
    _require_transitive(g)
    systems = []
    for b in range(2, g.degree + 1):
        uf = _minimal_block_classes(g, 1, b)
        classes: dict[int, set[int]] = {}
        for x in g.points():
            classes.setdefault(uf.find(x), set()).add(x)
        if len(classes) == 1:
            continue
        system = BlockSystem(tuple(classes.values()))
        if system not in systems:
            systems.append(system)
    return sorted(systems, key=lambda s: (s.block_size, s.as_sorted_lists()))


# -- stabilizer chain ---------------------------------------------------------

def _mul(p, q):
    return tuple([p[x] for x in q])


def _inv(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


class _Level:
    __slots__ = ("base", "gens", "trans", "orbit", "checked")

    def __init__(self, base, identity):
        self.base = base
        self.gens = []
        # point -> (u, u^-1) with u(base) = point
        self.trans = {base: (identity, identity)}
        self.orbit = [base]
        self.checked = set()

    def add_generator(self, h):
        self.gens.append(h)
        trans, orbit = self.trans, self.orbit
        # existing representatives are kept so earlier checks stay valid
        queue = deque(orbit)
        while queue:
            x = queue.popleft()
            u = trans[x][0]
            for s in self.gens:
                y = s[x]
                if y not in trans:
                    v = _mul(s, u)
                    trans[y] = (v, _inv(v))
                    orbit.append(y)
                    queue.append(y)


class StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    New base points are the smallest point moved by the element that needs
    them. Once built, the chain is only read.
    """

    def __init__(self, g: GeneratorSet):
        self.degree = g.degree
        n = g.degree
        self._identity = tuple(range(n))
        self.levels: list[_Level] = []
        gens = [tuple(x - 1 for x in p.image) for p in g.generators]
        gens = [p for p in gens if p != self._identity]
        if gens:
            first = min(min(i for i, x in enumerate(p) if x != i) for p in gens)
            level = _Level(first, self._identity)
            for p in gens:
                level.add_generator(p)
            self.levels.append(level)
            self._complete()

    def _sift(self, g, start):
        for j in range(start, len(self.levels)):
            level = self.levels[j]
            x = g[level.base]
            rep = level.trans.get(x)
            if rep is None:
                return g, j
            if x != level.base:
                g = _mul(rep[1], g)
        return g, len(self.levels)

    def _complete(self):
        identity = self._identity
        i = len(self.levels) - 1
        while i >= 0:
            level = self.levels[i]
            extended_at = None
            for p in level.orbit:
                u_p = level.trans[p][0]
                for gi, s in enumerate(level.gens):
                    if (p, gi) in level.checked:
                        continue
                    q = s[p]
                    sp_u = _mul(s, u_p)
                    u_q, u_q_inv = level.trans[q]
                    if sp_u != u_q:
                        h, j = self._sift(_mul(u_q_inv, sp_u), i + 1)
                        if j < len(self.levels) or h != identity:
                            if j == len(self.levels):
                                moved = next(x for x, y in enumerate(h) if x != y)
                                self.levels.append(_Level(moved, identity))
                            for lvl in self.levels[i + 1:j + 1]:
                                lvl.add_generator(h)
                            extended_at = j
                            break
                    level.checked.add((p, gi))
                if extended_at is not None:
                    break
            if extended_at is None:
                i -= 1
            else:
                i = extended_at

    @property
    def base(self) -> list[int]:
        return [lvl.base + 1 for lvl in self.levels]

    @property
    def orbit_lengths(self) -> list[int]:
        return [len(lvl.orbit) for lvl in self.levels]

    def order(self) -> int:
        result = 1
        for n in self.orbit_lengths:
            result *= n
        return result

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        h, j = self._sift(tuple(x - 1 for x in p.image), 0)
        return j == len(self.levels) and h == self._identity


def _check_degree(g: GeneratorSet, max_degree: int):
    if g.degree > max_degree:
        raise DegreeBoundError(f"degree {g.degree} exceeds bound {max_degree}")


@lru_cache(maxsize=64)
def _cached_chain(g: GeneratorSet) -> StabilizerChain:
    return StabilizerChain(g)


def stabilizer_chain(g: GeneratorSet, max_degree: int = DEFAULT_MAX_DEGREE) -> StabilizerChain:
    _check_degree(g, max_degree)
    return _cached_chain(g)


def group_order(g: GeneratorSet, max_degree: int = DEFAULT_MAX_DEGREE) -> int:
    return stabilizer_chain(g, max_degree).order()


def contains(g: GeneratorSet, p: Permutation, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    if p.degree != g.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {g.degree}")
    return stabilizer_chain(g, max_degree).contains(p)


def enumerate_elements(g: GeneratorSet, limit: int = 10**6) -> set[Permutation]:
    """All group elements by breadth-first multiplication by generators.

    Raises ValueError once more than ``limit`` elements have been found.
    """
    gens = [tuple(x - 1 for x in p.image) for p in g.generators]
    identity = tuple(range(g.degree))
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = _mul(s, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise ValueError(f"group has more than {limit} elements")
                queue.append(y)
    return {Permutation(tuple(v + 1 for v in x)) for x in seen}

