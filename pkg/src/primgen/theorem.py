"""Primitive generators: the block-breaking witness, the classifier, and helpers.

A permutation whose cycle lengths are distinct, pairwise coprime, and (when
there are three or more cycles) neither an m-partition nor a special
m-partition, makes every transitive group containing it primitive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial, gcd, prod

from .groups import GeneratorSet, group_order
from .partitions import (
    MPartitionCertificate,
    SpecialMPartitionCertificate,
    find_m_partition,
    find_special_m_partition,
    is_distinct_relatively_prime,
)
from .perm import Permutation, cycle_decomposition, partition_of, power


class Verdict(str, enum.Enum):
    QUALIFIES_L2 = "QualifiesL2"
    QUALIFIES_L3_PLUS = "QualifiesL3Plus"
    NOT_COVERED_SINGLE_CYCLE = "NotCoveredSingleCycle"
    FAILS_DISTINCT_OR_COPRIME = "FailsDistinctOrCoprime"
    FAILS_M_PARTITION = "FailsMPartition"
    FAILS_SPECIAL_M_PARTITION = "FailsSpecialMPartition"

    @property
    def qualifies(self) -> bool:
        return self in (Verdict.QUALIFIES_L2, Verdict.QUALIFIES_L3_PLUS)


@dataclass(frozen=True)
class GeneratorVerdict:
    tag: Verdict
    partition: tuple[int, ...]
    evidence: MPartitionCertificate | SpecialMPartitionCertificate | None = None

    @property
    def qualifies(self) -> bool:
        return self.tag.qualifies


@dataclass(frozen=True)
class LemmaWitness:
    """``alpha ** exponent`` keeps ``a_t`` in ``A`` but sends ``a_s`` outside it.

    ``s`` and ``t`` index the cycles of ``alpha`` in canonical order.
    """

    alpha: Permutation
    A: frozenset[int]
    s: int
    t: int
    exponent: int
    a_s: int
    a_t: int

    def image(self) -> frozenset[int]:
        return power(self.alpha, self.exponent).apply_to_set(self.A)

    def verify(self) -> bool:
        cycles = cycle_decomposition(self.alpha)
        cs, ct = cycles[self.s], cycles[self.t]
        if self.s == self.t or gcd(len(cs), len(ct)) != 1:
            return False
        if self.a_s not in cs or self.a_t not in ct or not {self.a_s, self.a_t} <= self.A:
            return False
        if self.exponent < 1 or self.exponent % len(ct):
            return False
        g = power(self.alpha, self.exponent)
        image = g.apply_to_set(self.A)
        return (g(self.a_s) not in self.A and g(self.a_t) in self.A
                and image != self.A and bool(image & self.A))

    def to_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "exponent": self.exponent,
                "a_s": self.a_s, "a_t": self.a_t, "image": sorted(self.image())}


def lemma_witness(alpha: Permutation, A) -> LemmaWitness | None:
    """Find a power of ``alpha`` showing that ``A`` cannot be a block.

    Looks for cycles ``s != t`` of coprime lengths where ``A`` meets but does
    not contain the support of ``s`` and meets the support of ``t``. The
    exponent is the least multiple of the length of ``t`` moving the smallest
    point of ``A`` on cycle ``s`` out of ``A``. Returns None when no such
    pair of cycles exists.
    """
    A = frozenset(A)
    d = alpha.degree
    if not A:
        raise ValueError("A must be nonempty")
    if any(not 1 <= x <= d for x in A):
        raise ValueError(f"A has points outside 1..{d}")
    if len(A) == d:
        raise ValueError("A must be a proper subset")
    cycles = cycle_decomposition(alpha)
    supports = [frozenset(c) for c in cycles]
    for s, S_s in enumerate(supports):
        inside = S_s & A
        if not inside or inside == S_s:
            continue
        for t, S_t in enumerate(supports):
            if t == s or gcd(len(S_s), len(S_t)) != 1 or not S_t & A:
                continue
            a_s, a_t = min(inside), min(S_t & A)
            cycle, n_t = cycles[s], len(S_t)
            pos = cycle.index(a_s)
            # n_t is a unit mod len(cycle), so some n' <= len(cycle) works
            for n_prime in range(1, len(cycle) + 1):
                e = n_t * n_prime
                if cycle[(pos + e) % len(cycle)] not in A:
                    return LemmaWitness(alpha, A, s, t, e, a_s, a_t)
    return None


def classify_partition_verdict(parts, strict: bool = False) -> GeneratorVerdict:
    parts = tuple(sorted(parts))
    if len(parts) == 1:
        return GeneratorVerdict(Verdict.NOT_COVERED_SINGLE_CYCLE, parts)
    if not is_distinct_relatively_prime(parts):
        return GeneratorVerdict(Verdict.FAILS_DISTINCT_OR_COPRIME, parts)
    if len(parts) == 2:
        return GeneratorVerdict(Verdict.QUALIFIES_L2, parts)
    cert = find_m_partition(parts)
    if cert is not None:
        return GeneratorVerdict(Verdict.FAILS_M_PARTITION, parts, cert)
    special = find_special_m_partition(parts, strict=strict)
    if special is not None:
        return GeneratorVerdict(Verdict.FAILS_SPECIAL_M_PARTITION, parts, special)
    return GeneratorVerdict(Verdict.QUALIFIES_L3_PLUS, parts)


def classify_generator(alpha: Permutation, strict: bool = False) -> GeneratorVerdict:
    """Decide whether ``alpha`` is guaranteed to be a primitive generator.

    A qualifying verdict means every transitive group containing ``alpha``
    is primitive. A failing verdict only means the criterion does not apply.
    """
    return classify_partition_verdict(partition_of(alpha), strict=strict)


def extract_cycle_power(alpha: Permutation, m: int) -> Permutation:
    """Power of ``alpha`` that is a single ``m``-cycle on the ``m``-cycle's support."""
    parts = partition_of(alpha)
    if m < 2 or m not in parts:
        raise ValueError(f"{m} is not a cycle length >= 2 of {alpha}")
    if not is_distinct_relatively_prime(parts):
        raise ValueError(f"cycle lengths {list(parts)} are not distinct and pairwise coprime")
    return power(alpha, prod(n for n in parts if n != m))


class GroupKind(str, enum.Enum):
    SYMMETRIC = "Symmetric"
    ALTERNATING = "Alternating"
    OTHER = "Other"


def identify_sym_or_alt(g: GeneratorSet, **kwargs) -> GroupKind:
    order = group_order(g, **kwargs)
    full = factorial(g.degree)
    if order == full:
        return GroupKind.SYMMETRIC
    if 2 * order == full:
        return GroupKind.ALTERNATING
    return GroupKind.OTHER
