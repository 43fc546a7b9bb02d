"""Primitive generators of transitive permutation groups.

A permutation whose cycle lengths form a suitable partition forces every
transitive group containing it to be primitive. This package decides that
criterion and checks it against direct group computations.
"""

from .catalog import CatalogEntry, entry, list_entries
from .groups import (
    BlockSystem,
    DegreeBoundError,
    GeneratorSet,
    IntransitiveGroupError,
    StabilizerChain,
    block_systems,
    contains,
    enumerate_elements,
    group_order,
    is_block,
    is_primitive,
    is_transitive,
    minimal_block_containing,
    orbit,
    orbits,
)
from .partitions import (
    MPartitionCertificate,
    SpecialMPartitionCertificate,
    classify_partition,
    find_m_partition,
    find_special_m_partition,
    is_distinct_relatively_prime,
    oracle_grouping_exists,
)
from .perm import (
    ParseError,
    Permutation,
    compose,
    cycle_decomposition,
    parse_permutation,
    partition_of,
    power,
    print_permutation,
)
from .theorem import (
    GeneratorVerdict,
    GroupKind,
    LemmaWitness,
    Verdict,
    classify_generator,
    extract_cycle_power,
    identify_sym_or_alt,
    lemma_witness,
)

__version__ = "0.1.0"
