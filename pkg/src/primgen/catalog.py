"""Generator sets for the worked examples and named primitive groups.

Fixed entries are transcribed generator lists. ``sym(d)`` and ``alt(d)``
pair one primitive generator with a second generator that makes the group
transitive and fixes its parity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

from .groups import BlockSystem, GeneratorSet
from .perm import Permutation, parse_permutation
from .theorem import Verdict, classify_generator


@dataclass(frozen=True)
class Expected:
    transitive: bool
    primitive: bool
    verdict_of_first_generator: Verdict
    order: int | None = None
    block_system: BlockSystem | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: GeneratorSet
    expected: Expected
    description: str = ""


def _gens(degree, *texts) -> GeneratorSet:
    return GeneratorSet(degree, tuple(parse_permutation(t, degree) for t in texts))


def _cycle(points) -> str:
    return "(" + " ".join(map(str, points)) + ")"


_EX1_ALPHA = "(1, 2)(3, 4, 5)(6, 7, 8, 9, 10)"
_EX2_ALPHA = _cycle(range(1, 26)) + "(26, 27)(28, 29, 30)"


def _ex4_1_g1():
    return CatalogEntry(
        "ex4_1_G1", 10, _gens(10, _EX1_ALPHA, "(2, 3)(5, 6)"),
        Expected(True, True, Verdict.FAILS_M_PARTITION, order=factorial(10)),
        "m-partition generator inside the full symmetric group on 10 points")


def _ex4_1_g2():
    return CatalogEntry(
        "ex4_1_G2", 10, _gens(10, _EX1_ALPHA, "(1, 6)(2, 7)(3, 8)(4, 9)(5, 10)"),
        Expected(True, False, Verdict.FAILS_M_PARTITION,
                 block_system=BlockSystem((frozenset(range(1, 6)), frozenset(range(6, 11))))),
        "same generator inside an imprimitive group with two blocks of size 5")


def _ex4_2_g1():
    return CatalogEntry(
        "ex4_2_G1", 30, _gens(30, _EX2_ALPHA, "(25, 26)(27, 28)"),
        Expected(True, True, Verdict.FAILS_SPECIAL_M_PARTITION, order=factorial(30)),
        "special m-partition generator inside the full symmetric group on 30 points")


def _ex4_2_g2():
    blocks = [frozenset(range(r, 26, 5)) for r in range(1, 6)] + [frozenset(range(26, 31))]
    return CatalogEntry(
        "ex4_2_G2", 30, _gens(30, _EX2_ALPHA, "(1, 26)(6, 27)(11, 28)(16, 29)(21, 30)"),
        Expected(True, False, Verdict.FAILS_SPECIAL_M_PARTITION,
                 block_system=BlockSystem(tuple(blocks))),
        "same generator inside an imprimitive group with six blocks of size 5")


def _m12():
    return CatalogEntry(
        "m12", 12,
        _gens(12, "(1, 2, 3, 5, 6, 8, 9, 11, 10, 7, 4)", "(3, 4)(6, 7)(9, 10)(11, 12)"),
        Expected(True, True, Verdict.QUALIFIES_L2, order=95040),
        "Mathieu group M12")


def _m24():
    return CatalogEntry(
        "m24", 24,
        _gens(24,
              _cycle(range(1, 24)),
              "(16, 8, 15, 6, 11, 21, 18, 12, 23, 22, 20)(4, 7, 13, 2, 3, 5, 9, 17, 10, 19, 14)",
              "(24, 1)(16, 4)(8, 14)(15, 19)(6, 10)(11, 17)(21, 9)(18, 5)(12, 3)(23, 2)(22, 13)(20, 7)",
              "(15, 18, 12, 20, 23)(21, 11, 8, 6, 22)(19, 5, 3, 7, 2)(9, 17, 14, 10, 13)"),
        Expected(True, True, Verdict.QUALIFIES_L2, order=244823040),
        "Mathieu group M24")


def _psl_2_7():
    return CatalogEntry(
        "psl_2_7", 8,
        _gens(8, "(1, 2, 3, 4, 5, 6, 7)", "(2, 5, 3)(4, 6, 7)", "(8, 1)(2, 4)(3, 6)(5, 7)"),
        Expected(True, True, Verdict.QUALIFIES_L2, order=168),
        "PSL(2, 7) acting on 8 points")


_FIXED = {
    "ex4_1_G1": _ex4_1_g1,
    "ex4_1_G2": _ex4_1_g2,
    "ex4_2_G1": _ex4_2_g1,
    "ex4_2_G2": _ex4_2_g2,
    "m12": _m12,
    "m24": _m24,
    "psl_2_7": _psl_2_7,
}

_PARAMETRIC = re.compile(r"^(sym|alt)\((\d+)\)$")


def sym_alt_generators(d: int, alternating: bool) -> tuple[Permutation, Permutation] | tuple[Permutation]:
    """Primitive generator plus a completing generator for the symmetric or alternating group.

    Even ``d >= 4``: ``(1)(2 .. d)`` with ``(1 2)(3 4)`` or ``(1 2)``.
    Odd ``d = 2k + 1`` with ``k > 3``: ``(1 .. k-1)(k .. 2k)(2k+1)``, which is
    even, with the 3-cycle ``(1 k 2k+1)`` or the 4-cycle ``(1 k 2k+1 2)``.
    ``d`` in {3, 5, 7}: the ``d``-cycle with ``(1 2 3)`` or ``(1 2)``.
    """
    if d >= 4 and d % 2 == 0:
        alpha = parse_permutation(_cycle(range(2, d + 1)), d)
        beta = "(1 2)(3 4)" if alternating else "(1 2)"
        return alpha, parse_permutation(beta, d)
    if d in (3, 5, 7):
        alpha = parse_permutation(_cycle(range(1, d + 1)), d)
        if alternating and d == 3:
            return (alpha,)
        return alpha, parse_permutation("(1 2 3)" if alternating else "(1 2)", d)
    if d % 2 == 1 and (d - 1) // 2 > 3:
        k = (d - 1) // 2
        alpha = parse_permutation(_cycle(range(1, k)) + _cycle(range(k, 2 * k + 1)), d)
        beta = _cycle([1, k, 2 * k + 1]) if alternating else _cycle([1, k, 2 * k + 1, 2])
        return alpha, parse_permutation(beta, d)
    raise ValueError(f"no symmetric/alternating construction for degree {d}")


def _sym_alt(kind: str, d: int) -> CatalogEntry:
    alternating = kind == "alt"
    gens = sym_alt_generators(d, alternating)
    order = factorial(d) // 2 if alternating else factorial(d)
    return CatalogEntry(
        f"{kind}({d})", d, GeneratorSet(d, gens),
        Expected(True, True, classify_generator(gens[0]).tag, order=order),
        f"{'alternating' if alternating else 'symmetric'} group on {d} points")


def entry(name: str) -> CatalogEntry:
    if name in _FIXED:
        return _FIXED[name]()
    m = _PARAMETRIC.match(name)
    if m:
        return _sym_alt(m.group(1), int(m.group(2)))
    raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(list_entries())}")


def list_entries() -> list[str]:
    return list(_FIXED) + ["sym(d)", "alt(d)"]
