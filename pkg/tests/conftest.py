import random

import pytest
from hypothesis import strategies as st

from primgen import GeneratorSet, Permutation, parse_permutation

EX1_ALPHA = "(1 2)(3 4 5)(6 7 8 9 10)"
EX2_ALPHA = "(" + " ".join(map(str, range(1, 26))) + ")(26 27)(28 29 30)"


def P(text, degree=None):
    return parse_permutation(text, degree)


def G(degree, *texts):
    return GeneratorSet(degree, tuple(parse_permutation(t, degree) for t in texts))


def random_perm(rng: random.Random, d: int) -> Permutation:
    image = list(range(1, d + 1))
    rng.shuffle(image)
    return Permutation(tuple(image))


@st.composite
def permutations(draw, min_degree=2, max_degree=12):
    d = draw(st.integers(min_degree, max_degree))
    image = draw(st.permutations(list(range(1, d + 1))))
    return Permutation(tuple(image))


@pytest.fixture
def rng():
    return random.Random(20091)


def distinct_partitions(d: int, max_parts: int | None = None, smallest: int = 1):
    """All partitions of ``d`` into distinct parts, each as an ascending tuple."""
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(smallest, d + 1):
        rest = d - first
        if 0 < rest <= first:
            continue
        for tail in distinct_partitions(rest, None if max_parts is None else max_parts - 1, first + 1):
            yield (first,) + tail


def perm_with_cycle_type(rng: random.Random, parts) -> Permutation:
    """Random permutation whose cycle lengths are ``parts``."""
    d = sum(parts)
    points = list(range(1, d + 1))
    rng.shuffle(points)
    cycles, pos = [], 0
    for n in parts:
        cycles.append(points[pos:pos + n])
        pos += n
    return Permutation.from_cycles(cycles, d)


def transitive_completion(rng: random.Random, alpha: Permutation) -> GeneratorSet:
    """Add random transpositions to ``alpha`` until the group is transitive."""
    from primgen import is_transitive

    d = alpha.degree
    gens = [alpha]
    while not is_transitive(GeneratorSet(d, tuple(gens))):
        i, j = rng.sample(range(1, d + 1), 2)
        gens.append(Permutation.from_cycles([(i, j)], d))
    return GeneratorSet(d, tuple(gens))


_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body must assert its own conditions."""
    state = {"detail": ""}

    def note(detail):
        state["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    _CRITERIA.append((request.node.name, passed, state["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _CRITERIA:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
