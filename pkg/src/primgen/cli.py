"""Command-line front end: ``primgen analyze | group | witness | catalog``.

Exit codes: 0 success (for ``analyze``: the generator qualifies), 1 usage or
input error, 2 ``analyze`` verdict does not qualify, 3 ``catalog --verify``
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from . import catalog as catalog_mod
from .groups import (
    DEFAULT_MAX_DEGREE,
    GeneratorSet,
    block_systems,
    group_order,
    is_primitive,
    is_transitive,
)
from .partitions import classify_partition
from .perm import ParseError, parse_permutation, partition_of, power, print_permutation
from .theorem import Verdict, classify_generator, identify_sym_or_alt, lemma_witness

EXIT_OK, EXIT_ERROR, EXIT_NOT_QUALIFIED, EXIT_MISMATCH = 0, 1, 2, 3

REPORT_KEYS = ("degree", "partition", "verdict", "certificates", "transitive",
               "primitive", "order", "block_systems", "witness")


class UsageError(Exception):
    pass


@dataclass
class AnalysisReport:
    input: str
    degree: int
    partition: list[int]
    verdict: str
    certificates: list[dict] = field(default_factory=list)
    explanation: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = dict.fromkeys(REPORT_KEYS)
        out.update(asdict(self))
        return out

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisReport:
        return cls(data["input"], data["degree"], list(data["partition"]), data["verdict"],
                   list(data["certificates"]), list(data["explanation"]))


def _base_report(**values) -> dict:
    out = dict.fromkeys(REPORT_KEYS)
    out.update(values)
    return out


def analyze(text: str, degree: int | None = None, strict: bool = False) -> AnalysisReport:
    alpha = parse_permutation(text, degree)
    parts = partition_of(alpha)
    verdict = classify_generator(alpha, strict=strict)
    pclass = classify_partition(parts, strict=strict)
    certs = [c.to_dict() for c in (pclass.m_partition, pclass.special_m_partition) if c]
    lines = [f"relatively prime (distinct, pairwise coprime): {_yes(pclass.relatively_prime)}"]
    if pclass.distinct:
        lines.append(_cert_line("m-partition", pclass.m_partition))
        lines.append(_cert_line("special m-partition" + (" (strict)" if strict else ""),
                                pclass.special_m_partition))
    else:
        lines.append("parts are not distinct: m-partition tests do not apply")
    lines.append(_VERDICT_TEXT[verdict.tag])
    return AnalysisReport(print_permutation(alpha), alpha.degree, list(parts),
                          verdict.tag.value, certs, lines)


_VERDICT_TEXT = {
    Verdict.QUALIFIES_L2: "two coprime cycle lengths: every transitive group containing it is primitive",
    Verdict.QUALIFIES_L3_PLUS: ("coprime cycle lengths, no m-partition or special m-partition: "
                                "every transitive group containing it is primitive"),
    Verdict.NOT_COVERED_SINGLE_CYCLE: "a single cycle: the criterion does not apply",
    Verdict.FAILS_DISTINCT_OR_COPRIME: "cycle lengths repeat or share a factor: the criterion does not apply",
    Verdict.FAILS_M_PARTITION: "cycle lengths form an m-partition: the criterion does not apply",
    Verdict.FAILS_SPECIAL_M_PARTITION: "cycle lengths form a special m-partition: the criterion does not apply",
}


def _yes(flag):
    return "yes" if flag else "no"


def _cert_line(label, cert):
    if cert is None:
        return f"{label}: no"
    groups = " + ".join("(" + " + ".join(map(str, g)) + ")" for g in cert.group_values())
    extra = f"{cert.largest_part} + " if hasattr(cert, "largest_part") else ""
    return f"{label}: yes, m={cert.m}, k={cert.k}: {sum(cert.parts)} = {extra}{groups}"


def _read_generators(args) -> list[str]:
    texts = list(args.generators)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    texts.append(line)
    if not texts:
        raise UsageError("no generators given")
    return texts


def _generator_set(texts, degree) -> GeneratorSet:
    if degree is None:
        named = [t for t in texts if t.strip() != "()"]
        if not named:
            raise UsageError("cannot infer the degree; pass --degree")
        degree = max(parse_permutation(t).degree for t in named)
    return GeneratorSet(degree, tuple(parse_permutation(t, degree) for t in texts))


def group_report(g: GeneratorSet, order=False, blocks=False, identify=False,
                 max_degree=DEFAULT_MAX_DEGREE) -> dict:
    transitive = is_transitive(g)
    first = g.generators[0]
    report = _base_report(
        degree=g.degree,
        generators=[print_permutation(p) for p in g.generators],
        partition=list(partition_of(first)),
        verdict=classify_generator(first).tag.value,
        transitive=transitive,
        primitive=is_primitive(g) if transitive else None,
    )
    if blocks:
        if not transitive:
            raise UsageError("block systems are only reported for transitive groups")
        report["block_systems"] = [s.as_sorted_lists() for s in block_systems(g)]
    if order:
        report["order"] = str(group_order(g, max_degree=max_degree))
    if identify:
        report["identity"] = identify_sym_or_alt(g, max_degree=max_degree).value
    return report


def _print_group_text(report, out):
    print(f"degree: {report['degree']}", file=out)
    for text in report["generators"]:
        print(f"generator: {text}", file=out)
    print(f"first generator partition: {report['partition']}  verdict: {report['verdict']}", file=out)
    print(f"transitive: {_yes(report['transitive'])}", file=out)
    if report["primitive"] is not None:
        print(f"primitive: {_yes(report['primitive'])}", file=out)
    if report["order"] is not None:
        print(f"order: {report['order']}", file=out)
    if report.get("identity"):
        print(f"identified as: {report['identity']}", file=out)
    if report["block_systems"] is not None:
        if not report["block_systems"]:
            print("block systems: none", file=out)
        for system in report["block_systems"]:
            print("block system: " + " ".join("{" + ",".join(map(str, b)) + "}" for b in system),
                  file=out)


def _parse_point_set(text: str) -> set[int]:
    try:
        points = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"invalid point list {text!r}") from None
    if not points:
        raise UsageError("empty point set")
    return set(points)


def cmd_analyze(args, out) -> int:
    report = analyze(args.perm, args.degree, strict=args.strict_defs)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2), file=out)
    else:
        print(f"input: {report.input}", file=out)
        print(f"degree: {report.degree}", file=out)
        print(f"partition: {report.partition}", file=out)
        for line in report.explanation[:-1]:
            print(line, file=out)
        print(f"verdict: {report.verdict}", file=out)
        print(report.explanation[-1], file=out)
    return EXIT_OK if Verdict(report.verdict).qualifies else EXIT_NOT_QUALIFIED


def cmd_group(args, out) -> int:
    g = _generator_set(_read_generators(args), args.degree)
    report = group_report(g, order=args.order, blocks=args.blocks, identify=args.identify,
                          max_degree=args.max_degree)
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    else:
        _print_group_text(report, out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    alpha = parse_permutation(args.perm, args.degree)
    A = _parse_point_set(args.set)
    try:
        w = lemma_witness(alpha, A)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = _base_report(degree=alpha.degree, partition=list(partition_of(alpha)),
                          input=print_permutation(alpha), set=sorted(A),
                          witness=w.to_dict() if w else None)
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    elif w is None:
        print("none", file=out)
    else:
        print(f"exponent: {w.exponent}", file=out)
        print(f"a_s: {w.a_s} -> {power_image(w, w.a_s)} (leaves the set)", file=out)
        print(f"a_t: {w.a_t} -> {power_image(w, w.a_t)} (stays in the set)", file=out)
        print(f"image of set: {{{','.join(map(str, sorted(w.image())))}}}", file=out)
    return EXIT_OK


def power_image(w, point):
    return power(w.alpha, w.exponent)(point)


def cmd_catalog(args, out) -> int:
    if args.name is None:
        for name in catalog_mod.list_entries():
            print(name, file=out)
        return EXIT_OK
    try:
        entry = catalog_mod.entry(args.name)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0])) from None
    exp = entry.expected
    report = _base_report(name=entry.name, degree=entry.degree,
                          generators=[print_permutation(p) for p in entry.generators.generators],
                          expected={"transitive": exp.transitive, "primitive": exp.primitive,
                                    "order": None if exp.order is None else str(exp.order),
                                    "verdict": exp.verdict_of_first_generator.value,
                                    "block_system": exp.block_system.as_sorted_lists()
                                    if exp.block_system else None})
    status = EXIT_OK
    if args.verify:
        actual = group_report(entry.generators, order=True, blocks=exp.transitive)
        checks = {
            "transitive": actual["transitive"] == exp.transitive,
            "primitive": actual["primitive"] == exp.primitive,
            "verdict": actual["verdict"] == exp.verdict_of_first_generator.value,
        }
        if exp.order is not None:
            checks["order"] = actual["order"] == str(exp.order)
        if exp.block_system is not None:
            checks["block_system"] = exp.block_system.as_sorted_lists() in actual["block_systems"]
        for key in ("partition", "verdict", "transitive", "primitive", "order", "block_systems"):
            report[key] = actual[key]
        report["checks"] = checks
        if not all(checks.values()):
            status = EXIT_MISMATCH
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    else:
        print(f"{entry.name}: {entry.description}", file=out)
        print(f"degree: {entry.degree}", file=out)
        for text in report["generators"]:
            print(f"generator: {text}", file=out)
        if args.verify:
            print(f"partition of first generator: {report['partition']}", file=out)
            print(f"verdict: {report['verdict']}", file=out)
            print(f"transitive: {_yes(report['transitive'])}", file=out)
            print(f"primitive: {_yes(report['primitive'])}", file=out)
            print(f"order: {report['order']}", file=out)
            for system in report["block_systems"] or []:
                print(f"block system: {len(system)} blocks of size {len(system[0])}: "
                      + " ".join("{" + ",".join(map(str, b)) + "}" for b in system), file=out)
            for key, ok in report["checks"].items():
                print(f"check {key}: {'ok' if ok else 'MISMATCH'}", file=out)
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primgen", description="Primitive generators of permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="classify a permutation by its cycle lengths")
    p.add_argument("perm", help='cycle notation, e.g. "(1 2)(3 4 5)"')
    p.add_argument("--degree", type=int)
    p.add_argument("--strict-defs", action="store_true",
                   help="require 1 < k < l-1 groups for special m-partitions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("group", help="transitivity, primitivity, order and blocks of a group")
    p.add_argument("generators", nargs="*", help="generators in cycle notation")
    p.add_argument("--file", help="file with one generator per line, '#' starts a comment")
    p.add_argument("--degree", type=int)
    p.add_argument("--order", action="store_true")
    p.add_argument("--blocks", action="store_true")
    p.add_argument("--identify", action="store_true", help="symmetric, alternating or other")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("witness", help="power of a permutation showing a set is not a block")
    p.add_argument("perm")
    p.add_argument("set", help="comma-separated points, e.g. 1,2,3")
    p.add_argument("--degree", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("catalog", help="show (and optionally verify) a catalog entry")
    p.add_argument("name", nargs="?", help="entry name; omit to list entries")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"primgen: parse error: {exc}", file=sys.stderr)
    except (UsageError, ValueError) as exc:
        print(f"primgen: error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"primgen: error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
