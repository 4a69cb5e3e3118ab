import json
import logging
import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from python_spin_crystal import __version__
from python_spin_crystal.checks.check_suite import SuiteInputs
from python_spin_crystal.checks.suite_runner import run_suites
from python_spin_crystal.checks.suites import SUITE_CHOICES, build_suite_graph
from python_spin_crystal.core.cartan import CartanType
from python_spin_crystal.core.crystal import eps_vector, phi_vector, weight
from python_spin_crystal.core.crystal_graph import export_dot, export_json, generate
from python_spin_crystal.core.exceptions import SpinCrystalKnownException
from python_spin_crystal.core.partitions import (
    HStrictPartition,
    a_of,
    b_of,
    bar_core,
    bar_weight,
    content,
    enumerate_h_strict,
    enumerate_restricted,
    parse_partition,
)
from python_spin_crystal.reps.blocks import (
    block_size,
    require_restricted,
    type_S,
    type_W,
)
from python_spin_crystal.reps.branching import (
    Algebra,
    Direction,
    basic_spin,
    branch,
    jantzen_seitz_A,
    jantzen_seitz_S,
)

__all__ = ["main"]

BASE_LOGGER = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _cartan_type(text: str) -> CartanType:
    try:
        return CartanType.from_h(text)
    except SpinCrystalKnownException as exc:
        raise ArgumentTypeError(str(exc))


def _partition(text: str) -> HStrictPartition:
    try:
        return parse_partition(text)
    except SpinCrystalKnownException as exc:
        raise ArgumentTypeError(str(exc))


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2)


def _enumerate(args: Namespace) -> int:
    listing = enumerate_h_strict if args.all else enumerate_restricted
    for lam in listing(args.n, args.h):
        print(lam)
    return 0


def _graph(args: Namespace) -> int:
    graph = generate(args.h, args.max_n)
    text = export_dot(graph) if args.format == "dot" else export_json(graph)
    if args.out:
        Path(args.out).write_text(text)
        BASE_LOGGER.info(f"Wrote {len(graph)} nodes to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _stats(args: Namespace) -> int:
    lam, ct = args.partition, args.h
    require_restricted(lam, ct)
    payload: Dict[str, Any] = {
        "partition": lam.to_json(),
        "h": ct.h_label,
        "degree": lam.degree,
        "content": {str(r): c for r, c in content(lam, ct).counts},
        "eps": eps_vector(lam, ct),
        "phi": phi_vector(lam, ct),
        "wt": str(weight(lam, ct)),
        "b": b_of(lam, ct),
        "a": a_of(lam, ct),
        "type_W": type_W(lam, ct).value,
        "type_S": type_S(lam, ct).value,
        "bar_core": bar_core(lam, ct).to_json(),
        "bar_weight": bar_weight(lam, ct),
        "block_size": block_size(lam, ct),
    }
    print(_dumps(payload))
    return 0


def _branch(args: Namespace) -> int:
    report = branch(
        args.partition, args.h, Algebra(args.algebra), Direction(args.direction)
    )
    print(_dumps(report.to_json()))
    return 0


def _js(args: Namespace) -> int:
    verdict = jantzen_seitz_S if args.group == "S" else jantzen_seitz_A
    payload = {
        "partition": args.partition.to_json(),
        "h": args.h.h_label,
        "group": args.group,
        "jantzen_seitz": verdict(args.partition, args.h),
    }
    print(_dumps(payload))
    return 0


def _spin(args: Namespace) -> int:
    print(_dumps(basic_spin(args.n, args.h).to_json()))
    return 0


def _check(args: Namespace) -> int:
    graph = build_suite_graph(args.suite)
    report = run_suites(graph, SuiteInputs(args.h, args.max_n))
    print(_dumps(report.to_json()))
    return report.exit_code


def _parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="python_spin_crystal",
        description="The crystal B(Lambda_0) on restricted h-strict partitions",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default="WARNING",
        help="Logging goes to stderr",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def command(name: str, handler: Callable[[Namespace], int], doc: str):
        sub = commands.add_parser(name, help=doc, description=doc)
        sub.add_argument(
            "--h", type=_cartan_type, required=True, help="odd integer >= 3, or inf"
        )
        sub.set_defaults(handler=handler)
        return sub

    sub = command("enumerate", _enumerate, "List the restricted partitions of n")
    sub.add_argument("--n", type=_non_negative, required=True)
    sub.add_argument(
        "--all", action="store_true", help="Every h-strict partition instead"
    )

    sub = command("graph", _graph, "Export the crystal graph up to a degree")
    sub.add_argument("--max-n", type=_non_negative, required=True)
    sub.add_argument("--format", choices=("dot", "json"), default="json")
    sub.add_argument("--out", help="Write to this file instead of stdout")

    sub = command("stats", _stats, "Crystal and block statistics of a partition")
    sub.add_argument("--partition", type=_partition, required=True)

    sub = command("branch", _branch, "Modular branching of an irreducible module")
    sub.add_argument("--partition", type=_partition, required=True)
    sub.add_argument("--algebra", choices=[a.value for a in Algebra], required=True)
    sub.add_argument(
        "--direction", choices=[d.value for d in Direction], required=True
    )

    sub = command("js", _js, "Whether restriction stays irreducible")
    sub.add_argument("--partition", type=_partition, required=True)
    sub.add_argument("--group", choices=("S", "A"), required=True)

    sub = command("spin", _spin, "Label and dimensions of the basic spin module")
    sub.add_argument("--n", type=_non_negative, required=True)

    sub = command("check", _check, "Run the consistency suites")
    sub.add_argument(
        "--suite",
        choices=SUITE_CHOICES,
        action="append",
        help="May be repeated; prerequisites are added automatically (default all)",
    )
    sub.add_argument("--max-n", type=_non_negative, required=True)
    return parser


def main(args: Optional[List[str]] = None) -> int:
    parsed = _parser().parse_args(args)
    logging.basicConfig(
        level=parsed.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if parsed.command == "check" and not parsed.suite:
        parsed.suite = ["all"]
    try:
        return parsed.handler(parsed)
    except SpinCrystalKnownException as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


# test with: python -m python_spin_crystal
if __name__ == "__main__":
    sys.exit(main())
