"""
Command-line surface.

  python -m cli encode 34251                 → +-+-
  python -m cli decode ++-+                  → 23415
  python -m cli decode -- --+-               (signs starting with "-" need "--")
  python -m cli decode "(2)(3)(5)" --n 5     → 23415
  python -m cli enum 4 [--counts]
  python -m cli poset 4 [--dot]              (or --domain FILE)
  python -m cli path 1234 4321 [N | --domain FILE]
  python -m cli check 4                      (or --domain FILE)
  python -m cli majority --profile FILE
  python -m cli verify-cd --m 3 4            (or --domain FILE)
  python -m cli tiling 4 [--highlight 2314] > sp4.svg
  python -m cli intervals 4 > intervals.dot

FILE may be "-" for standard input.  --json replaces the human output with
one JSON object.  Exit status: 0 success, 1 a check/verdict came out false,
2 usage or input error (diagnostic on stderr, prefixed with the error class).
"""

import argparse
import logging
import re
import sys
from collections.abc import Callable
from pathlib import Path

from pydantic import BaseModel, ValidationError

from cli.schemas import (
    CheckResult,
    DecodeResult,
    EncodeResult,
    EnumResult,
    IntervalsResult,
    MajorityResult,
    PathResult,
    PosetResult,
    TilingResult,
    VerifyResult,
)
from config import LOG_LEVEL, MAX_PROFILES, SP_MAX_N, SWEEP_WORKERS
from domains.analysis import (
    count_by_top,
    enumerate_sp,
    has_maximal_width,
    is_minimally_rich,
    is_peak_pit,
)
from domains.majority import (
    find_majority_cycle,
    format_cycle,
    is_condorcet_brute,
    majority_order,
    majority_relation,
)
from domains.model import Domain, load_domain, load_profile
from errors import SignedOrderError
from orders.core import format_order, is_single_peaked, parse_order
from poset.bruhat import build_cover_digraph, find_path, is_lattice, is_semi_connected
from poset.export import export_digraph_dot, export_edge_list
from signs.codec import (
    decode,
    encode,
    format_positions,
    from_positive_positions,
    inversion_count,
    parse_signs,
    positive_positions,
)
from tiling.geometry import build_tiling
from tiling.intervals import build_interval_graph, export_dot
from tiling.render import export_svg

logger = logging.getLogger(__name__)

_POSITIONS = re.compile(r"^(\(\d+\))+$")


def _read_source(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        name = "standard input" if path == "-" else path
        raise SignedOrderError(
            f"{name} is not valid UTF-8: {exc.reason} at byte {exc.start}."
        ) from exc


def _log_level(name: str) -> int:
    level = logging.getLevelNamesMapping().get(name.upper())
    if level is None:
        raise SignedOrderError(f"LOG_LEVEL={name!r} is not a logging level.")
    return level


def _fail(exc: Exception) -> int:
    message = str(exc).splitlines()[0] if str(exc) else ""
    sys.stderr.write(f"{type(exc).__name__}: {message}\n")
    return 2


def _emit(args: argparse.Namespace, result: BaseModel, human: str) -> None:
    if args.json:
        sys.stdout.write(result.model_dump_json() + "\n")
    else:
        sys.stdout.write(human if human.endswith("\n") else human + "\n")


def _domain_from(args: argparse.Namespace) -> Domain:
    """--domain FILE when given, otherwise SP([N]) from the positional N."""
    if args.domain is not None:
        return load_domain(_read_source(args.domain))
    if args.n is None:
        raise SignedOrderError("Give either N or --domain FILE.")
    return enumerate_sp(args.n, max_n=args.max_n)


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------

def _cmd_encode(args: argparse.Namespace) -> int:
    order = parse_order(args.order)
    signs = encode(order)
    result = EncodeResult(
        order=format_order(order),
        signs=str(signs),
        positive_positions=format_positions(positive_positions(signs)),
        top=signs.top,
        inversions=inversion_count(signs),
    )
    _emit(args, result, str(signs))
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    text = args.signs.strip()
    if _POSITIONS.match(text):
        if args.n is None:
            raise SignedOrderError("Positive-position notation needs --n.")
        signs = from_positive_positions(args.n, (int(p) for p in re.findall(r"\d+", text)))
    else:
        signs = parse_signs(text, args.n)
    order = decode(signs)
    _emit(args, DecodeResult(signs=str(signs), order=format_order(order), top=order.top),
          format_order(order))
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    domain = enumerate_sp(args.n, max_n=args.max_n)
    if args.counts:
        counts = count_by_top(args.n)
        result = EnumResult(n=args.n, count=len(domain), counts_by_top=counts)
        _emit(args, result, " ".join(str(c) for c in counts))
    else:
        listing = [format_order(o) for o in domain]
        result = EnumResult(n=args.n, count=len(domain), orders=listing)
        _emit(args, result, "\n".join(listing))
    return 0


def _cmd_poset(args: argparse.Namespace) -> int:
    digraph = build_cover_digraph(_domain_from(args))
    result = PosetResult(
        n=digraph.domain.n,
        nodes=[format_order(o) for o in digraph.nodes],
        arcs=[(format_order(a), format_order(b)) for a, b in digraph.arcs],
        levels={k: [format_order(o) for o in v] for k, v in digraph.levels.items()},
    )
    _emit(args, result, export_digraph_dot(digraph) if args.dot else export_edge_list(digraph))
    return 0


def _cmd_path(args: argparse.Namespace) -> int:
    source, target = parse_order(args.source), parse_order(args.target)
    if args.domain is None and args.n is None:
        args.n = source.n
    digraph = build_cover_digraph(_domain_from(args))
    path = find_path(digraph, source, target)
    result = PathResult(
        source=format_order(source),
        target=format_order(target),
        found=path is not None,
        path=[format_order(o) for o in path] if path is not None else None,
    )
    human = " -> ".join(result.path) if result.path else f"no path from {source} to {target}"
    _emit(args, result, human)
    return 0 if path is not None else 1


def _cmd_check(args: argparse.Namespace) -> int:
    domain = _domain_from(args)
    result = CheckResult(
        n=domain.n,
        size=len(domain),
        single_peaked=all(is_single_peaked(o) for o in domain),
        minimally_rich=is_minimally_rich(domain),
        maximal_width=has_maximal_width(domain),
        semi_connected=is_semi_connected(domain),
        peak_pit=is_peak_pit(domain),
        lattice=is_lattice(domain),
    )
    rows = [
        ("single-peaked", result.single_peaked),
        ("minimally-rich", result.minimally_rich),
        ("maximal-width", result.maximal_width),
        ("semi-connected", result.semi_connected),
        ("peak-pit", result.peak_pit),
        ("lattice", result.lattice),
    ]
    human = "\n".join(f"{name}: {str(value).lower()}" for name, value in rows)
    _emit(args, result, human)
    return 0 if result.passed else 1


def _cmd_majority(args: argparse.Namespace) -> int:
    profile = load_profile(_read_source(args.profile))
    relation = majority_relation(profile)
    cycle = find_majority_cycle(relation)
    winner = majority_order(relation)
    result = MajorityResult(
        n=profile.n,
        m=profile.m,
        prefers=sorted(relation.prefers),
        cycle=cycle,
        majority_order=format_order(winner) if winner is not None else None,
    )
    lines = [" ".join(f"{x}>{y}" for x, y in result.prefers)]
    if cycle is not None:
        lines.append(f"cycle: {format_cycle(cycle)}")
    elif winner is not None:
        lines.append(f"acyclic: {format_order(winner)}")
    _emit(args, result, "\n".join(lines))
    return 1 if cycle is not None else 0


def _cmd_verify_cd(args: argparse.Namespace) -> int:
    domain = _domain_from(args)
    verdict = is_condorcet_brute(
        domain, args.m, max_profiles=args.max_profiles, workers=args.workers
    )
    witness = verdict.witness
    cycle = find_majority_cycle(majority_relation(witness)) if witness is not None else None
    result = VerifyResult(
        n=domain.n,
        m=args.m,
        domain_size=len(domain),
        condorcet=verdict.condorcet,
        profiles_checked=verdict.profiles_checked,
        witness=(
            {"voters": [list(o.ranking) for o in witness.voters]} if witness is not None else None
        ),
        witness_cycle=cycle,
    )
    lines = [f"condorcet: {str(verdict.condorcet).lower()} ({verdict.profiles_checked} profiles)"]
    if witness is not None:
        lines.append("witness: " + " ".join(format_order(o) for o in witness.voters))
        if cycle is not None:
            lines.append(f"cycle: {format_cycle(cycle)}")
    _emit(args, result, "\n".join(lines))
    return 0 if verdict.condorcet else 1


def _cmd_tiling(args: argparse.Namespace) -> int:
    tiling = build_tiling(args.n)
    highlight = parse_order(args.highlight) if args.highlight else None
    svg = export_svg(tiling, highlight)
    result = TilingResult(
        n=args.n,
        tiles=len(tiling.tiles),
        highlight=format_order(highlight) if highlight is not None else None,
        svg=svg,
    )
    _emit(args, result, svg)
    return 0


def _cmd_intervals(args: argparse.Namespace) -> int:
    graph = build_interval_graph(args.n)
    dot = export_dot(graph)
    result = IntervalsResult(
        n=args.n,
        nodes=graph.graph.number_of_nodes(),
        arcs=graph.graph.number_of_edges(),
        dot=dot,
    )
    _emit(args, result, dot)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--max-n", type=int, default=SP_MAX_N, metavar="N",
                        help=f"SP([n]) enumeration cap (default {SP_MAX_N})")

    parser = argparse.ArgumentParser(
        prog="sp-signs",
        description="Single-peaked orders: sign encoding, Bruhat poset, Condorcet checks, tilings.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, handler: Callable[[argparse.Namespace], int], help_text: str
             ) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    p = verb("encode", _cmd_encode, "order → sign sequence")
    p.add_argument("order", metavar="ORDER")

    p = verb("decode", _cmd_decode, "sign sequence or (p) positions → order")
    p.add_argument("signs", metavar="SIGNS")
    p.add_argument("--n", type=int, default=None)

    p = verb("enum", _cmd_enum, "list SP([N])")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--counts", action="store_true", help="print peak counts instead")

    p = verb("poset", _cmd_poset, "Bruhat cover digraph")
    p.add_argument("n", type=int, nargs="?", metavar="N")
    p.add_argument("--domain", metavar="FILE")
    p.add_argument("--dot", action="store_true", help="DOT instead of an edge list")

    p = verb("path", _cmd_path, "cover path between two orders")
    p.add_argument("source", metavar="FROM")
    p.add_argument("target", metavar="TO")
    p.add_argument("n", type=int, nargs="?", metavar="N")
    p.add_argument("--domain", metavar="FILE")

    p = verb("check", _cmd_check, "structural properties of a domain")
    p.add_argument("n", type=int, nargs="?", metavar="N")
    p.add_argument("--domain", metavar="FILE")

    p = verb("majority", _cmd_majority, "majority relation of a profile")
    p.add_argument("--profile", metavar="FILE", required=True)

    p = verb("verify-cd", _cmd_verify_cd, "brute-force Condorcet check")
    p.add_argument("n", type=int, nargs="?", metavar="N")
    p.add_argument("--domain", metavar="FILE")
    p.add_argument("--m", type=int, required=True, help="odd number of voters")
    p.add_argument("--max-profiles", type=int, default=MAX_PROFILES)
    p.add_argument("--workers", type=int, default=SWEEP_WORKERS)

    p = verb("tiling", _cmd_tiling, "SVG of the SP([N]) tiling")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--highlight", metavar="ORDER")

    p = verb("intervals", _cmd_intervals, "DOT of the interval digraph")
    p.add_argument("n", type=int, metavar="N")

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        logging.basicConfig(level=_log_level(LOG_LEVEL), stream=sys.stderr)
    except SignedOrderError as exc:
        return _fail(exc)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        return int(args.handler(args))
    except (SignedOrderError, ValidationError, OSError) as exc:
        logger.debug("Verb %s failed.", args.verb, exc_info=True)
        return _fail(exc)
