"""Command-line front end: ``gen``, ``mds``, ``verify``, ``transversals``."""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, TextIO

from . import core
from .core import MalformedInputError, Poset, SearchStats, comparability_graph, incomparability_graph, members
from .domination import brute_force_mds, check_width_bound, is_minimal_dominating, width
from .flashlight import iter_mds_incomparability
from .flipping import iter_mds_flipping
from .hypergraph import conformality_at_most, iter_transversals, minimal_filter_hypergraph, parse_hypergraph, sperner_reduce

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_MALFORMED = 2
EXIT_TOO_LARGE = 3


@dataclass
class RunStats:
    solutions: int = 0
    wall_total: float = 0.0
    delays: list[float] = field(default_factory=list, repr=False)
    peak_frames: int = 0

    @property
    def delay_max(self) -> float:
        return max(self.delays, default=0.0)

    @property
    def delay_mean(self) -> float:
        return sum(self.delays) / len(self.delays) if self.delays else 0.0

    def report(self) -> str:
        return (
            f"solutions={self.solutions}\n"
            f"wall_total={self.wall_total:.6f}\n"
            f"delay_max={self.delay_max:.6f}\n"
            f"delay_mean={self.delay_mean:.6f}\n"
            f"peak_frames={self.peak_frames}\n"
        )


def format_solution(S: int) -> str:
    return " ".join(map(str, members(S))) or "-"


def parse_solution(line: str) -> int:
    line = line.strip()
    if line == "-":
        return 0
    try:
        return core.vset(int(tok) for tok in line.split())
    except ValueError as exc:
        raise MalformedInputError(f"bad solution line {line!r}") from exc


def stream(solutions: Iterable[int], out: TextIO, stats: RunStats) -> None:
    """Write solutions as they arrive, recording inter-emission delays."""
    start = last = time.perf_counter()
    for S in solutions:
        now = time.perf_counter()
        stats.delays.append(now - last)
        last = now
        out.write(format_solution(S) + "\n")
        out.flush()
        stats.solutions += 1
    end = time.perf_counter()
    stats.delays.append(end - last)
    stats.wall_total = end - start


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_MALFORMED) from exc


def load_poset(path: str) -> Poset:
    try:
        return core.parse_poset(_read(path))
    except MalformedInputError as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from exc


def _open_output(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w")


def _write_stats(args, stats: RunStats) -> None:
    if getattr(args, "stats_file", None):
        Path(args.stats_file).write_text(stats.report())
    elif args.stats:
        sys.stderr.write(stats.report())


def mds_solutions(P: Poset, side: str, algorithm: str, max_oracle_n: int, search: SearchStats) -> Iterator[int]:
    if algorithm == "auto":
        algorithm = "flashlight" if side == "incomp" else "flipping"
    if algorithm == "oracle":
        if P.n > max_oracle_n:
            raise CliError(f"oracle refused: n={P.n} exceeds --max-oracle-n={max_oracle_n}", EXIT_TOO_LARGE)
        G = incomparability_graph(P) if side == "incomp" else comparability_graph(P)
        return iter(sorted(brute_force_mds(G)))
    if algorithm == "flashlight":
        if side != "incomp":
            raise CliError("flashlight enumerates incomparability graphs only (use --side incomp)", EXIT_MALFORMED)
        return iter_mds_incomparability(P, search)
    if side != "comp":
        raise CliError("flipping enumerates comparability graphs only (use --side comp)", EXIT_MALFORMED)
    return iter_mds_flipping(P, search)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    try:
        if args.kind == "random":
            P = core.random_poset(args.n, args.d, args.seed)
        elif args.kind == "standard":
            P = core.standard_example(args.t)
        elif args.kind == "chain":
            if args.n < 1:
                raise MalformedInputError("chain needs n >= 1")
            P = core.chain(args.n)
        else:
            if args.n < 1:
                raise MalformedInputError("antichain needs n >= 1")
            P = core.antichain(args.n)
    except MalformedInputError as exc:
        raise CliError(str(exc), EXIT_MALFORMED) from exc
    out = _open_output(args.output)
    try:
        out.write(core.format_poset(P))
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_mds(args) -> int:
    P = load_poset(args.poset)
    search = SearchStats()
    solutions = mds_solutions(P, args.side, args.algorithm, args.max_oracle_n, search)
    stats = RunStats()
    out = _open_output(args.output)
    try:
        stream(solutions, out, stats)
    finally:
        if out is not sys.stdout:
            out.close()
    stats.peak_frames = search.peak_frames
    _write_stats(args, stats)
    return EXIT_OK


def cmd_transversals(args) -> int:
    try:
        H = sperner_reduce(parse_hypergraph(_read(args.hypergraph)))
    except MalformedInputError as exc:
        raise CliError(f"{args.hypergraph}: {exc}", EXIT_MALFORMED) from exc
    stats = RunStats()
    out = _open_output(args.output)
    search = SearchStats()
    try:
        if H.infeasible:
            out.write("infeasible\n")
        else:
            stream(iter_transversals(H, search), out, stats)
    finally:
        if out is not sys.stdout:
            out.close()
    stats.peak_frames = search.peak_frames
    _write_stats(args, stats)
    return EXIT_OK


def check_instance(P: Poset, max_oracle_n: int) -> Optional[str]:
    """Run every cross-check on ``P``; return a failure description or None."""
    if P.n > max_oracle_n:
        raise CliError(f"oracle refused: n={P.n} exceeds --max-oracle-n={max_oracle_n}", EXIT_TOO_LARGE)
    for side, G, run in (
        ("incomp", incomparability_graph(P), iter_mds_incomparability),
        ("comp", comparability_graph(P), iter_mds_flipping),
    ):
        got = list(run(P))
        expected = brute_force_mds(G)
        if len(got) != len(set(got)):
            return f"{side}: duplicate solutions"
        if set(got) != expected:
            missing = sorted(expected - set(got))[:3]
            extra = sorted(set(got) - expected)[:3]
            return (f"{side}: solution sets differ; missing {[format_solution(s) for s in missing]}, "
                    f"extra {[format_solution(s) for s in extra]}")
        if side == "comp":
            alpha = width(P)
            bad = [D for D in got if not check_width_bound(P, D, alpha)]
            if bad:
                return f"comp: |D| > 2*width for {format_solution(bad[0])}"
    H = minimal_filter_hypergraph(P)
    for t in (2, 3):
        if not conformality_at_most(H, t - 1) and core.contains_st_suborder(P, t) is None:
            return f"filters: conformality above {t - 1} without an S_{t} suborder"
    return None


def _sweep(args) -> Iterator[Poset]:
    for n in range(1, args.n + 1):
        for seed in range(args.seed, args.seed + args.seeds):
            yield core.random_poset(n, args.d, seed)


def cmd_verify(args) -> int:
    if args.solutions is not None:
        if args.poset is None:
            raise CliError("--solutions needs a poset file", EXIT_MALFORMED)
        P = load_poset(args.poset)
        if P.n > args.max_oracle_n:
            raise CliError(f"oracle refused: n={P.n} exceeds --max-oracle-n={args.max_oracle_n}", EXIT_TOO_LARGE)
        G = incomparability_graph(P) if args.side == "incomp" else comparability_graph(P)
        try:
            lines = [ln for ln in _read(args.solutions).splitlines() if ln.strip()]
            claimed = [parse_solution(ln) for ln in lines]
        except MalformedInputError as exc:
            raise CliError(str(exc), EXIT_MALFORMED) from exc
        problems = []
        if len(claimed) != len(set(claimed)):
            problems.append("duplicate lines")
        problems += [f"not a minimal dominating set: {format_solution(S)}"
                     for S in claimed if S >> P.n or not is_minimal_dominating(G, S)]
        if set(claimed) != brute_force_mds(G):
            problems.append("solution family differs from the oracle")
        if problems:
            sys.stderr.write("FAIL " + "; ".join(problems[:5]) + "\n" + core.format_poset(P))
            return EXIT_FAIL
        print(f"ok: {len(claimed)} solutions match the oracle")
        return EXIT_OK

    instances = [load_poset(args.poset)] if args.poset is not None else _sweep(args)
    count = 0
    for P in instances:
        failure = check_instance(P, args.max_oracle_n)
        if failure is not None:
            sys.stderr.write(f"FAIL {failure}\n{core.format_poset(P)}")
            return EXIT_FAIL
        count += 1
    print(f"ok: {count} instances verified")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetdom",
        description="Enumerate minimal dominating sets of (in)comparability graphs of posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a poset file")
    gen.add_argument("kind", choices=["random", "standard", "chain", "antichain"])
    gen.add_argument("--n", type=int, default=5)
    gen.add_argument("--d", type=int, default=2)
    gen.add_argument("--t", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output")
    gen.set_defaults(func=cmd_gen)

    mds = sub.add_parser("mds", help="enumerate minimal dominating sets")
    mds.add_argument("poset", help="poset file ('-' for stdin)")
    mds.add_argument("--side", choices=["comp", "incomp"], default="incomp")
    mds.add_argument("--algorithm", choices=["auto", "flipping", "flashlight", "oracle"], default="auto")
    mds.add_argument("--output")
    mds.add_argument("--stats", action="store_true", help="key=value run statistics on stderr")
    mds.add_argument("--stats-file", help="write statistics here instead of stderr")
    mds.add_argument("--max-oracle-n", type=int, default=20)
    mds.set_defaults(func=cmd_mds)

    ver = sub.add_parser("verify", help="cross-check enumerators against brute force")
    ver.add_argument("poset", nargs="?", help="poset file; omit to run a seeded sweep")
    ver.add_argument("--n", type=int, default=7, help="sweep: largest n")
    ver.add_argument("--d", type=int, default=2, help="sweep: number of orders")
    ver.add_argument("--seeds", type=int, default=50, help="sweep: seeds per n")
    ver.add_argument("--seed", type=int, default=0, help="sweep: first seed")
    ver.add_argument("--solutions", help="check this solution file instead of running the enumerators")
    ver.add_argument("--side", choices=["comp", "incomp"], default="incomp")
    ver.add_argument("--max-oracle-n", type=int, default=20)
    ver.set_defaults(func=cmd_verify)

    tr = sub.add_parser("transversals", help="enumerate minimal transversals of a hypergraph file")
    tr.add_argument("hypergraph")
    tr.add_argument("--output")
    tr.add_argument("--stats", action="store_true")
    tr.add_argument("--stats-file")
    tr.set_defaults(func=cmd_transversals)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"posetdom: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
