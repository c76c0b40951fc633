"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Results go to ``--output`` (written atomically) or stdout; progress goes to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import resource
import sys
import time

import numpy as np

from . import __version__
from .delaunay import alpha_flag_edges
from .filtration import build_filtration
from .generators import GENERATORS, WITNESS_FACTS, check_edge_facts, check_fact, generate
from .geometry import EdgeSet, PointCloud, preprocess
from .minibox import Strategy, minibox_edges
from .persistence import persistence_reduce
from .pointio import diagrams_to_json, format_edges, format_filtration, read_points, write_atomic

log = logging.getLogger("minibox_ph")

STRATEGIES = ["auto"] + [s.value for s in Strategy]
COMPLEXES = ("minibox", "alphaflag", "cech")


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None):
    if output:
        write_atomic(output, text)
    else:
        sys.stdout.write(text)


def _load_cloud(args) -> PointCloud:
    if args.input and args.generate:
        raise UsageError("give either --input or --generate, not both")
    if args.input:
        cloud = read_points(args.input, args.dim)
    elif args.generate:
        cloud = generate(args.generate, n=args.n, d=args.dim or 2, seed=args.seed)
    else:
        raise UsageError("one of --input or --generate is required")
    if args.dim is not None and cloud.dim != args.dim:
        raise UsageError(f"--dim {args.dim} does not match the {cloud.dim}-dimensional input")
    return preprocess(cloud, epsilon=args.epsilon, rng_seed=args.seed)


def _check_strategy(strategy: str, dim: int):
    if strategy != "auto" and not Strategy(strategy).supports(dim):
        raise UsageError(f"strategy {strategy} does not support dimension {dim}")


def complex_edges(cloud: PointCloud, complex_name: str, strategy: str = "auto") -> EdgeSet:
    if complex_name == "minibox":
        return minibox_edges(cloud, strategy)
    if complex_name == "alphaflag":
        return alpha_flag_edges(cloud)
    if complex_name == "cech":
        return EdgeSet.complete(cloud)
    raise UsageError(f"unknown complex {complex_name!r}")


def cmd_edges(args) -> int:
    cloud = _load_cloud(args)
    _check_strategy(args.strategy, cloud.dim)
    t0 = time.perf_counter()
    edges = minibox_edges(cloud, args.strategy)
    log.info("n=%d d=%d k=%d time=%.3fs", cloud.n, cloud.dim, len(edges), time.perf_counter() - t0)
    _emit(format_edges(edges), args.output)
    return 0


def _filtration(args, cloud, max_dim):
    _check_strategy(args.strategy, cloud.dim)
    t0 = time.perf_counter()
    edges = complex_edges(cloud, args.complex, args.strategy)
    t1 = time.perf_counter()
    filt = build_filtration(cloud, edges, max_dim)
    log.info("n=%d d=%d complex=%s edges=%d simplices=%d edges %.3fs filtration %.3fs",
             cloud.n, cloud.dim, args.complex, len(edges), len(filt), t1 - t0, time.perf_counter() - t1)
    return filt


def cmd_filtration(args) -> int:
    cloud = _load_cloud(args)
    filt = _filtration(args, cloud, args.max_dim)
    if args.diameter:
        filt = filt.scaled(2.0)
    _emit(format_filtration(filt), args.output)
    return 0


def cmd_persistence(args) -> int:
    cloud = _load_cloud(args)
    filt = _filtration(args, cloud, args.degree + 1)
    t0 = time.perf_counter()
    diagram = persistence_reduce(filt, args.degree)
    log.info("diagrams %.3fs", time.perf_counter() - t0)
    if args.diameter:
        diagram = diagram.scaled(2.0)
    _emit(diagrams_to_json(diagram) + "\n", args.output)
    return 0


def edge_bound(n: int, d: int) -> float:
    """2^(d-1) n ln^(d-1) n, the growth rate of the expected Minibox edge count."""
    if n < 2:
        return 0.0
    return 2 ** (d - 1) * n * math.log(n) ** (d - 1)


def cmd_expected_edges(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "d", "trials", "mean_edges", "min_edges", "max_edges", "bound"])
    for n in args.n:
        counts = []
        for t in range(args.trials):
            cloud = preprocess(generate("uniform", n=n, d=args.dim, seed=args.seed + t),
                               epsilon=args.epsilon, rng_seed=args.seed + t)
            counts.append(len(minibox_edges(cloud, args.strategy)))
        mean = float(np.mean(counts))
        log.info("n=%d d=%d mean=%.1f", n, args.dim, mean)
        writer.writerow([n, args.dim, args.trials, f"{mean:.3f}", min(counts), max(counts),
                         f"{edge_bound(n, args.dim):.3f}"])
    _emit(buf.getvalue(), args.output)
    return 0


def cmd_verify_paper(args) -> int:
    lines = []
    ok = True
    for fact in WITNESS_FACTS:
        res = check_fact(fact)
        ok &= res.passed
        lines.append(f"{'PASS' if res.passed else 'FAIL'}  {fact.name}: {res.detail}")
    for simplex, is_edge in check_edge_facts():
        ok &= is_edge
        a, b = (v + 1 for v in simplex)
        lines.append(f"{'PASS' if is_edge else 'FAIL'}  edge x{a}x{b} passes the Delaunay edge test")
    lines.append("all facts verified" if ok else "verification FAILED")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def _peak_rss_mb() -> float:
    # ru_maxrss is in kilobytes on Linux
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024.0


def cmd_bench(args) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["complex", "n", "d", "seed", "edges", "simplices",
                     "prepare_s", "edges_s", "filtration_s", "diagrams_s", "total_s", "peak_rss_mb"])
    for d in args.dim:
        _check_strategy(args.strategy, d)
        for n in args.n:
            for t in range(args.trials):
                seed = args.seed + t
                start = time.perf_counter()
                cloud = preprocess(generate("uniform", n=n, d=d, seed=seed), rng_seed=seed)
                t0 = time.perf_counter()
                edges = complex_edges(cloud, args.complex, args.strategy)
                t1 = time.perf_counter()
                filt = build_filtration(cloud, edges, args.degree + 1)
                t2 = time.perf_counter()
                persistence_reduce(filt, args.degree)
                t3 = time.perf_counter()
                writer.writerow([args.complex, n, d, seed, len(edges), len(filt),
                                 f"{t0 - start:.6f}", f"{t1 - t0:.6f}", f"{t2 - t1:.6f}", f"{t3 - t2:.6f}",
                                 f"{t3 - start:.6f}", f"{_peak_rss_mb():.1f}"])
                log.info("bench n=%d d=%d seed=%d total %.3fs", n, d, seed, t3 - start)
    _emit(buf.getvalue(), args.output)
    return 0


def _input_flags(p):
    p.add_argument("--input", metavar="PATH", help="point file, one point per line")
    p.add_argument("--generate", choices=GENERATORS, help="built-in point set instead of --input")
    p.add_argument("--n", type=int, default=100, help="size for --generate (default 100)")
    p.add_argument("--dim", type=int, help="expected dimension (also the --generate uniform dimension)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, help="perturbation size (default 1e-9 x extent)")


def _common(p):
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minibox-ph", description="Minibox, Alpha-flag and Čech persistence "
                                     "under the Chebyshev metric.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbose = argparse.ArgumentParser(add_help=False)
    verbose.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[verbose])

    p = add("edges", "Minibox edge list")
    _input_flags(p)
    _common(p)
    p.set_defaults(func=cmd_edges)

    sub_cmds = (("persistence", cmd_persistence, "persistence diagrams as JSON"),
                ("filtration", cmd_filtration, "dump the flag filtration, one simplex per line"))
    for name, func, text in sub_cmds:
        p = add(name, text)
        _input_flags(p)
        _common(p)
        p.add_argument("--complex", choices=COMPLEXES, default="minibox")
        p.add_argument("--diameter", action="store_true", help="report diameters instead of radii")
        if name == "persistence":
            p.add_argument("--degree", type=int, choices=(0, 1, 2), default=1, help="max homology degree")
        else:
            p.add_argument("--max-dim", type=int, choices=(1, 2, 3), default=2)
        p.set_defaults(func=func)

    p = add("expected-edges", "mean Minibox edge counts of uniform clouds")
    _common(p)
    p.add_argument("--n", type=int, nargs="+", default=[1000])
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float)
    p.set_defaults(func=cmd_expected_edges)

    p = add("verify-paper", "check the embedded witness and blocker facts")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_verify_paper)

    p = add("bench", "per-phase timings as CSV")
    _common(p)
    p.add_argument("--n", type=int, nargs="+", default=[500])
    p.add_argument("--dim", type=int, nargs="+", default=[2])
    p.add_argument("--complex", choices=COMPLEXES, default="minibox")
    p.add_argument("--degree", type=int, choices=(0, 1, 2), default=1)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"minibox-ph: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
