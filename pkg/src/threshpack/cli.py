"""Command-line front end: ``threshpack {generate,analyze,solve,density-table,experiment}``.

Exit status 0 on success, 1 on usage errors, 2 when an input file fails to parse.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import density as dm
from .bppc import decompose_universal, ffd_conflicts, lower_bound, solve_exact, verify_packing
from .experiment import ExperimentConfig, run_experiment, summarize, write_csv
from .generators import CLASS_KINDS, GeneratorSpec, gen_bppc_instance, gen_threshold
from .graph import edge_density
from .instance_io import InstanceFormatError, read_instance, write_instance
from .threshold import derive_interval_model, max_independent_set, recognize_threshold

EXIT_OK, EXIT_USAGE, EXIT_PARSE = 0, 1, 2

log = logging.getLogger("threshpack")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _unit(text: str) -> float:
    x = float(text)
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="threshpack", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="write BPPC instance files")
    gen.add_argument("--kind", required=True, choices=sorted(CLASS_KINDS))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d", type=_unit, help="generator threshold (kind T only)")
    gen.add_argument("--delta", type=_unit, help="target edge density")
    gen.add_argument("--seed", type=int, default=1)
    gen.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds")
    gen.add_argument("--B", type=int, default=150, dest="capacity")
    gen.add_argument("--wmin", type=int, default=20)
    gen.add_argument("--wmax", type=int, default=100)
    gen.add_argument("--out", help="output path; may contain {seed} (required with --seeds > 1)")

    ana = sub.add_parser("analyze", help="report density and threshold structure")
    ana.add_argument("instance")
    ana.add_argument("--intervals", action="store_true", help="dump the interval model")

    sol = sub.add_parser("solve", help="bounds, FFD and exact optimum")
    sol.add_argument("instance")
    sol.add_argument("--time-limit", type=float, default=600.0)

    tab = sub.add_parser("density-table", help="threshold vs measured density")
    tab.add_argument("--n", type=int, default=1000)
    tab.add_argument("--seeds", type=int, default=10)
    tab.add_argument("--seed", type=int, default=1, help="first seed")

    exp = sub.add_parser("experiment", help="batch runs to CSV")
    exp.add_argument("config", help="JSON config file")
    exp.add_argument("--out", required=True, help="CSV output path")
    exp.add_argument("--jobs", type=int, default=1)
    exp.add_argument("--time-limit", type=float, help="override the config time limit")
    return parser


def _generator_param(args) -> tuple[str, float]:
    kind = CLASS_KINDS[args.kind]
    if args.d is not None and args.delta is not None:
        raise UsageError("give either --d or --delta, not both")
    if args.kind == "SG":
        if args.d is not None or args.delta is not None:
            raise UsageError("--kind SG takes no density parameter")
        return kind, 0.0
    if args.d is not None:
        if args.kind != "T":
            raise UsageError("--d is only meaningful for --kind T; use --delta")
        return kind, args.d
    if args.delta is None:
        raise UsageError("one of --d or --delta is required")
    if args.kind == "T":
        if args.n < 2:
            raise UsageError("--delta needs --n >= 2")
        return kind, dm.threshold_from_density(args.n, args.delta)
    if args.kind == "I" and args.delta >= 1.0:
        raise UsageError("interval generator needs --delta < 1")
    return kind, args.delta


def cmd_generate(args) -> int:
    if args.n < 1 or args.seeds < 1:
        raise UsageError("--n and --seeds must be positive")
    if not 0 <= args.wmin <= args.wmax <= args.capacity:
        raise UsageError("need 0 <= --wmin <= --wmax <= --B")
    kind, param = _generator_param(args)
    seeds = range(args.seed, args.seed + args.seeds)
    template = args.out or "{kind}_{n}_{seed}.txt"
    if len(seeds) > 1 and "{seed}" not in template:
        raise UsageError("--out must contain {seed} when generating several seeds")
    for seed in seeds:
        try:
            inst = gen_bppc_instance(GeneratorSpec(kind, args.n, param, seed), args.wmin, args.wmax, args.capacity)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        path = Path(template.format(kind=args.kind, n=args.n, seed=seed))
        write_instance(inst, path)
        rep = edge_density(inst.graph)
        print(f"{path}: n={inst.n} B={inst.capacity} param={param:.6f} "
              f"conflicts={rep.edge_count} density={rep.density:.6f}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    inst = read_instance(args.instance)
    rep = edge_density(inst.graph)
    print(f"n: {inst.n}")
    print(f"B: {inst.capacity}")
    print(f"conflicts: {rep.edge_count}")
    print(f"density: {rep.density:.6f}")
    cert = recognize_threshold(inst.graph)
    if not cert:
        print("threshold: no")
        print(f"violating vertex: {cert.vertex} (position {cert.position}, {cert.reason})")
        return EXIT_OK
    print("threshold: yes")
    print(f"t (max clique): {cert.t}")
    print(f"independent set size: {len(max_independent_set(cert))}")
    print(f"g (universal vertices): {cert.g}")
    if args.intervals:
        model = derive_interval_model(cert)
        print("intervals:")
        for v, (lo, hi) in enumerate(model.intervals, start=1):
            print(f"  {v} ({lo:g}, {hi:g})")
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = read_instance(args.instance)
    lb = lower_bound(inst)
    ffd = ffd_conflicts(inst)
    res = solve_exact(inst, args.time_limit)
    check = verify_packing(inst, res.packing)
    print(f"lower bound: {max(lb, res.lower_bound)}")
    print(f"ffd k: {ffd.k}")
    print(f"exact k: {res.k}")
    print(f"optimal: {'yes' if res.optimal else 'no'}")
    print(f"elapsed: {res.elapsed:.3f} s")
    print(f"nodes: {res.node_count}")
    if not check:
        print(f"packing check failed: {check.constraint} in bin {check.bin}: {check.detail}")
    dec = decompose_universal(inst)
    remaining = max(0.0, args.time_limit - res.elapsed)
    sub = solve_exact(dec.subinstance, remaining)
    print(f"decomposition: g={dec.g} k(Q)={sub.k} g+k(Q)={dec.g + sub.k}"
          f"{'' if sub.optimal else ' (Q not proved optimal)'}")
    return EXIT_OK


def cmd_density_table(args) -> int:
    if args.n < 2 or args.seeds < 1:
        raise UsageError("need --n >= 2 and --seeds >= 1")
    print(f"{'d':>4} {'asymptotic':>10} {'finite-n':>10} {'measured':>10}")
    for d in [k / 10 for k in range(10)]:
        measured = [
            edge_density(gen_threshold(args.n, d, seed)[0]).density
            for seed in range(args.seed, args.seed + args.seeds)
        ]
        asym = dm.expected_density_from_threshold(None, d, asymptotic=True)
        finite = dm.expected_density_from_threshold(args.n, d)
        print(f"{d:>4.1f} {asym:>10.4f} {finite:>10.4f} {float(np.mean(measured)):>10.4f}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    try:
        cfg = ExperimentConfig.load(args.config)
    except (OSError, ValueError, TypeError) as exc:
        print(f"threshpack: cannot read config: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.time_limit is not None:
        cfg.time_limit = args.time_limit
    rows = run_experiment(cfg, jobs=args.jobs)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_csv(rows, fh)
    print(summarize(rows), end="")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "solve": cmd_solve,
    "density-table": cmd_density_table,
    "experiment": cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"threshpack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InstanceFormatError as exc:
        print(f"threshpack: {getattr(args, 'instance', '')}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FileNotFoundError, IsADirectoryError) as exc:
        print(f"threshpack: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
