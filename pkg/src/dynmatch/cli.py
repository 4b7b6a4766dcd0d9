"""Command-line front end.

``dynmatch run`` drives an algorithm over a stream file or generated
workload; ``dynmatch gen`` writes a generated stream to a file.  Exit
codes from ``run``: 0 clean, 2 guarantee violation or budget excess,
3 parse error, 4 oracle limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import DynMatchError, InvalidParams
from .graph import format_event
from .harness import ALGORITHMS, RunConfig, parse_gen_spec, run
from .schemes import DEFAULT_ALPHA
from .workloads import WORKLOAD_KINDS, generate_workload


def _budget_const(text: str):
    if text.lower() in ("none", "unbounded"):
        return None
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynmatch")
    sub = parser.add_subparsers(dest="command", required=True)

    runp = sub.add_parser("run", help="drive an algorithm over an update stream")
    runp.add_argument("--algo", choices=ALGORITHMS, required=True)
    runp.add_argument("--epsilon", type=Fraction, default=Fraction(1, 4))
    runp.add_argument("--n-cap", type=Fraction, default=None)
    runp.add_argument("--alpha", type=Fraction, default=DEFAULT_ALPHA)
    runp.add_argument("--budget-const", type=_budget_const, default=64,
                      help="worst-case engine step-budget constant; 'none' for unbounded")
    runp.add_argument("--check", default="none",
                      help="oracle check policy: none | every | sample:K")
    runp.add_argument("--seed", type=int, default=0)
    source = runp.add_mutually_exclusive_group(required=False)
    source.add_argument("--input", help="stream file (+ u v [w] / - u v)")
    source.add_argument("--gen", help="workload spec kind:key=value,...")
    runp.add_argument("--metrics", help="metrics output path (JSON lines)")
    runp.add_argument("--oracle-edge-limit", type=int, default=32)
    runp.add_argument("--oracle-vertex-limit", type=int, default=16)
    runp.add_argument("--checked", action="store_true",
                      help="enable per-update structural validity scans")

    genp = sub.add_parser("gen", help="write a generated update stream")
    genp.add_argument("--kind", choices=WORKLOAD_KINDS, required=True)
    genp.add_argument("--params", default="", help="key=value,key=value")
    genp.add_argument("--seed", type=int, default=0)
    genp.add_argument("--out", help="output path (default stdout)")
    return parser


def _cmd_run(args) -> int:
    n_cap = args.n_cap
    if n_cap is not None and n_cap.denominator == 1:
        n_cap = int(n_cap)
    cfg = RunConfig(
        algorithm=args.algo,
        eps=args.epsilon,
        n_cap=n_cap,
        alpha=args.alpha,
        budget_const=args.budget_const,
        check=args.check,
        seed=args.seed,
        input_path=args.input,
        gen_spec=args.gen,
        metrics_path=args.metrics,
        oracle_edge_limit=args.oracle_edge_limit,
        oracle_vertex_limit=args.oracle_vertex_limit,
        checked=args.checked,
    )
    result = run(cfg)
    if result.error:
        print(f"dynmatch: {result.error}", file=sys.stderr)
    return result.exit_code


def _cmd_gen(args) -> int:
    _, params = parse_gen_spec(f"x:{args.params}" if args.params else "x:")
    events = generate_workload(args.kind, params, args.seed)
    lines = "".join(format_event(ev) + "\n" for ev in events)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_gen(args)
    except DynMatchError as exc:
        print(f"dynmatch: {exc}", file=sys.stderr)
        return 3 if isinstance(exc, InvalidParams) else 1


if __name__ == "__main__":
    sys.exit(main())
