"""Command-line interface: verify, run, and sweep subcommands."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bits import Word
from .datapath import Variant, make_config, render_trace, simulate
from .harness import (
    REPORTED_FPGA_REDUCTION,
    RNG_ALGORITHM,
    OperandDistribution,
    emit_report,
    exhaustive_verify,
    sweep,
)
from .power import PowerModel, area_proxy, average_power, estimate_energy


def _add_cost_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--block-size", type=int, default=None,
                        help="ring gating block size (default: min(4, width))")
    parser.add_argument("--ffs-cost", type=int, default=2, metavar="S",
                        help="internal transitions per clocked flip-flop (default 2)")
    parser.add_argument("--gate-cost", type=int, default=1, metavar="G",
                        help="gating-logic transitions per block per clock (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftadd",
        description="Bit-exact switching-activity simulator for shift-and-add multipliers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="exhaustively check both datapaths at a width")
    p_verify.add_argument("--width", type=int, required=True)
    _add_cost_flags(p_verify)

    p_run = sub.add_parser("run", help="simulate one multiplication")
    p_run.add_argument("--arch", choices=[v.value for v in Variant], required=True)
    p_run.add_argument("--width", type=int, required=True)
    p_run.add_argument("--a", type=int, required=True)
    p_run.add_argument("--b", type=int, required=True)
    p_run.add_argument("--trace", action="store_true", help="print the per-cycle table")
    _add_cost_flags(p_run)

    p_sweep = sub.add_parser("sweep", help="compare architectures across widths")
    p_sweep.add_argument("--widths", required=True, help="comma-separated, e.g. 4,8,16")
    p_sweep.add_argument("--dist", default="uniform",
                         choices=["uniform", "sparse", "dense", "exhaustive", "fixed"])
    p_sweep.add_argument("--trials", type=int, default=100000)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--out", required=True, help="report file path")
    p_sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    p_sweep.add_argument("--model", default=None, help="power model config file")
    p_sweep.add_argument("--a", type=int, default=None, help="multiplicand for --dist fixed")
    p_sweep.add_argument("--b", type=int, default=None, help="multiplier for --dist fixed")
    _add_cost_flags(p_sweep)

    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    outcome = exhaustive_verify(
        args.width, s=args.ffs_cost, g=args.gate_cost, block_size=args.block_size
    )
    ok = outcome.total_pairs - len(outcome.mismatches)
    print(f"width {outcome.width}: {ok}/{outcome.total_pairs} products match "
          f"(both architectures, native-multiply oracle)")
    if outcome.passed:
        print("PASS")
        return 0
    for m in outcome.mismatches[:10]:
        print(f"MISMATCH {m.arch}: {m.a} x {m.b} -> {m.got}, expected {m.expected}")
    if len(outcome.mismatches) > 10:
        print(f"... and {len(outcome.mismatches) - 10} more")
    print("FAIL")
    return 1


def _cmd_run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    limit = 1 << args.width
    if not 0 <= args.a < limit or not 0 <= args.b < limit:
        parser.error(f"operands must be in 0..{limit - 1} for width {args.width}")
    cfg = make_config(args.arch, args.width, s=args.ffs_cost, g=args.gate_cost,
                      block_size=args.block_size)
    a, b = Word(args.a, args.width), Word(args.b, args.width)
    result = simulate(a, b, cfg, trace=args.trace)
    if args.trace:
        print(render_trace(a, b, result))
        firings = sum(row.adder_fired for row in result.trace)
        print(f"adder firings: {firings}")
    print(f"product: {result.product.value}")
    print(f"cycles: {result.cycles}")
    model = PowerModel()
    energy = estimate_energy(result.ledger, model)
    print(f"energy (uniform weights): {energy}")
    print(f"avg power: {average_power(energy, result.cycles, model)}")
    area = area_proxy(cfg)
    print(f"area: flip_flops={area.flip_flops} full_adders={area.full_adders} "
          f"mux_inputs={area.mux_inputs} gates={area.gates}")
    for category, count in result.ledger.as_dict().items():
        print(f"  {category}: {count}")
    return 0


def _cmd_sweep(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        widths = [int(w) for w in args.widths.split(",") if w]
    except ValueError:
        parser.error(f"bad --widths value {args.widths!r}")
    if not widths:
        parser.error("--widths is empty")
    if args.dist == "fixed" and (args.a is None or args.b is None):
        parser.error("--dist fixed requires --a and --b")
    model = PowerModel.from_file(args.model) if args.model else PowerModel()
    dist = OperandDistribution(args.dist, seed=args.seed, a=args.a, b=args.b)
    block_size = args.block_size if args.block_size is not None else 4
    try:
        rows = sweep(widths, dist, args.trials, model,
                     s=args.ffs_cost, g=args.gate_cost, block_size=block_size)
    except ValueError as exc:
        parser.error(str(exc))
    metadata = {
        "rng": RNG_ALGORITHM,
        "seed": args.seed,
        "dist": args.dist,
        "trials": args.trials,
        "ffs_cost": args.ffs_cost,
        "gate_cost": args.gate_cost,
        "block_size": block_size,
    }
    emit_report(rows, args.format, args.out, metadata=metadata)
    print(f"wrote {len(rows)} rows to {args.out} ({args.format})")
    print("width  modeled reduction   FPGA-reported")
    for row in rows:
        if row.arch != Variant.LOW_POWER.value:
            continue
        reported = REPORTED_FPGA_REDUCTION.get(row.width)
        note = f"{reported:.2f}%" if reported is not None else "-"
        print(f"{row.width:5d}  {row.reduction_pct:16.2f}%  {note:>13}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "run":
            return _cmd_run(args, parser)
        return _cmd_sweep(args, parser)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(str(exc))
        return 2  # unreachable; parser.error raises SystemExit(2)


if __name__ == "__main__":
    sys.exit(main())
