"""Command-line front end.

Exit status: 0 for a kernel / YES / PASS, 1 for a proven NO (or a failed
``verify``), 2 for usage, I/O, parse and oracle-guard errors.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .fileformat import InstanceParseError, emit_instance, parse_instance
from .generators import GenSpec, as_probability, gen_planted, gen_random
from .graph import Instance
from .kernel import KernelResult, LpCrownStep, format_trace, kernelize
from .lp import format_lp
from .oracle import OracleSizeError, brute_force_ecoc

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2

BENCH_COLUMNS = (
    "kind", "size", "seed", "edge_prob", "n", "m", "l", "k",
    "outcome", "kernel_n", "kernel_k", "rr2", "rr3", "rr4", "wall_time",
)


class CliError(Exception):
    pass


def _read_instance(path: str) -> Instance:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return parse_instance(text)
    except InstanceParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from None


def _probability(text: str) -> Fraction:
    try:
        return as_probability(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_kernelize(args) -> int:
    inst = _read_instance(args.file)
    dumps: list[str] = []

    def dump(_: Instance, step: LpCrownStep) -> None:
        dumps.append(format_lp(step.lp, title=f"LP solve {len(dumps) + 1}, objective {step.solution.objective}"))

    result = kernelize(inst, lazy_lp=args.lazy_lp, on_lp=dump if args.dump_lp else None)
    if args.trace:
        _write(args.trace, format_trace(result))
    if args.dump_lp:
        _write(args.dump_lp, "".join(dumps))
    if result.is_no:
        print("NO")
        return EXIT_NO
    sys.stdout.write(emit_instance(result.kernel))
    return EXIT_OK


def _oracle(inst: Instance, **kwargs):
    try:
        return brute_force_ecoc(inst, **kwargs)
    except OracleSizeError as exc:
        raise CliError(f"oracle guard: {exc}") from None


def cmd_solve(args) -> int:
    inst = _read_instance(args.file)
    answer = _oracle(inst)
    if not answer.feasible:
        print("NO")
        return EXIT_NO
    print("YES")
    print(f"c optimum {answer.optimum}")
    print("c witness " + " ".join(str(v + 1) for v in answer.witness))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _read_instance(args.file)
    original = _oracle(inst)
    result = kernelize(inst, lazy_lp=args.lazy_lp)
    if result.is_no:
        ok = not original.feasible
        detail = f"kernelizer NO, oracle {'YES' if original.feasible else 'NO'}"
    else:
        reduced = _oracle(result.kernel)
        ok = reduced.feasible == original.feasible
        detail = (
            f"kernel n={result.kernel.n} k={result.kernel.k}, oracle original "
            f"{'YES' if original.feasible else 'NO'} kernel {'YES' if reduced.feasible else 'NO'}"
        )
    print(f"{'PASS' if ok else 'FAIL'} {detail}")
    return EXIT_OK if ok else EXIT_NO


def cmd_gen(args) -> int:
    if args.kind == "planted":
        inst = gen_planted(args.blocks, args.l, args.k, args.p, args.seed)
    else:
        inst = gen_random(args.n, args.p, args.l, args.k, args.seed)
    text = emit_instance(inst)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_ints(values: list[str], key: str) -> list[int]:
    out: list[int] = []
    for v in values:
        try:
            if ":" in v:
                lo, hi = v.split(":")
                out.extend(range(int(lo), int(hi)))
            else:
                out.append(int(v))
        except ValueError:
            raise CliError(f"grid key {key!r}: bad integer or range {v!r}") from None
    return out


def parse_grid(text: str) -> list[GenSpec]:
    """Expand ``key=v1,v2 ...`` into generator specs.

    Keys: ``kind`` (planted/random), ``size`` (blocks or n), ``l``, ``k``,
    ``p`` (rationals) and ``seeds``; integer values may be ranges ``a:b``.
    """
    fields: dict[str, list[str]] = {}
    for part in text.replace(";", " ").split():
        if "=" not in part:
            raise CliError(f"grid entry {part!r} is not key=values")
        key, _, values = part.partition("=")
        fields[key] = [v for v in values.split(",") if v]
    allowed = {"kind", "size", "l", "k", "p", "seeds"}
    unknown = set(fields) - allowed
    if unknown:
        raise CliError(f"unknown grid keys: {', '.join(sorted(unknown))}")
    missing = allowed - set(fields) - {"kind", "seeds"}
    if missing:
        raise CliError(f"grid is missing keys: {', '.join(sorted(missing))}")
    kinds = fields.get("kind", ["planted"])
    try:
        probs = [as_probability(Fraction(p)) for p in fields["p"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"grid key 'p': {exc}") from None
    axes = itertools.product(
        kinds,
        _parse_ints(fields["size"], "size"),
        _parse_ints(fields["l"], "l"),
        _parse_ints(fields["k"], "k"),
        probs,
        _parse_ints(fields.get("seeds", ["0"]), "seeds"),
    )
    try:
        return [GenSpec(kind, size, l, k, p, seed) for kind, size, l, k, p, seed in axes]
    except ValueError as exc:
        raise CliError(f"grid: {exc}") from None


def bench_row(spec: GenSpec, lazy_lp: bool = False) -> dict:
    inst = spec.build()
    start = time.perf_counter()
    result: KernelResult = kernelize(inst, lazy_lp=lazy_lp)
    elapsed = time.perf_counter() - start
    counts = result.rule_counts()
    return {
        "kind": spec.kind,
        "size": spec.size,
        "seed": spec.seed,
        "edge_prob": str(spec.edge_prob),
        "n": inst.n,
        "m": inst.graph.m,
        "l": inst.l,
        "k": inst.k,
        "outcome": "NO" if result.is_no else "KERNEL",
        "kernel_n": "" if result.is_no else result.kernel.n,
        "kernel_k": "" if result.is_no else result.kernel.k,
        "rr2": counts["RR2"],
        "rr3": counts["RR3"],
        "rr4": counts["RR4"],
        "wall_time": f"{elapsed:.6f}",
    }


def cmd_bench(args) -> int:
    specs = parse_grid(args.grid)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(bench_row, specs, itertools.repeat(args.lazy_lp)))
    else:
        rows = [bench_row(s, args.lazy_lp) for s in specs]
    try:
        handle = open(args.csv, "w", newline="") if args.csv != "-" else sys.stdout
    except OSError as exc:
        raise CliError(f"cannot write {args.csv}: {exc.strerror or exc}") from None
    try:
        writer = csv.DictWriter(handle, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if handle is not sys.stdout:
            handle.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecockernel", description="Linear kernels for l-Exact Component Order Connectivity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernelize", help="reduce an instance to its kernel or NO")
    p.add_argument("file", help="instance file, '-' for stdin")
    p.add_argument("--trace", metavar="OUT", help="write the reduction trace (JSON lines)")
    p.add_argument("--lazy-lp", action="store_true", help="generate LP constraints on demand")
    p.add_argument("--dump-lp", metavar="OUT", help="write every LP solved, in CPLEX LP format")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", help="decide a small instance by exhaustive search")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="kernelize, then check equivalence with the exhaustive solver")
    p.add_argument("file")
    p.add_argument("--lazy-lp", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded instance")
    gen = p.add_subparsers(dest="kind", required=True)
    g = gen.add_parser("planted", help="yes-instance with planted solution")
    g.add_argument("--blocks", type=int, required=True, help="number of l-vertex blocks")
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--p", type=_probability, required=True, help="edge probability, e.g. 1/4")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    g = gen.add_parser("random", help="G(n, p) instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=_probability, required=True)
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="kernelize a grid of generated instances and write CSV")
    p.add_argument("--grid", required=True, help="e.g. 'kind=planted,random size=10 l=1,2 k=2 p=1/4 seeds=0:20'")
    p.add_argument("--csv", required=True, help="output path, '-' for stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--lazy-lp", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
