"""Command-line interface.

Exit codes are shared by every subcommand: 0 when all checks pass, 1 when a
checked property fails (a witness is printed), 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import symbolic
from .correspondence import (
    check_condition_I,
    check_condition_III,
    expansive_set,
    find_seed,
    fixed_points,
)
from .errors import (
    BudgetExceeded,
    CorrespondenceError,
    InvariantError,
    PosetError,
    StuckError,
)
from .fixpoint import AscentPolicy, corrected_proof_trace, smithson_ascent
from .generate import DEFAULT_SEED, GenConfig, random_seeded_instance
from .instance import InstanceFormatError, InstanceSpec, to_dot
from .suite import run_theorem_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class _InputError(Exception):
    pass


def _load(path: str):
    try:
        spec = InstanceSpec.read(path)
        return spec.to_instance()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except (InstanceFormatError, PosetError, CorrespondenceError) as exc:
        raise _InputError(f"{type(exc).__name__}: {exc}") from exc


def cmd_validate(args) -> int:
    p, F, e = _load(args.file)
    print(f"PASS poset axioms: {len(p)} elements, {len(p.hasse_covers())} covers")
    print(f"PASS F(x) nonempty for all {len(F)} elements")
    if e is not None:
        print(f"PASS seed element {p.labels[e]} is known")
    return EXIT_OK


def cmd_check_i(args) -> int:
    p, F, _ = _load(args.file)
    witness = check_condition_I(p, F)
    if witness is None:
        print("PASS condition I: x1 >= x2 and y2 in F(x2) always admit y1 in F(x1) with y1 >= y2")
        return EXIT_OK
    print(f"FAIL condition I: {witness.describe(p)}")
    print(f"witness x1={p.labels[witness.x1]} x2={p.labels[witness.x2]} y2={p.labels[witness.y2]}")
    return EXIT_FAILED


def cmd_check_iii(args) -> int:
    p, F, _ = _load(args.file)
    try:
        witness = check_condition_III(p, F, args.budget)
    except BudgetExceeded as exc:
        print(f"PASS condition III up to chains of size {exc.max_chain_size} ({exc.skipped} longer chains not checked)")
        return EXIT_OK
    if witness is None:
        print("PASS condition III: every isotone selection on a chain is dominated in F(sup C)")
        return EXIT_OK
    print(f"FAIL condition III: {witness.describe(p)}")
    return EXIT_FAILED


def cmd_fixpoint(args) -> int:
    p, F, e = _load(args.file)
    if e is None:
        seed = find_seed(p, F)
        if seed is None:
            print("FAIL no e with some y in F(e), y >= e")
            return EXIT_FAILED
        e = seed[0]
    elif e not in expansive_set(p, F):
        print(f"FAIL seed {p.labels[e]}: no y in F({p.labels[e]}) with y >= {p.labels[e]}")
        return EXIT_FAILED
    route = smithson_ascent if args.mode == "ascent" else corrected_proof_trace
    try:
        trace = route(p, F, e, AscentPolicy(args.policy))
    except StuckError as exc:
        print(f"FAIL stuck at {p.labels[exc.x]}: {exc.diagnostic}")
        return EXIT_FAILED
    except InvariantError as exc:
        print(f"FAIL proof step did not replay: {exc}")
        return EXIT_FAILED
    if trace.result not in fixed_points(p, F):
        print(f"FAIL {p.labels[trace.result]} is not in F({p.labels[trace.result]})")
        return EXIT_FAILED
    if args.mode == "trace":
        print(trace.format(p))
    else:
        for a, b in trace.ascent_steps:
            print(f"step: {p.labels[b]} in F({p.labels[a]}), {p.labels[b]} >= {p.labels[a]}")
    print(f"PASS fixed point {p.labels[trace.result]} in F({p.labels[trace.result]})")
    return EXIT_OK


def counterexample_lines(samples: int, seed: int, verbose: bool = False) -> tuple[list[str], bool]:
    reports = symbolic.counterexample_reports(samples, seed)
    lines = []
    for report in reports:
        if report.title in ("original-proof-gap", "corrected-construction"):
            lines += [case.line() for case in report.cases]
        else:
            lines.append(report.summary_line())
            if verbose:
                lines += [case.line() for case in report.cases]
    return lines, all(r.passed for r in reports)


def cmd_counterexample(args) -> int:
    for note in symbolic.NOTES:
        print(f"note: {note}", file=sys.stderr)
    lines, ok = counterexample_lines(args.samples, args.seed, args.verbose)
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_gen(args) -> int:
    cfg = GenConfig(
        n=args.n,
        edge_density=args.density,
        selectors=args.selectors,
        seed=args.seed,
    )
    p, F, e = random_seeded_instance(cfg)
    text = InstanceSpec.from_instance(p, F, e).dumps()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise _InputError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    p, _, _ = _load(args.file)
    sys.stdout.write(to_dot(p))
    return EXIT_OK


def cmd_suite(args) -> int:
    report = run_theorem_suite(args.instances, args.seed)
    print(report.summary_line())
    for failure in report.failures[:20]:
        print(f"FAIL {failure}")
    print(f"digest {report.digest}")
    return EXIT_OK if report.passed else EXIT_FAILED


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError("density must lie in [0, 1]")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetfix",
        description="Fixed points of monotone correspondences on finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check poset axioms and nonempty images")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check-i", help="check condition I")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_i)

    p = sub.add_parser("check-iii", help="check condition III")
    p.add_argument("file")
    p.add_argument("--budget", type=_positive, default=None, help="largest chain size to check")
    p.set_defaults(func=cmd_check_iii)

    p = sub.add_parser("fixpoint", help="find and certify a fixed point")
    p.add_argument("file")
    p.add_argument("--policy", choices=[a.value for a in AscentPolicy], default="min-index")
    p.add_argument("--mode", choices=["ascent", "trace"], default="ascent")
    p.set_defaults(func=cmd_fixpoint)

    p = sub.add_parser("counterexample", help="verify the two-branch counterexample")
    p.add_argument("--samples", type=_positive, default=symbolic.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=symbolic.DEFAULT_SEED)
    p.add_argument("--verbose", action="store_true", help="print every case")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("gen", help="generate a random instance file")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--density", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--selectors", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-dot", help="print the Hasse diagram as DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("suite", help="run the generated-instance property suite")
    p.add_argument("--instances", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
