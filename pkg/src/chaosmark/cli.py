"""Command-line front end.

Subcommands: iterate, distance, encode, decode, g-step, verify-conjugacy,
lyapunov, fig1, embed, extract, detect.

Exit codes: 0 success/verified, 1 verification failure, 2 usage or
validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction

from . import conjugacy, dynamics, lyapunov, metrics, pgm, watermark
from .errors import ChaosmarkError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaosmark",
        description="Chaotic Boolean iterations, their real conjugate, and LSB watermarking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("iterate", help="print an orbit of the Boolean system")
    p.add_argument("--state", required=True, help="initial state as a bit string")
    p.add_argument("--strategy", required=True, help="comma-separated cell indices")
    p.add_argument("--n", type=_positive, default=None, help="cell count (default: state length)")
    p.add_argument("--f", choices=["neg", "id"], default="neg", help="update rule")
    p.add_argument("--steps", type=int, default=None, help="steps to run (default: whole strategy)")

    p = sub.add_parser("distance", help="distance between two points or two reals")
    p.add_argument("--n", type=_positive, default=10, help="cell count")
    p.add_argument("--xa", help="first real, as <int>.<digits>")
    p.add_argument("--xb", help="second real")
    p.add_argument("--state-a", help="first state bit string")
    p.add_argument("--state-b", help="second state bit string")
    p.add_argument("--strategy-a", help="first strategy")
    p.add_argument("--strategy-b", help="second strategy")

    p = sub.add_parser("encode", help="encode a (state, strategy) pair as a real")
    p.add_argument("--state", required=True)
    p.add_argument("--strategy", required=True)

    p = sub.add_parser("decode", help="decode a real back to (state, strategy)")
    p.add_argument("--x", required=True)
    p.add_argument("--n", type=_positive, default=10)

    p = sub.add_parser("g-step", help="one exact step of the interval map")
    p.add_argument("--x", required=True)
    p.add_argument("--n", type=_positive, default=10)

    p = sub.add_parser("verify-conjugacy", help="exact commuting-square check on random points")
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--depth", type=_positive, required=True, help="strategy digits per point")
    p.add_argument("--n", type=_positive, default=10)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("lyapunov", help="Lyapunov exponent, exact or floating estimate")
    p.add_argument("--mode", choices=["exact", "float"], required=True)
    p.add_argument("--cells", type=_positive, default=10)
    p.add_argument("--x0", help="initial condition")
    p.add_argument("--n", type=_positive, required=True, help="number of steps")
    p.add_argument("--delta", type=float, default=1e-9, help="float mode: initial separation")
    p.add_argument("--seed", type=int, default=None, help="float mode: seed for a random x0")
    p.add_argument("-o", "--output", help="write per-step CSV here")

    p = sub.add_parser("fig1", help="CSV comparing the exact metric with |x - ref|")
    p.add_argument("--ref", required=True, help="reference real, e.g. 1.234")
    p.add_argument("--lo", type=_fraction, required=True)
    p.add_argument("--hi", type=_fraction, required=True)
    p.add_argument("--steps", type=_positive, required=True)
    p.add_argument("--depth", type=_positive, default=8, help="sample canonicalization depth")
    p.add_argument("--n", type=_positive, default=10)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("embed", help="embed a payload into a PGM cover")
    p.add_argument("--cover", required=True)
    p.add_argument("--payload", required=True, help="0/1 string, or a path to one")
    p.add_argument("--key", required=True)
    p.add_argument("--iterations", type=_positive, required=True)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("extract", help="extract a payload from a PGM stego image")
    p.add_argument("--stego", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--length", type=_positive, required=True)
    p.add_argument("--iterations", type=_positive, required=True)
    p.add_argument("-o", "--output", help="write the bit string here instead of stdout")

    p = sub.add_parser("detect", help="extract and compare against an expected payload")
    p.add_argument("--stego", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--expected", required=True, help="0/1 string, or a path to one")
    p.add_argument("--iterations", type=_positive, required=True)
    p.add_argument("--threshold", type=float, default=0.05)

    return parser


def _load_bits(spec: str) -> dynamics.BoolState:
    """Payload argument: a literal 0/1 string, or a path to a file holding one."""
    if os.path.exists(spec):
        with open(spec) as fh:
            spec = fh.read().strip()
    return dynamics.BoolState.from_string(spec)


def _make_point(state_text, strategy_text, n_cells=None) -> dynamics.SystemPoint:
    state = dynamics.BoolState.from_string(state_text)
    if n_cells is not None and n_cells != state.n_cells:
        raise ChaosmarkError(
            f"--n {n_cells} disagrees with the state length {state.n_cells}"
        )
    strategy = dynamics.Strategy.from_string(strategy_text, state.n_cells)
    return dynamics.SystemPoint(strategy, state)


def _cmd_iterate(args) -> int:
    point = _make_point(args.state, args.strategy, args.n)
    f = dynamics.negate_all if args.f == "neg" else dynamics.identity_update
    for state in dynamics.orbit(point, f, args.steps):
        print(state)
    return EXIT_OK


def _cmd_distance(args) -> int:
    if args.xa is not None or args.xb is not None:
        if args.xa is None or args.xb is None:
            raise ChaosmarkError("--xa and --xb must be given together")
        xa = conjugacy.DigitReal.parse(args.xa, args.n)
        xb = conjugacy.DigitReal.parse(args.xb, args.n)
        value = metrics.real_distance(xa, xb)
        print(f"D = {metrics.format_sig12(value)} ({value})")
    elif args.state_a is not None:
        for flag, val in (
            ("--state-b", args.state_b),
            ("--strategy-a", args.strategy_a),
            ("--strategy-b", args.strategy_b),
        ):
            if val is None:
                raise ChaosmarkError(f"{flag} is required in phase-space mode")
        a = _make_point(args.state_a, args.strategy_a)
        b = _make_point(args.state_b, args.strategy_b)
        value = metrics.point_distance(a, b)
        print(f"d = {metrics.format_sig12(value)} ({value})")
    else:
        raise ChaosmarkError("give either --xa/--xb or --state-a/--state-b/...")
    return EXIT_OK


def _cmd_encode(args) -> int:
    print(conjugacy.encode(_make_point(args.state, args.strategy)))
    return EXIT_OK


def _cmd_decode(args) -> int:
    point = conjugacy.decode(conjugacy.DigitReal.parse(args.x, args.n))
    print(f"state={point.state}")
    print(f"strategy={point.strategy}")
    return EXIT_OK


def _cmd_g_step(args) -> int:
    print(conjugacy.real_step(conjugacy.DigitReal.parse(args.x, args.n)))
    return EXIT_OK


def _random_point(rng: random.Random, n_cells: int, depth: int) -> dynamics.SystemPoint:
    state = dynamics.BoolState(tuple(rng.randrange(2) for _ in range(n_cells)))
    strategy = dynamics.Strategy(
        tuple(rng.randrange(n_cells) for _ in range(depth)), n_cells
    )
    return dynamics.SystemPoint(strategy, state)


def _cmd_verify_conjugacy(args) -> int:
    seed = args.seed
    if seed is None:
        seed = random.SystemRandom().randrange(2**63)
        print(f"seed={seed}")
    rng = random.Random(seed)
    passed = 0
    for _ in range(args.trials):
        point = _random_point(rng, args.n, args.depth)
        if conjugacy.verify_semiconjugacy(point):
            passed += 1
    print(f"{passed}/{args.trials} exact")
    return EXIT_OK if passed == args.trials else EXIT_FAILED


def _cmd_lyapunov(args) -> int:
    if args.mode == "exact":
        if args.x0 is None:
            raise ChaosmarkError("--x0 is required in exact mode")
        x0 = conjugacy.DigitReal.parse(args.x0, args.cells)
        report = lyapunov.derivative_product_estimate(x0, args.n)
    else:
        if args.x0 is not None:
            x0 = float(args.x0)
        else:
            seed = args.seed
            if seed is None:
                seed = random.SystemRandom().randrange(2**63)
                print(f"seed={seed}")
            x0 = random.Random(seed).uniform(0.0, float(1 << args.cells) / 2)
        report = lyapunov.divergence_rate_estimate(x0, args.delta, args.n, args.cells)
    print(
        f"estimate={report.estimate:.9f} analytic={report.analytic:.9f} "
        f"error={report.error():.3e} skipped={report.skipped_steps}"
    )
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report.to_csv())
    return EXIT_OK


def _cmd_fig1(args) -> int:
    reference = conjugacy.DigitReal.parse(args.ref, args.n)
    rows = metrics.comparison_table(reference, args.lo, args.hi, args.steps, args.depth)
    with open(args.output, "w") as fh:
        fh.write(metrics.render_comparison_csv(rows))
    print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def _cmd_embed(args) -> int:
    cover = pgm.read_pgm(args.cover)
    payload = _load_bits(args.payload)
    stego = watermark.embed(
        cover, payload, watermark.WatermarkKey(args.key), args.iterations
    )
    pgm.write_pgm(stego, args.output)
    print(f"embedded {payload.n_cells} bits into {args.output}")
    return EXIT_OK


def _cmd_extract(args) -> int:
    stego = pgm.read_pgm(args.stego)
    bits = watermark.extract(
        stego, watermark.WatermarkKey(args.key), args.length, args.iterations
    )
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(bits.to_string() + "\n")
    else:
        print(bits)
    return EXIT_OK


def _cmd_detect(args) -> int:
    stego = pgm.read_pgm(args.stego)
    expected = _load_bits(args.expected)
    ber, present = watermark.detect(
        stego, watermark.WatermarkKey(args.key), expected, args.iterations, args.threshold
    )
    print(f"ber={ber:.6f} present={'yes' if present else 'no'}")
    return EXIT_OK if present else EXIT_FAILED


_DISPATCH = {
    "iterate": _cmd_iterate,
    "distance": _cmd_distance,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "g-step": _cmd_g_step,
    "verify-conjugacy": _cmd_verify_conjugacy,
    "lyapunov": _cmd_lyapunov,
    "fig1": _cmd_fig1,
    "embed": _cmd_embed,
    "extract": _cmd_extract,
    "detect": _cmd_detect,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ChaosmarkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
