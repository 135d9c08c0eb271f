"""Command-line interface.

Subcommands: constants, transition, sweep, dissipation, bound,
spectrum. Exit codes: 0 success, 2 validation error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .constants import DAY_S, LIGHTMINUTE_M, CosmologyContext, load_config
from .dissipation import kappa_from_solar_bound, n0_value, solar_budget
from .errors import NumericFailure, ValidationError, ZpfcrossError
from .quantity import LENGTH, POWER_DENSITY, Quantity, TIME, WAVENUMBER
from .report import SweepSpec, _csv_cell, format_sig, render, run_sweep
from .spectra import (
    Boyer,
    MoisseevShivamoggi,
    PowerLawTurbulence,
    TruncatedBoyer,
    evaluate,
)
from .transition import monte_carlo_scale, transition_scale


def _float_list(text: str) -> List[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list: {text!r}")


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE", help="constant override file")
    parser.add_argument("--format", choices=("table", "csv"), default="table")
    parser.add_argument("--sigfigs", type=int, default=3, metavar="N")
    parser.add_argument("--seed", type=int, default=0, metavar="S")


def _context(args: argparse.Namespace) -> CosmologyContext:
    overrides = load_config(args.config) if args.config else None
    return CosmologyContext.default(overrides)


def _print_pairs(pairs: Sequence[Tuple[str, str]], format: str) -> None:
    if format == "csv":
        print(",".join(name for name, _ in pairs))
        print(",".join(value for _, value in pairs))
        return
    width = max(len(name) for name, _ in pairs)
    for name, value in pairs:
        print(f"{name.ljust(width)}  {value}")


def _cmd_constants(args: argparse.Namespace) -> int:
    ctx = _context(args)
    header = ("name", "value", "unit", "rel_sigma", "source")
    rows = [(name, repr(const.value), str(const.quantity.dim),
             repr(const.rel_sigma), const.source)
            for name, const in ctx.registry.items()]
    if args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(f'"{cell}"' if "," in cell else cell for cell in row))
        return 0
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) for i in range(len(header))]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0


def _transition_pairs(args, ctx) -> List[Tuple[str, str]]:
    result = transition_scale(args.slope, args.kappa, ctx, e_kappa=args.ekappa)
    sig = args.sigfigs
    pairs = [
        ("a", format_sig(args.slope, 6)),
        ("kappa", format_sig(args.kappa, 6)),
        ("lambda0_m", format_sig(result.lambda0.value, sig)),
        ("sigma_m", format_sig(result.sigma.value, sig)),
        ("rel_sigma", format_sig(result.rel_sigma, sig)),
        ("k0_per_m", format_sig(result.k0.value, sig)),
    ]
    for name, contribution in result.sigma_breakdown.items():
        pairs.append((f"sigma_{name}", format_sig(contribution, sig)))
    if args.mc:
        mc = monte_carlo_scale(args.slope, args.kappa, args.mc, args.seed, ctx,
                               e_kappa=args.ekappa)
        pairs += [("mc_mean_m", format_sig(mc.mean.value, sig)),
                  ("mc_rel_sigma", format_sig(mc.rel_sigma, sig)),
                  ("mc_rejected", str(mc.rejected))]
    return pairs


def _cmd_transition(args: argparse.Namespace) -> int:
    _print_pairs(_transition_pairs(args, _context(args)), args.format)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    ctx = _context(args)
    spec = SweepSpec(slopes=tuple(args.slopes), kappas=tuple(args.kappas),
                     outputs=tuple(args.outputs), n0_mode=args.n0)
    rows = run_sweep(spec, ctx)
    sys.stdout.write(render(rows, format=args.format, sigfigs=args.sigfigs,
                            columns=spec.columns))
    return 0


def _n0_note(ctx, n0_mode: str, window_t: Quantity) -> str:
    published = n0_value(ctx, window_t, "paper").value
    computed = n0_value(ctx, window_t, "computed").value
    return (f"# N0 mode: {n0_mode} (published {published:.3g}, "
            f"computed from constants {computed:.3g})")


def _cmd_dissipation(args: argparse.Namespace) -> int:
    ctx = _context(args)
    window = Quantity(args.window_days * DAY_S, TIME)
    radius = Quantity(args.radius_lightminutes * LIGHTMINUTE_M, LENGTH)
    budget = solar_budget(args.kappa, args.slope, ctx, window_t=window,
                          ell=radius, n0_mode=args.n0)
    print(_n0_note(ctx, args.n0, window))
    sig = args.sigfigs
    _print_pairs([
        ("kappa", format_sig(budget.kappa, 6)),
        ("a", format_sig(budget.slope, 6)),
        ("epsilon_w_m3", format_sig(budget.epsilon.value, sig)),
        ("epsilon_rel_sigma", format_sig(budget.epsilon.rel_sigma, sig)),
        ("n0", format_sig(budget.n0, sig)),
        ("n_solar", format_sig(budget.n_solar, sig)),
        ("ns_solar", format_sig(budget.ns_solar, sig)),
        ("window_days", format_sig(budget.window_t.value / DAY_S, sig)),
        ("ell_m", format_sig(budget.ell.value, sig)),
    ], args.format)
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    ctx = _context(args)
    window = Quantity(args.window_days * DAY_S, TIME)
    radius = Quantity(args.radius_lightminutes * LIGHTMINUTE_M, LENGTH)
    kappa, result = kappa_from_solar_bound(args.ns, args.slope, ctx,
                                           window_t=window, ell=radius,
                                           n0_mode=args.n0)
    print(_n0_note(ctx, args.n0, window))
    sig = args.sigfigs
    _print_pairs([
        ("ns_bound", format_sig(args.ns, 6)),
        ("a", format_sig(args.slope, 6)),
        ("kappa", format_sig(kappa, sig)),
        ("lambda0_m", format_sig(result.lambda0.value, sig)),
        ("sigma_m", format_sig(result.sigma.value, sig)),
    ], args.format)
    return 0


def _spectrum_model(args: argparse.Namespace, ctx: CosmologyContext):
    if args.model == "boyer":
        return Boyer.from_context(ctx)
    if args.model == "truncated":
        cutoff = None
        if args.cutoff_k is not None:
            cutoff = Quantity(args.cutoff_k, WAVENUMBER)
        return TruncatedBoyer.from_context(ctx, cutoff)
    if args.model == "powerlaw":
        return PowerLawTurbulence.from_kappa(ctx, args.kappa, args.slope)
    if args.model == "ms":
        epsilon = None
        if args.epsilon is not None:
            epsilon = Quantity(args.epsilon, POWER_DENSITY)
        return MoisseevShivamoggi.from_context(ctx, args.gamma, epsilon,
                                               kolmogorov_const=args.kolmogorov_const)
    raise ValidationError(f"unknown model {args.model!r}")


def _cmd_spectrum(args: argparse.Namespace) -> int:
    ctx = _context(args)
    model = _spectrum_model(args, ctx)
    kmin = args.kmin if args.kmin is not None else 1.0 / ctx.hubble_radius.value
    kmax = args.kmax if args.kmax is not None else 2.0 * math.pi / ctx.value("r_p")
    if not (0.0 < kmin < kmax):
        raise ValidationError(f"need 0 < kmin < kmax, got {kmin!r}, {kmax!r}")
    if args.points < 2:
        raise ValidationError("need at least 2 points")
    print("k,E")
    log_lo, log_hi = math.log(kmin), math.log(kmax)
    for i in range(args.points):
        if i == 0:
            k = kmin  # exp(log(k)) can drift one ulp past the endpoints
        elif i == args.points - 1:
            k = kmax
        else:
            k = math.exp(log_lo + (log_hi - log_lo) * i / (args.points - 1))
        energy = evaluate(model, Quantity(k, WAVENUMBER))
        print(f"{_csv_cell(k)},{_csv_cell(energy.value)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zpfcross",
        description="Vacuum/turbulence spectrum crossover scale and its error budget.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print the constant registry")
    _common_flags(p)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("transition", help="closed-form transition scale")
    _common_flags(p)
    p.add_argument("--slope", type=float, required=True, metavar="A")
    p.add_argument("--kappa", type=float, default=1.0, metavar="K")
    p.add_argument("--ekappa", type=float, default=0.0, metavar="E",
                   help="relative uncertainty of kappa")
    p.add_argument("--mc", type=int, default=0, metavar="N",
                   help="add a Monte Carlo check with N samples")
    p.set_defaults(func=_cmd_transition)

    p = sub.add_parser("sweep", help="sweep a slope x kappa grid")
    _common_flags(p)
    p.add_argument("--slopes", type=_float_list, required=True, metavar="A1,A2,...")
    p.add_argument("--kappas", type=_float_list, required=True, metavar="K1,K2,...")
    p.add_argument("--outputs", type=lambda s: [t for t in s.split(",") if t],
                   default=[], metavar="epsilon,N,Ns")
    p.add_argument("--n0", choices=("paper", "computed"), default="paper")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("dissipation", help="dissipation rate and solar counts")
    _common_flags(p)
    p.add_argument("--kappa", type=float, required=True, metavar="K")
    p.add_argument("--slope", type=float, required=True, metavar="A")
    p.add_argument("--window-days", type=float, default=1.0, metavar="T")
    p.add_argument("--radius-lightminutes", type=float, default=8.0, metavar="L")
    p.add_argument("--n0", choices=("paper", "computed"), default="paper")
    p.set_defaults(func=_cmd_dissipation)

    p = sub.add_parser("bound", help="kappa and scale from a dissipation ceiling")
    _common_flags(p)
    p.add_argument("--ns", type=float, default=1e-12, metavar="NS",
                   help="ceiling in solar masses per window (default 1e-12)")
    p.add_argument("--slope", type=float, required=True, metavar="A")
    p.add_argument("--window-days", type=float, default=1.0, metavar="T")
    p.add_argument("--radius-lightminutes", type=float, default=8.0, metavar="L")
    p.add_argument("--n0", choices=("paper", "computed"), default="paper")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("spectrum", help="tabulate a spectrum as CSV")
    _common_flags(p)
    p.add_argument("--model", choices=("boyer", "truncated", "powerlaw", "ms"),
                   required=True)
    p.add_argument("--slope", type=float, default=1.8, metavar="A")
    p.add_argument("--kappa", type=float, default=1.0, metavar="K")
    p.add_argument("--gamma", type=float, default=2.0, metavar="G")
    p.add_argument("--epsilon", type=float, default=None, metavar="EPS",
                   help="injection rate W/m^3 (default: horizon rate)")
    p.add_argument("--kolmogorov-const", type=float, default=1.0, metavar="C")
    p.add_argument("--cutoff-k", type=float, default=None, metavar="KC")
    p.add_argument("--kmin", type=float, default=None)
    p.add_argument("--kmax", type=float, default=None)
    p.add_argument("--points", type=int, default=200)
    p.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericFailure as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except ZpfcrossError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
