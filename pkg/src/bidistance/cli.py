"""Command-line front end.

Subcommands: ``bidist`` (pair distribution of a code file), ``pe`` (exact
or simulated decoder error probability), ``bounds`` (the three upper
bounds), ``sweep`` (CSV of bound/error curves over a q grid), ``construct``
(catalog codes with metadata), and ``scheme`` (intersection numbers).

Exit codes: 0 success, 2 usage/parse errors, 3 domain errors (channel
regime violations and enumeration caps).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import (dual_code, generator_from_code, golay_code, is_projective,
                      trace_code_27_6, weight_distribution)
from .bounds import (ahb_union_bound, discrepancy_bound, symmetric_discrepancy_bound)
from .channel import (DEFAULT_EXHAUSTIVE_CAP, ChannelParams, CapExceeded,
                      RegimeError, exact_error_probability,
                      monte_carlo_error_probability, parse_probability)
from .core import Code, ParseError, bidistance_distribution
from .designs import (catalog_design, sbibd_ahb, sbibd_codes,
                      scheme_from_three_weight, three_weight_ahb, two_weight_ahb,
                      with_zero_word)

SWEEP_METHODS = ("ahb", "cr_discrepancy", "cr_symmetric", "exact", "monte_carlo")
BOUND_METHODS = ("ahb", "cr_discrepancy", "cr_symmetric")


@dataclass(frozen=True)
class SweepSpec:
    """A validated q-axis sweep request."""

    p: Fraction
    q_from: Fraction
    q_to: Fraction
    steps: int
    methods: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.steps < 2:
            raise ParseError("steps must be at least 2")
        if not self.p <= self.q_from < self.q_to < Fraction(1, 2):
            raise RegimeError(
                f"sweep needs p <= q_from < q_to < 1/2, got p={self.p}, "
                f"q_from={self.q_from}, q_to={self.q_to}")
        bad = [m for m in self.methods if m not in SWEEP_METHODS]
        if bad:
            raise ParseError(f"unknown methods {bad}; choose from {list(SWEEP_METHODS)}")

    def grid(self) -> list[Fraction]:
        width = self.q_to - self.q_from
        return [self.q_from + width * Fraction(i, self.steps - 1)
                for i in range(self.steps)]


def _fraction_json(value: Fraction) -> dict:
    return {"fraction": f"{value.numerator}/{value.denominator}",
            "decimal": float(value)}


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _weight_pairs(dist: tuple[int, ...]) -> list[list[int]]:
    return [[w, c] for w, c in enumerate(dist) if c]


def _cmd_bidist(args: argparse.Namespace) -> int:
    code = Code.from_file(args.code)
    dist = bidistance_distribution(code)
    if args.format == "json":
        _emit(dist.to_json_dict())
    else:
        print(f"{'d10':>4} {'d01':>4} {'count':>12}")
        for (a, b), c in sorted(dist.entries.items()):
            print(f"{a:>4} {b:>4} {c:>12}")
    return 0


def _cmd_pe(args: argparse.Namespace) -> int:
    code = Code.from_file(args.code)
    params = ChannelParams.from_decimals(args.p, args.q)
    payload = {
        "code": str(args.code),
        "length": code.n,
        "size": len(code),
        "p": _fraction_json(params.p),
        "q": _fraction_json(params.q),
    }
    if args.mode == "exact":
        value = exact_error_probability(code, params, cap=args.cap)
        payload["method"] = "exact"
        payload["error_probability"] = _fraction_json(value)
    else:
        estimate, stderr = monte_carlo_error_probability(
            code, params, trials=args.trials, seed=args.seed)
        payload.update({
            "method": "monte_carlo",
            "estimate": estimate,
            "standard_error": stderr,
            "trials": args.trials,
            "seed": args.seed,
        })
    _emit(payload)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    code = Code.from_file(args.code)
    params = ChannelParams.from_decimals(args.p, args.q)
    methods = _parse_method_list(args.methods, BOUND_METHODS)
    reports = []
    for method in methods:
        if method == "ahb":
            reports.append(ahb_union_bound(bidistance_distribution(code), params))
        elif method == "cr_discrepancy":
            reports.append(discrepancy_bound(code, params))
        else:
            reports.append(symmetric_discrepancy_bound(code, params))
    _emit({
        "code": str(args.code),
        "p": _fraction_json(params.p),
        "q": _fraction_json(params.q),
        "bounds": [r.to_json_dict() for r in reports],
    })
    return 0


def _parse_method_list(text: str, allowed: tuple[str, ...]) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    if not methods:
        raise ParseError("no methods requested")
    bad = [m for m in methods if m not in allowed]
    if bad:
        raise ParseError(f"unknown methods {bad}; choose from {list(allowed)}")
    # keep canonical column order, drop duplicates
    return [m for m in allowed if m in methods]


def _cmd_sweep(args: argparse.Namespace) -> int:
    code = Code.from_file(args.code)
    sweep = SweepSpec(
        p=parse_probability(args.p),
        q_from=parse_probability(args.q_from),
        q_to=parse_probability(args.q_to),
        steps=args.steps,
        methods=tuple(_parse_method_list(args.methods, SWEEP_METHODS)),
    )
    methods = list(sweep.methods)
    if "exact" in methods and code.n > args.cap:
        print(f"warning: dropping exact column, n={code.n} exceeds cap {args.cap}",
              file=sys.stderr)
        methods.remove("exact")
    dist = bidistance_distribution(code)
    lines = [",".join(["q"] + methods)]
    for q in sweep.grid():
        params = ChannelParams(sweep.p, q)
        row = [float(q)]
        for method in methods:
            if method == "ahb":
                row.append(ahb_union_bound(dist, params).value)
            elif method == "cr_discrepancy":
                row.append(discrepancy_bound(code, params).value)
            elif method == "cr_symmetric":
                row.append(symmetric_discrepancy_bound(code, params).value)
            elif method == "exact":
                row.append(float(exact_error_probability(code, params, cap=args.cap)))
            else:
                estimate, _ = monte_carlo_error_probability(
                    code, params, trials=args.trials, seed=args.seed)
                row.append(estimate)
        lines.append(",".join(f"{x:.10g}" for x in row))
    Path(args.out).write_text("\n".join(lines) + "\n")
    print(f"wrote {args.out} ({len(lines) - 1} rows)", file=sys.stderr)
    return 0


def _construct_catalog(name: str) -> tuple[Code, dict]:
    if name == "golay":
        gen = golay_code()
        code = gen.codewords()
        return code, {"weight_distribution": _weight_pairs(weight_distribution(gen))}
    if name == "golay-dual":
        gen = dual_code(golay_code())
        code = gen.codewords()
        dist = weight_distribution(gen)
        weights = [w for w in range(1, code.n + 1) if dist[w]]
        scheme = scheme_from_three_weight(code)
        nonzero = three_weight_ahb(code.n, weights, scheme)
        return code, {
            "weight_distribution": _weight_pairs(dist),
            "projective": is_projective(gen),
            "scheme": scheme.to_json_dict(),
            "ahb": with_zero_word(nonzero, dist).to_json_dict(),
            "ahb_nonzero": nonzero.to_json_dict(),
        }
    if name == "trace-27-6":
        code = trace_code_27_6()
        gen = generator_from_code(code)
        dist = weight_distribution(gen)
        w1, w2 = [w for w in range(1, code.n + 1) if dist[w]]
        nonzero = two_weight_ahb(code.n, gen.k, w1, w2, dist[w1], dist[w2])
        return code, {
            "weight_distribution": _weight_pairs(dist),
            "projective": is_projective(gen),
            "ahb": with_zero_word(nonzero, dist).to_json_dict(),
            "ahb_nonzero": nonzero.to_json_dict(),
        }
    if name.startswith("sbibd:"):
        parts = name.split(":")
        try:
            v, k, lam = (int(x) for x in parts[1].split(","))
            family = int(parts[2])
        except (IndexError, ValueError):
            raise ParseError(
                f"bad catalog name {name!r}; expected sbibd:<v>,<k>,<lambda>:<family>"
            ) from None
        design = catalog_design(v, k, lam)
        code = sbibd_codes(design, family)
        ahb = sbibd_ahb(v, k, lam, family)
        return code, {
            "design": {**design.to_json_dict(), "family": family},
            "weight_distribution": _weight_pairs(code.weight_distribution()),
            "ahb": ahb.to_json_dict(),
        }
    raise ParseError(
        f"unknown catalog name {name!r}; known: golay, golay-dual, trace-27-6, "
        "sbibd:<v>,<k>,<lambda>:<family>")


def _cmd_construct(args: argparse.Namespace) -> int:
    code, metadata = _construct_catalog(args.name)
    code.to_file(args.out)
    payload = {"name": args.name, "out": str(args.out),
               "length": code.n, "size": len(code)}
    payload.update(metadata)
    _emit(payload)
    return 0


def _cmd_scheme(args: argparse.Namespace) -> int:
    code = Code.from_file(args.code)
    scheme = scheme_from_three_weight(code, sample=args.sample)
    dist = code.weight_distribution()
    _emit({
        "code": str(args.code),
        "weights": [w for w in range(1, code.n + 1) if dist[w]],
        **scheme.to_json_dict(),
    })
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidistance",
        description="Directional Hamming statistics of binary codes and "
                    "decoding error bounds for asymmetric channels.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_code(p: argparse.ArgumentParser) -> None:
        p.add_argument("--code", required=True, help="code file, one 0/1 word per line")

    def add_pq(p: argparse.ArgumentParser) -> None:
        p.add_argument("-p", required=True, help="0->1 crossover probability (decimal)")
        p.add_argument("-q", required=True, help="1->0 crossover probability (decimal)")

    p_bidist = sub.add_parser("bidist", help="pair distribution of a code file")
    add_code(p_bidist)
    p_bidist.add_argument("--format", choices=("json", "table"), default="json")
    p_bidist.set_defaults(func=_cmd_bidist)

    p_pe = sub.add_parser("pe", help="decoder error probability")
    add_code(p_pe)
    add_pq(p_pe)
    p_pe.add_argument("--mode", choices=("exact", "mc"), default="exact")
    p_pe.add_argument("--trials", type=int, default=100_000)
    p_pe.add_argument("--seed", type=int, default=0)
    p_pe.add_argument("--cap", type=int, default=DEFAULT_EXHAUSTIVE_CAP,
                      help="length cap for the exhaustive sweep")
    p_pe.set_defaults(func=_cmd_pe)

    p_bounds = sub.add_parser("bounds", help="upper bounds on the error probability")
    add_code(p_bounds)
    add_pq(p_bounds)
    p_bounds.add_argument("--methods", default=",".join(BOUND_METHODS))
    p_bounds.set_defaults(func=_cmd_bounds)

    p_sweep = sub.add_parser("sweep", help="CSV of curves over a q grid")
    add_code(p_sweep)
    p_sweep.add_argument("-p", required=True)
    p_sweep.add_argument("--q-from", required=True)
    p_sweep.add_argument("--q-to", required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument("--methods", default="ahb,cr_discrepancy,cr_symmetric,exact")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--trials", type=int, default=100_000)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--cap", type=int, default=DEFAULT_EXHAUSTIVE_CAP)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_construct = sub.add_parser("construct", help="write a catalog code with metadata")
    p_construct.add_argument("name", help="golay | golay-dual | trace-27-6 | "
                                          "sbibd:<v>,<k>,<lambda>:<family>")
    p_construct.add_argument("--out", required=True, help="path for the code file")
    p_construct.set_defaults(func=_cmd_construct)

    p_scheme = sub.add_parser("scheme", help="intersection numbers of a three-weight code")
    add_code(p_scheme)
    p_scheme.add_argument("--sample", type=int, default=50,
                          help="constancy-check pairs per class (0 = all)")
    p_scheme.set_defaults(func=_cmd_scheme)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RegimeError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
