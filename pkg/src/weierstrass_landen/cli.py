"""
Command-line interface: roots, Landen chains, periods, the Abel map,
function values and the conformal map Q.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import __version__
from .core.types import CurvePoint, Invariants, SubgroupRank
from .core.cubic import discriminant, order_properly, solve_cubic
from .core.classify import classify
from .conformal import ConformalMap, curve_from_gamma, params_from_record
from .exceptions import InputParseError, WeierstrassError, get_exit_code
from .functions import LatticeFunctions
from .landen import chain_invariant_deltas, gap_ratio
from .utils.config import get_settings
from .utils.error_handling import error_handler
from .utils.formatting import complex_from_record, complex_record, format_complex, format_real, parse_complex

logger = logging.getLogger(__name__)


class OutputWriter:
    """Text or JSON output on stdout."""

    def __init__(self, as_json: bool, digits: int):
        self.as_json = as_json
        self.digits = digits

    def c(self, z: complex) -> str:
        return format_complex(z, self.digits)

    def r(self, x: float) -> str:
        return format_real(x, self.digits)

    def emit_json(self, payload: Any) -> None:
        print(json.dumps(payload))

    def emit_pairs(self, pairs: List[tuple]) -> None:
        """name = value lines; complex values in a+bi form."""
        for name, value in pairs:
            if isinstance(value, complex):
                print(f"{name} = {self.c(value)}")
            elif isinstance(value, float):
                print(f"{name} = {self.r(value)}")
            else:
                print(f"{name} = {value}")


def _invariants(args: argparse.Namespace) -> Invariants:
    return Invariants(parse_complex(args.g2), parse_complex(args.g3))


def cmd_roots(args: argparse.Namespace, out: OutputWriter) -> int:
    inv = _invariants(args)
    roots = order_properly(solve_cubic(inv))
    delta = discriminant(inv)
    if out.as_json:
        out.emit_json({
            "e1": complex_record(roots.e1),
            "e2": complex_record(roots.e2),
            "e3": complex_record(roots.e3),
            "delta": complex_record(delta),
            "rank": classify(inv).value,
        })
        return 0
    out.emit_pairs([
        ("e1", roots.e1),
        ("e2", roots.e2),
        ("e3", roots.e3),
        ("delta", delta),
        ("|delta|", abs(delta)),
    ])
    return 0


def cmd_chain(args: argparse.Namespace, out: OutputWriter) -> int:
    inv = _invariants(args)
    lattice = LatticeFunctions(inv)
    rows: List[Dict[str, Any]] = []
    roots = lattice.roots

    if lattice.rank != SubgroupRank.RANK2:
        rows.append({"n": 0, "g2": inv.g2, "g3": inv.g3, "delta": discriminant(inv), "gap_ratio": gap_ratio(roots)})
        print(f"# {lattice.rank.value} subgroup: no Landen chain", file=sys.stderr)
    else:
        chain = lattice.chain
        ratios = [gap_ratio(chain.initial)] + chain.gap_ratios()
        for record in chain_invariant_deltas(chain, include_initial=True):
            delta = record.delta if record.n > 0 else discriminant(inv)
            g2, g3 = (inv.g2, inv.g3) if record.n == 0 else (record.invariants.g2, record.invariants.g3)
            rows.append({"n": record.n, "g2": g2, "g3": g3, "delta": delta, "gap_ratio": ratios[record.n]})

    if out.as_json:
        out.emit_json([
            {
                "n": row["n"],
                "g2": complex_record(row["g2"]),
                "g3": complex_record(row["g3"]),
                "delta": complex_record(row["delta"]),
                "gap_ratio": row["gap_ratio"],
            }
            for row in rows
        ])
        return 0
    print("n\tg2\tg3\tdelta\tgap_ratio")
    for row in rows:
        print(f"{row['n']}\t{out.c(row['g2'])}\t{out.c(row['g3'])}\t{out.c(row['delta'])}\t{out.r(row['gap_ratio'])}")
    return 0


def cmd_periods(args: argparse.Namespace, out: OutputWriter) -> int:
    inv = _invariants(args)
    lattice = LatticeFunctions(inv)
    if lattice.rank == SubgroupRank.RANK1:
        omega = lattice.omega
        if out.as_json:
            out.emit_json({"rank": "rank1", "omega": complex_record(omega)})
        else:
            out.emit_pairs([("rank", "rank1"), ("omega", omega)])
        return 0

    basis = lattice.basis
    quasi = lattice.quasi
    residual = quasi.legendre_residual(basis)
    if out.as_json:
        out.emit_json({
            "rank": "rank2",
            "omega1": complex_record(basis.omega1),
            "omega2": complex_record(basis.omega2),
            "eta1": complex_record(quasi.eta1),
            "eta2": complex_record(quasi.eta2),
            "legendre_residual": abs(residual),
        })
        return 0
    out.emit_pairs([
        ("omega1", basis.omega1),
        ("omega2", basis.omega2),
        ("eta1", quasi.eta1),
        ("eta2", quasi.eta2),
        ("legendre_residual", abs(residual)),
    ])
    return 0


def cmd_abel(args: argparse.Namespace, out: OutputWriter) -> int:
    inv = _invariants(args)
    pt = CurvePoint(parse_complex(args.x), parse_complex(args.y))
    z = LatticeFunctions(inv).abel(pt)
    if out.as_json:
        out.emit_json({"z": complex_record(z)})
    else:
        out.emit_pairs([("z", z)])
    return 0


def _functions(text: Optional[str]):
    if text is None:
        return None
    return [name.strip() for name in text.split(",") if name.strip()]


def cmd_eval(args: argparse.Namespace, out: OutputWriter) -> int:
    inv = _invariants(args)
    z = parse_complex(args.z)
    values = LatticeFunctions(inv).reduced_values(z, _functions(args.functions))
    requested = values.requested()
    if out.as_json:
        out.emit_json({name: complex_record(value) for name, value in requested.items()})
    else:
        out.emit_pairs(list(requested.items()))
    return 0


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InputParseError(f"Cannot read JSON from {path}: {e}", context={"path": path}) from e


def cmd_qmap(args: argparse.Namespace, out: OutputWriter) -> int:
    params = params_from_record(_read_json(args.params))
    roots = curve_from_gamma(args.gamma) if args.gamma is not None else None
    qmap = ConformalMap(params, roots=roots)

    if args.z is not None:
        z = parse_complex(args.z)
        q = qmap(z)
        if out.as_json:
            out.emit_json({"z": complex_record(z), "Q": complex_record(q)})
        else:
            out.emit_pairs([("Q", q)])
        return 0

    samples = _read_json(args.trace)
    if not isinstance(samples, list):
        raise InputParseError("Trace file must hold a JSON array", context={"path": args.trace})
    zs = [complex_from_record(s, f"trace[{i}]") for i, s in enumerate(samples)]
    qs = qmap.trace(zs)
    if out.as_json:
        out.emit_json([{"z": complex_record(z), "Q": complex_record(q)} for z, q in zip(zs, qs)])
    else:
        for z, q in zip(zs, qs):
            print(f"{out.c(z)}\t{out.c(q)}")
    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace, OutputWriter], int]] = {
    "roots": cmd_roots,
    "chain": cmd_chain,
    "periods": cmd_periods,
    "abel": cmd_abel,
    "eval": cmd_eval,
    "qmap": cmd_qmap,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--digits", type=int, default=None, help="significant digits in text output")

    curve = argparse.ArgumentParser(add_help=False)
    curve.add_argument("--g2", required=True, help="invariant g2 as a+bi")
    curve.add_argument("--g3", required=True, help="invariant g3 as a+bi")

    parser = argparse.ArgumentParser(
        prog="weierstrass-landen",
        description="Weierstrass elliptic functions via Landen transformations"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[common, curve], help="properly ordered roots and the discriminant")
    sub.add_parser("chain", parents=[common, curve], help="invariants along the optimal Landen chain")
    sub.add_parser("periods", parents=[common, curve], help="reduced basis and quasi-periods")

    abel = sub.add_parser("abel", parents=[common, curve], help="Abel map of a curve point")
    abel.add_argument("--x", required=True)
    abel.add_argument("--y", required=True)

    evaluate = sub.add_parser("eval", parents=[common, curve], help="p, p', zeta, sigma at z")
    evaluate.add_argument("--z", required=True)
    evaluate.add_argument("--functions", default=None, help="comma-separated subset of p,dp,zeta,sigma")

    qmap = sub.add_parser("qmap", parents=[common], help="conformal map Q")
    qmap.add_argument("--gamma", type=float, default=None, help="curve parameter in (-1/6, 1/6)")
    qmap.add_argument("--params", required=True, help="JSON file {D, zplus, zminus, hplus, hminus, g2, g3}")
    target = qmap.add_mutually_exclusive_group(required=True)
    target.add_argument("--z")
    target.add_argument("--trace", help="JSON array of complex records")

    return parser


# options taking a number that may start with "-"
NUMERIC_OPTIONS = ("--g2", "--g3", "--x", "--y", "--z", "--gamma")


def join_numeric_options(argv: Sequence[str]) -> List[str]:
    """
    Rewrite "--z -0.3+0.2i" as "--z=-0.3+0.2i". argparse would otherwise take
    a leading "-" for an option and reject the value.
    """
    args = list(argv)
    joined: List[str] = []
    i = 0
    while i < len(args):
        if args[i] in NUMERIC_OPTIONS and i + 1 < len(args):
            joined.append(f"{args[i]}={args[i + 1]}")
            i += 2
        else:
            joined.append(args[i])
            i += 1
    return joined


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(join_numeric_options(sys.argv[1:] if argv is None else argv))

    try:
        settings = get_settings()
    except WeierstrassError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return get_exit_code(e.error_code)

    logging.basicConfig(
        level=getattr(logging, settings.log_level or "WARNING"),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )
    out = OutputWriter(args.json, args.digits or settings.output_digits or 17)

    try:
        return COMMANDS[args.command](args, out)
    except WeierstrassError as e:
        if args.json:
            out.emit_json(error_handler.create_error_response(e, args.command, logger, include_details=settings.debug))
        else:
            print(f"error: {e.message}", file=sys.stderr)
        return get_exit_code(e.error_code)


if __name__ == "__main__":
    sys.exit(main())
