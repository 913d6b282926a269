#!/usr/bin/env python3
"""
Trace Q along the boundary of its rectangle for one member of the gamma
family and write the samples as JSON records.
"""

import argparse
import json
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from weierstrass_landen.cli import join_numeric_options
from weierstrass_landen.conformal import ConformalMap, curve_from_gamma, params_from_record, rectangle_boundary
from weierstrass_landen.exceptions import LogSingularityError, WeierstrassError
from weierstrass_landen.utils.formatting import complex_record


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--gamma", type=float, required=True)
    parser.add_argument("--params", required=True, help="JSON file {D, zplus, zminus, hplus, hminus, g2, g3}")
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--output", default="-")
    args = parser.parse_args(join_numeric_options(sys.argv[1:]))

    try:
        params = params_from_record(json.loads(Path(args.params).read_text(encoding="utf-8")))
        qmap = ConformalMap(params, roots=curve_from_gamma(args.gamma))
        zs = rectangle_boundary(qmap.lattice.basis, args.samples)

        # z+- sit on the boundary; samples that land on them are dropped
        kept = []
        for z in zs:
            try:
                qmap.log_terms(z)
            except LogSingularityError:
                continue
            kept.append(z)

        qs = qmap.trace(kept)
    except WeierstrassError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return 1

    records = [{"z": complex_record(z), "Q": complex_record(q)} for z, q in zip(kept, qs)]
    text = json.dumps(records, indent=2)
    if args.output == "-":
        print(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"Wrote {len(records)} samples to {args.output}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
