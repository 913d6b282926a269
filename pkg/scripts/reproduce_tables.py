#!/usr/bin/env python3
"""
Print the convergence rows of the (3+i, 2) reference curve: invariants per
Landen step, truncated periods and Abel images, and truncated function values.
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import mpmath

from weierstrass_landen import CurvePoint, Invariants, LatticeFunctions
from weierstrass_landen.exceptions import WeierstrassError
from weierstrass_landen.functions import abel_from_chain, weierstrass_from_chain
from weierstrass_landen.landen import chain_invariant_deltas
from weierstrass_landen.utils.formatting import format_complex


def reference_point() -> CurvePoint:
    y = mpmath.mpc(0, 1) * mpmath.root(2, 4) * mpmath.expjpi(mpmath.mpf(1) / 8)
    return CurvePoint(1, complex(y))


def print_invariants(lattice: LatticeFunctions) -> None:
    print("n\tg2\tg3\tdelta")
    for record in chain_invariant_deltas(lattice.chain):
        inv = record.invariants
        print(f"{record.n}\t{format_complex(inv.g2)}\t{format_complex(inv.g3)}\t{format_complex(record.delta, 11)}")


def print_periods(lattice: LatticeFunctions, pt: CurvePoint) -> None:
    print("N\tomega_N\tz_N")
    for n in range(1, lattice.chain.length + 1):
        chain = lattice.chain.truncated(n)
        print(f"{n}\t{format_complex(chain.omega)}\t{format_complex(abel_from_chain(chain, pt))}")


def print_values(lattice: LatticeFunctions, z: complex) -> None:
    print("N\tp\tdp\tzeta\tsigma")
    for n in range(1, lattice.chain.length + 1):
        v = weierstrass_from_chain(lattice.chain.truncated(n), lattice.invariants.g2, z)
        print(f"{n}\t" + "\t".join(format_complex(v.as_dict()[name]) for name in ("p", "dp", "zeta", "sigma")))


def main():
    print("Landen chain of g2 = 3+i, g3 = 2")
    print("=" * 60)

    try:
        lattice = LatticeFunctions(Invariants(3 + 1j, 2))
        pt = reference_point()

        print_invariants(lattice)
        print("=" * 60)
        print_periods(lattice, pt)
        print("=" * 60)
        print_values(lattice, lattice.abel(pt))
    except WeierstrassError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
