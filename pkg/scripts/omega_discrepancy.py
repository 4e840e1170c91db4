"""Compare the two readings of the TSPP weight term by term.

For each modified balanced partition of size n it prints the weight under both
conventions next to the Schur coefficient actually found in A_n, and marks
which reading agrees.
"""

import argparse
from dataclasses import dataclass

from asmtspp import identity
from asmtspp import partitions as pt
from asmtspp import tspp
from asmtspp.exactring import embed
from asmtspp.schur import schur_expand, xnames


@dataclass
class DiscrepancyConfig:
    n: int = 3


def main(cfg: DiscrepancyConfig):
    n = cfg.n
    found = schur_expand(identity.route_definition(n), xnames(n))
    print(f"n={n}")
    print(f"{'partition':<14} {'frobenius':<12} {'section4':<24} {'theorem':<24} coefficient")
    for lam in pt.enumerate_modified_balanced(n):
        mult = tspp.lgv_count(lam)
        c = found.get(lam)
        c = embed(c, tspp.UV) if c else tspp.UV.zero()
        cells = []
        for conv in tspp.CONVENTIONS:
            w = tspp.omega(lam, n, conv)
            mark = "=" if w.polynomial.scale(mult) == c else "x"
            cells.append(f"{mark} u^{w.alpha}(1-u-v)^{w.beta}v^{w.gamma}")
        print(f"{pt.format_partition(lam):<14} {str(pt.to_frobenius(lam)):<12} {cells[0]:<24} {cells[1]:<24} {c.render()}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    main(DiscrepancyConfig(ap.parse_args().n))
