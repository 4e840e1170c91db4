"""List the TSPPs of a box with their pi partition and its Dyck path."""

import argparse
from dataclasses import dataclass

from asmtspp import partitions as pt
from asmtspp import tspp


@dataclass
class MapConfig:
    box: int = 2


def main(cfg: MapConfig):
    n = cfg.box + 1
    for t in tspp.enumerate_tspps(cfg.box):
        lam = tspp.pi(t, n)
        mat = "/".join("".join(map(str, r)) for r in t.matrix) or "-"
        print(f"{mat:<20} {pt.format_partition(lam):<16} {str(pt.to_frobenius(lam)):<12} "
              f"{pt.format_dyck(pt.dyck_encode(lam, n))}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--box", type=int, default=2)
    main(MapConfig(ap.parse_args().box))
