"""Run the main and refined checks over a range of n and print a timing table.

    python scripts/verify_range.py --max-n 5
    python scripts/verify_range.py --min-n 6 --max-n 6 --extended --refined
"""

import argparse
import time
from dataclasses import dataclass

from asmtspp import identity


@dataclass
class RunConfig:
    min_n: int = 1
    max_n: int = 5
    extended: bool = False
    refined: bool = False
    convention: str = "section4"
    threads: int = 1


def run(cfg: RunConfig) -> bool:
    all_ok = True
    print(f"{'n':>2} {'pass':>5} {'terms':>6} " + " ".join(f"{r:>16}" for r in identity.ROUTES) + "   refined")
    for n in range(cfg.min_n, cfg.max_n + 1):
        report = identity.verify_main(n, cfg.convention, cfg.extended, threads=cfg.threads)
        ms = " ".join(f"{report.routes[r].millis / 1000:>15.2f}s" for r in identity.ROUTES)
        refined = ""
        ok = report.passed
        if cfg.refined:
            t0 = time.perf_counter()
            ref = identity.verify_refined(n, cfg.extended, report.routes["definition"].polynomial)
            refined = f"{ref.passed} ({time.perf_counter() - t0:.2f}s)"
            ok = ok and ref.passed
        print(f"{n:>2} {str(ok):>5} {len(report.expansion):>6} {ms}   {refined}")
        all_ok = all_ok and ok
    return all_ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--refined", action="store_true")
    ap.add_argument("--convention", default="section4")
    ap.add_argument("--threads", type=int, default=1)
    a = ap.parse_args()
    cfg = RunConfig(a.min_n, a.max_n, a.extended, a.refined, a.convention, a.threads)
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
