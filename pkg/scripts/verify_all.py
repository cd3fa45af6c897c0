"""Run every identity check with timings; exit status 1 if any check fails."""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from ramanujan_traces.cli import CHECKS, run_checks


@dataclass
class Config:
    order: int | None = None
    xorder: int = 9
    t_max: int = 8


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=Config.order)
    ap.add_argument("--xorder", type=int, default=Config.xorder)
    ap.add_argument("--t-max", type=int, default=Config.t_max)
    cfg = Config(**vars(ap.parse_args()))
    ok = True
    for check in CHECKS[:-1]:
        start = time.perf_counter()
        reports = run_checks(check, cfg.order, cfg.xorder, cfg.t_max)
        for r in reports:
            print(r.summary())
        ok &= all(reports)
        print(f"-- {check}: {time.perf_counter() - start:.2f}s\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
