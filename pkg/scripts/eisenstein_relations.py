"""Derive E_{2k} in terms of E_4 and E_6, each relation checked to a fixed q-order."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from ramanujan_traces.reduce import modular_relation


@dataclass
class Config:
    k_max: int = 10
    verify_order: int = 60


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    ap.add_argument("--verify-order", type=int, default=Config.verify_order)
    cfg = Config(**vars(ap.parse_args()))
    for k in range(4, cfg.k_max + 1):
        print(modular_relation(k, cfg.verify_order))


if __name__ == "__main__":
    main()
