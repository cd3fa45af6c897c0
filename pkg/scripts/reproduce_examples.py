"""Print the worked trace forms and their E2/E4/E6 reductions for small t."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from ramanujan_traces.quasimodular import PhiU, PhiV, render_poly, trace
from ramanujan_traces.reduce import k_table, render_e246


@dataclass
class Config:
    t_max: int = 7
    verify_order: int = 60


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-max", type=int, default=Config.t_max)
    ap.add_argument("--verify-order", type=int, default=Config.verify_order)
    cfg = Config(**vars(ap.parse_args()))
    for t in range(1, cfg.t_max + 1):
        for name, phi in (("U", PhiU), ("V", PhiV)):
            print(f"{name}_{2 * t} = {render_poly(trace(phi, t))}")
            print(f"     = {render_e246(k_table(name, t, cfg.verify_order))}")
        print()


if __name__ == "__main__":
    main()
