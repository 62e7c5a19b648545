"""Verify the commutativity theorem over a parameter grid and summarise.

    python scripts/desk_verification.py --out results/grid.jsonl
"""

from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from qhtoeplitz.theorem import TheoremParams, verify_theorem1


@dataclass
class GridConfig:
    max_s: int = 5
    max_M: int = 4
    max_N: int = 4
    m_max: int = 20

    def tuples(self):
        for p in range(1, self.max_s):
            for s in range(p + 1, self.max_s + 1):
                for M in range(1, self.max_M + 1):
                    for N in range(1, self.max_N + 1):
                        yield TheoremParams(p, s, M, N)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-s", type=int, default=5)
    ap.add_argument("--max-M", type=int, default=4)
    ap.add_argument("--max-N", type=int, default=4)
    ap.add_argument("--m-max", type=int, default=20)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    cfg = GridConfig(args.max_s, args.max_M, args.max_N, args.m_max)

    t0 = time.perf_counter()
    status = Counter()
    lines = []
    for params in cfg.tuples():
        rep = verify_theorem1(params, max(cfg.m_max, params.p))
        status[rep.conclusion.name] += 1
        lines.append(rep.dumps())
        if not rep.confirmed:
            print(f"not confirmed: {params.as_dict()} -> {rep.conclusion}")
    elapsed = time.perf_counter() - t0

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text("\n".join(lines) + "\n")
    print(json.dumps({"tuples": sum(status.values()), "status": dict(status), "seconds": round(elapsed, 2)}))


if __name__ == "__main__":
    main()
