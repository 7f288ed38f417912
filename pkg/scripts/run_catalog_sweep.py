"""Run every catalog law on generated models over a few lattices and tabulate the statuses."""
from __future__ import annotations

import argparse
import collections
import sys
import time

from relcat import lattice as L
from relcat import structures as st
from relcat.lawlang import ExhaustionCapExceeded, Random, catalog, check_law


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lattices", default="bool,chain:3")
    p.add_argument("--sizes", default="1,2", help="carrier sizes of the generated objects")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args(argv)
    sizes = tuple(int(s) for s in args.sizes.split(","))
    broken = 0
    for spec in args.lattices.split(","):
        m = st.Model.generated(L.parse_lattice(spec), sizes)
        tally = collections.Counter()
        started = time.perf_counter()
        for law in catalog():
            try:
                r = check_law(law, m, workers=args.workers)
            except ExhaustionCapExceeded:
                # too many assignments for exhaustion: fall back to seeded sampling
                r = check_law(law, m, Random(args.samples, args.seed), workers=args.workers)
            tally[r.status] += 1
            if not r.ok:
                broken += 1
                print(f"[{m.name}] {r.line()}")
        summary = ", ".join(f"{k} {v}" for k, v in sorted(tally.items()))
        print(f"{m.name}: {summary} ({time.perf_counter() - started:.1f} s)")
    return 1 if broken else 0


if __name__ == "__main__":
    sys.exit(main())
