"""Timing of ``power`` on each kernel backend.

Run as ``python -m graphpow.bench`` or ``graphpow bench``; generation is not timed.
"""

from __future__ import annotations

import argparse
import hashlib
import statistics
import time
from typing import Optional, Sequence

from graphpow._backend import available
from graphpow.generators import random_regular
from graphpow.graph import Graph, power


def digest(g: Graph) -> str:
    h = hashlib.sha256(str(g.n).encode())
    for r in g.rows:
        h.update(r.to_bytes((g.n + 7) // 8 or 1, "little"))
    return h.hexdigest()


def bench_power(g: Graph, k: int, *, backends: Optional[Sequence[str]] = None, repeats: int = 5,
                threads: Optional[int] = 1) -> list[dict]:
    """Median wall time of ``power(g, k)`` per backend, plus a result digest."""
    out = []
    for name in backends or available():
        times = []
        result = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            result = power(g, k, threads=threads, backend=name)
            times.append((time.perf_counter() - t0) * 1000)
        out.append({"backend": name, "repeats": repeats, "median_ms": statistics.median(times),
                    "min_ms": min(times), "edges": result.num_edges, "digest": digest(result)})
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="compare native and python power kernels")
    ap.add_argument("-n", type=int, default=5000)
    ap.add_argument("-d", type=int, default=10)
    ap.add_argument("-k", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args(argv)
    g = random_regular(args.n, args.d, args.seed)
    rows = bench_power(g, args.k, repeats=args.repeats)
    for r in rows:
        print(f"{r['backend']:>6}  median {r['median_ms']:9.1f} ms  min {r['min_ms']:9.1f} ms  "
              f"edges {r['edges']}")
    if len({r["digest"] for r in rows}) != 1:
        print("backends disagree")
        return 1
    if len(rows) == 2:
        print(f"speedup {rows[1]['median_ms'] / rows[0]['median_ms']:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
