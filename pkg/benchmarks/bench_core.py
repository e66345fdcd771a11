"""Benchmark: compiled kernel lane vs pure-Python lane.

Usage: python3 benchmarks/bench_core.py [--positions N]
"""

from __future__ import annotations

import argparse
import time
from random import Random

from esgame._core import _pure, signs2_for_point, signs3_table

try:
    from esgame._core import _speedups

    LANES = [("compiled", _speedups), ("pure", _pure)]
except ImportError:
    LANES = [("pure", _pure)]


def make_position(rng: Random, n: int):
    pts: list[tuple[int, int]] = []
    while len(pts) < n:
        cand = (rng.randint(-10_000, 10_000), rng.randint(-10_000, 10_000))
        ok = cand not in pts
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                ax, ay = pts[i]
                bx, by = pts[j]
                if (bx - ax) * (cand[1] - ay) - (by - ay) * (cand[0] - ax) == 0:
                    ok = False
        if ok:
            pts.append(cand)
    return pts


def bench(positions: int) -> None:
    rng = Random(7)
    cases = []
    for _ in range(positions):
        pts = make_position(rng, 9)
        base, extra = pts[:8], pts[8]
        s3 = signs3_table(base)
        s2 = signs2_for_point(base, extra[0], extra[1])
        s3_full = signs3_table(pts)
        cases.append((s3, s2, s3_full))

    results = {}
    for name, lane in LANES:
        t0 = time.perf_counter()
        hits = 0
        for s3, s2, s3_full in cases:
            if lane.losing_addition(s3, s2, 8, 5, True) is not None:
                hits += 1
            if lane.find_convex_gon(s3_full, 9, 5) is not None:
                hits += 1
            if lane.find_empty_convex_gon(s3_full, 9, 5) is not None:
                hits += 1
        dt = time.perf_counter() - t0
        results[name] = dt
        rate = 3 * positions / dt
        print(f"{name:<9} {dt * 1e3:8.1f} ms  ({rate:,.0f} scans/s, {hits} hits)")
    if len(results) == 2:
        print(f"speedup: {results['pure'] / results['compiled']:.1f}x")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--positions", type=int, default=300)
    bench(parser.parse_args().positions)
