"""Orientation-sign tables consumed by the kernel lanes.

Signs are computed once per position with exact integer arithmetic
(arbitrary precision); the kernels then run pure table scans.
"""

from __future__ import annotations

import numpy as np


def signs3_table(coords: list[tuple[int, int]]) -> np.ndarray:
    """Antisymmetric n*n*n int8 table of triple orientation signs."""
    n = len(coords)
    table = np.zeros((n, n, n), dtype=np.int8)
    for i in range(n):
        xi, yi = coords[i]
        for j in range(i + 1, n):
            xj, yj = coords[j]
            dx, dy = xj - xi, yj - yi
            for k in range(j + 1, n):
                xk, yk = coords[k]
                det = dx * (yk - yi) - dy * (xk - xi)
                s = 1 if det > 0 else (-1 if det < 0 else 0)
                table[i, j, k] = s
                table[j, k, i] = s
                table[k, i, j] = s
                table[i, k, j] = -s
                table[k, j, i] = -s
                table[j, i, k] = -s
    return table


def signs2_for_point(
    coords: list[tuple[int, int]], px: int, py: int
) -> np.ndarray:
    """Antisymmetric n*n int8 table: sign of orient(P[i], P[j], p)."""
    n = len(coords)
    table = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        xi, yi = coords[i]
        for j in range(i + 1, n):
            xj, yj = coords[j]
            det = (xj - xi) * (py - yi) - (yj - yi) * (px - xi)
            s = 1 if det > 0 else (-1 if det < 0 else 0)
            table[i, j] = s
            table[j, i] = -s
    return table
