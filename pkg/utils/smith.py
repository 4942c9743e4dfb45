"""
Smith normal form over the integers.

Boundary matrices are sparse with ±1 entries, so most of the work is unit
pivoting on a sparse representation. Whatever is left once no unit entry
remains is small and is finished densely with Python integers, which never
overflow.
"""
from __future__ import annotations

from math import gcd
from typing import Dict, List, Mapping, Sequence, Set

Column = Dict[int, int]


def _unit_pivoting(cols: Dict[int, Column], rows: Dict[int, Set[int]]) -> int:
    """Eliminate unit pivots in place; returns how many were removed."""
    removed = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols, key=lambda k: len(cols[k])):
            col = cols.get(c)
            if not col:
                continue
            units = [r for r, v in col.items() if v == 1 or v == -1]
            if not units:
                continue
            r = min(units, key=lambda k: (len(rows[k]), k))
            pivot = col[r]
            for c2 in sorted(rows[r] - {c}):
                other = cols[c2]
                factor = other[r] * pivot
                for r2, v in col.items():
                    nv = other.get(r2, 0) - factor * v
                    if nv:
                        if r2 not in other:
                            rows[r2].add(c2)
                        other[r2] = nv
                    elif r2 in other:
                        del other[r2]
                        rows[r2].discard(c2)
                if not other:
                    del cols[c2]
            for r2 in col:
                rows[r2].discard(c)
            del cols[c]
            del rows[r]
            removed += 1
            progress = True
    return removed


def _dense_diagonal(matrix: List[List[int]]) -> List[int]:
    """Diagonalize a small dense integer matrix by smallest-pivot elimination."""
    a = [row[:] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: List[int] = []
    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                break
            # a remainder smaller than the pivot exists: move it onto the diagonal
            _, pi, pj = min(
                [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            )
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def normalize_divisibility(diagonal: Sequence[int]) -> List[int]:
    """Turn any nonzero diagonal into invariant factors d_1 | d_2 | ..."""
    d = sorted(abs(x) for x in diagonal if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def invariant_factors(columns: Mapping[int, Mapping[int, int]]) -> List[int]:
    """Nonzero invariant factors of a sparse matrix given as {column: {row: value}}."""
    cols: Dict[int, Column] = {c: {r: v for r, v in col.items() if v} for c, col in columns.items()}
    cols = {c: col for c, col in cols.items() if col}
    rows: Dict[int, Set[int]] = {}
    for c, col in cols.items():
        for r in col:
            rows.setdefault(r, set()).add(c)

    units = _unit_pivoting(cols, rows)
    if not cols:
        return [1] * units

    row_ids = sorted(r for r, cs in rows.items() if cs)
    col_ids = sorted(cols)
    pos = {r: i for i, r in enumerate(row_ids)}
    dense = [[0] * len(col_ids) for _ in row_ids]
    for j, c in enumerate(col_ids):
        for r, v in cols[c].items():
            dense[pos[r]][j] = v
    rest = normalize_divisibility(_dense_diagonal(dense))
    return [1] * units + rest


def dense_invariant_factors(matrix: Sequence[Sequence[int]]) -> List[int]:
    columns: Dict[int, Dict[int, int]] = {}
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if v:
                columns.setdefault(j, {})[i] = int(v)
    return invariant_factors(columns)


__all__ = ["invariant_factors", "dense_invariant_factors", "normalize_divisibility"]
