"""GF(2) elimination over int bitsets: bit i of a column is row i."""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Set, Tuple


class PivotTable:
    """Column reduction keyed by the highest set bit (the column's pivot row)."""

    def __init__(self) -> None:
        self.pivots: Dict[int, int] = {}

    def reduce(self, column: int) -> int:
        pivots = self.pivots
        while column:
            reducer = pivots.get(column.bit_length() - 1)
            if reducer is None:
                break
            column ^= reducer
        return column

    def add(self, column: int) -> Optional[int]:
        """Reduce and insert; returns the new pivot row, or None if the column vanished."""
        column = self.reduce(column)
        if not column:
            return None
        row = column.bit_length() - 1
        self.pivots[row] = column
        return row

    @property
    def rank(self) -> int:
        return len(self.pivots)


def gf2_rank_with_clearing(columns: Iterable[Tuple[int, int]], cleared: Set[int]) -> Tuple[int, List[int]]:
    """
    Rank of a matrix given as (column index, bitset) pairs, skipping cleared columns.

    A column may be skipped when it is known to reduce to zero against the
    earlier ones. Returns the rank and the pivot rows found, which are the
    columns the next lower boundary map may skip.
    """
    table = PivotTable()
    pivot_rows: List[int] = []
    for idx, col in columns:
        if idx in cleared:
            continue
        row = table.add(col)
        if row is not None:
            pivot_rows.append(row)
    return table.rank, pivot_rows


__all__ = ["PivotTable", "gf2_rank_with_clearing"]
