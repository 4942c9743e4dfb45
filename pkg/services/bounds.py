"""Vertex-count bounds and reference numbers for triangulations of RP^d."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, List

import pandas as pd

from utils.cache import memoize


@dataclass(frozen=True)
class Bound:
    d: int
    value: int
    in_stated_range: bool = True


@memoize
def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = 1; extended by F_{-1} = 1."""
    if n == -1:
        return 1
    if n < -1:
        raise ValueError(f"fibonacci index {n} below -1")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_f0(d: int) -> int:
    """f_0(S_d) = 3F_{d+1} + 7F_d + 3F_{d-1} - 4."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    return 3 * fibonacci(d + 1) + 7 * fibonacci(d) + 3 * fibonacci(d - 1) - 4


def rpd_f0(d: int) -> int:
    return fibonacci_f0(d) // 2


def kuhnel_f0(d: int) -> int:
    return 2 ** (d + 1) - 1


def arnoux_marin_bound(d: int) -> Bound:
    """f_0 ≥ C(d+2, 2) + 1, proved for d ≥ 3."""
    return Bound(d, comb(d + 2, 2) + 1, d >= 3)


def novik_swartz_murai_bound(d: int) -> Bound:
    """Least n with C(n-d-1, 2) ≥ C(d+2, 2)·β̃_1, where β̃_1(RP^d; GF(2)) = 1."""
    target = comb(d + 2, 2)
    n = d + 1
    while comb(n - d - 1, 2) < target:
        n += 1
    return Bound(d, n, d >= 3)


def conjectured_bound(d: int) -> Bound:
    return Bound(d, comb(d + 2, 2) + (d - 1) // 2, d >= 3)


def comparison(d: int) -> Dict[str, object]:
    ours = rpd_f0(d)
    am = arnoux_marin_bound(d)
    kuhnel = kuhnel_f0(d)
    row: Dict[str, object] = {
        "d": d,
        "bound": am.value,
        "bound_in_range": am.in_stated_range,
        "nsm": novik_swartz_murai_bound(d).value,
        "conjectured": conjectured_bound(d).value,
        "ours": ours,
        "kuhnel": kuhnel,
    }
    if d >= 3:
        row["below_kuhnel"] = ours < kuhnel
        row["above_bound"] = ours >= am.value
    return row


def comparison_frame(dims: Iterable[int]) -> pd.DataFrame:
    rows: List[Dict[str, object]] = [comparison(d) for d in dims]
    return pd.DataFrame(rows).set_index("d")


__all__ = [
    "Bound",
    "arnoux_marin_bound",
    "comparison",
    "comparison_frame",
    "conjectured_bound",
    "fibonacci",
    "fibonacci_f0",
    "kuhnel_f0",
    "novik_swartz_murai_bound",
    "rpd_f0",
]
