"""
Kühnel's RP^d on 2^{d+1} - 1 vertices, the baseline the tower is compared to.

Vertices of the barycentric subdivision of ∂Δ^{d+1} are the nonempty proper
subsets A of {1, ..., d+2}, stored as bitmasks (element i is bit i-1). A subset
without element 1 is labeled by its mask; a subset containing 1 by minus the
mask of its complement. Complementation is therefore label negation and
|label| is the representative not containing 1.
"""
from __future__ import annotations

import logging
from itertools import permutations

from topology.complex import SimplicialComplex
from topology.symmetry import quotient_rp

logger = logging.getLogger(__name__)


def subset_label(mask: int, d: int) -> int:
    full = (1 << (d + 2)) - 1
    if not 0 < mask < full:
        raise ValueError(f"subset mask {mask} is not a nonempty proper subset of a {d + 2}-set")
    if mask & 1:
        return -(full ^ mask)
    return mask


def subset_of(label: int, d: int) -> frozenset:
    """Elements (1-based) of the subset behind a label."""
    full = (1 << (d + 2)) - 1
    mask = label if label > 0 else full ^ -label
    return frozenset(i + 1 for i in range(d + 2) if mask >> i & 1)


def barycentric_boundary_simplex(d: int) -> SimplicialComplex:
    """Maximal chains A_1 ⊂ ... ⊂ A_{d+1} of nonempty proper subsets of a (d+2)-set."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    facets = set()
    for perm in permutations(range(d + 2)):
        mask = 0
        chain = []
        for element in perm[:-1]:
            mask |= 1 << element
            chain.append(subset_label(mask, d))
        facets.add(tuple(sorted(chain)))
    logger.debug("barycentric ∂Δ^%d: %d facets", d + 1, len(facets))
    return SimplicialComplex(tuple(sorted(facets)))


def kuhnel_rpd(d: int) -> SimplicialComplex:
    return quotient_rp(barycentric_boundary_simplex(d))


__all__ = ["barycentric_boundary_simplex", "kuhnel_rpd", "subset_label", "subset_of"]
