"""
Simplicial chain complexes, integral homology and mod-2 Betti numbers.

Faces are oriented by their sorted vertex order; the boundary of
(v_0, ..., v_k) is the signed sum of the faces with v_i removed, with sign
(-1)^i. Rows and columns of every boundary matrix are in lexicographic face
order.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from config import FLAGS
from topology.complex import Face, SimplicialComplex, f_vector
from topology.errors import ConstructionInvariantError, HomologyCapError
from utils.gf2 import gf2_rank_with_clearing
from utils.smith import dense_invariant_factors, invariant_factors

logger = logging.getLogger(__name__)


def face_index(delta: SimplicialComplex, k: int) -> Tuple[List[Face], Dict[Face, int]]:
    ordered = sorted(delta.faces(k))
    return ordered, {f: i for i, f in enumerate(ordered)}


@dataclass
class BoundaryMatrix:
    """∂_k as sparse columns: columns[j] = {row: ±1} for the j-th k-face."""

    k: int
    rows: List[Face]
    cols: List[Face]
    columns: List[Dict[int, int]] = field(repr=False)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def as_sparse(self) -> Dict[int, Dict[int, int]]:
        return {j: col for j, col in enumerate(self.columns)}


def _boundary_columns(cols: Sequence[Face], row_index: Dict[Face, int]) -> List[Dict[int, int]]:
    out = []
    for face in cols:
        col = {}
        for i in range(len(face)):
            col[row_index[face[:i] + face[i + 1:]]] = -1 if i % 2 else 1
        out.append(col)
    return out


def _composes_to_zero(lower: BoundaryMatrix, upper: BoundaryMatrix) -> bool:
    for col in upper.columns:
        acc: Dict[int, int] = {}
        for mid, a in col.items():
            for r, b in lower.columns[mid].items():
                acc[r] = acc.get(r, 0) + a * b
        if any(acc.values()):
            return False
    return True


def boundary_matrices(delta: SimplicialComplex, check_max_dim: Optional[int] = None) -> List[BoundaryMatrix]:
    """∂_1 .. ∂_dim; ∂_{k-1}∂_k = 0 is checked for k up to the configured cap."""
    cap = FLAGS.BOUNDARY_CHECK_MAX_DIM if check_max_dim is None else check_max_dim
    out: List[BoundaryMatrix] = []
    rows, row_index = face_index(delta, 0)
    for k in range(1, delta.dim + 1):
        cols, col_index = face_index(delta, k)
        matrix = BoundaryMatrix(k, rows, cols, _boundary_columns(cols, row_index))
        if out and k <= cap and not _composes_to_zero(out[-1], matrix):
            raise ConstructionInvariantError(f"∂{k - 1}∂{k} != 0")
        out.append(matrix)
        rows, row_index = cols, col_index
    return out


def smith_normal_form(matrix: Union[BoundaryMatrix, Sequence[Sequence[int]], np.ndarray]) -> List[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    if isinstance(matrix, BoundaryMatrix):
        return invariant_factors(matrix.as_sparse())
    return dense_invariant_factors([[int(x) for x in row] for row in matrix])


@dataclass(frozen=True)
class HomologyGroups:
    """H_k = Z^betti[k] ⊕ ⊕ Z/t for t in torsion[k]."""

    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    def group(self, k: int) -> str:
        if k < 0 or k >= len(self.betti):
            return "0"
        parts = []
        if self.betti[k]:
            parts.append("Z" if self.betti[k] == 1 else f"Z^{self.betti[k]}")
        parts.extend(f"Z/{t}" for t in self.torsion[k])
        return "+".join(parts) or "0"

    def describe(self) -> str:
        return ",".join(self.group(k) for k in range(len(self.betti)))


def homology_Z(delta: SimplicialComplex, max_dim: Optional[int] = None) -> HomologyGroups:
    """Unreduced integral homology H_0 .. H_dim."""
    cap = FLAGS.ZHOMOLOGY_MAX_DIM if max_dim is None else max_dim
    if delta.dim > cap:
        raise HomologyCapError(
            f"integral homology refused for dim {delta.dim} > cap {cap}; use betti_gf2 or raise ZHOMOLOGY_MAX_DIM"
        )
    if delta.is_void or delta.is_empty:
        return HomologyGroups((), ())

    fv = f_vector(delta)
    factors: Dict[int, List[int]] = {0: []}
    for matrix in boundary_matrices(delta):
        factors[matrix.k] = smith_normal_form(matrix)
        logger.debug("∂%d %s: rank %d", matrix.k, matrix.shape, len(factors[matrix.k]))

    betti, torsion = [], []
    for k in range(delta.dim + 1):
        rank_here = len(factors.get(k, []))
        above = factors.get(k + 1, [])
        betti.append(fv[k] - rank_here - len(above))
        torsion.append(tuple(t for t in above if t > 1))
    return HomologyGroups(tuple(betti), tuple(torsion))


def _gf2_columns(cols: Sequence[Face], row_index: Dict[Face, int]):
    for j, face in enumerate(cols):
        bits = 0
        for i in range(len(face)):
            bits |= 1 << row_index[face[:i] + face[i + 1:]]
        yield j, bits


def betti_gf2(delta: SimplicialComplex) -> Tuple[int, ...]:
    """
    Unreduced Betti numbers over GF(2).

    Ranks are computed from the top dimension down; pivot rows of ∂_{k+1}
    are k-faces whose columns in ∂_k reduce to zero and are skipped.
    """
    if delta.is_void or delta.is_empty:
        return ()
    dim = delta.dim
    ranks = [0] * (dim + 2)
    cleared: Set[int] = set()
    upper: Optional[List[Face]] = None
    for k in range(dim, 0, -1):
        cols = upper if upper is not None else sorted(delta.faces(k))
        rows, row_index = face_index(delta, k - 1)
        ranks[k], pivots = gf2_rank_with_clearing(_gf2_columns(cols, row_index), cleared)
        logger.debug("GF(2) rank ∂%d = %d (%d columns skipped)", k, ranks[k], len(cleared))
        cleared = set(pivots)
        upper = rows
    fv = f_vector(delta)
    return tuple(fv[k] - ranks[k] - ranks[k + 1] for k in range(dim + 1))


def reduced_betti_gf2(delta: SimplicialComplex) -> Tuple[int, ...]:
    betti = list(betti_gf2(delta))
    if betti:
        betti[0] -= 1
    return tuple(betti)


def is_homology_point(delta: SimplicialComplex) -> bool:
    """GF(2)-acyclic: the homology stand-in for a ball."""
    if delta.is_void or delta.is_empty:
        return False
    return not any(reduced_betti_gf2(delta))


def is_homology_sphere(delta: SimplicialComplex, k: Optional[int] = None) -> bool:
    """Reduced GF(2) homology of S^k, where k defaults to dim(Δ)."""
    if delta.is_void or delta.is_empty:
        return False
    k = delta.dim if k is None else k
    if delta.dim != k:
        return False
    reduced = reduced_betti_gf2(delta)
    return reduced[-1] == 1 and not any(reduced[:-1])


def euler_from_betti(betti: Sequence[int]) -> int:
    return sum((-1) ** i * b for i, b in enumerate(betti))


def rp_homology(d: int) -> HomologyGroups:
    """Known integral homology of RP^d."""
    betti = [1] + [0] * d
    torsion: List[Tuple[int, ...]] = [()] * (d + 1)
    for k in range(1, d):
        if k % 2 == 1:
            torsion[k] = (2,)
    if d % 2 == 1:
        betti[d] = 1
    return HomologyGroups(tuple(betti), tuple(torsion))


def sphere_homology(d: int) -> HomologyGroups:
    if d == 0:
        return HomologyGroups((2,), ((),))
    betti = [1] + [0] * (d - 1) + [1]
    return HomologyGroups(tuple(betti), tuple(() for _ in range(d + 1)))


__all__ = [
    "BoundaryMatrix",
    "HomologyGroups",
    "betti_gf2",
    "boundary_matrices",
    "euler_from_betti",
    "face_index",
    "homology_Z",
    "is_homology_point",
    "is_homology_sphere",
    "reduced_betti_gf2",
    "rp_homology",
    "smith_normal_form",
    "sphere_homology",
]
