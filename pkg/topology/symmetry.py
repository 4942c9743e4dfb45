"""
Central symmetry on signed-integer labels.

The involution is always σ(k) = -k. A complex is centrally symmetric (cs) when
σ maps faces to faces and no nonempty face is fixed, i.e. no face holds an
antipodal pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple, Union, overload

from topology.complex import Face, SimplicialComplex, f_vector, quotient_by_vertex_map, relabel
from topology.errors import CsViolationError, IdentificationCollisionError


def sigma(v: int) -> int:
    return -v


def label_order_key(v: int) -> Tuple[int, bool]:
    """Fixed vertex order: ascending absolute value, positive before negative."""
    return abs(v), v < 0


@overload
def antipode(x: Face) -> Face: ...
@overload
def antipode(x: SimplicialComplex) -> SimplicialComplex: ...


def antipode(x: Union[Face, SimplicialComplex]):
    if isinstance(x, SimplicialComplex):
        return relabel(x, {v: -v for v in x.vertex_set()})
    return tuple(sorted(-v for v in x))


@dataclass(frozen=True)
class CsCheck:
    ok: bool
    violation: Optional[Face] = None
    reason: str = ""


def check_cs(delta: SimplicialComplex) -> CsCheck:
    """Report whether σ is a simplicial automorphism acting freely on nonempty faces."""
    facets = set(delta.facets)
    for f in delta.facets:
        present = set(f)
        for v in f:
            if -v in present:
                return CsCheck(False, (min(v, -v), max(v, -v)), "face contains an antipodal pair")
        if antipode(f) not in facets:
            return CsCheck(False, f, "antipode of facet is not a facet")
    return CsCheck(True)


@dataclass(frozen=True)
class CsComplex:
    complex: SimplicialComplex

    @classmethod
    def validated(cls, delta: SimplicialComplex) -> "CsComplex":
        check = check_cs(delta)
        if not check.ok:
            raise CsViolationError(f"not centrally symmetric: {check.reason} at {check.violation}")
        return cls(delta)


def find_induced_cs_4cycle(delta: SimplicialComplex) -> Optional[int]:
    """
    Return a vertex v with st(v) ∩ st(σ(v)) ≠ {∅}, or None when there is none.

    For a cs complex this is exactly the absence of induced cs 4-cycles: a
    common nonempty face of the two stars contains a common neighbour w, and
    v, w, σ(v), σ(w) then span such a cycle.
    """
    for v in sorted(delta.vertex_set(), key=label_order_key):
        near = delta.neighbors(v)
        far = delta.neighbors(-v)
        if -v in near or near & far:
            return v
    return None


def enumerate_induced_cs_4cycles(delta: SimplicialComplex) -> List[Tuple[int, int, int, int]]:
    """
    Brute-force scan over antipodal pairs; cycles are listed as (v, w, -v, -w).

    The vertex set {±v, ±w} carries at most one cs 4-cycle, so each positive
    pair is tried once.
    """
    edges = delta.faces(1)
    vertices = sorted(v for v in delta.vertex_set() if v > 0)
    found = []
    for v, w in combinations(vertices, 2):
        cycle = [(v, w), (w, -v), (-v, -w), (-w, v)]
        if not all(tuple(sorted(e)) in edges for e in cycle):
            continue
        if (-v, v) in edges or (-w, w) in edges:
            continue
        found.append((v, w, -v, -w))
    return found


def quotient_rp(delta: SimplicialComplex) -> SimplicialComplex:
    """
    Identify every vertex with its antipode (v -> |v|).

    Requires a cs complex without induced cs 4-cycles; the result must have
    exactly half of every f-vector entry, which is checked.
    """
    check = check_cs(delta)
    if not check.ok:
        raise CsViolationError(f"not centrally symmetric: {check.reason} at {check.violation}")
    witness = find_induced_cs_4cycle(delta)
    if witness is not None:
        raise CsViolationError(f"induced cs 4-cycle through vertex {witness}")

    quotient = quotient_by_vertex_map(delta, abs)
    upstairs, downstairs = f_vector(delta), f_vector(quotient)
    if len(upstairs) != len(downstairs) or any(u != 2 * q for u, q in zip(upstairs, downstairs)):
        raise IdentificationCollisionError(f"f-vector {upstairs} did not halve, got {downstairs}")
    return quotient
