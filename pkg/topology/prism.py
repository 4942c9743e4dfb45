"""
Locally acyclic orientations (l.a.o.) and the staircase triangulation of Δ × [-1, 1].

Prism vertices (u, level) are packed into signed integers so that the prism
involution (u, i) -> (σ(u), -i) is again plain negation:

    u > 0:  (u, +1) -> 2u - 1      (u, -1) -> 2u
    u < 0:  (u, -1) -> -(2|u| - 1) (u, +1) -> -2|u|
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from topology.complex import Face, SimplicialComplex, induced_subcomplex, is_subcomplex, relabel
from topology.errors import CertificateError, ConstructionInvariantError, OrientationError
from topology.symmetry import check_cs, label_order_key

UP, DOWN = 1, -1


def prism_vertex_label(u: int, level: int) -> int:
    if level not in (UP, DOWN):
        raise ValueError(f"prism level must be +1 or -1, got {level}")
    a = abs(u)
    if (u > 0) == (level == UP):
        code = 2 * a - 1
    else:
        code = 2 * a
    return code if u > 0 else -code


def prism_vertex_of(label: int) -> Tuple[int, int]:
    a = abs(label)
    odd = a % 2 == 1
    base = (a + 1) // 2
    if label > 0:
        return (base, UP) if odd else (base, DOWN)
    return (-base, DOWN) if odd else (-base, UP)


@dataclass
class LAO:
    """Orientation of every edge of a complex's graph: edge -> (tail, head)."""

    arrows: Dict[Face, Tuple[int, int]] = field(default_factory=dict)

    def points(self, u: int, w: int) -> bool:
        """True iff u -> w."""
        return self.arrows.get((min(u, w), max(u, w))) == (u, w)

    def order(self, face: Iterable[int]) -> List[int]:
        """Linear order induced on a face: sources first."""
        vs = list(face)
        outdeg = {v: sum(1 for w in vs if w != v and self.points(v, w)) for v in vs}
        return sorted(vs, key=lambda v: -outdeg[v])


@dataclass(frozen=True)
class LaoCheck:
    ok: bool
    violation: Optional[Face] = None
    reason: str = ""


def globally_acyclic_lao(delta: SimplicialComplex) -> LAO:
    """u -> w iff u < w. Under σ(k) = -k this orientation is order reversing."""
    return LAO({e: e for e in delta.faces(1)})


def split_sides(delta: SimplicialComplex, w_side: Iterable[int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    w = frozenset(w_side)
    mirror = frozenset(-v for v in w)
    if w & mirror or (w | mirror) != frozenset(delta.vertex_set()):
        raise CertificateError("V(S) is not the disjoint union of W and σ(W)")
    return w, mirror


def canonical_lao(delta: SimplicialComplex, w_side: Iterable[int], w_order: Optional[Sequence[int]] = None) -> LAO:
    """
    The symmetric orientation used by the builder.

    Inside W edges follow ``w_order`` (the label order when omitted), inside
    σ(W) they are the mirror image (σ(w) -> σ(u) iff u -> w), and every edge
    between the two sides points from W to σ(W).
    """
    w, _ = split_sides(delta, w_side)
    if w_order is None:
        rank = {v: label_order_key(v) for v in w}
    else:
        if sorted(w_order) != sorted(w):
            raise CertificateError("the order on W must list every vertex of W once")
        rank = {v: i for i, v in enumerate(w_order)}
    arrows: Dict[Face, Tuple[int, int]] = {}
    for a, b in delta.faces(1):
        if (a in w) != (b in w):
            arrows[(a, b)] = (a, b) if a in w else (b, a)
        elif a in w:
            arrows[(a, b)] = (a, b) if rank[a] < rank[b] else (b, a)
        else:
            arrows[(a, b)] = (a, b) if rank[-b] < rank[-a] else (b, a)
    return LAO(arrows)


def validate_lao(
    delta: SimplicialComplex,
    lao: LAO,
    symmetric: bool = False,
    w_side: Optional[Iterable[int]] = None,
) -> LaoCheck:
    """Check local acyclicity and, optionally, σ-reversal and the W -> σ(W) rule."""
    edges = delta.faces(1)
    for e in sorted(edges):
        arrow = lao.arrows.get(e)
        if arrow is None or set(arrow) != set(e):
            return LaoCheck(False, e, "edge not oriented")
    for a, b, c in sorted(delta.faces(2)):
        if (lao.points(a, b) and lao.points(b, c) and lao.points(c, a)) or (
            lao.points(b, a) and lao.points(c, b) and lao.points(a, c)
        ):
            return LaoCheck(False, (a, b, c), "directed 3-cycle")
    if symmetric:
        for e in sorted(edges):
            u, w = lao.arrows[e]
            if not lao.points(-w, -u):
                return LaoCheck(False, e, "not order reversing under σ")
    if w_side is not None:
        side = set(w_side)
        for e in sorted(edges):
            u, w = lao.arrows[e]
            if (u in side) != (w in side) and u not in side:
                return LaoCheck(False, e, "edge between W and σ(W) points into W")
    return LaoCheck(True)


def staircase_prism(delta: SimplicialComplex, lao: LAO) -> SimplicialComplex:
    """
    Triangulate Δ × [-1, 1] without new vertices.

    A facet ordered v_1 -> ... -> v_k by the orientation contributes the k
    simplices {(v_1,+1)..(v_t,+1), (v_t,-1)..(v_k,-1)}, t = 1..k.
    """
    check = validate_lao(delta, lao)
    if not check.ok:
        raise OrientationError(f"invalid orientation: {check.reason} at {check.violation}")
    out: Set[Face] = set()
    for facet in delta.facets:
        chain = lao.order(facet)
        ups = [prism_vertex_label(v, UP) for v in chain]
        downs = [prism_vertex_label(v, DOWN) for v in chain]
        for t in range(len(chain)):
            out.add(tuple(sorted(ups[: t + 1] + downs[t:])))
    return SimplicialComplex(tuple(sorted(out)))


def prism_layer(delta: SimplicialComplex, level: int) -> SimplicialComplex:
    return relabel(delta, {v: prism_vertex_label(v, level) for v in delta.vertex_set()})


def diagonal_edges(prism: SimplicialComplex) -> Set[Tuple[int, int]]:
    """Edges {(u,+1),(w,-1)} with u != w, returned as base pairs (u, w)."""
    out = set()
    for a, b in prism.faces(1):
        (u, i), (w, j) = prism_vertex_of(a), prism_vertex_of(b)
        if u != w and i != j:
            out.add((u, w) if i == UP else (w, u))
    return out


def vertical_edges(prism: SimplicialComplex) -> List[Face]:
    out = []
    for v in prism.vertex_set():
        u, level = prism_vertex_of(v)
        if level == UP:
            other = prism_vertex_label(u, DOWN)
            if prism.contains_face((v, other)):
                out.append(tuple(sorted((v, other))))
    return sorted(out)


@dataclass(frozen=True)
class GammaMap:
    """ψ on the middle layer: W goes up, σ(W) goes down."""

    w_side: FrozenSet[int]
    psi: Mapping[int, int]

    @classmethod
    def for_side(cls, delta: SimplicialComplex, w_side: Iterable[int]) -> "GammaMap":
        w, _ = split_sides(delta, w_side)
        psi = {v: prism_vertex_label(v, UP if v in w else DOWN) for v in delta.vertex_set()}
        return cls(w, psi)

    def __call__(self, v: int) -> int:
        return self.psi[v]


def gamma_subcomplex(prism: SimplicialComplex, psi: GammaMap, delta: SimplicialComplex) -> SimplicialComplex:
    """ψ(S) inside the prism; must be an induced subcomplex isomorphic to S."""
    gamma = relabel(delta, psi.psi)
    if not is_subcomplex(gamma, prism):
        raise ConstructionInvariantError("ψ(S) is not a subcomplex of the prism")
    if induced_subcomplex(prism, gamma.vertex_set()) != gamma:
        raise ConstructionInvariantError("ψ(S) is not induced in the prism")
    return gamma


def prism_involution_is_cs(prism: SimplicialComplex) -> bool:
    """(u, i) -> (σ(u), -i) is label negation, so this is check_cs on the packed labels."""
    return check_cs(prism).ok
