"""
Facet-represented abstract simplicial complexes.

A complex is stored by its maximal faces only. Faces are tuples of nonzero
integers in strictly increasing order; the empty face is ``()``. All operations
are pure and return new complexes. Per-dimension face sets are enumerated
lazily and cached.

Two degenerate values are kept apart:
  - the void complex has no faces at all (no facets);
  - the empty complex ``{∅}`` has the empty face as its only facet.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from topology.errors import (
    DisjointnessError,
    MalformedFaceError,
    NotAFaceError,
    NotAnEdgeError,
    NotASubcomplexError,
    PurityError,
)

Face = Tuple[int, ...]
FVector = Tuple[int, ...]


def as_face(vertices: Iterable[int]) -> Face:
    """Canonicalize a vertex collection into a sorted face, rejecting duplicates and label 0."""
    vs = tuple(vertices)
    face = tuple(sorted(vs))
    if len(set(face)) != len(face):
        raise MalformedFaceError(f"duplicate vertex in face {vs}")
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or v == 0:
            raise MalformedFaceError(f"invalid vertex label {v!r} in face {vs}")
    return face


def _maximal_faces(faces: Iterable[Face]) -> Tuple[Face, ...]:
    """Drop duplicates and every face contained in another one; lexicographic result."""
    unique = set(faces)
    if not unique:
        return ()
    sizes = {len(f) for f in unique}
    if len(sizes) == 1:
        return tuple(sorted(unique))

    kept: List[Face] = []
    by_vertex: Dict[int, List[frozenset]] = defaultdict(list)
    for face in sorted(unique, key=len, reverse=True):
        if not face:
            # the empty face survives only in the empty complex
            if not kept:
                kept.append(face)
            continue
        fs = frozenset(face)
        pivot = min(face, key=lambda v: len(by_vertex[v]))
        if any(fs <= other for other in by_vertex[pivot]):
            continue
        kept.append(face)
        for v in face:
            by_vertex[v].append(fs)
    return tuple(sorted(kept))


class SimplicialComplex:
    """Immutable simplicial complex given by its facets."""

    __slots__ = ("_facets", "_dim", "_faces", "_index", "_vertices", "_lock")

    def __init__(self, facets: Tuple[Face, ...]):
        # trusted constructor: facets must already be canonical and maximal
        self._facets = facets
        self._dim = max((len(f) for f in facets), default=0) - 1
        self._faces: Dict[int, frozenset] = {}
        self._index: Optional[Dict[int, Tuple[Face, ...]]] = None
        self._vertices: Optional[Tuple[int, ...]] = None
        self._lock = threading.Lock()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_facets(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build a complex from any generating faces; dominated faces are dropped."""
        return cls(_maximal_faces(as_face(f) for f in faces))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(((),))

    @classmethod
    def simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        return cls((as_face(vertices),))

    # -- basic accessors --------------------------------------------------

    @property
    def facets(self) -> Tuple[Face, ...]:
        return self._facets

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def is_void(self) -> bool:
        return not self._facets

    @property
    def is_empty(self) -> bool:
        return self._facets == ((),)

    def vertex_set(self) -> Tuple[int, ...]:
        if self._vertices is None:
            self._vertices = tuple(sorted({v for f in self._facets for v in f}))
        return self._vertices

    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def facets_containing(self, v: int) -> Tuple[Face, ...]:
        if self._index is None:
            with self._lock:
                if self._index is None:
                    index: Dict[int, List[Face]] = defaultdict(list)
                    for f in self._facets:
                        for u in f:
                            index[u].append(f)
                    self._index = {u: tuple(fs) for u, fs in index.items()}
        return self._index.get(v, ())

    def faces(self, k: int) -> frozenset:
        """All k-faces (faces with k+1 vertices); out-of-range k gives the empty set."""
        if k < -1 or k > self._dim or self.is_void:
            return frozenset()
        cached = self._faces.get(k)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._faces.get(k)
            if cached is None:
                out: Set[Face] = set()
                size = k + 1
                for f in self._facets:
                    if len(f) >= size:
                        out.update(combinations(f, size))
                cached = frozenset(out)
                self._faces[k] = cached
        return cached

    def face_set(self, include_empty: bool = False) -> Set[Face]:
        out: Set[Face] = set()
        for k in range(0 if not include_empty else -1, self._dim + 1):
            out |= self.faces(k)
        return out

    def contains_face(self, face: Iterable[int]) -> bool:
        f = tuple(sorted(face))
        if self.is_void:
            return False
        if not f:
            return True
        fs = set(f)
        return any(fs.issubset(g) for g in self.facets_containing(f[0]))

    def neighbors(self, v: int) -> Set[int]:
        return {u for f in self.facets_containing(v) for u in f if u != v}

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex(dim={self._dim}, facets={len(self._facets)}, vertices={len(self.vertex_set())})"


# -- counting ---------------------------------------------------------------

def from_facets(faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(faces)


def faces(delta: SimplicialComplex, k: int) -> frozenset:
    return delta.faces(k)


def f_vector(delta: SimplicialComplex) -> FVector:
    """(f_0, ..., f_dim); the empty face is not counted."""
    return tuple(len(delta.faces(k)) for k in range(0, delta.dim + 1))


def euler_characteristic(delta: SimplicialComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(f_vector(delta)))


# -- the face calculus --------------------------------------------------------

def _require_face(delta: SimplicialComplex, face: Face) -> None:
    if not delta.contains_face(face):
        raise NotAFaceError(f"{face} is not a face of {delta!r}")


def star(delta: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    f = as_face(face)
    _require_face(delta, f)
    if not f:
        return delta
    fs = set(f)
    return SimplicialComplex(tuple(g for g in delta.facets_containing(f[0]) if fs.issubset(g)))


def link(delta: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    f = as_face(face)
    _require_face(delta, f)
    if not f:
        return delta
    fs = set(f)
    # distinct facets over F stay incomparable once F is removed
    rest = {tuple(v for v in g if v not in fs) for g in delta.facets_containing(f[0]) if fs.issubset(g)}
    return SimplicialComplex(tuple(sorted(rest)))


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    if set(first.vertex_set()) & set(second.vertex_set()):
        raise DisjointnessError("join needs disjoint vertex sets")
    if first.is_void or second.is_void:
        return SimplicialComplex.void()
    return SimplicialComplex(tuple(sorted(tuple(sorted(f + g)) for f in first.facets for g in second.facets)))


def cone(delta: SimplicialComplex, apex: int) -> SimplicialComplex:
    return join(SimplicialComplex.simplex([apex]), delta)


def induced_subcomplex(delta: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    keep = set(vertices)
    if delta.is_void:
        return delta
    return SimplicialComplex(_maximal_faces(tuple(v for v in f if v in keep) for f in delta.facets))


def is_subcomplex(sub: SimplicialComplex, delta: SimplicialComplex) -> bool:
    return all(delta.contains_face(f) for f in sub.facets)


def _require_subcomplex(sub: SimplicialComplex, delta: SimplicialComplex) -> None:
    if not is_subcomplex(sub, delta):
        raise NotASubcomplexError(f"{sub!r} is not a subcomplex of {delta!r}")


def deletion(delta: SimplicialComplex, sub: SimplicialComplex) -> SimplicialComplex:
    """Δ \\ Γ: the induced subcomplex on the vertices not used by Γ."""
    _require_subcomplex(sub, delta)
    gone = set(sub.vertex_set())
    return induced_subcomplex(delta, (v for v in delta.vertex_set() if v not in gone))


def complement_closure(delta: SimplicialComplex, sub: SimplicialComplex) -> SimplicialComplex:
    """Closure of Δ − Γ: generated by the facets of Δ that are not faces of Γ."""
    _require_subcomplex(sub, delta)
    return SimplicialComplex(tuple(f for f in delta.facets if not sub.contains_face(f)))


def intersection(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    if first.is_void or second.is_void:
        return SimplicialComplex.void()
    top = min(first.dim, second.dim)
    kept: List[Face] = []
    covered: Set[Face] = set()
    for k in range(top, -1, -1):
        common = first.faces(k) & second.faces(k)
        kept.extend(f for f in common if f not in covered)
        covered = {sub for f in common for sub in combinations(f, k)}
    if not kept:
        return SimplicialComplex.empty()
    return SimplicialComplex(tuple(sorted(kept)))


def union(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(_maximal_faces(first.facets + second.facets))


def relabel(delta: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    """Rename vertices through an injective map."""
    images = [mapping[v] for v in delta.vertex_set()]
    if len(set(images)) != len(images):
        raise MalformedFaceError("relabeling is not injective")
    return SimplicialComplex(tuple(sorted(as_face(mapping[v] for v in f) for f in delta.facets)))


# -- maps and contractions ---------------------------------------------------

def quotient_by_vertex_map(delta: SimplicialComplex, mapping: Callable[[int], int] | Mapping[int, int]) -> SimplicialComplex:
    """Image of Δ under a vertex map; faces with the same vertex set are identified."""
    fn = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
    table = {v: fn(v) for v in delta.vertex_set()}
    return SimplicialComplex(_maximal_faces(tuple(sorted({table[v] for v in f})) for f in delta.facets))


def _require_edge(delta: SimplicialComplex, edge: Iterable[int]) -> Face:
    e = tuple(sorted(edge))
    if len(e) != 2 or len(set(e)) != 2 or not delta.contains_face(e):
        raise NotAnEdgeError(f"{tuple(edge)} is not an edge of {delta!r}")
    return e


def edge_contraction(delta: SimplicialComplex, edge: Iterable[int], survivor: int) -> SimplicialComplex:
    """Identify the endpoints of an edge, keeping the survivor's label."""
    e = _require_edge(delta, edge)
    if survivor not in e:
        raise NotAnEdgeError(f"survivor {survivor} is not an endpoint of {e}")
    gone = e[0] if e[1] == survivor else e[1]

    moved = set(delta.facets_containing(gone))
    images = [tuple(sorted({survivor if v == gone else v for v in f})) for f in moved]
    # only faces through the survivor can change which facets are maximal
    pool = images + [f for f in delta.facets_containing(survivor) if f not in moved]
    untouched = [f for f in delta.facets if survivor not in f and gone not in f]
    return SimplicialComplex(tuple(sorted(untouched + list(_maximal_faces(pool)))))


def link_condition(delta: SimplicialComplex, edge: Iterable[int]) -> bool:
    """lk(i) ∩ lk(j) == lk({i, j}) as face sets."""
    i, j = _require_edge(delta, edge)
    common = link(delta, (i,)).face_set(include_empty=True) & link(delta, (j,)).face_set(include_empty=True)
    return common == link(delta, (i, j)).face_set(include_empty=True)


# -- global structure ----------------------------------------------------------

def connected_components(delta: SimplicialComplex) -> List[SimplicialComplex]:
    """Components of the 1-skeleton, each as the complex of its facets, ordered by smallest face."""
    parent: Dict[int, int] = {v: v for v in delta.vertex_set()}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in delta.facets:
        for v in f[1:]:
            a, b = find(f[0]), find(v)
            if a != b:
                parent[b] = a

    groups: Dict[int, List[Face]] = defaultdict(list)
    for f in delta.facets:
        if f:
            groups[find(f[0])].append(f)
    parts = [SimplicialComplex(tuple(sorted(fs))) for fs in groups.values()]
    return sorted(parts, key=lambda c: c.facets[0])


def complement_components(delta: SimplicialComplex, sub: SimplicialComplex) -> List[SimplicialComplex]:
    """
    Closures of the connected components of Δ − Γ.

    Two facets of Δ − Γ belong to the same component when they share a ridge
    that is not in Γ or a vertex outside V(Γ).
    """
    closure = complement_closure(delta, sub)
    facets = closure.facets
    parent = list(range(len(facets)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def merge(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    sub_vertices = set(sub.vertex_set())
    first_owner: Dict[Tuple[str, Face], int] = {}
    for idx, f in enumerate(facets):
        keys: List[Tuple[str, Face]] = [("v", (v,)) for v in f if v not in sub_vertices]
        keys.extend(("r", r) for r in combinations(f, len(f) - 1) if r and not sub.contains_face(r))
        for key in keys:
            owner = first_owner.setdefault(key, idx)
            if owner != idx:
                merge(owner, idx)

    groups: Dict[int, List[Face]] = defaultdict(list)
    for idx, f in enumerate(facets):
        groups[find(idx)].append(f)
    parts = [SimplicialComplex(tuple(sorted(fs))) for fs in groups.values()]
    return sorted(parts, key=lambda c: c.facets[0])


def boundary_faces(delta: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by the ridges lying in exactly one facet."""
    if not delta.is_pure():
        raise PurityError(f"{delta!r} is not pure")
    ridges = [r for r, n in ridge_counts(delta).items() if n == 1]
    if not ridges:
        return SimplicialComplex.void()
    return SimplicialComplex(tuple(sorted(ridges)))


def ridge_counts(delta: SimplicialComplex) -> Dict[Face, int]:
    """How many facets contain each ridge (codimension-one face of a facet)."""
    counts: Dict[Face, int] = defaultdict(int)
    for f in delta.facets:
        if f:
            for r in combinations(f, len(f) - 1):
                counts[r] += 1
    return counts


__all__: Sequence[str] = [
    "Face",
    "FVector",
    "SimplicialComplex",
    "as_face",
    "boundary_faces",
    "complement_closure",
    "complement_components",
    "cone",
    "connected_components",
    "deletion",
    "edge_contraction",
    "euler_characteristic",
    "f_vector",
    "faces",
    "from_facets",
    "induced_subcomplex",
    "intersection",
    "is_subcomplex",
    "join",
    "link",
    "link_condition",
    "quotient_by_vertex_map",
    "relabel",
    "ridge_counts",
    "star",
    "union",
]
