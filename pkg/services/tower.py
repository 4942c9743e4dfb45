"""
Inductive construction of the cs sphere flag S_0 ⊂ S_1 ⊂ ... ⊂ S_d.

Each extension step takes the staircase prism over S_{d-1}, caps it with two
antipodal pairs of cone apexes, contracts the vertical edges over D_{d-1}
and σ(D_{d-1}), and reads off the next certificate (B_d, D_d, v_d). After the
step the copy of S_{d-1} inside the new sphere gets its old labels back, so the
flag holds literally on vertex labels and σ(k) = -k throughout.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from config import FLAGS
from services.reference import reference_fvector
from topology.complex import (
    FVector,
    SimplicialComplex,
    complement_components,
    cone,
    edge_contraction,
    f_vector,
    is_subcomplex,
    join,
    link_condition,
    relabel,
    star,
    union,
)
from topology.errors import CertificateError, ConstructionInvariantError, ContractionUnsoundError
from topology.prism import (
    DOWN,
    UP,
    GammaMap,
    canonical_lao,
    gamma_subcomplex,
    globally_acyclic_lao,
    prism_layer,
    prism_vertex_label,
    prism_vertex_of,
    staircase_prism,
)
from topology.symmetry import antipode, check_cs, label_order_key, quotient_rp
from utils.cache import memoize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    """The balls B_i, D_i and apex v_i attached to one level of the flag."""

    ball_B: SimplicialComplex
    ball_D: SimplicialComplex
    apex_v: int
    sphere_below: SimplicialComplex


@dataclass(frozen=True)
class TowerLevel:
    sphere: SimplicialComplex
    certificate: Certificate


@dataclass(frozen=True)
class Tower:
    levels: Tuple[TowerLevel, ...]

    @property
    def dim(self) -> int:
        return len(self.levels) - 1

    @property
    def top(self) -> SimplicialComplex:
        return self.levels[-1].sphere

    def sphere(self, i: int) -> SimplicialComplex:
        return self.levels[i].sphere

    def certificate(self, i: int) -> Certificate:
        return self.levels[i].certificate

    def truncated(self, d: int) -> "Tower":
        return Tower(self.levels[: d + 1])


@dataclass(frozen=True)
class Extension:
    """Everything build_phi_prime produces that the later steps need."""

    tower: Tower
    prism: SimplicialComplex
    phi_prime: SimplicialComplex
    gamma_map: GammaMap
    v_plus: int
    w_plus: int


def max_label(delta: SimplicialComplex) -> int:
    return max((abs(v) for v in delta.vertex_set()), default=0)


def base_tower() -> Tower:
    """S_0 = {3, -3} and the cs 6-cycle S_1 with their certificates."""
    s_minus = SimplicialComplex.empty()
    s0 = SimplicialComplex.from_facets([(3,), (-3,)])
    point = SimplicialComplex.from_facets([(3,)])
    level0 = TowerLevel(s0, Certificate(point, point, 3, s_minus))

    s1 = SimplicialComplex.from_facets([(-3, 1), (1, 2), (2, 3), (3, -1), (-1, -2), (-2, -3)])
    b1 = SimplicialComplex.from_facets([(-3, 1), (1, 2), (2, 3)])
    d1 = SimplicialComplex.from_facets([(1, 2)])
    level1 = TowerLevel(s1, Certificate(b1, d1, 1, s0))
    return Tower((level0, level1))


def middle_side(tower: Tower) -> Tuple[int, ...]:
    """W = V(D_{d-1}) ⊎ V(st_{S_{d-2}}(v_{d-2})) for extending the top level."""
    top = tower.certificate(tower.dim)
    below = tower.levels[tower.dim - 1]
    apex = below.certificate.apex_v
    w = set(top.ball_D.vertex_set()) | set(star(below.sphere, (apex,)).vertex_set())
    return tuple(sorted(w, key=label_order_key))


def build_phi_prime(tower: Tower, w_order: Optional[Sequence[int]] = None) -> Extension:
    """
    Cap the staircase prism over the top sphere:

        Φ′ = Σ ∪ v+*K+ ∪ v-*K- ∪ w+*L+ ∪ w-*L-

    with K+ = B×{+1}, K- = σB×{-1}, L+ = σB×{+1} ∪ v+*∂B×{+1} and
    L- = B×{-1} ∪ v-*∂B×{-1}. ``w_order`` fixes the orientation inside W.
    """
    if tower.dim < 1:
        raise ConstructionInvariantError("extension needs levels 0 and 1")
    sphere = tower.top
    cert = tower.certificate(tower.dim)
    w_side = middle_side(tower)

    lao = canonical_lao(sphere, w_side, w_order)
    prism = staircase_prism(sphere, lao)
    psi = GammaMap.for_side(sphere, w_side)
    gamma_subcomplex(prism, psi, sphere)

    m = max_label(sphere)
    v_plus, w_plus = 2 * m + 1, 2 * m + 2
    ball = cert.ball_B
    mirror = antipode(ball)
    rim = cert.sphere_below

    k_plus = prism_layer(ball, UP)
    k_minus = prism_layer(mirror, DOWN)
    l_plus = union(prism_layer(mirror, UP), cone(prism_layer(rim, UP), v_plus))
    l_minus = union(prism_layer(ball, DOWN), cone(prism_layer(rim, DOWN), -v_plus))

    phi = prism
    for base, apex in ((k_plus, v_plus), (k_minus, -v_plus), (l_plus, w_plus), (l_minus, -w_plus)):
        phi = union(phi, cone(base, apex))

    check = check_cs(phi)
    if not check.ok:
        raise ConstructionInvariantError(f"Φ′ is not cs: {check.reason} at {check.violation}")
    logger.debug("Φ′ for level %d: f=%s", tower.dim + 1, f_vector(phi))
    return Extension(tower, prism, phi, psi, v_plus, w_plus)


def contraction_order(ext: Extension) -> List[int]:
    return sorted(ext.tower.certificate(ext.tower.dim).ball_D.vertex_set(), key=label_order_key)


def contract_step(ext: Extension, order: Optional[Sequence[int]] = None) -> SimplicialComplex:
    """
    Contract {(u,+1),(u,-1)} and then its antipode for every u in V(D).

    The link condition is asserted right before each contraction; the
    Γ-side endpoint survives.
    """
    ball_d = ext.tower.certificate(ext.tower.dim).ball_D
    vertices = contraction_order(ext) if order is None else list(order)
    if sorted(vertices) != sorted(ball_d.vertex_set()):
        raise ConstructionInvariantError("contraction order must list each vertex of D once")

    phi = ext.phi_prime
    check = check_cs(phi)
    if not check.ok:
        raise ConstructionInvariantError(f"refusing to contract a complex that is not cs: {check.reason} at {check.violation}")
    performed = 0
    for u in vertices:
        up, down = prism_vertex_label(u, UP), prism_vertex_label(u, DOWN)
        # -up is (σu, -1), the Γ-side endpoint of the antipodal edge
        for edge, survivor in (((up, down), up), ((-up, -down), -up)):
            if not link_condition(phi, edge):
                raise ContractionUnsoundError(f"link condition fails on {edge} (base vertex {u})")
            before = len(phi.vertex_set())
            phi = edge_contraction(phi, edge, survivor)
            if len(phi.vertex_set()) != before - 1:
                raise ConstructionInvariantError(f"contracting {edge} did not remove exactly one vertex")
            performed += 1
    if performed != 2 * len(ball_d.vertex_set()):
        raise ConstructionInvariantError(f"{performed} contractions, expected {2 * len(ball_d.vertex_set())}")
    return phi


def next_certificate(phi: SimplicialComplex, ext: Extension) -> Tower:
    """Read off (B_d, D_d, v_d), relabel canonically and append the level."""
    tower = ext.tower
    sphere = tower.top
    below = tower.levels[tower.dim - 1]
    gamma = gamma_subcomplex(phi, ext.gamma_map, sphere)

    far_star = star(below.sphere, (-below.certificate.apex_v,))
    ball_d = join(SimplicialComplex.simplex([ext.v_plus, ext.w_plus]), prism_layer(far_star, UP))
    if not is_subcomplex(ball_d, phi):
        raise CertificateError("D_d is not a subcomplex of the contracted complex")

    parts = complement_components(phi, gamma)
    if len(parts) != 2:
        raise CertificateError(f"Φ - Γ has {len(parts)} components, expected 2")
    ball_b = next((p for p in parts if ext.v_plus in p.vertex_set()), None)
    if ball_b is None:
        raise CertificateError("no component of Φ - Γ contains v+")
    other = parts[1] if ball_b is parts[0] else parts[0]
    if other != antipode(ball_b):
        raise CertificateError("the two components of Φ - Γ are not antipodal")

    near = set(star(phi, (ext.v_plus,)).vertex_set())
    far = set(star(phi, (-ext.v_plus,)).vertex_set())
    if near & far or (near | far) != set(phi.vertex_set()):
        raise CertificateError("V(st(v)) and V(st(σv)) do not partition the vertex set")

    mapping = canonical_labels(phi, ext, ball_d)
    new_sphere = relabel(phi, mapping)
    if relabel(gamma, mapping) != sphere:
        raise ConstructionInvariantError("relabeled Γ differs from the sphere below")
    cert = Certificate(
        ball_B=relabel(ball_b, mapping),
        ball_D=relabel(ball_d, mapping),
        apex_v=mapping[ext.v_plus],
        sphere_below=sphere,
    )
    return Tower(tower.levels + (TowerLevel(new_sphere, cert),))


def canonical_labels(phi: SimplicialComplex, ext: Extension, ball_d: SimplicialComplex) -> Dict[int, int]:
    """
    Γ vertices take back their labels in S_{d-1}; the D_d side is numbered
    m+1, m+2, ... (other vertices by base label, then v+, then w+) and the
    antipodes get the negatives.
    """
    mapping = {image: v for v, image in ext.gamma_map.psi.items()}
    m = max_label(ext.tower.top)
    apexes = (ext.v_plus, ext.w_plus)
    rest = sorted(
        (x for x in ball_d.vertex_set() if x not in apexes),
        key=lambda x: label_order_key(prism_vertex_of(x)[0]),
    )
    for offset, x in enumerate(rest + list(apexes), start=1):
        mapping[x] = m + offset
        mapping[-x] = -(m + offset)
    missing = set(phi.vertex_set()) - set(mapping)
    if missing:
        raise ConstructionInvariantError(f"vertices left without a canonical label: {sorted(missing)}")
    return mapping


def extend(tower: Tower, order: Optional[Sequence[int]] = None, w_order: Optional[Sequence[int]] = None) -> Tower:
    started = time.perf_counter()
    ext = build_phi_prime(tower, w_order)
    phi = contract_step(ext, order)
    out = next_certificate(phi, ext)
    logger.info(
        "level %d: f0=%d (Φ′ had %d), %d contractions, %.2fs",
        out.dim,
        len(out.top.vertex_set()),
        len(ext.phi_prime.vertex_set()),
        len(ext.phi_prime.vertex_set()) - len(phi.vertex_set()),
        time.perf_counter() - started,
    )
    return out


def predicted_next_fvector(tower: Tower) -> FVector:
    """
    f-vector of the sphere one level above the top, from the top level alone.

    The prism over S_d contributes (j+2)(s_j + s_{j-1}) j-faces and the four
    cones 2(r_{j-1} + r_{j-2}) more, with r = f(S_{d-1}). Each vertical edge
    over u in D_d has link isomorphic to lk_{S_d}(u), so its contraction
    removes one copy of that link shifted by one and by two dimensions. No
    count depends on the orientation used for the next step.
    """
    if tower.dim < 1:
        raise ConstructionInvariantError("prediction needs levels 0 and 1")
    d = tower.dim
    s = f_vector(tower.top)
    r = f_vector(tower.sphere(d - 1))
    ball_d = set(tower.certificate(d).ball_D.vertex_set())
    mu = [sum(len(ball_d.intersection(face)) for face in tower.top.faces(j)) for j in range(d + 2)]

    def at(seq: Sequence[int], i: int, empty: int = 1) -> int:
        if i == -1:
            return empty
        return seq[i] if 0 <= i < len(seq) else 0

    out = []
    for j in range(d + 2):
        prism = (j + 2) * (at(s, j) + at(s, j - 1))
        cones = 2 * (at(r, j - 1) + at(r, j - 2))
        lost = 2 * (mu[j] + (mu[j - 1] if j > 0 else 0))
        out.append(prism + cones - lost)
    return tuple(out)


def w_order_candidates(tower: Tower) -> List[Optional[Tuple[int, ...]]]:
    """
    Orders on W to try when a reference f-vector is the target: the label
    order (None) first, then D before the star of v_{d-1}, the reversed label
    order, and every swap of two label-adjacent vertices joined by an edge.
    Orders giving the same orientation inside W are listed once.
    """
    sphere = tower.top
    w_side = middle_side(tower)
    base = list(w_side)
    ball_d = set(tower.certificate(tower.dim).ball_D.vertex_set())
    orders: List[Tuple[int, ...]] = [
        tuple(base),
        tuple([v for v in base if v in ball_d] + [v for v in base if v not in ball_d]),
        tuple(reversed(base)),
    ]
    for i in range(len(base) - 1):
        a, b = base[i], base[i + 1]
        if sphere.contains_face(tuple(sorted((a, b)))):
            swapped = list(base)
            swapped[i], swapped[i + 1] = b, a
            orders.append(tuple(swapped))

    w = set(w_side)
    inside = [e for e in sphere.faces(1) if e[0] in w and e[1] in w]
    seen = set()
    out: List[Optional[Tuple[int, ...]]] = []
    for order in orders:
        rank = {v: i for i, v in enumerate(order)}
        key = frozenset(e if rank[e[0]] < rank[e[1]] else (e[1], e[0]) for e in inside)
        if key in seen:
            continue
        seen.add(key)
        out.append(None if order == tuple(base) else order)
    return out[: max(1, FLAGS.ORIENTATION_SEARCH_WIDTH)]


def _halved(fvector: Sequence[int]) -> Tuple[int, ...]:
    return tuple(n // 2 for n in fvector)


def _matches_reference(fvector: Sequence[int], d: int) -> bool:
    expected = reference_fvector(d)
    return expected is None or _halved(fvector) == expected


def reference_guided_tower(d: int) -> Optional[Tower]:
    """
    Depth-first choice of the W order at every step so that each level's
    quotient reproduces its reference f-vector. A choice at step k only
    shows in the f-vector of level k+1, so each candidate is judged by
    predicted_next_fvector before going deeper. None when the candidates run
    out or FLAGS.ORIENTATION_SEARCH_BUDGET extension steps have been spent.
    """
    budget = [FLAGS.ORIENTATION_SEARCH_BUDGET]

    def descend(tower: Tower) -> Optional[Tower]:
        if tower.dim == d:
            return tower
        for w_order in w_order_candidates(tower):
            if budget[0] <= 0:
                return None
            budget[0] -= 1
            nxt = extend(tower, w_order=w_order)
            if not _matches_reference(f_vector(nxt.top), nxt.dim):
                continue
            if nxt.dim < d and not _matches_reference(predicted_next_fvector(nxt), nxt.dim + 1):
                logger.debug("level %d: W order %s rejected by the next level's count", nxt.dim, w_order)
                continue
            found = descend(nxt)
            if found is not None:
                return found
        return None

    return descend(base_tower())


def certify(tower: Tower, levels: Optional[Sequence[int]] = None) -> Tower:
    """Raise CertificateError unless every checked level carries a valid certificate and no cs 4-cycle."""
    from services.verification import level_failures

    cap = FLAGS.BUILD_CERTIFY_MAX_DIM
    for i in range(tower.dim + 1) if levels is None else levels:
        if i > cap:
            continue
        failures = level_failures(tower, i)
        if failures:
            raise CertificateError(f"level {i} fails: {', '.join(failures)}")
    return tower


@memoize
def build(d: int, match_reference: bool = False) -> Tower:
    """
    The verified flag S_0 ⊂ ... ⊂ S_d. Levels up to FLAGS.BUILD_CERTIFY_MAX_DIM
    are certified as they are built. With ``match_reference`` the orientation
    inside W is chosen so that the quotients reproduce the reference
    f-vectors; when no candidate does, the label order is used.
    """
    if d < 0:
        raise ValueError(f"dimension must be >= 0, got {d}")
    tower = base_tower()
    if d <= 1:
        return certify(tower.truncated(d))
    if match_reference:
        guided = reference_guided_tower(d)
        if guided is not None:
            return certify(guided)
        logger.warning("no W order reproduces the reference f-vectors up to d=%d; using the label order", d)
    certify(tower)
    while tower.dim < d:
        tower = extend(tower)
        certify(tower, [tower.dim])
    return tower


def build_rpd(d: int, match_reference: bool = False) -> SimplicialComplex:
    """The RP^d triangulation Δ_d = S_d / σ (a single point for d = 0)."""
    if d < 0:
        raise ValueError(f"dimension must be >= 0, got {d}")
    return quotient_rp(build(d, match_reference=match_reference).top)


def tower_vertex_counts(d: int) -> List[int]:
    """n_0 = 2, n_1 = 6, n_{i+1} = n_i + n_{i-1} + 4."""
    counts = [2, 6]
    while len(counts) <= d:
        counts.append(counts[-1] + counts[-2] + 4)
    return counts[: d + 1]


def naive_extension(sphere: SimplicialComplex) -> SimplicialComplex:
    """
    Staircase prism under the numeric order, capped by one antipodal pair of
    cones. Adds f_0 + 2 vertices instead of f_0(S_{d-2}) + 4.
    """
    check = check_cs(sphere)
    if not check.ok:
        raise CertificateError(f"naive extension needs a cs sphere: {check.reason} at {check.violation}")
    prism = staircase_prism(sphere, globally_acyclic_lao(sphere))
    apex = 2 * max_label(sphere) + 1
    top = cone(prism_layer(sphere, UP), apex)
    bottom = cone(prism_layer(sphere, DOWN), -apex)
    return union(union(prism, top), bottom)


__all__ = [
    "Certificate",
    "Extension",
    "Tower",
    "TowerLevel",
    "base_tower",
    "build",
    "build_phi_prime",
    "build_rpd",
    "canonical_labels",
    "certify",
    "contract_step",
    "extend",
    "middle_side",
    "naive_extension",
    "next_certificate",
    "predicted_next_fvector",
    "reference_guided_tower",
    "tower_vertex_counts",
    "w_order_candidates",
]
