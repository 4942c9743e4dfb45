"""
Checkable stand-ins for the PL claims: pseudomanifold structure, vertex links,
homology and the per-level certificates of a tower.

Nothing here raises on a failed property; every check returns a result object
that names what went wrong.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config import FLAGS
from topology.complex import (
    SimplicialComplex,
    boundary_faces,
    connected_components,
    deletion,
    euler_characteristic,
    f_vector,
    intersection,
    is_subcomplex,
    link,
    ridge_counts,
    star,
    union,
)
from topology.errors import HomologyCapError, TopologyError
from topology.homology import (
    betti_gf2,
    euler_from_betti,
    homology_Z,
    is_homology_point,
    is_homology_sphere,
    rp_homology,
    sphere_homology,
)
from topology.symmetry import antipode, check_cs, enumerate_induced_cs_4cycles, find_induced_cs_4cycle
from services.reference import check_fvector_table
from services.tower import Tower

logger = logging.getLogger(__name__)

CHECK_ORDER = ("cs", "cs4cycle", "pm", "links", "hz", "hgf2", "cert")
CHECK_ALIASES = {"4cycle": "cs4cycle"}


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    value: str = ""
    failures: Tuple[str, ...] = ()


@dataclass(frozen=True)
class PseudomanifoldCheck:
    ok: bool
    failures: Tuple[str, ...] = ()


def check_closed_pseudomanifold(delta: SimplicialComplex) -> PseudomanifoldCheck:
    """Pure, every ridge in exactly two facets, facet-ridge graph connected."""
    if delta.is_void or delta.is_empty:
        return PseudomanifoldCheck(False, ("no facets",))
    if not delta.is_pure():
        return PseudomanifoldCheck(False, ("not pure",))
    failures: List[str] = []
    counts = ridge_counts(delta)
    bad = sorted(r for r, n in counts.items() if n != 2)
    if bad:
        failures.append(f"{len(bad)} ridges not in exactly two facets, first {bad[0]}")

    index = {f: i for i, f in enumerate(delta.facets)}
    parent = list(range(len(index)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: Dict[Tuple[int, ...], int] = {}
    for f, i in index.items():
        for j in range(len(f)):
            r = f[:j] + f[j + 1:]
            first = owner.setdefault(r, i)
            a, b = find(first), find(i)
            if a != b:
                parent[b] = a
    if len({find(i) for i in range(len(parent))}) != 1:
        failures.append("facet-ridge graph is disconnected")
    return PseudomanifoldCheck(not failures, tuple(failures))


@dataclass(frozen=True)
class LinkReport:
    ok: bool
    checked: int
    failures: Tuple[str, ...] = ()


def _link_failure(delta: SimplicialComplex, face: Tuple[int, ...], dim: int) -> Optional[str]:
    lk = link(delta, face)
    if dim == -1:
        return None if lk.is_empty else f"link of {face} is not {{∅}}"
    pm = check_closed_pseudomanifold(lk)
    if not pm.ok:
        return f"link of {face}: {pm.failures[0]}"
    if not is_homology_sphere(lk, dim):
        return f"link of {face} is not a GF(2) homology {dim}-sphere"
    return None


def check_vertex_links(
    delta: SimplicialComplex,
    d: Optional[int] = None,
    edges: Optional[bool] = None,
) -> LinkReport:
    """Every vertex link (and optionally every edge link) is a closed homology sphere."""
    d = delta.dim if d is None else d
    edges = FLAGS.LINK_CHECK_EDGES if edges is None else edges
    failures: List[str] = []
    checked = 0
    faces: List[Tuple[Tuple[int, ...], int]] = [((v,), d - 1) for v in delta.vertex_set()]
    if edges and d >= 2:
        faces.extend((e, d - 2) for e in sorted(delta.faces(1)))
    for face, dim in faces:
        checked += 1
        problem = _link_failure(delta, face, dim)
        if problem:
            failures.append(problem)
    return LinkReport(not failures, checked, tuple(failures))


# -- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class CertificateReport:
    level: int
    failures: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def level_failures(tower: Tower, i: int) -> Tuple[str, ...]:
    sphere = tower.sphere(i)
    cert = tower.certificate(i)
    below = cert.sphere_below
    ball, mirror = cert.ball_B, antipode(cert.ball_B)
    failures: List[str] = []

    def expect(name: str, test: Callable[[], bool]) -> None:
        try:
            if not test():
                failures.append(name)
        except TopologyError as e:
            failures.append(f"{name} ({e})")

    expect("cs", lambda: check_cs(sphere).ok)
    if i > 0:
        expect("inclusion", lambda: below == tower.sphere(i - 1) and is_subcomplex(below, sphere))
    expect("ball_union", lambda: union(ball, mirror) == sphere)
    expect("ball_intersection", lambda: intersection(ball, mirror) == below)
    expect("ball_boundary", lambda: boundary_faces(ball) == below)

    def two_balls() -> bool:
        parts = connected_components(deletion(sphere, below))
        return sorted(p.facets for p in parts) == sorted((cert.ball_D.facets, antipode(cert.ball_D).facets))

    expect("deletion_components", two_balls)
    expect("apex_in_D", lambda: cert.apex_v in cert.ball_D.vertex_set())

    def star_cover() -> bool:
        near = set(star(sphere, (cert.apex_v,)).vertex_set())
        far = set(star(sphere, (-cert.apex_v,)).vertex_set())
        return not near & far and near | far == set(sphere.vertex_set())

    expect("star_cover", star_cover)
    expect("no_cs_4cycle", lambda: find_induced_cs_4cycle(sphere) is None)
    expect("ball_B_point", lambda: is_homology_point(ball))
    expect("ball_D_point", lambda: is_homology_point(cert.ball_D))
    return tuple(failures)


def verify_certificate(tower: Tower, workers: Optional[int] = None) -> List[CertificateReport]:
    """One report per level, in level order."""
    workers = FLAGS.VERIFY_WORKERS if workers is None else workers
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [executor.submit(level_failures, tower, i) for i in range(len(tower.levels))]
        reports = [CertificateReport(i, fut.result()) for i, fut in enumerate(futures)]
    for r in reports:
        if not r.ok:
            logger.warning("certificate at level %d failed: %s", r.level, ", ".join(r.failures))
    return reports


# -- verify suite ----------------------------------------------------------------

def no_cs_4cycle_by_enumeration(delta: SimplicialComplex) -> bool:
    return not enumerate_induced_cs_4cycles(delta)


def _check(name: str, delta: SimplicialComplex, antipodal: bool, zmax: int, tower: Optional[Tower]) -> CheckResult:
    d = delta.dim
    if name == "cs":
        res = check_cs(delta)
        return CheckResult(name, res.ok, "yes" if res.ok else "no", () if res.ok else (f"{res.reason} at {res.violation}",))
    if name == "cs4cycle":
        witness = find_induced_cs_4cycle(delta)
        if witness is None:
            return CheckResult(name, True, "none")
        return CheckResult(name, False, f"witness={witness}", (f"induced cs 4-cycle through {witness}",))
    if name == "pm":
        res = check_closed_pseudomanifold(delta)
        return CheckResult(name, res.ok, "yes" if res.ok else "no", res.failures)
    if name == "links":
        res = check_vertex_links(delta, d)
        return CheckResult(name, res.ok, f"{res.checked - len(res.failures)}/{res.checked}", res.failures)
    if name == "hz":
        try:
            groups = homology_Z(delta, zmax)
        except HomologyCapError as e:
            return CheckResult(name, True, "skipped", (str(e),))
        expected = sphere_homology(d) if antipodal else rp_homology(d)
        ok = groups == expected
        return CheckResult(name, ok, groups.describe(), () if ok else (f"expected {expected.describe()}",))
    if name == "hgf2":
        betti = betti_gf2(delta)
        expected = sphere_homology(d).betti if antipodal else tuple([1] * (d + 1))
        failures: List[str] = []
        if betti != expected:
            failures.append(f"expected {expected}")
        if euler_from_betti(betti) != euler_characteristic(delta):
            failures.append("Euler characteristic from Betti numbers disagrees with the f-vector")
        return CheckResult(name, not failures, "(" + ",".join(map(str, betti)) + ")", tuple(failures))
    if name == "cert":
        if tower is None:
            return CheckResult(name, True, "n/a")
        reports = verify_certificate(tower)
        bad = tuple(f"level {r.level}: {', '.join(r.failures)}" for r in reports if not r.ok)
        return CheckResult(name, not bad, f"{len(reports) - len(bad)}/{len(reports)}", bad)
    raise ValueError(f"unknown check {name!r}")


def normalize_checks(checks: Optional[Sequence[str]], antipodal: bool, tower: bool) -> List[str]:
    if not checks:
        chosen = ["pm", "links", "hz", "hgf2"]
        if antipodal:
            chosen = ["cs", "cs4cycle"] + chosen
        if tower:
            chosen.append("cert")
    else:
        chosen = [CHECK_ALIASES.get(c.strip(), c.strip()) for c in checks if c.strip()]
    unknown = [c for c in chosen if c not in CHECK_ORDER]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [c for c in CHECK_ORDER if c in chosen]


@dataclass
class VerifyReport:
    dim: int
    fvector: Tuple[int, ...]
    euler: int
    reference: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def run_checks(
    delta: SimplicialComplex,
    checks: Optional[Sequence[str]] = None,
    antipodal: bool = False,
    zmax: Optional[int] = None,
    tower: Optional[Tower] = None,
    workers: Optional[int] = None,
) -> VerifyReport:
    """Run the selected checks concurrently; results keep the fixed check order."""
    zmax = FLAGS.ZHOMOLOGY_MAX_DIM if zmax is None else zmax
    workers = FLAGS.VERIFY_WORKERS if workers is None else workers
    names = normalize_checks(checks, antipodal, tower is not None)
    fv = f_vector(delta)
    table_fv = tuple(n // 2 for n in fv) if antipodal else fv
    report = VerifyReport(delta.dim, fv, euler_characteristic(delta), check_fvector_table(table_fv, delta.dim))

    # populate face caches before the threads share the complex
    for k in range(delta.dim + 1):
        delta.faces(k)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [executor.submit(_check, name, delta, antipodal, zmax, tower) for name in names]
        for name, fut in zip(names, futures):
            try:
                report.results.append(fut.result())
            except TopologyError as e:
                report.results.append(CheckResult(name, False, "error", (str(e),)))
    return report


__all__ = [
    "CHECK_ORDER",
    "CertificateReport",
    "CheckResult",
    "LinkReport",
    "PseudomanifoldCheck",
    "VerifyReport",
    "check_closed_pseudomanifold",
    "check_vertex_links",
    "no_cs_4cycle_by_enumeration",
    "normalize_checks",
    "run_checks",
    "verify_certificate",
]
