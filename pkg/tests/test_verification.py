import pytest

from services.tower import build
from services.verification import (
    CHECK_ORDER,
    check_closed_pseudomanifold,
    check_vertex_links,
    normalize_checks,
    run_checks,
)
from topology.complex import SimplicialComplex
from topology.symmetry import quotient_rp
from utils.cache import memoize


def test_pseudomanifold(tetrahedron_boundary, hexagon):
    assert check_closed_pseudomanifold(tetrahedron_boundary).ok
    assert check_closed_pseudomanifold(hexagon).ok
    res = check_closed_pseudomanifold(SimplicialComplex.simplex([1, 2, 3]))
    assert not res.ok
    assert "ridges not in exactly two facets" in res.failures[0]


def test_pseudomanifold_disconnected_and_impure():
    two_triangles = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    assert check_closed_pseudomanifold(two_triangles).failures == ("facet-ridge graph is disconnected",)
    assert check_closed_pseudomanifold(SimplicialComplex.from_facets([(1, 2, 3), (3, 4)])).failures == ("not pure",)
    assert not check_closed_pseudomanifold(SimplicialComplex.void()).ok


def test_vertex_links(icosahedron, tower4):
    report = check_vertex_links(icosahedron)
    assert report.ok and report.checked == 12
    with_edges = check_vertex_links(tower4.sphere(3), edges=True)
    assert with_edges.ok
    assert with_edges.checked == 22 + 104


def test_vertex_links_catch_a_pinch():
    # two triangles glued at vertex 1: the link of 1 is two disjoint edges
    pinched = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)])
    report = check_vertex_links(pinched)
    assert not report.ok
    assert report.failures[0].startswith("link of (1,)")


def test_normalize_checks():
    assert normalize_checks(None, antipodal=False, tower=False) == ["pm", "links", "hz", "hgf2"]
    assert normalize_checks(None, antipodal=True, tower=True) == list(CHECK_ORDER)
    assert normalize_checks(["hgf2", "4cycle", " cs"], antipodal=False, tower=False) == ["cs", "cs4cycle", "hgf2"]
    with pytest.raises(ValueError):
        normalize_checks(["nope"], antipodal=False, tower=False)


def test_run_checks_on_sphere():
    tower = build(3)
    report = run_checks(tower.top, antipodal=True, tower=tower, workers=2)
    assert report.ok, [r for r in report.results if not r.ok]
    assert [r.name for r in report.results] == list(CHECK_ORDER)
    assert report.reference == "match"
    assert report.euler == 0
    values = {r.name: r.value for r in report.results}
    assert values["hz"] == "Z,0,0,Z"
    assert values["cert"] == "4/4"


def test_run_checks_on_projective_space():
    rp3 = quotient_rp(build(3).top)
    report = run_checks(rp3)
    assert report.ok
    assert report.fvector == (11, 52, 82, 41)
    assert {r.name: r.value for r in report.results}["hgf2"] == "(1,1,1,1)"


def test_integral_homology_above_cap_is_skipped():
    rp3 = quotient_rp(build(3).top)
    report = run_checks(rp3, checks=["hz"], zmax=2)
    (result,) = report.results
    assert result.ok and result.value == "skipped"


def test_wrong_expectation_fails(tetrahedron_boundary):
    # a sphere read without the antipodal declaration is checked against RP^2
    report = run_checks(tetrahedron_boundary, checks=["hgf2", "hz"])
    assert not report.ok
    assert report.reference == "mismatch"


def test_memoize_caches_and_clears():
    calls = []

    @memoize
    def square(x):
        calls.append(x)
        return x * x

    assert square(3) == 9 and square(3) == 9
    assert calls == [3]
    square.cache_clear()
    square(3)
    assert calls == [3, 3]


def level_of(d, tower4, tower6):
    return (tower4 if d <= 4 else tower6).sphere(d)


@pytest.mark.parametrize("d", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow), pytest.param(6, marks=pytest.mark.slow)])
def test_spheres_and_quotients_are_closed_with_sphere_links(d, tower4, tower6):
    sphere = level_of(d, tower4, tower6)
    rp = quotient_rp(sphere)
    for delta in (sphere, rp):
        assert delta.dim == d
        assert check_closed_pseudomanifold(delta).ok
        links = check_vertex_links(delta)
        assert links.ok, links.failures[:3]
        assert links.checked == len(delta.vertex_set())
    assert 2 * len(rp.vertex_set()) == len(sphere.vertex_set())


def test_run_checks_at_dimension_two():
    tower = build(2)
    report = run_checks(tower.top, antipodal=True, tower=tower)
    assert report.ok, [r for r in report.results if not r.ok]
    values = {r.name: r.value for r in report.results}
    assert values["hz"] == "Z,0,Z"
    assert values["hgf2"] == "(1,0,1)"
    assert values["cert"] == "3/3"
    rp2 = run_checks(quotient_rp(tower.top))
    assert rp2.ok
    assert rp2.fvector == (6, 15, 10)
    assert {r.name: r.value for r in rp2.results}["hz"] == "Z,Z/2,0"


@pytest.mark.slow
def test_run_checks_at_dimension_four(tower4):
    report = run_checks(tower4.top, antipodal=True, tower=tower4)
    assert report.ok, [r for r in report.results if not r.ok]
    assert report.reference == "match"
    values = {r.name: r.value for r in report.results}
    assert values["hz"] == "Z,0,0,0,Z"
    assert values["cs4cycle"] == "none"
    assert values["cert"] == "5/5"
    rp4 = run_checks(quotient_rp(tower4.top))
    assert rp4.ok
    assert {r.name: r.value for r in rp4.results}["hz"] == "Z,Z/2,0,Z/2,0"
