from itertools import combinations

import pytest

from topology.complex import (
    SimplicialComplex,
    boundary_faces,
    complement_closure,
    complement_components,
    cone,
    connected_components,
    deletion,
    edge_contraction,
    euler_characteristic,
    f_vector,
    induced_subcomplex,
    intersection,
    join,
    link,
    link_condition,
    quotient_by_vertex_map,
    relabel,
    star,
    union,
)
from topology.errors import (
    DisjointnessError,
    MalformedFaceError,
    NotAFaceError,
    NotAnEdgeError,
    NotASubcomplexError,
    PurityError,
)


def brute_force_contraction(delta, edge, survivor):
    gone = edge[0] if edge[1] == survivor else edge[1]
    image = {tuple(sorted({survivor if v == gone else v for v in f})) for f in delta.face_set()}
    return SimplicialComplex.from_facets(image)


def test_from_facets_triangle_boundary():
    tri = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
    assert tri.dim == 1
    assert len(tri.facets) == 3


def test_from_facets_drops_dominated_faces():
    delta = SimplicialComplex.from_facets([(1, 2, 3), (1, 2)])
    assert delta.facets == ((1, 2, 3),)


def test_icosahedron_f_vector(icosahedron):
    assert icosahedron.dim == 2
    assert f_vector(icosahedron) == (12, 30, 20)


@pytest.mark.parametrize("bad", [[(1, 1, 2)], [(0, 1)], [(1, True)]])
def test_malformed_faces_rejected(bad):
    with pytest.raises(MalformedFaceError):
        SimplicialComplex.from_facets(bad)


def test_faces_by_dimension(hexagon):
    tri = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
    assert tri.faces(0) == {(1,), (2,), (3,)}
    assert len(tri.faces(1)) == 3
    assert tri.faces(5) == frozenset()
    assert tri.faces(-1) == {()}
    assert f_vector(hexagon) == (6, 6)


def test_void_and_empty_are_distinct():
    void, empty = SimplicialComplex.void(), SimplicialComplex.empty()
    assert void != empty
    assert void.is_void and not void.is_empty
    assert empty.is_empty and empty.dim == -1
    assert not void.contains_face(())
    assert empty.contains_face(())


def test_euler_characteristic(tetrahedron_boundary, icosahedron):
    assert euler_characteristic(tetrahedron_boundary) == 2
    assert euler_characteristic(icosahedron) == 2


def test_star(hexagon):
    tri = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
    assert star(tri, (1,)).facets == ((1, 2), (1, 3))
    assert star(hexagon, (2,)).facets == ((1, 2), (2, 3))
    assert star(hexagon, ()) == hexagon


def test_link(tetrahedron_boundary, icosahedron):
    assert link(tetrahedron_boundary, (4,)) == SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
    for v in icosahedron.vertex_set():
        lk = link(icosahedron, (v,))
        assert f_vector(lk) == (5, 5)
        assert all(len(lk.neighbors(u)) == 2 for u in lk.vertex_set())
    assert link(icosahedron, ()) == icosahedron


def test_link_of_non_face_raises(hexagon):
    with pytest.raises(NotAFaceError):
        link(hexagon, (1, 3))


def test_star_is_join_of_face_and_link(icosahedron):
    for face in list(icosahedron.faces(0)) + list(icosahedron.faces(1)):
        expected = join(SimplicialComplex.simplex(face), link(icosahedron, face))
        assert star(icosahedron, face).face_set() == expected.face_set()


def test_join_and_cone():
    edge = SimplicialComplex.simplex([2, 3])
    assert cone(edge, 1).facets == ((1, 2, 3),)
    tetra = join(SimplicialComplex.simplex([1, 2]), SimplicialComplex.simplex([3, 4]))
    assert tetra.facets == ((1, 2, 3, 4),)
    path = SimplicialComplex.from_facets([(3, 4), (4, 5)])
    assert len(join(SimplicialComplex.simplex([1, 2]), path).facets) == 2


def test_join_f_vector_convolution(hexagon):
    tri = SimplicialComplex.from_facets([(10, 11), (11, 12), (10, 12)])
    joined = join(hexagon, tri)
    a = (1,) + f_vector(hexagon)
    b = (1,) + f_vector(tri)
    expected = []
    for k in range(joined.dim + 1):
        # f_k of the join counts pairs with |F| + |G| = k + 1
        expected.append(sum(a[i] * b[k + 1 - i] for i in range(len(a)) if 0 <= k + 1 - i < len(b)))
    assert f_vector(joined) == tuple(expected)


def test_join_overlap_raises():
    with pytest.raises(DisjointnessError):
        join(SimplicialComplex.simplex([1, 2]), SimplicialComplex.simplex([2, 3]))


def test_induced_subcomplex(hexagon, icosahedron):
    assert induced_subcomplex(hexagon, [1, 2, 3]).facets == ((1, 2), (2, 3))
    assert induced_subcomplex(hexagon, hexagon.vertex_set()) == hexagon
    ring = induced_subcomplex(icosahedron, [2, 3, 4, 5, 6])
    assert f_vector(ring) == (5, 5)


def test_deletion(hexagon):
    s0 = SimplicialComplex.from_facets([(3,), (-3,)])
    rest = deletion(hexagon, s0)
    assert rest.facets == ((-2, -1), (1, 2))
    assert deletion(hexagon, SimplicialComplex.empty()) == hexagon
    tri = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
    assert deletion(tri, SimplicialComplex.simplex([1])).facets == ((2, 3),)
    assert not set(rest.vertex_set()) & set(s0.vertex_set())


def test_deletion_requires_subcomplex(hexagon):
    with pytest.raises(NotASubcomplexError):
        deletion(hexagon, SimplicialComplex.simplex([1, 3]))


def test_complement_closure(icosahedron):
    assert complement_closure(icosahedron, icosahedron).is_void
    one = SimplicialComplex.from_facets(combinations((1, 2, 3), 2))
    assert complement_closure(icosahedron, one) == icosahedron


def test_complement_components_split_at_equator(icosahedron):
    equator = SimplicialComplex.from_facets([(2, 7), (7, 3), (3, 8), (8, 4), (4, 9), (9, 5), (5, 10), (10, 6), (6, 11), (11, 2)])
    assert all(icosahedron.contains_face(f) for f in equator.facets)
    parts = complement_components(icosahedron, equator)
    assert len(parts) == 2
    assert sum(len(p.facets) for p in parts) == 20


def test_edge_contraction_small_cases():
    path = SimplicialComplex.from_facets([(1, 2), (2, 3)])
    assert edge_contraction(path, (1, 2), 1).facets == ((1, 3),)
    tri = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
    assert edge_contraction(tri, (1, 2), 2).facets == ((2, 3),)
    square = SimplicialComplex.from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
    assert edge_contraction(square, (1, 2), 1).facets == ((1, 3), (1, 4), (3, 4))


def test_edge_contraction_matches_brute_force_image(icosahedron, tetrahedron_boundary):
    book = SimplicialComplex.from_facets([(1, 2, 3), (1, 2, 4), (3, 4)])
    for delta in (icosahedron, tetrahedron_boundary, book):
        for edge in sorted(delta.faces(1)):
            for survivor in edge:
                assert edge_contraction(delta, edge, survivor) == brute_force_contraction(delta, edge, survivor)


def test_edge_contraction_requires_edge(hexagon):
    with pytest.raises(NotAnEdgeError):
        edge_contraction(hexagon, (1, 3), 1)
    with pytest.raises(NotAnEdgeError):
        edge_contraction(hexagon, (1, 2), 3)


def test_link_condition(tetrahedron_boundary):
    assert all(link_condition(tetrahedron_boundary, e) for e in tetrahedron_boundary.faces(1))
    book = SimplicialComplex.from_facets([(1, 2, 3), (1, 2, 4), (3, 4)])
    assert not link_condition(book, (3, 4))
    with pytest.raises(NotAnEdgeError):
        link_condition(book, (5, 6))


def test_quotient_by_vertex_map(hexagon):
    assert quotient_by_vertex_map(hexagon, lambda v: v) == hexagon
    square = SimplicialComplex.from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
    assert quotient_by_vertex_map(square, {1: 3, 2: 4, 3: 3, 4: 4}).facets == ((3, 4),)
    assert quotient_by_vertex_map(hexagon, abs).facets == ((1, 2), (1, 3), (2, 3))


def test_connected_components(hexagon):
    two = SimplicialComplex.from_facets([(1, 2), (3, 4)])
    assert [c.facets for c in connected_components(two)] == [((1, 2),), ((3, 4),)]
    rest = deletion(hexagon, SimplicialComplex.from_facets([(3,), (-3,)]))
    assert [c.facets for c in connected_components(rest)] == [((-2, -1),), ((1, 2),)]
    assert len(connected_components(hexagon)) == 1


def test_boundary_faces(tetrahedron_boundary):
    triangle = SimplicialComplex.simplex([1, 2, 3])
    assert boundary_faces(triangle).facets == ((1, 2), (1, 3), (2, 3))
    assert boundary_faces(tetrahedron_boundary).is_void
    with pytest.raises(PurityError):
        boundary_faces(SimplicialComplex.from_facets([(1, 2, 3), (3, 4)]))


def test_intersection_union_relabel(hexagon):
    b = SimplicialComplex.from_facets([(-3, 1), (1, 2), (2, 3)])
    mirror = SimplicialComplex.from_facets([(3, -1), (-1, -2), (-2, -3)])
    assert union(b, mirror) == hexagon
    assert intersection(b, mirror).facets == ((-3,), (3,))
    assert intersection(SimplicialComplex.simplex([1]), SimplicialComplex.simplex([2])).is_empty
    shifted = relabel(hexagon, {v: v * 10 for v in hexagon.vertex_set()})
    assert f_vector(shifted) == f_vector(hexagon)
    with pytest.raises(MalformedFaceError):
        relabel(hexagon, {v: 1 for v in hexagon.vertex_set()})
