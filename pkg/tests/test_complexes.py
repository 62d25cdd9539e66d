import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cp2tri import complexes as cx
from cp2tri import generators as gen
from cp2tri.labels import int_label, pair_label


def _ints(*faces):
    return [[int_label(i) for i in f] for f in faces]


def test_build_path_graph():
    K = cx.build_complex(_ints((1, 2), (2, 3)))
    assert len(K.vertices) == 3
    assert len(K.facets) == 2


def test_containment_reduction():
    K = cx.build_complex(_ints((1, 2, 3), (1, 2)))
    assert len(K.facets) == 1
    assert cx.f_vector(K) == (3, 3, 1)


def test_duplicate_vertex_rejected():
    with pytest.raises(cx.ComplexError):
        cx.build_complex([[int_label(1), int_label(1)]])


def test_f_vector_boundary_simplex():
    assert cx.f_vector(gen.gen_boundary_simplex(4)) == (5, 10, 10, 5)


def test_link_of_facet_is_empty(X):
    L = cx.link(X, X.facets[0])
    assert L.dim == -1 and cx.f_vector(L) == ()


def test_link_requires_a_face(X):
    with pytest.raises(cx.ComplexError):
        cx.link(X, (gen.NU_LABELS[0], gen.NU_LABELS[1]))


def test_link_hexagon_in_x(X):
    tri = (pair_label(1, 1), pair_label(2, 2), pair_label(3, 3))
    L = cx.link(X, tri)
    assert cx.f_vector(L) == (6, 6)
    assert cx.euler_characteristic(L) == 0


def test_link_compatibility_over_all_faces_of_x(X):
    # tau in link(sigma) iff sigma | tau is a face; checked by reconstruction
    faces = X.face_set()
    for sigma in sorted(faces):
        L = cx.link(X, sigma)
        for tau in L.face_set():
            assert tuple(sorted(set(sigma) | set(tau))) in faces


def test_dual_graph_complete_on_simplex_boundary():
    K = gen.gen_boundary_simplex(4)
    adj = cx.dual_graph(K)
    assert all(len(nbrs) == 4 for nbrs in adj.values())


def test_dual_graph_x_is_5_regular(X):
    adj = cx.dual_graph(X)
    assert len(adj) == 108
    assert {len(nbrs) for nbrs in adj.values()} == {5}


def test_dual_graph_disjoint_triangles():
    K = cx.build_complex(_ints((1, 2, 3), (4, 5, 6)))
    assert all(nbrs == () for nbrs in cx.dual_graph(K).values())


def test_dual_graph_requires_purity():
    K = cx.build_complex(_ints((1, 2, 3), (4, 5)))
    with pytest.raises(cx.ComplexError):
        cx.dual_graph(K)


def test_join_of_two_hexagons():
    hexagon = gen.gen_cycle(6)
    other = cx.relabel(hexagon, lambda v: int_label(v.data[0] + 6))
    J = cx.join(hexagon, other)
    assert len(J.vertices) == 12
    assert len(J.facets) == 36
    assert J.dim == 3


def test_join_label_collision():
    with pytest.raises(cx.ComplexError):
        cx.join(gen.gen_cycle(3), gen.gen_cycle(4))


def test_cone_and_suspension():
    sq = gen.gen_cycle(4)
    assert cx.f_vector(cx.cone(sq, int_label(9)))[-1] == 4
    s0_join = cx.suspension(sq, int_label(8), int_label(9))
    assert cx.f_vector(s0_join) == (6, 12, 8)  # octahedron


def test_suspension_of_s0_is_square():
    s0 = cx.build_complex(_ints((0,), (1,)))
    sq = cx.suspension(s0, int_label(2), int_label(3))
    assert cx.f_vector(sq) == (4, 4)


@st.composite
def small_complexes(draw):
    n = draw(st.integers(2, 5))
    nfacets = draw(st.integers(1, 5))
    facets = []
    for _ in range(nfacets):
        size = draw(st.integers(1, min(3, n)))
        facets.append(draw(st.sets(st.integers(0, n - 1), min_size=size, max_size=size)))
    return cx.build_complex([[int_label(i) for i in f] for f in facets])


@given(small_complexes(), small_complexes())
@settings(max_examples=40, deadline=None)
def test_join_f_vector_is_convolution(K1, K2):
    K2s = cx.relabel(K2, lambda v: int_label(v.data[0] + 100))
    J = cx.join(K1, K2s)
    # augmented f-vectors (with f_{-1} = 1) convolve under joins
    a = [1] + list(cx.f_vector(K1))
    b = [1] + list(cx.f_vector(K2))
    want = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            want[i + j] += x * y
    assert [1] + list(cx.f_vector(J)) == want[: J.dim + 2]


def test_barycentric_subdivision_of_triangle():
    K = gen.gen_solid_triangle()
    B = cx.barycentric_subdivision(K)
    assert cx.f_vector(B) == (7, 12, 6)


def test_barycentric_subdivision_of_segment():
    seg = cx.build_complex(_ints((0, 1)))
    assert cx.f_vector(cx.barycentric_subdivision(seg)) == (3, 2)


def test_barycentric_subdivision_of_triangle_boundary():
    B = cx.barycentric_subdivision(gen.gen_cycle(3))
    assert cx.f_vector(B) == (6, 6)


@pytest.mark.parametrize("name", ["rp2_6", "torus_7", "grid_torus_9", "solid_triangle"])
def test_barycentric_preserves_euler_characteristic(name):
    K = gen.gen_small(name)
    assert cx.euler_characteristic(cx.barycentric_subdivision(K)) == cx.euler_characteristic(K)


@pytest.mark.slow
def test_barycentric_preserves_euler_characteristic_x(X):
    assert cx.euler_characteristic(cx.barycentric_subdivision(X)) == 3


def test_is_simplicial_map_identity(X):
    ok, bad = cx.is_simplicial_map(X, X, {v: v for v in X.vertices})
    assert ok and bad is None


def test_is_simplicial_map_collapse_fails(X):
    prime = cx.barycentric_subdivision(gen.gen_solid_triangle())
    # three vertices of the subdivided triangle that do not span a face
    targets = [prime.vertices[0], prime.vertices[1], prime.vertices[2]]
    assert (tuple(sorted(targets)) in prime.face_set()) is False
    vmap = {v: targets[i % 3] for i, v in enumerate(X.vertices)}
    ok, bad = cx.is_simplicial_map(X, prime, vmap)
    assert not ok and bad in set(X.facets)


def test_is_simplicial_map_requires_total_map(X):
    with pytest.raises(cx.ComplexError):
        cx.is_simplicial_map(X, X, {})


def test_boundary_matrix_triangle():
    K = gen.gen_solid_triangle()
    d2 = cx.boundary_matrix(K, 2)
    assert d2.shape == (3, 1)
    # edges in canonical order: {1,2}, {1,3}, {2,3}; signs for dropping i-th vertex
    assert list(d2[:, 0]) == [1, -1, 1]


def test_boundary_matrices_compose_to_zero(X):
    for k in range(2, X.dim + 1):
        prod = cx.boundary_matrix(X, k - 1) @ cx.boundary_matrix(X, k)
        assert not prod.any()


def test_boundary_matrix_shape(X):
    assert cx.boundary_matrix(X, 4).shape == (270, 108)
    with pytest.raises(cx.ComplexError):
        cx.boundary_matrix(X, 5)


def test_subdivide_edge_requires_edge_and_fresh_label():
    K = gen.gen_solid_triangle()
    with pytest.raises(cx.ComplexError):
        cx.subdivide_edge(K, int_label(1), int_label(2), int_label(3))
    K2 = cx.subdivide_edge(K, int_label(1), int_label(2), int_label(9))
    assert cx.f_vector(K2) == (4, 5, 2)


def test_text_round_trip(X, Xbar):
    for K in (X, Xbar, gen.gen_rp2_6(), gen.gen_y()):
        assert cx.from_text(cx.to_text(K)) == K


def test_json_round_trip(Y):
    assert cx.from_json_obj(cx.to_json_obj(Y)) == Y


def test_parse_error_reports_line():
    text = "sc dim=1 nverts=3\n1,2\n2,zz\n"
    with pytest.raises(cx.ParseError) as err:
        cx.from_text(text)
    assert "line 3" in str(err.value)


def test_parse_header_mismatch():
    text = "sc dim=2 nverts=3\n1,2\n"
    with pytest.raises(cx.ParseError):
        cx.from_text(text)


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=20, deadline=None)
def test_random_relabelled_round_trip(seed):
    rng = random.Random(seed)
    base = gen.gen_torus_7()
    perm = list(range(7))
    rng.shuffle(perm)
    K = cx.relabel(base, lambda v: int_label(perm[v.data[0]]))
    assert cx.from_text(cx.to_text(K)) == K
