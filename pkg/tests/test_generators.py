from collections import Counter

import pytest

from cp2tri import complexes as cx
from cp2tri import generators as gen
from cp2tri.labels import mid_label, pair_label, perm_label


def test_x_f_vector(X):
    assert cx.f_vector(X) == (15, 90, 240, 270, 108)


def test_x_has_the_advertised_facet(X):
    f = cx.simplex([perm_label((1, 2), (3, 4)), pair_label(1, 1), pair_label(2, 2),
                    pair_label(3, 1), pair_label(4, 2)])
    assert f in set(X.facets)


def test_x_facets_per_permutation_vertex(X):
    counts = Counter(next(v for v in f if v.kind == "perm") for f in X.facets)
    assert set(counts.values()) == {36}


def test_oracle_equals_construction(X):
    assert gen.gen_x_oracle() == X


def test_oracle_prohibits_permutation_pairs(X):
    assert (gen.NU_LABELS[0], gen.NU_LABELS[1]) not in X.face_set()


def test_oracle_prohibits_matched_pairs(X):
    nu = perm_label((1, 2), (3, 4))
    assert cx.simplex([nu, pair_label(1, 1), pair_label(2, 1)]) not in X.face_set()


def test_xbar_sizes(Xbar):
    fv = cx.f_vector(Xbar)
    assert fv[0] == 33 and fv[4] == 288


def test_xbar_carriers_cover_x(X, Xbar):
    carriers = Counter(gen.xbar_carrier(f) for f in Xbar.facets)
    assert set(carriers) == set(X.facets)
    assert Counter(carriers.values()) == Counter({2: 72, 4: 36})


def test_xbar_contains_both_representatives(Xbar):
    nu = perm_label((1, 2), (3, 4))
    s1 = cx.simplex([nu, mid_label(1, 4, 3), pair_label(2, 1), pair_label(3, 2), pair_label(4, 3)])
    s2 = cx.simplex([nu, mid_label(1, 4, 3), mid_label(2, 3, 1), pair_label(2, 1), pair_label(4, 3)])
    facets = set(Xbar.facets)
    assert s1 in facets and s2 in facets


def test_y_f_vector(Y):
    assert cx.f_vector(Y) == (15, 90, 240, 270, 108)


def test_y_facet_count(Y):
    assert len(Y.facets) == 108


def test_y_family_instance(Y):
    from cp2tri.labels import grid_label, s3_label
    f = cx.simplex([s3_label((0, 1, 2)), s3_label((0, 2, 1)),
                    grid_label(0, 0), grid_label(0, 1), grid_label(0, 2)])
    assert f in set(Y.facets)


@pytest.mark.parametrize("pq,n", [((2, 1), 7), ((2, 2), 12), ((3, 0), 9), ((3, 1), 13)])
def test_torus_vertex_counts(pq, n):
    K = gen.gen_torus_36pq(*pq)
    assert cx.f_vector(K) == (n, 3 * n, 2 * n)
    assert cx.euler_characteristic(K) == 0


def test_torus_rejects_degenerate_parameters():
    with pytest.raises(cx.ComplexError):
        gen.gen_torus_36pq(1, 1)
    with pytest.raises(cx.ComplexError):
        gen.gen_torus_36pq(2, -1)


def test_torus_layer_f_vector(torus_layers):
    T = torus_layers[0]
    assert cx.f_vector(T) == (12, 36, 24)


def test_solid_torus_has_listed_facet(torus_layers):
    P1 = torus_layers[1]
    assert cx.simplex([pair_label(1, 1), pair_label(4, 1), pair_label(2, 2),
                       pair_label(3, 3)]) in set(P1.facets)
    assert cx.f_vector(P1) == (12, 42, 48, 18)


def test_layers_nest(torus_layers):
    T = torus_layers[0]
    for P in torus_layers[1:]:
        assert set(T.face_set()) <= set(P.face_set())


def test_rp2_and_tori():
    rp2 = gen.gen_rp2_6()
    assert cx.f_vector(rp2) == (6, 15, 10)
    assert all(sum(1 for f in rp2.facets if v in f) == 5 for v in rp2.vertices)
    t7 = gen.gen_torus_7()
    assert cx.f_vector(t7) == (7, 21, 14)
    assert all(sum(1 for f in t7.facets if v in f) == 6 for v in t7.vertices)


def test_cross_polytope():
    K = gen.gen_cross_polytope(4)
    assert cx.f_vector(K) == (8, 24, 32, 16)
    assert cx.euler_characteristic(K) == 0  # odd-dimensional sphere


def test_gen_small_lookup():
    assert gen.gen_small("torus:2,2") == gen.gen_torus_36pq(2, 2)
    assert gen.gen_small("cross_polytope:3") == gen.gen_cross_polytope(3)
    with pytest.raises(cx.ComplexError):
        gen.gen_small("nonsense")
    with pytest.raises(cx.ComplexError):
        gen.gen_small("torus:2")
