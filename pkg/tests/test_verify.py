import random

import pytest

from cp2tri import complexes as cx
from cp2tri import generators as gen
from cp2tri import verify as vf
from cp2tri.labels import int_label


def test_x_is_closed_pseudomanifold(X):
    ok, offender = vf.is_closed_pseudomanifold(X)
    assert ok and offender is None


def test_solid_triangle_is_not_closed():
    ok, offender = vf.is_closed_pseudomanifold(gen.gen_solid_triangle())
    assert not ok
    assert offender is not None and len(offender) == 2


def test_disjoint_spheres_are_not_a_pseudomanifold():
    a = gen.gen_boundary_simplex(3)
    b = cx.relabel(a, lambda v: int_label(v.data[0] + 10))
    K = cx.build_complex(list(a.facets) + list(b.facets))
    ok, offender = vf.is_closed_pseudomanifold(K)
    assert not ok and offender is None  # ridge degrees fine, dual graph disconnected


def test_orientability(X):
    assert vf.orientable(X) is not None
    assert vf.orientable(gen.gen_torus_7()) is not None
    assert vf.orientable(gen.gen_rp2_6()) is None


def test_orientation_signs_cancel(X):
    signs = vf.orientable(X)
    incidence = cx.ridge_incidence(X)
    for ridge, (f, g) in incidence.items():
        i = f.index(next(v for v in f if v not in ridge))
        j = g.index(next(v for v in g if v not in ridge))
        assert signs[f] * (-1) ** i == -signs[g] * (-1) ** j


def test_orientable_requires_closed():
    with pytest.raises(cx.ComplexError):
        vf.orientable(gen.gen_solid_triangle())


def test_homology_profiles(X):
    assert vf.homology(X).betti == (1, 0, 1, 0, 1)
    assert all(not t for t in vf.homology(X).torsion)
    assert vf.homology(gen.gen_boundary_simplex(4)).betti == (1, 0, 0, 1)
    rp2 = vf.homology(gen.gen_rp2_6())
    assert rp2.betti == (1, 0, 0)
    assert rp2.torsion == ((), (2,), ())
    t22 = vf.homology(gen.gen_torus_36pq(2, 2))
    assert t22.betti == (1, 2, 1)


def test_euler_characteristic_equals_alternating_betti(X, corpus):
    for K in [X] + [c for c in corpus.values()]:
        h = vf.homology(K)
        if any(t for t in h.torsion):
            continue
        alt = sum((-1) ** k * b for k, b in enumerate(h.betti))
        assert alt == cx.euler_characteristic(K)


def test_betti_numbers_match_rank_oracle(X, corpus):
    for K in [X] + list(corpus.values()):
        assert vf.homology(K).betti == vf.betti_numbers_via_rank(K)


def test_sphere_certificates(X):
    cert = vf.bistellar_is_sphere(gen.gen_boundary_simplex(4))
    assert cert.certified and cert.moves == 0
    hex_link = cx.link(X, (gen.NU_LABELS[0],))
    cert = vf.bistellar_is_sphere(hex_link, seed=0)
    assert cert.certified and cert.method == "bistellar"


def test_torus_is_inconclusive_with_reason():
    cert = vf.bistellar_is_sphere(gen.gen_torus_7())
    assert not cert.certified
    assert "chi" in (cert.reason or "")


def test_two_sphere_certified_exactly():
    assert vf.bistellar_is_sphere(gen.gen_cross_polytope(3)).certified


def test_dimension_guard():
    with pytest.raises(cx.ComplexError):
        vf.bistellar_is_sphere(gen.gen_boundary_simplex(5))


def test_certification_is_seed_reproducible(X):
    L = cx.link(X, (gen.NU_LABELS[0],))
    a = vf.bistellar_is_sphere(L, seed=7)
    b = vf.bistellar_is_sphere(L, seed=7)
    assert a == b
    c = vf.bistellar_is_sphere(L, seed=8)
    assert c.certified  # different seed still certifies


def test_moves_are_involutive():
    rng = random.Random(3)
    L = gen.gen_cross_polytope(3)
    facets = {frozenset(f) for f in L.facets}
    for _ in range(25):
        removals, reducing, escapes = vf._legal_moves(facets, 2)
        moves = removals + reducing + escapes
        if not moves:
            break
        move = rng.choice(sorted(moves))
        after = vf.apply_move(facets, move)
        assert vf.apply_move(after, vf.invert_move(move)) == facets
        facets = after


def test_is_combinatorial_manifold_with_and_without_group(X, group):
    certs, verdict = vf.is_combinatorial_manifold(X, group=group)
    assert verdict == vf.CERTIFIED
    assert set(certs) == set(X.vertices)
    # orbit reduction shares certificates
    assert len({id(c) for c in certs.values()}) == 2
    small = gen.gen_torus_7()
    certs, verdict = vf.is_combinatorial_manifold(small)
    assert verdict == vf.CERTIFIED  # 1-dimensional cycle links
