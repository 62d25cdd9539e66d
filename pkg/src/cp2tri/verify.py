"""Closed-pseudomanifold checks, orientability, integer homology, and
combinatorial-sphere certification through bistellar moves.

Sphere recognition is a heuristic: a ``certified`` verdict is sound (every
executed move preserves the PL type and the run ended at the boundary of a
simplex), while ``inconclusive`` only means the move budget ran out and is
never a refutation.  Dimension 2 instead uses the exact classification of
closed surfaces, and dimension 1 the fact that a cycle is the only closed
connected 1-pseudomanifold.
"""

import random
from dataclasses import dataclass
from itertools import combinations

from . import exact
from .complexes import (ComplexError, SimplicialComplex, boundary_matrix,
                        dual_graph, euler_characteristic, f_vector, is_pure,
                        link, ridge_incidence)

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


def is_closed_pseudomanifold(K: SimplicialComplex):
    """(True, None) iff every ridge lies in exactly two facets and the dual
    graph is connected; otherwise (False, offending_ridge_or_None)."""
    if not is_pure(K):
        raise ComplexError("pseudomanifold check requires a pure complex")
    if not K.facets:
        return False, None
    for ridge, facets in ridge_incidence(K).items():
        if len(facets) != 2:
            return False, ridge
    adj = dual_graph(K)
    seen = {K.facets[0]}
    stack = [K.facets[0]]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(K.facets):
        return False, None
    return True, None


def orientable(K: SimplicialComplex) -> dict | None:
    """A facet sign assignment inducing opposite ridge orientations on every
    shared ridge, or None when no such assignment exists."""
    ok, _ = is_closed_pseudomanifold(K)
    if not ok:
        raise ComplexError("orientability is defined for closed pseudomanifolds")
    signs = {}
    for start in K.facets:
        if start in signs:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for g, w in _oriented_neighbours(K, f):
                want = signs[f] * w
                if g not in signs:
                    signs[g] = want
                    stack.append(g)
                elif signs[g] != want:
                    return None
    return signs


def _oriented_neighbours(K, f):
    """(neighbour, weight) pairs: the neighbour's sign must be weight times
    f's sign for the two induced ridge orientations to cancel."""
    ridges = ridge_incidence(K)
    out = []
    for i in range(len(f)):
        ridge = f[:i] + f[i + 1:]
        for g in ridges[ridge]:
            if g != f:
                j = g.index(_extra_vertex(g, ridge))
                out.append((g, -((-1) ** (i + j))))
    return out


def _extra_vertex(facet, ridge):
    rs = set(ridge)
    for v in facet:
        if v not in rs:
            return v
    raise AssertionError("facet does not extend ridge")


@dataclass(frozen=True)
class HomologyProfile:
    """Integer homology: one Betti number and one torsion tuple per dimension."""
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def __str__(self):
        parts = []
        for b, tor in zip(self.betti, self.torsion):
            summands = ["Z"] * b + [f"Z_{t}" for t in tor]
            parts.append(" + ".join(summands) if summands else "0")
        return "(" + ", ".join(parts) + ")"


def homology(K: SimplicialComplex) -> HomologyProfile:
    """Homology of the integral chain complex, computed by Smith normal form."""
    d = K.dim
    if d < 0:
        return HomologyProfile((), ())
    divisors = {k: exact.smith_divisors(boundary_matrix(K, k)) for k in range(1, d + 1)}
    ranks = {k: len(divisors.get(k, [])) for k in range(0, d + 2)}
    fv = f_vector(K)
    betti = tuple(fv[k] - ranks[k] - ranks[k + 1] for k in range(d + 1))
    torsion = tuple(tuple(e for e in divisors.get(k + 1, []) if e > 1) for k in range(d + 1))
    return HomologyProfile(betti, torsion)


def betti_numbers_via_rank(K: SimplicialComplex) -> tuple[int, ...]:
    """Betti numbers from the rational rank oracle; cross-checks :func:`homology`."""
    d = K.dim
    ranks = {k: exact.rank(boundary_matrix(K, k)) for k in range(1, d + 1)}
    ranks[0] = ranks[d + 1] = 0
    fv = f_vector(K)
    return tuple(fv[k] - ranks[k] - ranks[k + 1] for k in range(d + 1))


# ---------------------------------------------------------------------------
# bistellar flips

@dataclass(frozen=True)
class SphereCertificate:
    status: str
    moves: int
    seed: int
    method: str
    reason: str | None = None

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED


def apply_move(facets: set, move) -> set:
    """Apply the flip exchanging star(sigma) = sigma * boundary(tau) for
    boundary(sigma) * tau.  ``move`` is the pair (sigma, tau) of disjoint
    vertex tuples; the inverse move is (tau, sigma)."""
    sigma, tau = move
    removed = {frozenset(sigma) | (frozenset(tau) - {t}) for t in tau}
    added = {(frozenset(sigma) - {s}) | frozenset(tau) for s in sigma}
    if not removed <= facets:
        raise ComplexError("illegal bistellar move: missing star facets")
    return (facets - removed) | added


def invert_move(move):
    sigma, tau = move
    return (tau, sigma)


def _vertex_index(facets):
    idx = {}
    for f in facets:
        for v in f:
            idx.setdefault(v, set()).add(f)
    return idx


def _is_face(facets_of_any_vertex, sub):
    return any(sub <= f for f in facets_of_any_vertex)


def _legal_moves(facets, dim):
    """(vertex_removals, reducing_moves, escape_moves) for the current complex."""
    vidx = _vertex_index(facets)
    removals, reducing, escapes = [], [], []
    for v, star in vidx.items():
        if len(star) == dim + 1:
            lk = {f - {v} for f in star}
            union = frozenset().union(*lk)
            if len(union) == dim + 1 and lk == {union - {u} for u in union}:
                if not _is_face(vidx[next(iter(union))], union):
                    removals.append(((v,), tuple(sorted(union))))
    if dim == 3:
        edges = {e for f in facets for e in combinations(sorted(f), 2)}
        for e in edges:
            star = [f for f in vidx[e[0]] if e[1] in f]
            if len(star) == 3:
                union = frozenset().union(*star) - set(e)
                if len(union) == 3 and not _is_face(vidx[next(iter(union))], union):
                    reducing.append((e, tuple(sorted(union))))
        triangles = {t for f in facets for t in combinations(sorted(f), 3)}
        for t in triangles:
            star = [f for f in vidx[t[0]] if set(t) <= f]
            if len(star) == 2:
                opposite = frozenset().union(*star) - set(t)
                if len(opposite) == 2 and not _is_face(vidx[next(iter(opposite))], opposite):
                    escapes.append((t, tuple(sorted(opposite))))
    elif dim == 2:
        edges = {e for f in facets for e in combinations(sorted(f), 2)}
        for e in edges:
            star = [f for f in vidx[e[0]] if e[1] in f]
            if len(star) == 2:
                opposite = frozenset().union(*star) - set(e)
                if len(opposite) == 2 and not _is_face(vidx[next(iter(opposite))], opposite):
                    escapes.append((e, tuple(sorted(opposite))))
    elif dim == 1:
        pass  # vertex removals suffice for cycles
    return removals, reducing, escapes


def _is_boundary_of_simplex(facets, dim):
    verts = set().union(*facets) if facets else set()
    return len(verts) == dim + 2 and len(facets) == dim + 2


def bistellar_is_sphere(K: SimplicialComplex, budget: int = 100_000, seed: int = 0) -> SphereCertificate:
    """Try to certify that K is a PL sphere.

    Dimension 3 runs the seeded flip search; dimension 2 uses the surface
    classification (connected + closed + chi == 2), dimension 1 the cycle
    characterization.  Inconclusive results report the reason.
    """
    ok, offender = is_closed_pseudomanifold(K)
    if not ok:
        return SphereCertificate(INCONCLUSIVE, 0, seed, "pretest",
                                 f"not a closed pseudomanifold (ridge {offender})")
    if K.dim > 3:
        raise ComplexError(f"sphere recognition supports dimension <= 3, got {K.dim}")
    if K.dim <= 1:
        return SphereCertificate(CERTIFIED, 0, seed, "cycle")
    if K.dim == 2:
        if euler_characteristic(K) == 2:
            return SphereCertificate(CERTIFIED, 0, seed, "euler")
        return SphereCertificate(INCONCLUSIVE, 0, seed, "euler",
                                 f"closed surface with chi = {euler_characteristic(K)} != 2")
    rng = random.Random(seed)
    facets = {frozenset(f) for f in K.facets}
    last_move = None
    for step in range(budget):
        if _is_boundary_of_simplex(facets, K.dim):
            return SphereCertificate(CERTIFIED, step, seed, "bistellar")
        removals, reducing, escapes = _legal_moves(facets, K.dim)
        choice = None
        if removals:
            choice = rng.choice(sorted(removals))
        elif reducing and (not escapes or rng.random() < 0.85):
            pool = [m for m in sorted(reducing) if m != last_move] or sorted(reducing)
            choice = rng.choice(pool)
        elif escapes:
            pool = [m for m in sorted(escapes) if m != last_move] or sorted(escapes)
            choice = rng.choice(pool)
        else:
            return SphereCertificate(INCONCLUSIVE, step, seed, "bistellar", "no legal moves")
        facets = apply_move(facets, choice)
        last_move = invert_move(choice)
    if _is_boundary_of_simplex(facets, K.dim):
        return SphereCertificate(CERTIFIED, budget, seed, "bistellar")
    return SphereCertificate(INCONCLUSIVE, budget, seed, "bistellar", "move budget exhausted")


def is_combinatorial_manifold(K: SimplicialComplex, budget: int = 100_000,
                              seed: int = 0, group=None):
    """Certify every vertex link as a sphere one dimension down.

    Returns (certificates_by_vertex, overall_status).  When an automorphism
    group is supplied only one vertex per orbit is certified and the result
    is shared across the orbit.
    """
    ok, _ = is_closed_pseudomanifold(K)
    if not ok:
        raise ComplexError("combinatorial-manifold check requires a closed pseudomanifold")
    if group:
        from .symmetry import vertex_orbits
        orbits_ = vertex_orbits(K, group)
    else:
        orbits_ = [(v,) for v in K.vertices]
    certs = {}
    for orbit in orbits_:
        rep = orbit[0]
        cert = bistellar_is_sphere(link(K, (rep,)), budget=budget, seed=seed)
        for v in orbit:
            certs[v] = cert
    verdict = CERTIFIED if all(c.certified for c in certs.values()) else INCONCLUSIVE
    return certs, verdict
