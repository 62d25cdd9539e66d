"""Numerical realization in the complex projective plane.

The symmetry group acts through a projective representation by unitary and
antiunitary 3x3 operators; every vertex of the subdivided complex has a
tabulated homogeneous coordinate; the piecewise homeomorphism ``f`` is
evaluated by transporting a barycentric point to one of the two
representative facets of the 15-vertex complex and applying the explicit
parametrization there.  The moment maps and the affine simplicial map onto
the subdivided triangle close the diagram that the checks in this module
sample numerically.

All comparisons are projective: points (and operators) are scaled to unit
norm and phase-aligned before taking a Euclidean distance, which keeps the
comparison meaningful down to machine precision.
"""

import cmath
import hashlib
import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import permutations as pt
from .complexes import ComplexError, Simplex, ridge_incidence, simplex
from .generators import NU_LABELS, gen_x, gen_xbar, xbar_carrier
from .labels import MID, PAIR, PERM, VertexLabel, mid_label, pair_label, perm_label
from .symmetry import GroupElement, group_elements

OMEGA = cmath.exp(2j * cmath.pi / 3)
DEFAULT_TOL = 1e-9


def _omega(k: int) -> complex:
    return cmath.exp(2j * cmath.pi * (k % 3) / 3)


# ---------------------------------------------------------------------------
# projective points and operators

def proj_distance(u, v) -> float:
    """Chordal distance on the projective plane: min over phases of
    ||u/|u| - e^{i phi} v/|v|||."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0 or nv == 0:
        raise ComplexError("projective points must be nonzero")
    u = u / nu
    v = v / nv
    a = np.vdot(v, u)
    phase = a / abs(a) if abs(a) > 0 else 1.0
    return float(np.linalg.norm(u - phase * v))


def proj_equal(u, v, tol: float = DEFAULT_TOL) -> bool:
    return proj_distance(u, v) <= tol


@dataclass(frozen=True, eq=False)
class ProjectiveOperator:
    """3x3 complex matrix with an antilinearity flag, taken modulo unit scalars."""
    matrix: np.ndarray
    antilinear: bool = False

    def apply(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        return self.matrix @ (np.conj(z) if self.antilinear else z)

    def compose(self, other: "ProjectiveOperator") -> "ProjectiveOperator":
        m = self.matrix @ (np.conj(other.matrix) if self.antilinear else other.matrix)
        return ProjectiveOperator(m, self.antilinear ^ other.antilinear)

    def inverse(self) -> "ProjectiveOperator":
        inv = np.linalg.inv(self.matrix)
        if self.antilinear:
            return ProjectiveOperator(np.conj(inv), True)
        return ProjectiveOperator(inv, False)


def op_distance(a: ProjectiveOperator, b: ProjectiveOperator) -> float:
    """Projective distance between operators; infinite when the flags differ."""
    if a.antilinear != b.antilinear:
        return math.inf
    u = a.matrix / np.linalg.norm(a.matrix)
    v = b.matrix / np.linalg.norm(b.matrix)
    inner = np.vdot(v, u)
    phase = inner / abs(inner) if abs(inner) > 0 else 1.0
    return float(np.linalg.norm(u - phase * v))


# ---------------------------------------------------------------------------
# the projective representation

_RHO_GENS = {
    pt.transposition(4, 0, 1): np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex),
    pt.transposition(4, 1, 2): np.array([[1, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    pt.transposition(4, 2, 3): np.array([[0, -1, 0], [-1, 0, 0], [0, 0, 1]], dtype=complex),
}


def _tetrahedral_matrices() -> dict:
    """The orthogonal representation of the tetrahedral permutations, built by
    breadth-first word composition from the three adjacent transpositions."""
    mats = {pt.identity(4): np.eye(3, dtype=complex)}
    frontier = [pt.identity(4)]
    while frontier:
        g = frontier.pop()
        for t, m in _RHO_GENS.items():
            tg = pt.compose(t, g)
            if tg not in mats:
                mats[tg] = m @ mats[g]
                frontier.append(tg)
    return mats


_ETA_GENS = {
    pt.transposition(3, 0, 1): ProjectiveOperator(np.eye(3, dtype=complex), antilinear=True),
    pt.from_cycles(3, [(0, 1, 2)]): ProjectiveOperator(
        np.diag([1, OMEGA, OMEGA ** 2]).astype(complex)),
}


def _colour_operators() -> dict:
    ops = {pt.identity(3): ProjectiveOperator(np.eye(3, dtype=complex))}
    frontier = [pt.identity(3)]
    while frontier:
        g = frontier.pop()
        for t, op in _ETA_GENS.items():
            tg = pt.compose(t, g)
            if tg not in ops:
                ops[tg] = op.compose(ops[g])
                frontier.append(tg)
    return ops


_RHO = _tetrahedral_matrices()
_ETA = _colour_operators()
_REP_CACHE: dict[GroupElement, ProjectiveOperator] = {}


def rep_r(g: GroupElement) -> ProjectiveOperator:
    """Projective operator for a group element: the tetrahedral matrix (with
    conjugation for odd permutations) composed with the colour operator."""
    op = _REP_CACHE.get(g)
    if op is None:
        rho_hat = ProjectiveOperator(_RHO[g.theta], antilinear=bool(pt.parity(g.theta)))
        op = rho_hat.compose(_ETA[g.kappa])
        _REP_CACHE[g] = op
    return op


# ---------------------------------------------------------------------------
# vertex coordinates

_PAIR_SIGNS = {1: (-1, 1, 1), 2: (1, -1, 1), 3: (1, 1, -1), 4: (1, 1, 1)}
_MID_TABLE = {
    (1, 2): lambda w: (1, -w, 0),
    (3, 4): lambda w: (1, w, 0),
    (1, 3): lambda w: (-w, 0, 1),
    (2, 4): lambda w: (w, 0, 1),
    (2, 3): lambda w: (0, 1, -w),
    (1, 4): lambda w: (0, 1, w),
}


def vertex_point(s: VertexLabel) -> np.ndarray:
    """Tabulated homogeneous coordinates for the 33 vertices of the subdivision."""
    if s.kind == PERM:
        idx = NU_LABELS.index(s)  # (12)(34), (13)(24), (14)(23)
        e = np.zeros(3, dtype=complex)
        e[2 - idx] = 1  # (0:0:1), (0:1:0), (1:0:0) respectively
        return e
    if s.kind == PAIR:
        a, b = s.data
        s1, s2, s3 = _PAIR_SIGNS[a]
        return np.array([s1, s2 * _omega(b), s3 * _omega(2 * b)], dtype=complex)
    if s.kind == MID:
        a1, a2, b = s.data
        return np.array(_MID_TABLE[(a1, a2)](_omega(b)), dtype=complex)
    raise ComplexError(f"no tabulated point for label {s}")


def check_equivariance() -> float:
    """Max projective deviation of R(h) v_s from v_{h s} over all 144 x 33 pairs."""
    xbar = gen_xbar()
    worst = 0.0
    for h in group_elements():
        op = rep_r(h)
        for s in xbar.vertices:
            worst = max(worst, proj_distance(op.apply(vertex_point(s)), vertex_point(h.act(s))))
    return worst


def rep_faithful() -> bool:
    """All 144 operators pairwise projectively distinct."""
    ops = [rep_r(h) for h in group_elements()]
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if op_distance(ops[i], ops[j]) < 1e-6:
                return False
    return True


def rep_homomorphism_defect(pairs: int = 200, seed: int = 0) -> float:
    """Max projective distance between R(g)R(h) and R(gh) over random pairs."""
    rng = random.Random(seed)
    elements = group_elements()
    worst = 0.0
    for _ in range(pairs):
        g, h = rng.choice(elements), rng.choice(elements)
        worst = max(worst, op_distance(rep_r(g).compose(rep_r(h)), rep_r(g.compose(h))))
    return worst


# ---------------------------------------------------------------------------
# barycentric points

@dataclass(frozen=True)
class BarycentricPoint:
    """A facet plus nonnegative coordinates (aligned with the facet's canonical
    vertex order) summing to one."""
    facet: Simplex
    coords: tuple[float, ...]

    def __post_init__(self):
        if len(self.facet) != len(self.coords):
            raise ComplexError("coordinate count must match the facet size")
        if any(c < -1e-15 for c in self.coords):
            raise ComplexError("barycentric coordinates must be nonnegative")
        if abs(sum(self.coords) - 1.0) > 1e-12:
            raise ComplexError("barycentric coordinates must sum to 1")

    def coord_map(self) -> dict:
        return dict(zip(self.facet, self.coords))


def barycentric_point(facet, coords) -> BarycentricPoint:
    """Point on a facet; ``coords`` is a sequence (canonical order) or a
    vertex -> weight mapping."""
    f = simplex(facet)
    if isinstance(coords, dict):
        coords = tuple(float(coords.get(v, 0.0)) for v in f)
    else:
        coords = tuple(float(c) for c in coords)
    return BarycentricPoint(f, coords)


def vertex_unit_point(K, v: VertexLabel) -> BarycentricPoint:
    for f in K.facets:
        if v in f:
            return barycentric_point(f, {v: 1.0})
    raise ComplexError(f"{v} is not a vertex")


# ---------------------------------------------------------------------------
# the representative facets and their parametrizations

DELTA1 = (perm_label((1, 2), (3, 4)), pair_label(1, 3), pair_label(2, 1),
          pair_label(3, 2), pair_label(4, 3))
DELTA2 = (perm_label((1, 2), (3, 4)), pair_label(1, 3), pair_label(2, 1),
          pair_label(3, 1), pair_label(4, 3))
SIGMA1 = (perm_label((1, 2), (3, 4)), mid_label(1, 4, 3), pair_label(2, 1),
          pair_label(3, 2), pair_label(4, 3))
SIGMA2 = (perm_label((1, 2), (3, 4)), mid_label(1, 4, 3), mid_label(2, 3, 1),
          pair_label(2, 1), pair_label(4, 3))


def _phase(num: float, den: float) -> complex:
    """exp(i num / den) with the removable singularity at den = 0 patched to
    phase 0 (the projective value is unaffected there)."""
    if abs(den) < 1e-12:
        return 1.0
    return cmath.exp(1j * num / den)


def eval_delta1(xi) -> np.ndarray:
    """Parametrization of the first representative facet of the 15-vertex
    complex (vertex order ``DELTA1``)."""
    x0, x1, x2, x3, x4 = xi
    s = abs(x4 - x1) + x2 + x3
    z1 = (s / 3) * (math.sin(math.pi * (x4 - x1) / (2 * s)) + 1j * math.sin(math.pi * (x2 + x3) / (2 * s))) if s > 1e-12 else 0.0
    z2 = ((1 - x0) / 2 - s / 6) * _phase(math.pi * (x2 - x3), 6 * (1 - x0))
    z3 = ((1 + x0) / 2 - s / 6) * _phase(-math.pi * (x2 - x3), 6 * (1 - x0))
    return np.array([z1, z2, z3], dtype=complex)


def eval_delta2(zeta) -> np.ndarray:
    """Parametrization of the second representative facet (vertex order ``DELTA2``)."""
    z0, z1c, z2c, z3c, z4c = zeta
    s = abs(z4c - z1c) + abs(z2c - z3c)
    z1 = (s / 3) * (math.sin(math.pi * (z4c - z1c) / (2 * s)) + 1j * math.sin(math.pi * (z2c - z3c) / (2 * s))) if s > 1e-12 else 0.0
    z2 = ((1 - z0) / 2 - s / 6) * _phase(math.pi * (z2c + z3c), 6 * (1 - z0))
    z3 = ((1 + z0) / 2 - s / 6) * _phase(-math.pi * (z2c + z3c), 6 * (1 - z0))
    return np.array([z1, z2, z3], dtype=complex)


def eval_sigma1(p) -> np.ndarray:
    """Parametrization restricted to the first subdivision representative
    (vertex order ``SIGMA1``)."""
    p0, p1, p2, p3, p4 = p
    s = p2 + p3 + p4
    z1 = (s / 3) * _phase(math.pi * (p2 + p3), 2 * s) if s > 1e-12 else 0.0
    z2 = (p1 / 2 + s / 3) * _phase(math.pi * (p2 - p3), 6 * (1 - p0))
    z3 = (p0 + p1 / 2 + s / 3) * _phase(-math.pi * (p2 - p3), 6 * (1 - p0))
    return np.array([z1, z2, z3], dtype=complex)


def eval_sigma2(q) -> np.ndarray:
    """Parametrization restricted to the second subdivision representative
    (vertex order ``SIGMA2``)."""
    q0, q1, q2, q3, q4 = q
    s = q3 + q4
    z1 = (s / 3) * _phase(math.pi * q3, 2 * s) if s > 1e-12 else 0.0
    z2 = ((q1 + q2) / 2 + s / 3) * _phase(math.pi * (q2 + q3), 6 * (1 - q0))
    z3 = (q0 + (q1 + q2) / 2 + s / 3) * _phase(-math.pi * (q2 + q3), 6 * (1 - q0))
    return np.array([z1, z2, z3], dtype=complex)


def sigma1_to_delta1(p) -> tuple:
    """Coordinate substitution embedding the first subdivision representative
    into its carrier facet."""
    p0, p1, p2, p3, p4 = p
    return (p0, p1 / 2, p2, p3, p4 + p1 / 2)


def sigma2_to_delta2(q) -> tuple:
    q0, q1, q2, q3, q4 = q
    return (q0, q1 / 2, q3 + q2 / 2, q2 / 2, q4 + q1 / 2)


# ---------------------------------------------------------------------------
# orbit transport

_X_TRANSPORT: dict | None = None


def _x_transport() -> dict:
    """facet (frozenset) -> (canonically least h with h(facet) in {DELTA1, DELTA2},
    representative index)."""
    global _X_TRANSPORT
    if _X_TRANSPORT is None:
        targets = {frozenset(DELTA1): 1, frozenset(DELTA2): 2}
        table = {}
        for h in sorted(group_elements(), key=GroupElement.sort_key):
            hinv = h.inverse()
            for target, idx in targets.items():
                source = frozenset(hinv.act(v) for v in target)
                if source not in table:
                    table[source] = (h, idx)
        _X_TRANSPORT = table
    return _X_TRANSPORT


def f_map_x(x: BarycentricPoint) -> np.ndarray:
    """The homeomorphism on a barycentric point of the 15-vertex complex:
    transport to a representative facet, evaluate, pull back."""
    table = _x_transport()
    key = frozenset(x.facet)
    if key not in table:
        raise ComplexError("point does not lie on a facet of the 15-vertex complex")
    h, idx = table[key]
    weights = x.coord_map()
    transported = {h.act(v): w for v, w in weights.items()}
    rep = DELTA1 if idx == 1 else DELTA2
    coords = tuple(transported[v] for v in rep)
    value = eval_delta1(coords) if idx == 1 else eval_delta2(coords)
    return rep_r(h).inverse().apply(value)


def xbar_point_to_x(x: BarycentricPoint) -> BarycentricPoint:
    """Rewrite a point of the subdivision in the barycentric coordinates of
    its carrier facet (midpoint weights split evenly onto edge endpoints)."""
    carrier = xbar_carrier(x.facet)
    weights = {v: 0.0 for v in carrier}
    for v, w in x.coord_map().items():
        if v.kind == MID:
            a1, a2, b = v.data
            weights[pair_label(a1, b)] += w / 2
            weights[pair_label(a2, b)] += w / 2
        else:
            weights[v] += w
    return barycentric_point(carrier, weights)


def f_map(x: BarycentricPoint) -> np.ndarray:
    """The homeomorphism on a barycentric point of the subdivision.

    Evaluated through the unique carrier facet; the subdivision-level
    parametrizations are exercised separately by the consistency checks
    (the symmetry group is not transitive on the two-midpoint facets, so
    transport to the two subdivision representatives alone cannot cover
    every facet).
    """
    return f_map_x(xbar_point_to_x(x))


# ---------------------------------------------------------------------------
# moment maps and the simplicial map to the subdivided triangle

def moment_mu(z) -> tuple[float, float, float]:
    z = np.asarray(z, dtype=complex)
    if not np.any(z):
        raise ComplexError("moment map needs a nonzero point")
    sq = np.abs(z) ** 2
    t = sq / sq.sum()
    return (float(t[0]), float(t[1]), float(t[2]))


def moment_mu_tilde(z) -> tuple[float, float, float]:
    z = np.asarray(z, dtype=complex)
    if not np.any(z):
        raise ComplexError("moment map needs a nonzero point")
    a = np.abs(z)
    t = a / a.sum()
    return (float(t[0]), float(t[1]), float(t[2]))


def g_map(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    if not np.any(z):
        raise ComplexError("moment map needs a nonzero point")
    out = np.zeros(3, dtype=complex)
    for j in range(3):
        if z[j] != 0:
            out[j] = z[j] / math.sqrt(abs(z[j]))
    return out


_M_MID = {
    (1, 2): (0.5, 0.5, 0.0), (3, 4): (0.5, 0.5, 0.0),
    (1, 3): (0.5, 0.0, 0.5), (2, 4): (0.5, 0.0, 0.5),
    (2, 3): (0.0, 0.5, 0.5), (1, 4): (0.0, 0.5, 0.5),
}


def m_vertex(s: VertexLabel) -> tuple[float, float, float]:
    """Image of a subdivision vertex in the triangle."""
    if s.kind == PERM:
        idx = NU_LABELS.index(s)
        return tuple(1.0 if j == 2 - idx else 0.0 for j in range(3))
    if s.kind == PAIR:
        return (1 / 3, 1 / 3, 1 / 3)
    if s.kind == MID:
        a1, a2, _ = s.data
        return _M_MID[(a1, a2)]
    raise ComplexError(f"no triangle image for label {s}")


def m_map(x: BarycentricPoint) -> tuple[float, float, float]:
    """Affine extension of the vertex table over a subdivision facet."""
    t = np.zeros(3)
    for v, w in x.coord_map().items():
        t += w * np.asarray(m_vertex(v))
    return (float(t[0]), float(t[1]), float(t[2]))


def m_simplicial_data():
    """The subdivision, the barycentrically subdivided triangle, and the
    vertex map realizing the moment projection combinatorially.

    Vertices of the subdivided triangle are matched through their geometric
    position (the centroid of the face they subdivide).
    """
    from .complexes import (barycentric_face_labels, barycentric_subdivision)
    from .generators import gen_solid_triangle
    triangle = gen_solid_triangle()
    prime = barycentric_subdivision(triangle)
    centroids = {}
    for face, label in barycentric_face_labels(triangle).items():
        pos = [0.0, 0.0, 0.0]
        for v in face:
            pos[v.data[0] - 1] += 1 / len(face)
        centroids[tuple(round(c, 12) for c in pos)] = label
    xbar = gen_xbar()
    vmap = {}
    for v in xbar.vertices:
        key = tuple(round(c, 12) for c in m_vertex(v))
        vmap[v] = centroids[key]
    return xbar, prime, vmap


def triangle_action(theta) -> tuple[int, ...]:
    """Permutation of the triangle coordinates induced by a tetrahedral
    permutation: axis j follows the partition pairing j with 4."""
    out = []
    for j in range(1, 4):
        pair = {theta[j - 1] + 1, theta[3] + 1}
        if 4 in pair:
            out.append((pair - {4}).pop() - 1)
        else:
            out.append(({1, 2, 3} - pair).pop() - 1)
    return tuple(out)


# ---------------------------------------------------------------------------
# sampling helpers

def _facet_rng(seed: int, facet, tag: str) -> random.Random:
    key = tag + "|" + ",".join(str(v) for v in facet) + f"|{seed}"
    digest = hashlib.sha256(key.encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _dirichlet(rng: random.Random, n: int) -> tuple[float, ...]:
    draws = [-math.log(1.0 - rng.random()) for _ in range(n)]
    total = sum(draws)
    return tuple(d / total for d in draws)


def _facet_samples(facet, rng: random.Random, interior: int):
    k = len(facet)
    for i in range(k):
        yield tuple(1.0 if j == i else 0.0 for j in range(k))
    yield tuple(1.0 / k for _ in range(k))
    for _ in range(interior):
        yield _dirichlet(rng, k)


# ---------------------------------------------------------------------------
# the verification sweeps

def check_vertex_images() -> float:
    """f at every vertex of the subdivision against the tabulated point."""
    xbar = gen_xbar()
    worst = 0.0
    for v in xbar.vertices:
        worst = max(worst, proj_distance(f_map(vertex_unit_point(xbar, v)), vertex_point(v)))
    return worst


def check_face_consistency(seed: int = 0, samples: int = 3) -> float:
    """Evaluate f via both facets sharing each ridge of the subdivision and
    return the max projective mismatch."""
    xbar = gen_xbar()
    worst = 0.0
    for ridge, facets in ridge_incidence(xbar).items():
        if len(facets) != 2:
            continue
        rng = _facet_rng(seed, ridge, "ridge")
        for w in _facet_samples(ridge, rng, samples):
            weights = dict(zip(ridge, w))
            values = [f_map(barycentric_point(f, weights)) for f in facets]
            worst = max(worst, proj_distance(values[0], values[1]))
    return worst


def check_f_equivariance(seed: int = 0, samples: int = 2, elements: int = 12) -> float:
    """f(h x) against R(h) f(x) on sampled points and group elements."""
    xbar = gen_xbar()
    rng = random.Random(seed)
    hs = rng.sample(group_elements(), elements)
    worst = 0.0
    for facet in xbar.facets[:: max(1, len(xbar.facets) // 24)]:
        frng = _facet_rng(seed, facet, "equiv")
        for w in _facet_samples(facet, frng, samples):
            x = barycentric_point(facet, dict(zip(facet, w)))
            fx = f_map(x)
            for h in hs:
                hx = barycentric_point(h.act_simplex(facet),
                                       {h.act(v): c for v, c in x.coord_map().items()})
                worst = max(worst, proj_distance(f_map(hx), rep_r(h).apply(fx)))
    return worst


def check_stabilizer_consistency(seed: int = 0, samples: int = 8) -> float:
    """Well-definedness of orbit transport: for every group element fixing a
    representative facet setwise, the parametrization commutes with it."""
    reps = [(DELTA1, eval_delta1), (DELTA2, eval_delta2),
            (SIGMA1, eval_sigma1), (SIGMA2, eval_sigma2)]
    worst = 0.0
    for rep, formula in reps:
        rep_set = frozenset(rep)
        stab = [h for h in group_elements()
                if frozenset(h.act(v) for v in rep) == rep_set and not h.is_identity()]
        rng = _facet_rng(seed, rep, "stab")
        for w in _facet_samples(rep, rng, samples):
            value = formula(w)
            weights = dict(zip(rep, w))
            for h in stab:
                moved = tuple(weights[h.inverse().act(v)] for v in rep)
                worst = max(worst, proj_distance(formula(moved), rep_r(h).apply(value)))
    return worst


def check_refinement_consistency(seed: int = 0, samples: int = 20) -> float:
    """The subdivision-level parametrizations against the carrier-level ones
    under the coordinate substitutions, and the transported subdivision
    formulas against the full evaluation path on their orbits."""
    worst = 0.0
    rng1 = _facet_rng(seed, SIGMA1, "refine")
    for p in _facet_samples(SIGMA1, rng1, samples):
        worst = max(worst, proj_distance(eval_sigma1(p), eval_delta1(sigma1_to_delta1(p))))
    rng2 = _facet_rng(seed, SIGMA2, "refine")
    for q in _facet_samples(SIGMA2, rng2, samples):
        worst = max(worst, proj_distance(eval_sigma2(q), eval_delta2(sigma2_to_delta2(q))))
    # transported formulas agree with f on the two subdivision orbits
    xbar = gen_xbar()
    reps = {1: (SIGMA1, eval_sigma1), 2: (SIGMA2, eval_sigma2)}
    targets = {frozenset(SIGMA1): 1, frozenset(SIGMA2): 2}
    table: dict = {}
    for h in sorted(group_elements(), key=GroupElement.sort_key):
        hinv = h.inverse()
        for target, idx in targets.items():
            source = frozenset(hinv.act(v) for v in target)
            if source not in table:
                table[source] = (h, idx)
    for facet in xbar.facets:
        entry = table.get(frozenset(facet))
        if entry is None:
            continue  # third orbit: unreachable from the two representatives
        h, idx = entry
        rep, formula = reps[idx]
        frng = _facet_rng(seed, facet, "orbit")
        for w in _facet_samples(facet, frng, 1):
            x = barycentric_point(facet, dict(zip(facet, w)))
            transported = {h.act(v): c for v, c in x.coord_map().items()}
            value = rep_r(h).inverse().apply(formula(tuple(transported[v] for v in rep)))
            worst = max(worst, proj_distance(value, f_map(x)))
    return worst


def check_moment_triangulation(samples: int = 20, seed: int = 0) -> float:
    """Max |m(x) - mu_tilde(f(x))| over vertices, centroid, and seeded interior
    samples of all subdivision facets."""
    xbar = gen_xbar()
    worst = 0.0
    for facet in xbar.facets:
        rng = _facet_rng(seed, facet, "moment")
        for w in _facet_samples(facet, rng, samples):
            x = barycentric_point(facet, dict(zip(facet, w)))
            m = m_map(x)
            mt = moment_mu_tilde(f_map(x))
            worst = max(worst, max(abs(a - b) for a, b in zip(m, mt)))
    return worst


def check_moment_factorization(points: int = 1000, seed: int = 0) -> float:
    """Max |mu_tilde(z) - mu(g(z))| over random projective points."""
    rng = random.Random(seed)
    worst = 0.0
    for i in range(points):
        z = np.array([complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(3)])
        if i % 7 == 0:
            z[i % 3] = 0  # exercise the vanishing-coordinate branch
        if not np.any(z):
            continue
        mt = moment_mu_tilde(z)
        mg = moment_mu(g_map(z))
        worst = max(worst, max(abs(a - b) for a, b in zip(mt, mg)))
    return worst


def barycenter_preimage_vertices() -> tuple:
    """Subdivision vertices mapping to the triangle barycenter."""
    xbar = gen_xbar()
    target = (1 / 3, 1 / 3, 1 / 3)
    return tuple(v for v in xbar.vertices
                 if max(abs(a - b) for a, b in zip(m_vertex(v), target)) < 1e-12)


def geometry_report(seed: int = 0, samples: int = 20, tol: float = DEFAULT_TOL) -> dict:
    """All numeric sweeps bundled for the command-line report."""
    deviations = {
        "equivariance": check_equivariance(),
        "vertex_images": check_vertex_images(),
        "ridge_gluing": check_face_consistency(seed=seed),
        "f_equivariance": check_f_equivariance(seed=seed),
        "stabilizer_consistency": check_stabilizer_consistency(seed=seed),
        "refinement_consistency": check_refinement_consistency(seed=seed),
        "moment_triangulation": check_moment_triangulation(samples=samples, seed=seed),
        "moment_factorization": check_moment_factorization(seed=seed),
    }
    return {
        "seed": seed,
        "samples": samples,
        "tolerance": tol,
        "max_deviations": deviations,
        "pass": all(v <= tol for v in deviations.values()),
    }
