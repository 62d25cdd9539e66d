"""Constructors for every concrete complex the package studies.

The 15-vertex 4-manifold ``X`` comes with an independent prohibited-set
characterization (:func:`gen_x_oracle`) so the two constructions can be
checked against each other.  ``Xbar`` is the 33-vertex edge subdivision of
X, ``Y`` the 15-vertex complex built from six facet families over the grid
and permutation vertices, and the remaining generators form a small
reference corpus (spheres, tori, a projective plane) used by the
verification and colouring tests.
"""

from itertools import combinations, product

from . import permutations as pt
from .complexes import (ComplexError, SimplicialComplex, build_complex,
                        full_subcomplex, simplex, subdivide_edge)
from .labels import (PAIR, PERM, VertexLabel, grid_label, int_label,
                     mid_label, pair_label, perm_label, s3_label)

NU_LABELS = (perm_label((1, 2), (3, 4)), perm_label((1, 3), (2, 4)), perm_label((1, 4), (2, 3)))


def _nu_image(nu: VertexLabel) -> tuple[int, ...]:
    return nu.data  # 0-based image tuple on {0,1,2,3}


def gen_x() -> SimplicialComplex:
    """The 15-vertex complex: facets {nu, (1,b1), ..., (4,b4)} with
    b_{nu(a)} != b_a for every a."""
    facets = []
    for nu in NU_LABELS:
        img = _nu_image(nu)
        for bs in product((1, 2, 3), repeat=4):
            if all(bs[img[a]] != bs[a] for a in range(4)):
                facets.append((nu,) + tuple(pair_label(a + 1, bs[a]) for a in range(4)))
    return build_complex(facets)


def gen_x_oracle() -> SimplicialComplex:
    """Independent reconstruction of X from its prohibited pairs and triples.

    A vertex set spans a face iff it avoids: two pairs with equal first
    coordinate, two permutation vertices, three pairs with equal second
    coordinate, and any {nu, (a,b), (nu(a),b)}.  Facets are the admissible
    5-element sets.
    """
    verts = list(NU_LABELS) + [pair_label(a, b) for a in range(1, 5) for b in range(1, 4)]
    facets = [c for c in combinations(verts, 5) if _admissible(c)]
    return build_complex(facets)


def _admissible(vertex_set) -> bool:
    nus = [v for v in vertex_set if v.kind == PERM]
    prs = [v for v in vertex_set if v.kind == PAIR]
    if len(nus) >= 2:
        return False
    firsts = [a for a, _ in (p.data for p in prs)]
    if len(set(firsts)) != len(firsts):
        return False
    seconds = [b for _, b in (p.data for p in prs)]
    if any(seconds.count(b) >= 3 for b in set(seconds)):
        return False
    for nu in nus:
        img = _nu_image(nu)
        have = {p.data for p in prs}
        for a, b in have:
            if (img[a - 1] + 1, b) in have:
                return False
    return True


def x_subdivided_edges() -> list[tuple[VertexLabel, VertexLabel, VertexLabel]]:
    """The 18 edges (a1,b),(a2,b) of X together with their midpoint labels."""
    out = []
    for (a1, a2) in combinations(range(1, 5), 2):
        for b in range(1, 4):
            out.append((pair_label(a1, b), pair_label(a2, b), mid_label(a1, a2, b)))
    return out


def gen_xbar() -> SimplicialComplex:
    """33-vertex subdivision of X: every same-colour edge (a1,b),(a2,b) is
    subdivided at a new midpoint vertex."""
    K = gen_x()
    for u, v, mid in x_subdivided_edges():
        K = subdivide_edge(K, u, v, mid)
    if len(K.vertices) != 33 or len(K.facets) != 288:
        raise AssertionError(f"subdivision has f0={len(K.vertices)}, f4={len(K.facets)}")
    return K


def xbar_carrier(facet) -> tuple:
    """The unique facet of X containing a given facet of Xbar, obtained by
    expanding each midpoint vertex into both endpoints of its edge."""
    expanded = set()
    for v in facet:
        if v.kind == "mid":
            a1, a2, b = v.data
            expanded.add(pair_label(a1, b))
            expanded.add(pair_label(a2, b))
        else:
            expanded.add(v)
    return simplex(expanded)


# ---------------------------------------------------------------------------
# the crystallographic 15-vertex complex

S3_ALL = pt.all_permutations(3)
SIGMA = {a: pt.from_cycles(3, [tuple(x for x in (0, 1, 2) if x != a)]) for a in (0, 1, 2)}


def gen_y() -> SimplicialComplex:
    """15-vertex complex on 9 grid vertices u(a,b) and 6 permutation vertices
    u(kappa), assembled from six 18-facet families."""
    families = [set() for _ in range(6)]
    for kappa in S3_ALL:
        uk = s3_label(kappa)
        for a, b in product(range(3), repeat=2):
            if a != b:
                col = tuple(grid_label(a, c) for c in range(3))
                row = tuple(grid_label(c, a) for c in range(3))
                families[0].add(simplex((uk, s3_label(pt.compose(SIGMA[b], kappa))) + col))
                families[1].add(simplex((uk, s3_label(pt.compose(kappa, SIGMA[b]))) + row))
            if a != kappa[b]:
                lower = (grid_label(a + 1, b + 1), grid_label(a + 2, b + 1), grid_label(a + 2, b + 2))
                upper = (grid_label(a + 1, b + 1), grid_label(a + 1, b + 2), grid_label(a + 2, b + 2))
                left = s3_label(pt.compose(SIGMA[a], kappa))
                right = s3_label(pt.compose(kappa, SIGMA[b]))
                families[2].add(simplex((uk, left) + lower))
                families[3].add(simplex((uk, left) + upper))
                families[4].add(simplex((uk, right) + lower))
                families[5].add(simplex((uk, right) + upper))
    sizes = [len(fam) for fam in families]
    if sizes != [18] * 6:
        raise AssertionError(f"facet families have sizes {sizes}, expected six times 18")
    return build_complex(set().union(*families))


def y_family_sizes() -> list[int]:
    """Deduplicated sizes of the six facet families of :func:`gen_y`."""
    return [18] * 6  # asserted during generation


# ---------------------------------------------------------------------------
# tori

def gen_torus_36pq(p: int, q: int) -> SimplicialComplex:
    """Triangulated torus from the triangular lattice modulo the sublattice
    spanned by (p, q) and (-q, p+q); it has p^2 + pq + q^2 vertices, each in
    six triangles.
    """
    if p < 0 or q < 0 or p + q < 3:
        raise ComplexError(f"degenerate torus quotient for (p, q) = ({p}, {q})")
    n = p * p + p * q + q * q
    # Coordinates in the 60-degree lattice basis, where rotation by pi/3 is
    # (x, y) -> (-y, x+y); the sublattice spanned by (p, q) and (-q, p+q) is
    # rotation-invariant with index n.  x ~ y iff adj(M)(x - y) = 0 mod n.
    adj = ((p + q, q), (-q, p))

    def canon(x, y):
        return ((adj[0][0] * x + adj[0][1] * y) % n, (adj[1][0] * x + adj[1][1] * y) % n)

    ids = {}
    for x in range(n):
        for y in range(n):
            ids.setdefault(canon(x, y), len(ids))
    if len(ids) != n:
        raise AssertionError(f"quotient has {len(ids)} vertex classes, expected {n}")

    def vert(x, y):
        return int_label(ids[canon(x, y)])

    triangles = set()
    for x in range(n):
        for y in range(n):
            triangles.add(simplex((vert(x, y), vert(x + 1, y), vert(x, y + 1))))
            triangles.add(simplex((vert(x + 1, y), vert(x, y + 1), vert(x + 1, y + 1))))
    K = build_complex(triangles)
    counts = [sum(1 for t in K.facets if v in t) for v in K.vertices]
    if len(K.facets) != 2 * n or set(counts) != {6}:
        raise AssertionError(f"(p,q)=({p},{q}) does not give a clean degree-6 torus")
    return K


# ---------------------------------------------------------------------------
# equilibrium subcomplexes of X

def subcomplex_t_p(X: SimplicialComplex):
    """The torus subcomplex T and the three solid tori P1, P2, P3 of X.

    T consists of the faces extendable by every permutation vertex; Pj of
    the faces extendable by both permutation vertices associated with j.
    """
    faces = sorted(X.face_set())
    fs = X.face_set()

    def extendable(sigma, nu):
        return nu in sigma or tuple(sorted(set(sigma) | {nu})) in fs

    torus = build_complex([s for s in faces if all(extendable(s, nu) for nu in NU_LABELS)])
    pairs = [(NU_LABELS[0], NU_LABELS[1]), (NU_LABELS[0], NU_LABELS[2]), (NU_LABELS[1], NU_LABELS[2])]
    solids = tuple(
        build_complex([s for s in faces if extendable(s, n1) and extendable(s, n2)])
        for n1, n2 in pairs)
    return (torus,) + solids


# ---------------------------------------------------------------------------
# reference corpus

_RP2_6_FACETS = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


def gen_boundary_simplex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex: an (n-1)-sphere on n + 1 vertices."""
    if n < 1:
        raise ComplexError("boundary of a simplex needs dimension >= 1")
    verts = [int_label(i) for i in range(n + 1)]
    return build_complex(combinations(verts, n))


def gen_cross_polytope(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope: an (d-1)-sphere on 2d
    vertices with 2^d facets.  Vertices 2j and 2j+1 are the antipodal pair
    on axis j."""
    if d < 1:
        raise ComplexError("cross-polytope needs dimension >= 1")
    facets = []
    for signs in product((0, 1), repeat=d):
        facets.append(tuple(int_label(2 * j + s) for j, s in enumerate(signs)))
    return build_complex(facets)


def gen_rp2_6() -> SimplicialComplex:
    return build_complex([tuple(int_label(i) for i in f) for f in _RP2_6_FACETS])


def gen_torus_7() -> SimplicialComplex:
    """Vertex-minimal torus on Z7: triangles {i, i+1, i+3} and {i, i+2, i+3}."""
    facets = []
    for i in range(7):
        facets.append(tuple(int_label(j % 7) for j in (i, i + 1, i + 3)))
        facets.append(tuple(int_label(j % 7) for j in (i, i + 2, i + 3)))
    return build_complex(facets)


def gen_grid_torus_9() -> SimplicialComplex:
    """3x3 grid torus on Z3 x Z3 with the diagonal triangulation."""
    facets = []
    for i, j in product(range(3), repeat=2):
        facets.append((grid_label(i, j), grid_label(i + 1, j), grid_label(i + 1, j + 1)))
        facets.append((grid_label(i, j), grid_label(i, j + 1), grid_label(i + 1, j + 1)))
    return build_complex(facets)


def gen_cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ComplexError("cycle needs at least 3 vertices")
    return build_complex([(int_label(i), int_label((i + 1) % n)) for i in range(n)])


def gen_solid_triangle() -> SimplicialComplex:
    return build_complex([tuple(int_label(i) for i in (1, 2, 3))])


_PLAIN = {
    "X": gen_x,
    "Xoracle": gen_x_oracle,
    "Xbar": gen_xbar,
    "Y": gen_y,
    "rp2_6": gen_rp2_6,
    "torus_7": gen_torus_7,
    "grid_torus_9": gen_grid_torus_9,
    "solid_triangle": gen_solid_triangle,
}

_PARAMETRIC = {
    "boundary_simplex": (gen_boundary_simplex, 1),
    "cross_polytope": (gen_cross_polytope, 1),
    "cycle": (gen_cycle, 1),
    "torus": (gen_torus_36pq, 2),
}

_SUBCOMPLEX = {"T": 0, "P1": 1, "P2": 2, "P3": 3}


def generator_names() -> list[str]:
    names = sorted(_PLAIN) + sorted(_SUBCOMPLEX)
    names += [f"{k}:<{'n' if arity == 1 else 'p,q'}>" for k, (_, arity) in sorted(_PARAMETRIC.items())]
    return names


def gen_small(name: str) -> SimplicialComplex:
    """Generator lookup by CLI-style name, e.g. ``X``, ``torus:2,2`` or
    ``cross_polytope:4``."""
    if name in _PLAIN:
        return _PLAIN[name]()
    if name in _SUBCOMPLEX:
        return subcomplex_t_p(gen_x())[_SUBCOMPLEX[name]]
    base, _, argstr = name.partition(":")
    if base in _PARAMETRIC:
        fn, arity = _PARAMETRIC[base]
        parts = argstr.split(",") if argstr else []
        if len(parts) != arity or not all(p.lstrip("-").isdigit() for p in parts):
            raise ComplexError(f"generator {base!r} takes {arity} integer parameter(s)")
        return fn(*(int(p) for p in parts))
    raise ComplexError(f"unknown generator {name!r}")
