"""Immutable abstract simplicial complexes stored by their maximal faces.

Everything derived (skeleta, links, dual graphs, boundary operators,
subdivisions) is computed from the facet list on demand and cached per
dimension, so all operations are pure and safe for concurrent reads.
Facets, faces and vertex lists are always kept in the canonical label
order, which makes every serialization and search deterministic.
"""

import json
import re
from itertools import combinations, permutations

import numpy as np

from .labels import VertexLabel, format_label, int_label, parse_label

Simplex = tuple  # tuple[VertexLabel, ...], strictly increasing


class ComplexError(ValueError):
    """Structurally invalid input or query (malformed facet, non-face, impurity...)."""


class ParseError(ValueError):
    """Facet-file syntax error; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def simplex(vertices) -> Simplex:
    """Canonical (sorted, duplicate-free) simplex tuple from an iterable of labels."""
    vs = sorted(vertices)
    for v in vs:
        if not isinstance(v, VertexLabel):
            raise ComplexError(f"not a vertex label: {v!r}")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise ComplexError(f"duplicate vertex {a} inside a facet")
    if not vs:
        raise ComplexError("empty facet")
    return tuple(vs)


class SimplicialComplex:
    """A pure-data complex; construct via :func:`build_complex`.

    Containment-redundant facets are absorbed at construction time, so
    ``facets`` always lists exactly the maximal faces.
    """

    __slots__ = ("facets", "vertices", "dim", "_skeleta", "_face_set")

    def __init__(self, facets):
        canonical = {simplex(f) for f in facets}
        by_size: dict[int, list] = {}
        for f in canonical:
            by_size.setdefault(len(f), []).append(f)
        kept: list[Simplex] = []
        kept_sets: list[frozenset] = []
        for size in sorted(by_size, reverse=True):
            for f in by_size[size]:
                fs = frozenset(f)
                if any(fs < k for k in kept_sets if len(k) > size):
                    continue
                kept.append(f)
                kept_sets.append(fs)
        self.facets: tuple[Simplex, ...] = tuple(sorted(kept))
        self.vertices: tuple[VertexLabel, ...] = tuple(sorted({v for f in kept for v in f}))
        self.dim: int = max((len(f) for f in kept), default=0) - 1
        self._skeleta: dict[int, tuple[Simplex, ...]] = {}
        self._face_set = None

    def faces(self, k: int) -> tuple[Simplex, ...]:
        """All k-dimensional faces, canonically sorted."""
        if k < 0 or k > self.dim:
            return ()
        cached = self._skeleta.get(k)
        if cached is None:
            found = {c for f in self.facets for c in combinations(f, k + 1)}
            cached = tuple(sorted(found))
            self._skeleta[k] = cached
        return cached

    def face_set(self) -> frozenset:
        if self._face_set is None:
            self._face_set = frozenset(c for k in range(self.dim + 1) for c in self.faces(k))
        return self._face_set

    def __contains__(self, s) -> bool:
        return tuple(s) in self.face_set()

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, f={f_vector(self)})"


def build_complex(facets) -> SimplicialComplex:
    """Complex spanned by the given facets (containment reduced to maximal ones)."""
    return SimplicialComplex(facets)


_EMPTY = None


def empty_complex() -> SimplicialComplex:
    global _EMPTY
    if _EMPTY is None:
        _EMPTY = SimplicialComplex([])
    return _EMPTY


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(K.faces(k)) for k in range(K.dim + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(f_vector(K)))


def is_pure(K: SimplicialComplex) -> bool:
    return all(len(f) == K.dim + 1 for f in K.facets)


def link(K: SimplicialComplex, s) -> SimplicialComplex:
    """Link of the face ``s``: all tau disjoint from s with tau | s in K."""
    s = simplex(s)
    if s not in K:
        raise ComplexError(f"{[str(v) for v in s]} is not a face of the complex")
    ss = set(s)
    lk = [tuple(v for v in f if v not in ss) for f in K.facets if ss.issubset(f)]
    return SimplicialComplex([f for f in lk if f])


def star_facets(K: SimplicialComplex, s) -> tuple[Simplex, ...]:
    ss = set(simplex(s))
    return tuple(f for f in K.facets if ss.issubset(f))


def dual_graph(K: SimplicialComplex) -> dict[Simplex, tuple[Simplex, ...]]:
    """Facet adjacency along shared ridges; requires a pure complex."""
    if not is_pure(K):
        raise ComplexError("dual graph requires a pure complex")
    by_ridge: dict[tuple, list] = {}
    for f in K.facets:
        for i in range(len(f)):
            by_ridge.setdefault(f[:i] + f[i + 1:], []).append(f)
    adj: dict[Simplex, set] = {f: set() for f in K.facets}
    for sharing in by_ridge.values():
        for a, b in combinations(sharing, 2):
            adj[a].add(b)
            adj[b].add(a)
    return {f: tuple(sorted(adj[f])) for f in K.facets}


def ridge_incidence(K: SimplicialComplex) -> dict[Simplex, tuple[Simplex, ...]]:
    """Map ridge -> facets containing it; requires a pure complex."""
    if not is_pure(K):
        raise ComplexError("ridge incidence requires a pure complex")
    by_ridge: dict[Simplex, list] = {}
    for f in K.facets:
        for i in range(len(f)):
            by_ridge.setdefault(f[:i] + f[i + 1:], []).append(f)
    return {r: tuple(sorted(fs)) for r, fs in sorted(by_ridge.items())}


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes on disjoint label sets (callers relabel explicitly)."""
    if not K1.facets:
        return K2
    if not K2.facets:
        return K1
    collision = set(K1.vertices) & set(K2.vertices)
    if collision:
        raise ComplexError(f"label collision in join: {sorted(map(str, collision))}")
    return SimplicialComplex([f1 + f2 for f1 in K1.facets for f2 in K2.facets])


def cone(K: SimplicialComplex, apex: VertexLabel) -> SimplicialComplex:
    return join(K, SimplicialComplex([(apex,)]))


def suspension(K: SimplicialComplex, apex1: VertexLabel, apex2: VertexLabel) -> SimplicialComplex:
    if apex1 == apex2:
        raise ComplexError("suspension needs two distinct apexes")
    return join(K, SimplicialComplex([(apex1,), (apex2,)]))


def relabel(K: SimplicialComplex, mapping) -> SimplicialComplex:
    """Relabel vertices through a dict or callable; must be injective on vertices."""
    fn = mapping.__getitem__ if isinstance(mapping, dict) else mapping
    images = {v: fn(v) for v in K.vertices}
    if len(set(images.values())) != len(images):
        raise ComplexError("relabelling is not injective")
    return SimplicialComplex([tuple(images[v] for v in f) for f in K.facets])


def full_subcomplex(K: SimplicialComplex, verts) -> SimplicialComplex:
    """Full subcomplex spanned by ``verts``: all faces contained in that set."""
    w = set(verts)
    pieces = [tuple(v for v in f if v in w) for f in K.facets]
    return SimplicialComplex([p for p in pieces if p])


def subdivide_edge(K: SimplicialComplex, u: VertexLabel, v: VertexLabel,
                   mid: VertexLabel) -> SimplicialComplex:
    """Stellar subdivision of the edge {u, v} with the fresh vertex ``mid``."""
    e = simplex((u, v))
    if e not in K:
        raise ComplexError(f"{format_label(u)},{format_label(v)} is not an edge")
    if mid in set(K.vertices):
        raise ComplexError(f"midpoint label {format_label(mid)} already in use")
    out = []
    for f in K.facets:
        if u in f and v in f:
            rest = tuple(x for x in f if x != u and x != v)
            out.append(rest + (mid, u))
            out.append(rest + (mid, v))
        else:
            out.append(f)
    return SimplicialComplex(out)


def barycentric_face_labels(K: SimplicialComplex) -> dict[Simplex, VertexLabel]:
    """Deterministic face -> new-vertex labelling used by the barycentric subdivision."""
    ordered = sorted((c for k in range(K.dim + 1) for c in K.faces(k)), key=lambda s: (len(s), s))
    return {face: int_label(i) for i, face in enumerate(ordered)}


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Complex of chains of faces of K; new vertices are labelled per
    :func:`barycentric_face_labels`."""
    label = barycentric_face_labels(K)
    out = []
    for f in K.facets:
        for order in permutations(f):
            out.append(tuple(label[tuple(sorted(order[: i + 1]))] for i in range(len(order))))
    return SimplicialComplex(out)


def is_simplicial_map(K1: SimplicialComplex, K2: SimplicialComplex, vmap) -> tuple[bool, Simplex | None]:
    """Whether ``vmap`` sends every facet of K1 onto a face of K2 (repeats collapse).

    Returns ``(True, None)`` or ``(False, first_offending_facet)``.
    """
    missing = [v for v in K1.vertices if v not in vmap]
    if missing:
        raise ComplexError(f"vertex map misses {format_label(missing[0])}")
    target = K2.face_set()
    for f in K1.facets:
        image = tuple(sorted(set(vmap[v] for v in f)))
        if image not in target:
            return False, f
    return True, None


def boundary_matrix(K: SimplicialComplex, k: int) -> np.ndarray:
    """Integer boundary operator from k-chains to (k-1)-chains.

    Rows are (k-1)-faces and columns k-faces, both in canonical order; the
    sign for removing the i-th vertex of a column simplex is (-1)**i.
    """
    if not 1 <= k <= K.dim:
        raise ComplexError(f"boundary matrix defined for 1 <= k <= {K.dim}, got {k}")
    rows = {s: i for i, s in enumerate(K.faces(k - 1))}
    cols = K.faces(k)
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, s in enumerate(cols):
        for i in range(len(s)):
            mat[rows[s[:i] + s[i + 1:]], j] = -1 if i % 2 else 1
    return mat


# ---------------------------------------------------------------------------
# facet-list file format

_HEADER_RE = re.compile(r"^sc dim=(-?\d+) nverts=(\d+)$")
SCHEMA_VERSION = 1


def to_text(K: SimplicialComplex) -> str:
    lines = [f"sc dim={K.dim} nverts={len(K.vertices)}"]
    lines += [",".join(format_label(v) for v in f) for f in K.facets]
    return "\n".join(lines) + "\n"


def _split_tokens(line: str, lineno: int) -> list[str]:
    chunks = line.split(",")
    tokens = []
    i = 0
    while i < len(chunks):
        chunk = chunks[i]
        if chunk[:2] in ("v:", "m:", "u:"):
            if i + 1 >= len(chunks):
                raise ParseError(f"token {chunk!r} is missing its second coordinate", lineno)
            tokens.append(chunk + "," + chunks[i + 1])
            i += 2
        else:
            tokens.append(chunk)
            i += 1
    return tokens


def from_text(text: str) -> SimplicialComplex:
    lines = text.splitlines()
    if not lines:
        raise ParseError("missing header line", 1)
    m = _HEADER_RE.match(lines[0].strip())
    if not m:
        raise ParseError(f"bad header {lines[0]!r}", 1)
    dim, nverts = int(m.group(1)), int(m.group(2))
    facets = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line:
            continue
        try:
            facets.append([parse_label(tok) for tok in _split_tokens(line, lineno)])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    try:
        K = SimplicialComplex(facets)
    except ComplexError as exc:
        raise ParseError(str(exc), 2) from None
    if K.dim != dim or len(K.vertices) != nverts:
        raise ParseError(
            f"header says dim={dim} nverts={nverts}, content has dim={K.dim} nverts={len(K.vertices)}", 1)
    return K


def to_json_obj(K: SimplicialComplex) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "simplicial_complex",
        "dim": K.dim,
        "nverts": len(K.vertices),
        "facets": [[format_label(v) for v in f] for f in K.facets],
    }


def from_json_obj(obj: dict) -> SimplicialComplex:
    try:
        facets = [[parse_label(tok) for tok in f] for f in obj["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ComplexError(f"bad complex JSON: {exc}") from None
    return SimplicialComplex(facets)


def to_json(K: SimplicialComplex) -> str:
    return json.dumps(to_json_obj(K), sort_keys=True) + "\n"
