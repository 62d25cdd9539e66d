"""Symmetries: the S4 x S3 label action, automorphism groups, orbits, and
complex isomorphism by invariant-pruned backtracking.

Group elements store 0-based image tuples; ``theta`` permutes the tetrahedral
indices {1,..,4} (stored as {0,..,3}) and ``kappa`` the colour indices
{1,..,3} (stored as {0,..,2}).  Both act on vertex labels: ``theta`` by
conjugation on permutation labels and on the first coordinate of pair and
midpoint labels, ``kappa`` on the second coordinate.
"""

from dataclasses import dataclass
from itertools import combinations

from . import permutations as pt
from .complexes import ComplexError, SimplicialComplex, simplex
from .labels import MID, PAIR, PERM, VertexLabel, mid_label, pair_label

_S4 = pt.all_permutations(4)
_S3 = pt.all_permutations(3)


@dataclass(frozen=True)
class GroupElement:
    theta: tuple[int, int, int, int]
    kappa: tuple[int, int, int]

    def act(self, label: VertexLabel) -> VertexLabel:
        th, ka = self.theta, self.kappa
        if label.kind == PERM:
            return VertexLabel(PERM, pt.compose(th, pt.compose(label.data, pt.inverse(th))))
        if label.kind == PAIR:
            a, b = label.data
            return pair_label(th[a - 1] + 1, ka[b - 1] + 1)
        if label.kind == MID:
            a1, a2, b = label.data
            return mid_label(th[a1 - 1] + 1, th[a2 - 1] + 1, ka[b - 1] + 1)
        raise ComplexError(f"the tetrahedral action is undefined on {label}")

    def act_simplex(self, s) -> tuple:
        return simplex(self.act(v) for v in s)

    def compose(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(pt.compose(self.theta, other.theta), pt.compose(self.kappa, other.kappa))

    def inverse(self) -> "GroupElement":
        return GroupElement(pt.inverse(self.theta), pt.inverse(self.kappa))

    def is_identity(self) -> bool:
        return self.theta == (0, 1, 2, 3) and self.kappa == (0, 1, 2)

    def vertex_map(self, K: SimplicialComplex) -> dict:
        return {v: self.act(v) for v in K.vertices}

    def sort_key(self):
        return (self.theta, self.kappa)


def group_identity() -> GroupElement:
    return GroupElement((0, 1, 2, 3), (0, 1, 2))


def group_elements() -> list[GroupElement]:
    """All 144 elements in canonical order."""
    return [GroupElement(th, ka) for th in _S4 for ka in _S3]


def as_vertex_maps(group, K: SimplicialComplex) -> list[dict]:
    """Normalize a group given as GroupElements or vertex dicts to dicts on K."""
    out = []
    for g in group:
        out.append(g.vertex_map(K) if isinstance(g, GroupElement) else g)
    return out


def verify_s4xs3_action(X: SimplicialComplex) -> bool:
    """Check the full tetrahedral-times-colour action: all 144 elements are
    automorphisms, the action is faithful, and no further automorphisms exist."""
    facets = set(X.facets)
    seen_maps = set()
    for g in group_elements():
        vm = g.vertex_map(X)
        if any(tuple(sorted(vm[v] for v in f)) not in facets for f in X.facets):
            return False
        key = tuple(sorted(vm.items()))
        if key in seen_maps:
            return False  # not faithful
        seen_maps.add(key)
    return len(automorphism_group(X)) == 144


# ---------------------------------------------------------------------------
# backtracking search for isomorphisms

def _vertex_invariants(K: SimplicialComplex) -> dict:
    from .complexes import f_vector, link
    inv = {}
    for v in K.vertices:
        counts = tuple(sum(1 for s in K.faces(k) if v in s) for k in range(K.dim + 1))
        inv[v] = (counts, f_vector(link(K, (v,))))
    return inv


def _faces_by_vertex(K: SimplicialComplex) -> dict:
    by_v = {v: [] for v in K.vertices}
    for k in range(K.dim + 1):
        for s in K.faces(k):
            for v in s:
                by_v[v].append(s)
    return by_v


def _search(K1, K2, find_all):
    """Backtracking over vertex images; invariants prune candidates, faces are
    checked in both directions as the partial map grows."""
    from .complexes import f_vector
    results = []
    if len(K1.vertices) != len(K2.vertices) or f_vector(K1) != f_vector(K2):
        return results
    inv1, inv2 = _vertex_invariants(K1), _vertex_invariants(K2)
    if sorted(inv1.values()) != sorted(inv2.values()):
        return results
    faces1 = _faces_by_vertex(K1)
    faces2 = _faces_by_vertex(K2)
    face_set1, face_set2 = K1.face_set(), K2.face_set()
    candidates = {v: tuple(w for w in K2.vertices if inv2[w] == inv1[v]) for v in K1.vertices}
    # most constrained vertices first, then canonical order
    order = sorted(K1.vertices, key=lambda v: (len(candidates[v]), v))
    fwd: dict = {}
    bwd: dict = {}

    def compatible(v, w):
        for s in faces1[v]:
            if all(u in fwd or u == v for u in s):
                image = tuple(sorted(fwd.get(u, w) for u in s))
                if image not in face_set2:
                    return False
        for s in faces2[w]:
            if all(u in bwd or u == w for u in s):
                preimage = tuple(sorted(bwd.get(u, v) for u in s))
                if preimage not in face_set1:
                    return False
        return True

    def extend(i):
        if i == len(order):
            results.append(dict(fwd))
            return not find_all
        v = order[i]
        for w in candidates[v]:
            if w in bwd or not compatible(v, w):
                continue
            fwd[v] = w
            bwd[w] = v
            if extend(i + 1):
                return True
            del fwd[v]
            del bwd[w]
        return False

    extend(0)
    return results


def are_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex) -> dict | None:
    """A facet-preserving vertex bijection K1 -> K2, or None."""
    found = _search(K1, K2, find_all=False)
    return found[0] if found else None


def automorphism_group(K: SimplicialComplex) -> list[dict]:
    """All automorphisms of K as vertex maps, canonically sorted."""
    auts = _search(K, K, find_all=True)
    auts.sort(key=lambda m: tuple(sorted(m.items())))
    return auts


def is_automorphism(K: SimplicialComplex, vmap: dict) -> bool:
    facets = set(K.facets)
    return all(tuple(sorted(vmap[v] for v in f)) in facets for f in K.facets)


# ---------------------------------------------------------------------------
# orbits

def orbits(K: SimplicialComplex, group, k: int) -> list[tuple]:
    """Partition of the k-faces under the group; each orbit is a sorted tuple
    and the list is sorted by the canonical (least) representatives."""
    maps = as_vertex_maps(group, K)
    for vm in maps:
        if not is_automorphism(K, vm):
            raise ComplexError("group contains a non-automorphism")
    faces = K.faces(k)
    remaining = set(faces)
    out = []
    for s in faces:
        if s not in remaining:
            continue
        orbit = {tuple(sorted(vm[v] for v in s)) for vm in maps}
        orbit.add(s)
        remaining -= orbit
        out.append(tuple(sorted(orbit)))
    return sorted(out, key=lambda o: o[0])


def vertex_orbits(K: SimplicialComplex, group) -> list[tuple]:
    return [tuple(v for (v,) in orbit) for orbit in orbits(K, group, 0)]


def orbit_sizes(orbit_list) -> list[int]:
    return sorted(len(o) for o in orbit_list)


def stabilizer(group: list[GroupElement], s) -> list[GroupElement]:
    """Setwise stabilizer of a simplex under a list of GroupElements."""
    target = simplex(s)
    return [g for g in group if g.act_simplex(target) == target]


def conjugate_group(maps: list[dict], iso: dict) -> list[dict]:
    """Transport vertex maps through an isomorphism: g -> iso o g o iso^-1."""
    inv = {w: v for v, w in iso.items()}
    return [{w: iso[vm[inv[w]]] for w in iso.values()} for vm in maps]


# ---------------------------------------------------------------------------
# the explicit correspondence between the tetrahedral and crystallographic
# 15-vertex complexes

def x_to_y_vertex_map() -> dict:
    """The explicit vertex bijection between the two 15-vertex complexes:
    permutation vertices go to odd-permutation vertices, the (4,b) column to
    powers of the 3-cycle, and (a,b) to the grid point (-a-b, -a+b) mod 3."""
    from .generators import NU_LABELS, SIGMA
    from .labels import grid_label, s3_label
    three_cycle = pt.from_cycles(3, [(0, 1, 2)])
    out = {}
    for j, nu in enumerate(NU_LABELS):
        out[nu] = s3_label(SIGMA[j])
    power = three_cycle
    for b in (1, 2, 3):
        out[pair_label(4, b)] = s3_label(power if b < 3 else pt.identity(3))
        power = pt.compose(three_cycle, power)
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            out[pair_label(a, b)] = grid_label(-a - b, -a + b)
    values = list(out.values())
    if len(set(values)) != len(values):
        raise ComplexError("the explicit vertex correspondence is not a bijection")
    return out
