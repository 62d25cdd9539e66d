"""Discrete connections, holonomy, and the three colouring classes.

The canonical discrete connection sums a vertex function over each facet;
its holonomy along dual-graph cycles is the projectivity group.  A complex
is *even* when every codimension-2 face has even facet degree, *chess
colourable* when the dual graph is bipartite, and *regularly colourable*
when colour propagation across ridges is globally consistent (equivalently,
the projectivity group is trivial).
"""

from dataclasses import dataclass

from . import permutations as pt
from .complexes import (ComplexError, Simplex, SimplicialComplex, dual_graph,
                        full_subcomplex, is_pure, link)
from .verify import is_closed_pseudomanifold, orientable


def connection_apply(K: SimplicialComplex, psi) -> dict[Simplex, float]:
    """Canonical discrete connection: facet value = sum of its vertex values."""
    return {f: sum(psi[v] for v in f) for f in K.facets}


def is_even(K: SimplicialComplex):
    """(True, None) iff every codimension-2 face lies in an even number of
    facets; otherwise (False, offending_face)."""
    if not is_pure(K) or K.dim < 2:
        raise ComplexError("evenness check requires a pure complex of dimension >= 2")
    degree: dict[Simplex, int] = {}
    for f in K.facets:
        for i in range(len(f)):
            for j in range(i + 1, len(f)):
                face = f[:i] + f[i + 1:j] + f[j + 1:]
                degree[face] = degree.get(face, 0) + 1
    for face in sorted(degree):
        if degree[face] % 2:
            return False, face
    return True, None


def _bfs_tree(adj, base):
    """Breadth-first spanning structure: parent map and visit order."""
    parent = {base: None}
    order = [base]
    i = 0
    while i < len(order):
        f = order[i]
        i += 1
        for g in adj[f]:
            if g not in parent:
                parent[g] = f
                order.append(g)
    return parent, order


def _base_facet(K, adj):
    base = K.facets[0]
    parent, order = _bfs_tree(adj, base)
    if len(order) != len(K.facets):
        raise ComplexError("colouring requires a connected dual graph")
    return base, parent, order


def chess_colouring(K: SimplicialComplex) -> dict[Simplex, int] | None:
    """2-colouring of the facets with ridge-adjacent facets distinct, or None
    if the dual graph is not bipartite.  The canonically least facet is 0."""
    adj = dual_graph(K)
    base, parent, order = _base_facet(K, adj)
    colour = {base: 0}
    for f in order:
        for g in adj[f]:
            if g not in colour:
                colour[g] = 1 - colour[f]
            elif colour[g] == colour[f]:
                return None
    return colour


def _transition(colour_f: dict, f: Simplex, g: Simplex) -> dict:
    """Transport a facet colouring across a shared ridge: the vertex opposite
    the ridge in g inherits the colour of the one opposite in f."""
    shared = set(f) & set(g)
    u = next(v for v in f if v not in shared)
    w = next(v for v in g if v not in shared)
    out = {v: c for v, c in colour_f.items() if v in shared}
    out[w] = colour_f[u]
    return out


def regular_colouring(K: SimplicialComplex) -> dict | None:
    """Vertex colouring with dim+1 colours making every facet rainbow, or None.

    Colours propagate from the canonically least facet (vertices coloured
    0..n in label order) over a breadth-first dual spanning tree; any
    inconsistency on a non-tree edge kills the colouring.
    """
    adj = dual_graph(K)
    base, parent, order = _base_facet(K, adj)
    colour = {v: i for i, v in enumerate(base)}
    facet_col = {base: dict(colour)}
    for f in order:
        for g in adj[f]:
            transported = _transition(facet_col[f], f, g)
            if g not in facet_col:
                facet_col[g] = transported
                for v, c in transported.items():
                    if colour.get(v, c) != c:
                        return None
                    colour[v] = c
            elif facet_col[g] != transported:
                return None
    return colour


@dataclass(frozen=True)
class HolonomyData:
    """Holonomy of the canonical discrete connection over a dual cycle basis."""
    base: Simplex
    generators: tuple[tuple[int, ...], ...]  # one colour permutation per non-tree edge
    group_order: int
    rho1_trivial: bool  # all generators even
    rho3_trivial: bool  # dual graph bipartite


def projectivity_group(K: SimplicialComplex, base: Simplex | None = None) -> HolonomyData:
    """Colour-slot holonomy: propagate a facet colouring over a spanning tree
    and read one permutation generator off every non-tree dual edge."""
    adj = dual_graph(K)
    if base is None:
        base, parent, order = _base_facet(K, adj)
    else:
        parent, order = _bfs_tree(adj, base)
        if len(order) != len(K.facets):
            raise ComplexError("colouring requires a connected dual graph")
    n1 = K.dim + 1
    facet_col = {base: {v: i for i, v in enumerate(base)}}
    for f in order:
        for g in adj[f]:
            if g not in facet_col:
                facet_col[g] = _transition(facet_col[f], f, g)
    gens = []
    seen = set()
    for f in order:
        for g in adj[f]:
            if parent.get(g) is f or parent.get(f) is g or (g, f) in seen:
                continue
            seen.add((f, g))
            transported = _transition(facet_col[f], f, g)
            settled = facet_col[g]
            perm = tuple(transported[v] for v in sorted(settled, key=settled.get))
            gens.append(perm)
    group = _closure(gens, n1)
    return HolonomyData(
        base=base,
        generators=tuple(gens),
        group_order=len(group),
        rho1_trivial=all(pt.parity(p) == 0 for p in gens),
        rho3_trivial=chess_colouring(K) is not None,
    )


def _closure(gens, n):
    group = {pt.identity(n)}
    frontier = [pt.identity(n)]
    gen_set = {g for g in gens}
    while frontier:
        g = frontier.pop()
        for h in gen_set:
            gh = pt.compose(h, g)
            if gh not in group:
                group.add(gh)
                frontier.append(gh)
    return group


def class_report(K: SimplicialComplex) -> dict:
    """Membership in the even / chess / regular classes plus the sign relation.

    The fat-path parity homomorphism and the sign relation rho1*rho2 = rho3
    are only defined for even complexes; outside T_even they are reported as
    None.
    """
    ok, _ = is_closed_pseudomanifold(K)
    if not ok:
        raise ComplexError("class report requires a closed pseudomanifold")
    even, _ = is_even(K)
    chess = chess_colouring(K)
    regular = regular_colouring(K)
    report = {
        "t_even": even,
        "t_bw": chess is not None,
        "t_colour": regular is not None,
        "rho3_trivial": (chess is not None) if even else None,
        "rho_relation_consistent": None,
    }
    if even:
        report["rho_relation_consistent"] = _check_sign_relation(K)
    return report


def _check_sign_relation(K: SimplicialComplex) -> bool:
    """Per fundamental dual cycle: sign of the colour holonomy times the
    orientation holonomy equals the parity of the cycle length."""
    adj = dual_graph(K)
    base, parent, order = _base_facet(K, adj)
    facet_col = {base: {v: i for i, v in enumerate(base)}}
    for f in order:
        for g in adj[f]:
            if g not in facet_col:
                facet_col[g] = _transition(facet_col[f], f, g)
    tree_sign = {base: 1}
    tree_parity = {base: 0}
    for f in order[1:]:
        p = parent[f]
        tree_sign[f] = tree_sign[p] * _orientation_weight(p, f)
        tree_parity[f] = (tree_parity[p] + 1) % 2
    seen = set()
    for f in order:
        for g in adj[f]:
            if parent.get(g) is f or parent.get(f) is g or (g, f) in seen:
                continue
            seen.add((f, g))
            transported = _transition(facet_col[f], f, g)
            settled = facet_col[g]
            gen = tuple(transported[v] for v in sorted(settled, key=settled.get))
            rho1 = 1 if pt.parity(gen) == 0 else -1
            # holonomies around the fundamental cycle of the non-tree edge (f, g)
            rho2 = tree_sign[f] * _orientation_weight(f, g) * tree_sign[g]
            rho3 = 1 if (tree_parity[f] + 1 + tree_parity[g]) % 2 == 0 else -1
            if rho1 * rho2 != rho3:
                return False
    return True


def _orientation_weight(f: Simplex, g: Simplex) -> int:
    shared = set(f) & set(g)
    i = f.index(next(v for v in f if v not in shared))
    j = g.index(next(v for v in g if v not in shared))
    return -((-1) ** (i + j))


def suspension_colour_class(K: SimplicialComplex, colouring: dict):
    """Detect a colour class of size two and verify the suspension structure.

    Returns (colour, (v1, v2)) when some colour has exactly two vertices and
    K is the suspension with those apexes (every facet contains exactly one,
    and both apex links agree); None when no size-2 class exists.
    """
    _validate_regular(K, colouring)
    by_colour: dict[int, list] = {}
    for v, c in colouring.items():
        by_colour.setdefault(c, []).append(v)
    for c in sorted(by_colour):
        cls = sorted(by_colour[c])
        if len(cls) != 2:
            continue
        v1, v2 = cls
        for f in K.facets:
            if (v1 in f) == (v2 in f):
                raise ComplexError(
                    f"colour {c} has two vertices but facet {[str(v) for v in f]} "
                    "does not separate them")
        if link(K, (v1,)) != link(K, (v2,)):
            raise ComplexError(f"colour {c} apex links differ; not a suspension")
        return c, (v1, v2)
    return None


def _validate_regular(K: SimplicialComplex, colouring: dict) -> None:
    n1 = K.dim + 1
    for f in K.facets:
        cols = {colouring.get(v) for v in f}
        if None in cols or len(cols) != len(f) or not cols <= set(range(n1)):
            raise ComplexError("not a regular colouring of the complex")
