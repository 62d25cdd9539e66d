"""Image-tuple permutation helpers shared by the label, symmetry and generator code.

A permutation of ``{0, ..., n-1}`` is stored as a tuple ``p`` where ``p[i]``
is the image of ``i``.
"""

from itertools import permutations as _iter_permutations


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p, q):
    """Composition ``p after q``: ``compose(p, q)[i] == p[q[i]]``."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def parity(p) -> int:
    """0 for even permutations, 1 for odd ones."""
    seen = [False] * len(p)
    transpositions = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        transpositions += length - 1
    return transpositions % 2


def transposition(n: int, i: int, j: int):
    img = list(range(n))
    img[i], img[j] = img[j], img[i]
    return tuple(img)


def all_permutations(n: int):
    return [tuple(p) for p in _iter_permutations(range(n))]


def cycles(p) -> list[tuple[int, ...]]:
    """Nontrivial cycles of ``p``, each starting at its smallest element."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def from_cycles(n: int, cycle_list) -> tuple[int, ...]:
    img = list(range(n))
    for cyc in cycle_list:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    if not is_permutation(img):
        raise ValueError(f"cycles {cycle_list!r} do not define a permutation of 0..{n - 1}")
    return tuple(img)
