"""Tagged vertex labels and their canonical total order.

Six label kinds exist, ordered ``int < perm < pair < mid < gridu < permu``
with lexicographic payload order inside a kind.  Every canonical
serialization in the package (facet files, boundary-matrix signs, search
order) relies on this order.

Token grammar, one token per label:

* ``7``            plain nonnegative integer
* ``p:(12)(34)``   product of two disjoint transpositions of {1,2,3,4}
* ``v:a,b``        pair with a in 1..4, b in 1..3
* ``m:a1a2,b``     midpoint label, a1 < a2 in 1..4, b in 1..3
* ``u:a,b``        grid label with a, b in Z3 = {0,1,2}
* ``k:e``, ``k:(01)``, ``k:(012)``  permutation of {0,1,2}, cycle notation
"""

import re
from dataclasses import dataclass
from functools import total_ordering

from . import permutations as pt

INT = "int"
PERM = "perm"
PAIR = "pair"
MID = "mid"
GRIDU = "gridu"
PERMU = "permu"

_RANK = {INT: 0, PERM: 1, PAIR: 2, MID: 3, GRIDU: 4, PERMU: 5}


class LabelError(ValueError):
    """Malformed label payload or token."""


@total_ordering
@dataclass(frozen=True)
class VertexLabel:
    """One vertex name: a kind tag plus a flat integer payload.

    ``perm`` payloads are 0-based image tuples of length 4, ``permu``
    payloads 0-based image tuples of length 3; the remaining kinds store
    their coordinates directly.
    """

    kind: str
    data: tuple[int, ...]

    def sort_key(self):
        return (_RANK[self.kind], self.data)

    def __lt__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_label(self)

    def __repr__(self):
        return f"VertexLabel({format_label(self)!r})"


def int_label(n: int) -> VertexLabel:
    if n < 0:
        raise LabelError(f"integer labels must be nonnegative, got {n}")
    return VertexLabel(INT, (n,))


def perm_label(pair1, pair2) -> VertexLabel:
    """Product of the two disjoint transpositions ``pair1`` and ``pair2`` of {1,2,3,4}."""
    elems = (*pair1, *pair2)
    if sorted(elems) != [1, 2, 3, 4]:
        raise LabelError(f"{pair1} and {pair2} are not disjoint transpositions of 1..4")
    img = list(range(4))
    for a, b in (pair1, pair2):
        img[a - 1], img[b - 1] = b - 1, a - 1
    return VertexLabel(PERM, tuple(img))


def pair_label(a: int, b: int) -> VertexLabel:
    if not (1 <= a <= 4 and 1 <= b <= 3):
        raise LabelError(f"pair label needs a in 1..4, b in 1..3, got ({a}, {b})")
    return VertexLabel(PAIR, (a, b))


def mid_label(a1: int, a2: int, b: int) -> VertexLabel:
    if a1 == a2 or not (1 <= a1 <= 4 and 1 <= a2 <= 4 and 1 <= b <= 3):
        raise LabelError(f"mid label needs distinct a1, a2 in 1..4 and b in 1..3, got ({a1}, {a2}, {b})")
    lo, hi = min(a1, a2), max(a1, a2)
    return VertexLabel(MID, (lo, hi, b))


def grid_label(a: int, b: int) -> VertexLabel:
    return VertexLabel(GRIDU, (a % 3, b % 3))


def s3_label(image) -> VertexLabel:
    image = tuple(image)
    if not (len(image) == 3 and pt.is_permutation(image)):
        raise LabelError(f"{image!r} is not a permutation of (0, 1, 2)")
    return VertexLabel(PERMU, image)


def perm_image(label: VertexLabel) -> tuple[int, ...]:
    """0-based image tuple of a ``perm`` or ``permu`` label."""
    if label.kind not in (PERM, PERMU):
        raise LabelError(f"{label} carries no permutation payload")
    return label.data


_PERM_RE = re.compile(r"^\((\d)(\d)\)\((\d)(\d)\)$")
_PERMU_RE = re.compile(r"^\((\d+)\)$")


def format_label(label: VertexLabel) -> str:
    kind, data = label.kind, label.data
    if kind == INT:
        return str(data[0])
    if kind == PERM:
        cyc = pt.cycles(data)
        return "p:" + "".join("(" + "".join(str(i + 1) for i in c) + ")" for c in cyc)
    if kind == PAIR:
        return f"v:{data[0]},{data[1]}"
    if kind == MID:
        return f"m:{data[0]}{data[1]},{data[2]}"
    if kind == GRIDU:
        return f"u:{data[0]},{data[1]}"
    if kind == PERMU:
        cyc = pt.cycles(data)
        if not cyc:
            return "k:e"
        return "k:" + "".join("(" + "".join(str(i) for i in c) + ")" for c in cyc)
    raise LabelError(f"unknown label kind {kind!r}")


def parse_label(token: str) -> VertexLabel:
    token = token.strip()
    if token.isdigit():
        return int_label(int(token))
    if token.startswith("p:"):
        m = _PERM_RE.match(token[2:])
        if not m:
            raise LabelError(f"bad permutation token {token!r}")
        a, b, c, d = (int(g) for g in m.groups())
        return perm_label((a, b), (c, d))
    if token.startswith("v:"):
        return pair_label(*_two_ints(token))
    if token.startswith("m:"):
        m = re.match(r"^m:(\d)(\d),(\d)$", token)
        if not m:
            raise LabelError(f"bad mid token {token!r}")
        return mid_label(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    if token.startswith("u:"):
        a, b = _two_ints(token)
        if not (0 <= a <= 2 and 0 <= b <= 2):
            raise LabelError(f"grid token {token!r} out of Z3 range")
        return grid_label(a, b)
    if token.startswith("k:"):
        body = token[2:]
        if body == "e":
            return s3_label((0, 1, 2))
        cyc = []
        for m in _PERMU_RE.finditer(body):
            cyc.append(tuple(int(ch) for ch in m.group(1)))
        if not cyc or sum(len(c) + 2 for c in cyc) != len(body):
            raise LabelError(f"bad S3 token {token!r}")
        try:
            return s3_label(pt.from_cycles(3, cyc))
        except ValueError as exc:
            raise LabelError(f"bad S3 token {token!r}: {exc}") from None
    raise LabelError(f"unrecognized label token {token!r}")


def _two_ints(token: str) -> tuple[int, int]:
    body = token[2:]
    parts = body.split(",")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise LabelError(f"bad label token {token!r}")
    return int(parts[0]), int(parts[1])
