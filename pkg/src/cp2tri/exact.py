"""Exact integer linear algebra for chain complexes.

Two independent routes are provided on purpose: a sparse Smith normal form
over arbitrary-precision integers (ranks + elementary divisors) and a
fraction-free Gaussian elimination computing the rank over the rationals.
The second exists solely to cross-check the first.
"""

from math import gcd


def _to_sparse(matrix):
    rows: dict[int, dict[int, int]] = {}
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    for r in range(nrows):
        row = {c: int(v) for c, v in enumerate(matrix[r]) if v}
        if row:
            rows[r] = row
    return rows, nrows, ncols


def _col_index(rows):
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    return cols


def _min_entry(rows):
    best = None
    for r, row in rows.items():
        for c, v in row.items():
            key = (abs(v), r, c)
            if best is None or key < best:
                best = key
    return best[1], best[2]


def _row_addmul(rows, cols, dst, src, factor):
    """row[dst] += factor * row[src], maintaining the column index."""
    if factor == 0:
        return
    dst_row = rows.setdefault(dst, {})
    for c, v in rows[src].items():
        new = dst_row.get(c, 0) + factor * v
        if new:
            dst_row[c] = new
            cols.setdefault(c, set()).add(dst)
        elif c in dst_row:
            del dst_row[c]
            cols[c].discard(dst)
    if not dst_row:
        del rows[dst]


def _negate_row(rows, r):
    rows[r] = {c: -v for c, v in rows[r].items()}


def smith_divisors(matrix) -> list[int]:
    """Elementary divisors (positive, divisibility-chained, 1s included) of an
    integer matrix; their count is the rank."""
    rows, _, _ = _to_sparse(matrix)
    cols = _col_index(rows)
    divisors: list[int] = []
    while rows:
        r0, c0 = _min_entry(rows)
        while True:
            if rows[r0][c0] < 0:
                _negate_row(rows, r0)
            pivot = rows[r0][c0]
            # reduce the pivot column
            moved = False
            for r in sorted(cols.get(c0, ())):
                if r == r0 or c0 not in rows.get(r, {}):
                    continue
                q = rows[r][c0] // pivot
                _row_addmul(rows, cols, r, r0, -q)
                if r in rows and c0 in rows[r]:
                    r0, moved = r, True  # strictly smaller remainder becomes pivot
                    break
            if moved:
                continue
            # column is clear; reduce the pivot row with column operations,
            # which now only touch row r0
            row = rows[r0]
            done = True
            for c in sorted(row):
                if c == c0:
                    continue
                q = row[c] // pivot
                new = row[c] - q * pivot
                if new:
                    row[c] = new
                    c0, done = c, False  # smaller remainder; re-run elimination
                    break
                del row[c]
                cols[c].discard(r0)
            if done:
                break
        divisors.append(rows[r0][c0])
        for c in rows[r0]:
            cols[c].discard(r0)
        del rows[r0]
        cols.pop(c0, None)
    return _normalize_chain(divisors)


def _normalize_chain(divisors: list[int]) -> list[int]:
    d = [abs(x) for x in divisors]
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    return sorted(d)


def rank(matrix) -> int:
    """Rank over the rationals via fraction-free integer elimination."""
    rows, _, _ = _to_sparse(matrix)
    cols = _col_index(rows)
    rk = 0
    while rows:
        r0, c0 = _min_entry(rows)
        pivot = rows[r0][c0]
        for r in sorted(cols.get(c0, ())):
            if r == r0 or c0 not in rows.get(r, {}):
                continue
            v = rows[r][c0]
            # row_r <- pivot * row_r - v * row_r0 stays integral
            row = rows[r]
            for c in list(row):
                row[c] *= pivot
            _row_addmul(rows, cols, r, r0, -v)
            if r in rows:
                g = 0
                for val in rows[r].values():
                    g = gcd(g, val)
                if g > 1:
                    rows[r] = {c: val // g for c, val in rows[r].items()}
        for c in rows[r0]:
            cols[c].discard(r0)
        del rows[r0]
        cols.pop(c0, None)
        rk += 1
    return rk
