"""Exact integer linear algebra over Z.

Column-style Hermite normal form with a unimodular transcript, integer
column-space membership, and an exact determinant. Everything is done in
Python ints, so entries never overflow.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DimensionMismatch, ParseError

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Freeze rows into a rectangular tuple-of-tuples."""
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if mat and any(len(row) != len(mat[0]) for row in mat):
        raise DimensionMismatch("ragged rows")
    return mat


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: IntMatrix, x: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in m)


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Column-style HNF: returns (H, U) with H = M*U and U unimodular.

    Pivots are positive and strictly descend down the rows as the pivot
    column advances; in a pivot row, entries left of the pivot lie in
    [0, pivot). Zero columns are pushed to the right. The reduction is
    deterministic, so H and U are canonical for a given M.
    """
    mat = as_matrix(m)
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    h = [list(row) for row in mat]
    u = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_addmul(dst: int, src: int, q: int) -> None:
        # column dst += q * column src
        for i in range(rows):
            h[i][dst] += q * h[i][src]
        for i in range(cols):
            u[i][dst] += q * u[i][src]

    def col_swap(a: int, b: int) -> None:
        for i in range(rows):
            h[i][a], h[i][b] = h[i][b], h[i][a]
        for i in range(cols):
            u[i][a], u[i][b] = u[i][b], u[i][a]

    def col_negate(c: int) -> None:
        for i in range(rows):
            h[i][c] = -h[i][c]
        for i in range(cols):
            u[i][c] = -u[i][c]

    pivot_col = 0
    for r in range(rows):
        if pivot_col >= cols:
            break
        active = [j for j in range(pivot_col, cols) if h[r][j] != 0]
        if not active:
            continue
        # Euclid on the active columns until one nonzero entry remains
        while len(active) > 1:
            j_min = min(active, key=lambda j: abs(h[r][j]))
            for j in active:
                if j != j_min:
                    col_addmul(j, j_min, -(h[r][j] // h[r][j_min]))
            active = [j for j in active if h[r][j] != 0]
        j = active[0]
        if j != pivot_col:
            col_swap(j, pivot_col)
        if h[r][pivot_col] < 0:
            col_negate(pivot_col)
        # reduce entries left of the pivot into [0, pivot)
        p = h[r][pivot_col]
        for j in range(pivot_col):
            q = h[r][j] // p
            if q:
                col_addmul(j, pivot_col, -q)
        pivot_col += 1

    return as_matrix(h), as_matrix(u)


def colspace_member(m: Sequence[Sequence[int]],
                    v: Sequence[int]) -> tuple[int, ...] | None:
    """An integer x with M*x = v, or None when v is not in the column lattice."""
    mat = as_matrix(m)
    rows = len(mat)
    target = tuple(int(t) for t in v)
    if len(target) != rows:
        raise DimensionMismatch(
            f"vector length {len(target)} != row count {rows}")
    cols = len(mat[0]) if rows else 0
    if cols == 0:
        return () if all(t == 0 for t in target) else None

    h, u = hermite_normal_form(mat)

    # locate pivots of the echelon columns
    pivots: list[tuple[int, int]] = []  # (row, col)
    for j in range(cols):
        r = next((i for i in range(rows) if h[i][j] != 0), None)
        if r is None:
            break
        pivots.append((r, j))

    residual = list(target)
    y = [0] * cols
    top = 0
    for r, j in pivots:
        if any(residual[i] != 0 for i in range(top, r)):
            return None
        q, rem = divmod(residual[r], h[r][j])
        if rem:
            return None
        y[j] = q
        for i in range(r, rows):
            residual[i] -= q * h[i][j]
        top = r + 1
    if any(residual):
        return None
    return mat_vec(u, y)


def parse_int_matrix(text: str) -> IntMatrix:
    """Parse the shared textual form, e.g. ``[[3,2],[1,0]]``."""
    rows, pos = _parse_rows(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError("trailing input after matrix", pos)
    return as_matrix(rows)


def parse_int_vector(text: str) -> tuple[int, ...]:
    """Parse ``[2,1]``, ``(2,1)`` or bare ``2,1``."""
    stripped = text.strip()
    if stripped.startswith("[") and stripped.endswith("]"):
        stripped = stripped[1:-1]
    elif stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    try:
        return tuple(int(part.strip()) for part in stripped.split(","))
    except ValueError as exc:
        raise ParseError(f"bad vector text {text!r}") from exc


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    pos = _skip_ws(text, pos)
    start = pos
    if pos < len(text) and text[pos] in "+-":
        pos += 1
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start or not text[start:pos].lstrip("+-"):
        raise ParseError("expected integer", start)
    return int(text[start:pos]), pos


def _parse_rows(text: str, pos: int) -> tuple[list[list[int]], int]:
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != "[":
        raise ParseError("expected [", pos)
    pos += 1
    rows = []
    while True:
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != "[":
            raise ParseError("expected [ to open a row", pos)
        pos += 1
        row = []
        while True:
            value, pos = _parse_int(text, pos)
            row.append(value)
            pos = _skip_ws(text, pos)
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == "]":
                pos += 1
                break
            raise ParseError("expected , or ] in row", pos)
        rows.append(row)
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == "]":
            pos += 1
            return rows, pos
        raise ParseError("expected , or ] after row", pos)
