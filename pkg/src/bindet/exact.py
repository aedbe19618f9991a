"""Exact linear algebra over arbitrary-precision integers.

Determinants and cofactors use fraction-free (Bareiss) single-step
elimination: every intermediate value is a minor of the input matrix, so
all interior divisions are exact and no rational arithmetic is needed.
Entries are Python ints end to end; results are exact at any magnitude.

Elimination runs on object-dtype numpy arrays so the elementwise big-int
work happens in C-level loops rather than Python-level ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InternalInvariantError

# Rows and vectors are plain tuples of Python ints.
IntVector = tuple


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = tuple(tuple(int(x) for x in row) for row in self.rows)
        n = len(norm)
        if n < 1:
            raise ValueError("matrix must have at least one row")
        for row in norm:
            if len(row) != n:
                raise ValueError(
                    f"matrix is not square: {n} rows but a row of length {len(row)}"
                )
        object.__setattr__(self, "rows", norm)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def is_binary(self) -> bool:
        return all(x in (0, 1) for row in self.rows for x in row)

    def is_ternary(self) -> bool:
        return all(x in (-1, 0, 1) for row in self.rows for x in row)

    def with_rows_swapped(self, i: int, j: int) -> "IntMatrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return IntMatrix(tuple(rows))

    def to_text(self) -> str:
        """Serialize to the shared matrix text format.

        Line 1 is n; lines 2..n+1 hold n space-separated decimal entries each.
        """
        lines = [str(self.n)]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        try:
            n = int(lines[0])
        except ValueError:
            raise ValueError(f"matrix text must start with the size, got {lines[0]!r}") from None
        if n < 1:
            raise ValueError(f"matrix size must be positive, got {n}")
        if len(lines) != n + 1:
            raise ValueError(f"expected {n} matrix rows, found {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            try:
                row = tuple(int(tok) for tok in ln.split())
            except ValueError:
                raise ValueError(f"non-integer matrix entry in line {ln!r}") from None
            if len(row) != n:
                raise ValueError(f"expected {n} entries per row, found {len(row)}")
            rows.append(row)
        return cls(tuple(rows))


def _as_object_array(rows) -> np.ndarray:
    return np.array([[int(x) for x in row] for row in rows], dtype=object)


def _exact_div(arr: np.ndarray, d) -> np.ndarray:
    """Divide elementwise, insisting the division is remainder-free."""
    if d == 1:
        return arr
    if d == -1:
        return -arr
    q = arr // d
    if not (q * d == arr).all():
        raise InternalInvariantError(
            "fraction-free elimination produced a nonzero remainder"
        )
    return q


def _rows_of(m) -> list[tuple[int, ...]]:
    if isinstance(m, IntMatrix):
        return list(m.rows)
    return [tuple(int(x) for x in row) for row in m]


def det_exact(m: "IntMatrix | Sequence[Sequence[int]]") -> int:
    """Exact determinant of a square integer matrix.

    Fraction-free single-step elimination with first-nonzero row pivoting.
    Interior divisions are asserted remainder-free; a failure there raises
    InternalInvariantError (it would mean a bug, not bad input).
    """
    rows = _rows_of(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    a = _as_object_array(rows)
    sign = 1
    prev = 1
    for t in range(n - 1):
        nz = np.flatnonzero(a[t:, t] != 0)
        if nz.size == 0:
            return 0
        p = t + int(nz[0])
        if p != t:
            a[[t, p]] = a[[p, t]]
            sign = -sign
        piv = a[t, t]
        sub = a[t + 1:, t + 1:] * piv - np.outer(a[t + 1:, t], a[t, t + 1:])
        a[t + 1:, t + 1:] = _exact_div(sub, prev)
        a[t + 1:, t] = 0
        prev = piv
    return int(sign * a[-1, -1])


def dot(u: Sequence[int], w: Sequence[int]) -> int:
    """Exact inner product of two equal-length integer vectors."""
    if len(u) != len(w):
        raise ValueError(f"length mismatch: {len(u)} vs {len(w)}")
    return sum(int(a) * int(b) for a, b in zip(u, w))


def cofactor_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """First-row cofactors (C_11, ..., C_1n) of any matrix with these rows below.

    Given n-1 rows of length n, returns the vector C with
    ``det([r1; rows]) == sum_j C[j] * r1[j]`` for every top row r1 (the
    Laplace expansion weights).  When the rows are linearly independent the
    result is orthogonal to every input row; dependent rows yield the zero
    vector, which callers must detect.

    Runs in O(n^3): one fraction-free echelon pass over the rows, then all n
    unit top rows are eliminated simultaneously through the shared pivot
    chain.
    """
    rows = [tuple(int(x) for x in row) for row in rows]
    m = len(rows)
    n = m + 1
    if any(len(r) != n for r in rows):
        raise ValueError(f"need {m} rows of length {m + 1}")

    ech = _as_object_array(rows)
    pivots: list[int] = []
    sign = 1
    prev = 1
    t = 0
    for c in range(n):
        if t == m:
            break
        nz = np.flatnonzero(ech[t:, c] != 0)
        if nz.size == 0:
            continue
        p = t + int(nz[0])
        if p != t:
            ech[[t, p]] = ech[[p, t]]
            sign = -sign
        if t + 1 < m:
            sub = ech[t + 1:] * ech[t, c] - np.outer(ech[t + 1:, c], ech[t])
            ech[t + 1:] = _exact_div(sub, prev)
        pivots.append(c)
        prev = ech[t, c]
        t += 1
    if t < m:
        return (0,) * n

    # Eliminate all n unit vectors through the pivot chain at once.  Row j of
    # w ends up carrying det([rows; e_j]) in the single non-pivot column.
    j0 = next(c for c in range(n) if c not in set(pivots))
    w = np.identity(n, dtype=object)
    prev = 1
    for t, c in enumerate(pivots):
        piv = ech[t, c]
        w = _exact_div(w * piv - np.outer(w[:, c], ech[t]), prev)
        prev = piv
    # det([e_j; rows]) = (-1)^(n-1) det([rows; e_j]); moving the pivot columns
    # in front costs a further (-1)^(n-1-j0), so the net factor is (-1)^j0.
    s = sign * (-1 if j0 % 2 else 1)
    return tuple(int(s * w[j, j0]) for j in range(n))


def is_orthogonal_to_all(v: Sequence[int], rows: Iterable[Sequence[int]]) -> bool:
    """True iff v has exactly zero dot product with every given row."""
    return all(dot(v, row) == 0 for row in rows)
