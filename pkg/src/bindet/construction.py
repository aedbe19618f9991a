"""Constructing a binary matrix with any prescribed determinant.

The pipeline: a lower-triangular ternary seed matrix is built from two row
templates ('recursive' rows that subtract a running k-window sum, and
'finishing' rows that close the window near the bottom), then a unit
upper-triangular 0/1 transform folds each row with its k-step successors,
which provably lands every entry in {0, 1}.  An integer vector orthogonal
to all rows but the first is computed by recurrence; its leading n-k
entries are exactly the k-step Fibonacci numbers, which form a complete
sequence, so a greedy scan picks a 0/1 top row whose determinant is any
requested value up to the prefix sum.  Every result is re-certified with
an independent exact determinant before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InternalInvariantError, TargetOutOfRangeError
from .exact import IntMatrix, det_exact, is_orthogonal_to_all
from .fibk import best_k, fib_prefix, theorem_bound

_CERT_HEADER = "certificate"


@dataclass(frozen=True)
class ConstructionParams:
    """Matrix size n and step count k; requires k >= 2 and n >= 2k."""

    n: int
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"step count k must be at least 2, got {self.k}")
        if self.n < 2 * self.k:
            raise ValueError(f"need n >= 2k, got n={self.n}, k={self.k}")


def seed_matrix(n: int, k: int) -> IntMatrix:
    """Lower-triangular ternary seed: unit top row, then the two row templates.

    Recursive rows (i = 2..n-k) carry -1 on the diagonal and 1 on the k
    entries just left of it (clipped at column 1).  Finishing rows
    (i = n-k+1..n) carry 1 on the diagonal and 1 on columns i-k..n-k.
    The determinant is the diagonal product (-1)^(n-k-1).
    """
    ConstructionParams(n, k)
    rows = [[1] + [0] * (n - 1)]
    for i in range(2, n - k + 1):
        row = [0] * n
        row[i - 1] = -1
        for j in range(max(i - k, 1), i):
            row[j - 1] = 1
        rows.append(row)
    for i in range(n - k + 1, n + 1):
        row = [0] * n
        row[i - 1] = 1
        for j in range(i - k, n - k + 1):
            row[j - 1] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows)


def binarizing_transform(n: int, k: int) -> IntMatrix:
    """Unit upper-triangular 0/1 transform: row i sums rows i, i+k, i+2k, ...

    Entry (i, j) is 1 when i = j = 1, or when j >= i > 1 and i = j mod k.
    Determinant 1.
    """
    ConstructionParams(n, k)
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            if (j - i) % k == 0:
                rows[i - 1][j - 1] = 1
    return IntMatrix.from_rows(rows)


def binary_rows(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Rows of the binarized product: all entries 0/1, top row e_1.

    Computed two ways (matrix product, and the row-sum formula
    r_i = s_i + s_{i+k} + ...) and compared entrywise; a disagreement or an
    entry outside {0, 1} is an internal error, since the binarity of these
    rows is exactly what the whole construction rests on.
    """
    seed = seed_matrix(n, k)
    trans = binarizing_transform(n, k)
    # Entries are sums of at most n terms in {-1, 0, 1}; int64 is exact here.
    m = np.array(seed.rows, dtype=np.int64)
    t = np.array(trans.rows, dtype=np.int64)
    product = t @ m

    summed = np.zeros_like(m)
    summed[0] = m[0]
    for i in range(2, n + 1):
        acc = np.zeros(n, dtype=np.int64)
        j = i
        while j <= n:
            acc += m[j - 1]
            j += k
        summed[i - 1] = acc

    if not (product == summed).all():
        raise InternalInvariantError(
            f"row-sum formula disagrees with the matrix product for n={n}, k={k}"
        )
    if not ((product == 0) | (product == 1)).all():
        bad = np.argwhere((product != 0) & (product != 1))[0]
        raise InternalInvariantError(
            f"binarized row entry out of {{0,1}} at {tuple(int(x) for x in bad)} "
            f"for n={n}, k={k}"
        )
    return tuple(tuple(int(x) for x in row) for row in product)


def orthogonal_vector(n: int, k: int) -> tuple[int, ...]:
    """Integer vector orthogonal to rows 2..n of the seed (and binarized) matrix.

    v(1) = 1; v(i) for i <= n-k is the sum of the up-to-k preceding entries
    (so the prefix is exactly F_k(1..n-k)); the last k entries are the
    negated window sums forced by the finishing rows.
    """
    ConstructionParams(n, k)
    v = [0] * (n + 1)
    v[1] = 1
    for i in range(2, n - k + 1):
        v[i] = sum(v[max(i - k, 1):i])
    for i in range(n - k + 1, n + 1):
        v[i] = -sum(v[i - k:n - k + 1])
    return tuple(v[1:])


def greedy_subset(weights: Sequence[int], target: int) -> tuple[int, ...]:
    """Indices (0-based, ascending) of a subset of weights summing to target.

    Requires weights[0] == 1, all weights positive, each weight at most the
    sum of those before it (a complete sequence), and
    0 <= target <= sum(weights).  Scanning from the largest index and taking
    a weight whenever the remainder allows always succeeds under those
    conditions.
    """
    w = [int(x) for x in weights]
    if not w:
        raise ValueError("weights must be nonempty")
    for i, x in enumerate(w):
        if x <= 0:
            raise ValueError(f"weights must be positive; weights[{i}] = {x}")
    if w[0] != 1:
        raise ValueError(f"weights[0] must be 1, got {w[0]}")
    prefix = 0
    for i, x in enumerate(w):
        if i > 0 and x > prefix:
            raise ValueError(
                f"completeness violated at weights[{i}] = {x} > {prefix} (prefix sum)"
            )
        prefix += x
    if not 0 <= target <= prefix:
        raise ValueError(f"target {target} outside [0, {prefix}]")

    chosen = []
    remaining = target
    for i in range(len(w) - 1, -1, -1):
        if w[i] <= remaining:
            chosen.append(i)
            remaining -= w[i]
    if remaining != 0:
        raise InternalInvariantError("greedy subset scan failed on a complete sequence")
    return tuple(reversed(chosen))


@dataclass(frozen=True)
class ConstructionCertificate:
    """Full witness of one synthesis, re-checkable without trusting the builder.

    subset holds 0-based positions into the orthogonal vector; the text
    serialization writes them 1-based.  sign_swap_applied records whether
    the bottom two rows were exchanged to negate the determinant for a
    negative target.
    """

    params: ConstructionParams
    target: int
    orthogonal: tuple[int, ...]
    subset: tuple[int, ...]
    top_row: tuple[int, ...]
    sign_swap_applied: bool
    matrix: IntMatrix
    certified_det: int

    def to_text(self) -> str:
        lines = [
            _CERT_HEADER,
            f"n {self.params.n}",
            f"k {self.params.k}",
            f"target {self.target}",
            "subset" + "".join(f" {i + 1}" for i in self.subset),
            f"sign_swap {int(self.sign_swap_applied)}",
            f"det {self.certified_det}",
            "matrix",
        ]
        return "\n".join(lines) + "\n" + self.matrix.to_text() + "end\n"

    @classmethod
    def from_text(cls, text: str) -> "ConstructionCertificate":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != _CERT_HEADER:
            raise ValueError("not a certificate document")
        fields: dict[str, str] = {}
        idx = 1
        while idx < len(lines) and lines[idx] != "matrix":
            key, _, value = lines[idx].partition(" ")
            fields[key] = value
            idx += 1
        if idx == len(lines):
            raise ValueError("certificate has no matrix section")
        if lines[-1] != "end":
            raise ValueError("certificate is not terminated with 'end'")
        matrix = IntMatrix.from_text("\n".join(lines[idx + 1:-1]))
        try:
            n = int(fields["n"])
            k = int(fields["k"])
            target = int(fields["target"])
            subset = tuple(int(tok) - 1 for tok in fields["subset"].split())
            sign_swap = bool(int(fields["sign_swap"]))
            det = int(fields["det"])
        except KeyError as exc:
            raise ValueError(f"certificate is missing field {exc}") from None
        except ValueError:
            raise ValueError("certificate has a malformed field value") from None
        params = ConstructionParams(n, k)
        return cls(
            params=params,
            target=target,
            orthogonal=orthogonal_vector(n, k),
            subset=subset,
            top_row=matrix.rows[0],
            sign_swap_applied=sign_swap,
            matrix=matrix,
            certified_det=det,
        )


@lru_cache(maxsize=64)
def _normalized_rows(n: int, k: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...], int]:
    """Binarized rows normalized to unit determinant, with v and the range bound.

    The determinant of the rows under a unit top row is checked against the
    closed form (-1)^(n-k-1); when it is -1, rows 2 and 3 are exchanged so
    later subset sums come out with positive sign.
    """
    rows = binary_rows(n, k)
    v = orthogonal_vector(n, k)
    bound = theorem_bound(n, k)
    if list(v[:n - k]) != fib_prefix(k, n - k):
        raise InternalInvariantError("orthogonal vector prefix is not the k-step sequence")
    d = det_exact(rows)
    if d != (-1 if (n - k - 1) % 2 else 1):
        raise InternalInvariantError(
            f"unit-top-row determinant {d} contradicts the closed form for n={n}, k={k}"
        )
    if d == -1:
        rows = (rows[0], rows[2], rows[1]) + rows[3:]
    return rows, v, bound


def construct_matrix(n: int, target: int, k: int | None = None) -> ConstructionCertificate:
    """Build and certify a binary n x n matrix whose determinant is target.

    k defaults to the bound-maximizing step count.  |target| may be any
    value up to theorem_bound(n, k).  Negative targets are realized by
    building the positive matrix and swapping its bottom two rows, which
    negates the determinant and keeps every entry 0/1.  The certificate's
    determinant is recomputed from scratch before returning; a mismatch is
    an internal error.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if k is None:
        k = best_k(n)
    params = ConstructionParams(n, k)
    rows, v, bound = _normalized_rows(n, k)
    if abs(target) > bound:
        raise TargetOutOfRangeError(n, k, target, bound)

    subset = greedy_subset(v[:n - k], abs(target))
    members = set(subset)
    top = tuple(1 if j in members else 0 for j in range(n))
    built = [top, *rows[1:]]
    sign_swap = target < 0
    if sign_swap:
        built[-1], built[-2] = built[-2], built[-1]
    matrix = IntMatrix.from_rows(built)

    certified = det_exact(matrix)
    if certified != target:
        raise InternalInvariantError(
            f"certification failed: built determinant {certified}, wanted {target}"
        )
    return ConstructionCertificate(
        params=params,
        target=target,
        orthogonal=v,
        subset=subset,
        top_row=top,
        sign_swap_applied=sign_swap,
        matrix=matrix,
        certified_det=certified,
    )


def verify_certificate(cert: ConstructionCertificate) -> list[str]:
    """Re-check every certificate invariant; returns problems, empty when clean.

    Checks binarity, the recomputed determinant, the subset sum against the
    orthogonal vector, the top row indicator, and orthogonality of the
    vector to rows 2..n of the stored matrix.
    """
    problems = []
    n, k = cert.params.n, cert.params.k
    if cert.matrix.n != n:
        problems.append(f"matrix size {cert.matrix.n} does not match n {n}")
        return problems
    if not cert.matrix.is_binary():
        problems.append("matrix entries are not all 0/1")

    v = orthogonal_vector(n, k)
    if cert.orthogonal != v:
        problems.append("stored orthogonal vector does not match the (n, k) recurrences")
    if not all(0 <= i < n - k for i in cert.subset):
        problems.append(f"subset indices out of range [0, {n - k})")
    else:
        ssum = sum(v[i] for i in cert.subset)
        if ssum != abs(cert.target):
            problems.append(f"subset sums to {ssum}, expected |target| = {abs(cert.target)}")
    expected_top = tuple(1 if j in set(cert.subset) else 0 for j in range(n))
    if cert.matrix.rows[0] != expected_top:
        problems.append("matrix top row is not the subset indicator")
    if cert.top_row != expected_top:
        problems.append("stored top row is not the subset indicator")
    # Row swaps permute but never change the set of non-top rows, so
    # orthogonality must hold on the stored matrix regardless of the flags.
    if not is_orthogonal_to_all(v, cert.matrix.rows[1:]):
        problems.append("orthogonal vector is not orthogonal to rows 2..n")

    recomputed = det_exact(cert.matrix)
    if recomputed != cert.certified_det:
        problems.append(
            f"certified_det {cert.certified_det} but recomputed determinant {recomputed}"
        )
    if cert.certified_det != cert.target:
        problems.append(f"certified_det {cert.certified_det} differs from target {cert.target}")
    return problems
