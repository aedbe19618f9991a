"""Independent ground truth: brute-force spectra and direct verifiers.

The exhaustive oracle enumerates every binary matrix of a given size and
reports the exact set of determinants it reaches; the family oracle does
the same for the 2^n matrices sharing fixed rows 2..n.  Both expand the
free top row through the first-row Laplace expansion, which is an exact
determinant identity for any rows, so the enumeration kernels only ever
do 64-bit integer work (magnitudes are pre-checked).

None of this shares an elimination path with the construction module's
certification, which is the point: agreement between the two is evidence,
not tautology.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .construction import (
    binarizing_transform,
    binary_rows,
    construct_matrix,
    orthogonal_vector,
    seed_matrix,
)
from .errors import DependentRowsError, EnumerationCapError, InternalInvariantError
from .exact import cofactor_vector, det_exact, dot, is_orthogonal_to_all
from .fibk import theorem_bound

_FAMILY_MAX_N = 30
_FAMILY_MAX_CELLS = 1 << 28
_INT64_GUARD = 1 << 62


@dataclass(frozen=True)
class SpectrumReport:
    """Achieved determinants of one enumeration, with derived statistics."""

    n: int
    mode: str
    values: tuple[int, ...]
    d: int
    count: int
    elapsed: float

    def to_text(self, include_values: bool = True) -> str:
        lines = [
            "spectrum",
            f"n {self.n}",
            f"mode {self.mode}",
            f"count {self.count}",
            f"d {self.d}",
        ]
        if include_values:
            lines.append("values " + " ".join(str(v) for v in self.values))
        lines.append("end")
        return "\n".join(lines) + "\n"


def smallest_missing_natural(values: Iterable[int]) -> int:
    """Least d >= 1 absent from values."""
    present = set(values)
    d = 1
    while d in present:
        d += 1
    return d


def _report(n: int, mode: str, values: Sequence[int], t0: float) -> SpectrumReport:
    vals = tuple(sorted(int(v) for v in values))
    return SpectrumReport(
        n=n,
        mode=mode,
        values=vals,
        d=smallest_missing_natural(vals),
        count=len(vals),
        elapsed=time.perf_counter() - t0,
    )


def spectrum_exhaustive(
    n: int, cap: int = 5, workers: int = 1, force: bool = False
) -> SpectrumReport:
    """Exact determinant spectrum over all 2^(n^2) binary n x n matrices.

    Work is partitioned into 2^ceil(log2 workers) contiguous blocks of the
    row-2..n bit space and merged by bitmap union, so the result is
    identical for every worker count.  n above the cap is refused unless
    force is given; the cap default of 5 is the largest desk-scale size
    (2^25 families).
    """
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    if n > cap and not force:
        raise EnumerationCapError(
            f"exhaustive enumeration at n={n} means 2^{n * n} matrices "
            f"(~{2.0 ** (n * n):.2e}); cap is n={cap}, pass force to override"
        )
    if n == 1:
        return _report(1, "exhaustive", (0, 1), t0)

    # |det| <= n! bounds every reachable value, so a flat bitmap suffices.
    offset = math.factorial(n)
    total = 1 << (n * (n - 1))
    nchunks = 1 << (workers - 1).bit_length()
    nchunks = min(nchunks, total)
    step = total // nchunks
    spans = [(i * step, (i + 1) * step) for i in range(nchunks)]

    def run(span):
        seen = np.zeros(2 * offset + 1, dtype=np.uint8)
        _kernels.exhaustive_chunk(n, span[0], span[1], seen)
        return seen

    if workers == 1:
        results = [run(span) for span in spans]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, spans))
    merged = results[0]
    for seen in results[1:]:
        merged |= seen
    values = [int(i) - offset for i in np.flatnonzero(merged)]
    return _report(n, "exhaustive", values, t0)


def spectrum_family(rows: Sequence[Sequence[int]]) -> SpectrumReport:
    """Determinants over all 2^n top rows above the given fixed rows 2..n.

    The cofactors of the fixed rows are computed exactly, then every subset
    sum is enumerated.  Cofactor magnitudes and the reachable value range
    must fit the 64-bit kernels; binary rows at n <= 30 always do.
    """
    t0 = time.perf_counter()
    rows = [tuple(int(x) for x in r) for r in rows]
    m = len(rows)
    n = m + 1
    if m < 1:
        raise ValueError("need at least one fixed row")
    if any(len(r) != n for r in rows):
        raise ValueError(f"need {m} rows of length {m + 1}")
    if n > _FAMILY_MAX_N:
        raise EnumerationCapError(
            f"family enumeration at n={n} means 2^{n} top rows; cap is n={_FAMILY_MAX_N}"
        )

    cof = cofactor_vector(rows)
    if sum(abs(c) for c in cof) >= _INT64_GUARD:
        raise EnumerationCapError("cofactor magnitudes exceed the 64-bit kernels")
    lo = sum(c for c in cof if c < 0)
    hi = sum(c for c in cof if c > 0)
    size = hi - lo + 1
    if size > _FAMILY_MAX_CELLS:
        raise EnumerationCapError(
            f"value range {size} exceeds the bitmap cap {_FAMILY_MAX_CELLS}"
        )
    seen = np.zeros(size, dtype=np.uint8)
    _kernels.family_bitmap(np.array(cof, dtype=np.int64), lo, seen)
    values = [int(i) + lo for i in np.flatnonzero(seen)]
    return _report(n, "family", values, t0)


def verify_laplace_identity(
    rows: Sequence[Sequence[int]],
    trials: int = 100,
    rng: "random.Random | int | None" = None,
) -> bool:
    """Check det([r1; rows]) = c * (v . r1) on random binary top rows.

    v is the exact cofactor vector of the rows and c is derived from the
    unit-top-row determinant at the first index where v is nonzero, so the
    check exercises the determinant path against the cofactor path.
    Linearly dependent rows raise DependentRowsError, a distinct outcome
    from a failed identity.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    n = len(rows) + 1
    v = cofactor_vector(rows)
    if not any(v):
        raise DependentRowsError("rows are linearly dependent; the identity needs rank n-1")
    k0 = next(i for i, x in enumerate(v) if x != 0)
    unit = tuple(1 if j == k0 else 0 for j in range(n))
    d = det_exact([unit, *rows])
    c, rem = divmod(d, v[k0])
    if rem != 0:
        raise InternalInvariantError("unit-row determinant is not a multiple of the cofactor")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    for _ in range(trials):
        r1 = tuple(rng.randint(0, 1) for _ in range(n))
        if det_exact([r1, *rows]) != c * dot(v, r1):
            return False
    return True


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ConstructionCheckReport:
    """Aggregated self-test of the construction at one (n, k)."""

    n: int
    k: int
    checks: tuple[CheckResult, ...]
    targets_swept: int
    elapsed: float

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"selftest n={self.n} k={self.k}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            suffix = f" ({c.detail})" if c.detail and not c.passed else ""
            lines.append(f"  {status} {c.name}{suffix}")
        lines.append(f"  targets swept: {self.targets_swept}")
        return "\n".join(lines) + "\n"


def verify_construction(
    n: int,
    k: int,
    sweep_limit: int = 4096,
    sample: int = 200,
    seed: int = 0,
) -> ConstructionCheckReport:
    """Re-derive and test every claimed property of the construction at (n, k).

    Checks: all binarized entries in {0,1}; the row-sum formula against the
    matrix product; orthogonality of the recurrence vector to rows 2..n of
    both the seed and the binarized matrix; the unit-top-row determinant
    being (-1)^(n-k-1); and a full (or sampled, above sweep_limit) sweep of
    targets through construct_matrix with exact certification.  Failures
    are reported, not raised.
    """
    t0 = time.perf_counter()
    checks: list[CheckResult] = []
    swept = 0

    seed_rows = seed_matrix(n, k).rows
    trans = np.array(binarizing_transform(n, k).rows, dtype=np.int64)
    base = np.array(seed_rows, dtype=np.int64)
    product = trans @ base

    ok = bool(((product == 0) | (product == 1)).all())
    detail = ""
    if not ok:
        i, j = (int(x) for x in np.argwhere((product != 0) & (product != 1))[0])
        detail = f"entry ({i + 1}, {j + 1}) = {int(product[i, j])}"
    checks.append(CheckResult("binary_entries", ok, detail))

    try:
        rows = binary_rows(n, k)
        checks.append(CheckResult("row_formula_agreement", True))
    except InternalInvariantError as exc:
        rows = tuple(tuple(int(x) for x in r) for r in product)
        checks.append(CheckResult("row_formula_agreement", False, str(exc)))

    v = orthogonal_vector(n, k)
    ok = is_orthogonal_to_all(v, seed_rows[1:])
    checks.append(CheckResult("orthogonality_seed", ok))
    ok = is_orthogonal_to_all(v, rows[1:])
    checks.append(CheckResult("orthogonality_binarized", ok))

    d = det_exact(rows)
    expect = -1 if (n - k - 1) % 2 else 1
    checks.append(
        CheckResult(
            "unit_determinant",
            d == expect,
            "" if d == expect else f"got {d}, expected {expect}",
        )
    )

    bound = theorem_bound(n, k)
    if 2 * bound + 1 <= sweep_limit:
        targets: Iterable[int] = range(-bound, bound + 1)
    else:
        rng = random.Random(seed)
        picked = {0, 1, -1, bound, -bound}
        while len(picked) < sample:
            picked.add(rng.randint(-bound, bound))
        targets = sorted(picked)
    ok = True
    detail = ""
    for a in targets:
        try:
            cert = construct_matrix(n, a, k)
        except Exception as exc:  # a raise here is a finding, not a crash
            ok = False
            detail = f"target {a}: {exc}"
            break
        swept += 1
        if cert.certified_det != a:
            ok = False
            detail = f"target {a}: certified {cert.certified_det}"
            break
    checks.append(CheckResult("target_sweep", ok, detail))

    return ConstructionCheckReport(
        n=n,
        k=k,
        checks=tuple(checks),
        targets_swept=swept,
        elapsed=time.perf_counter() - t0,
    )
