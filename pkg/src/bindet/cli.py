"""Command-line surface: construct, verify, bound, fib, spectrum, selftest.

Exit statuses: 0 success, 1 domain error (out of range, infeasible,
verification mismatch, malformed file), 2 usage error (argparse), 3
internal invariant failure.

Output modes: ``--format structured`` emits the stable text documents
(certificate, matrix, spectrum, bound) with big integers as decimal
strings and no timing fields, so identical inputs give byte-identical
output; ``--format pretty`` is for humans and may include elapsed times.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import mpmath

from .construction import ConstructionCertificate, construct_matrix, verify_certificate
from .errors import (
    DependentRowsError,
    EnumerationCapError,
    InternalInvariantError,
    TargetOutOfRangeError,
)
from .exact import IntMatrix, det_exact
from .fibk import bound_table, fib_prefix
from .oracle import spectrum_exhaustive, spectrum_family, verify_construction

_CERT_HEADER = "certificate"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    cert = construct_matrix(args.n, args.det, args.k)
    doc = cert.matrix.to_text() if args.emit == "matrix" else cert.to_text()
    if args.format == "pretty":
        print(
            f"constructed {cert.params.n}x{cert.params.n} binary matrix with "
            f"det {cert.certified_det} (k={cert.params.k}, "
            f"subset size {len(cert.subset)}, sign swap {cert.sign_swap_applied})"
        )
        if args.out:
            _emit(doc, args.out)
            print(f"wrote {args.out}")
        else:
            sys.stdout.write(doc)
    else:
        _emit(doc, args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return 1
    stripped = text.lstrip()
    if stripped.startswith(_CERT_HEADER):
        try:
            cert = ConstructionCertificate.from_text(text)
        except ValueError as exc:
            print(f"malformed certificate: {exc}", file=sys.stderr)
            return 1
        problems = verify_certificate(cert)
        if problems:
            for p in problems:
                print(f"mismatch: {p}", file=sys.stderr)
            return 1
        if args.format == "pretty":
            print(f"certificate ok: n={cert.params.n} k={cert.params.k} det={cert.certified_det}")
        else:
            sys.stdout.write(f"verify\nstatus ok\ndet {cert.certified_det}\nend\n")
        return 0
    try:
        matrix = IntMatrix.from_text(text)
    except ValueError as exc:
        print(f"malformed matrix: {exc}", file=sys.stderr)
        return 1
    det = det_exact(matrix)
    if args.format == "pretty":
        print(f"matrix is {matrix.n}x{matrix.n}, det = {det}")
    else:
        sys.stdout.write(f"verify\nstatus ok\ndet {det}\nend\n")
    return 0


def cmd_bound(args) -> int:
    table = bound_table(args.n, args.k)
    alpha = mpmath.nstr(table.alpha, 30)
    if args.format == "pretty":
        print(f"n = {table.n}, k = {table.k}")
        print(f"constructive range (prefix-sum bound): {table.theorem_bound}")
        print(f"closed-form bound floor(2^n/(201 n)): {table.corollary_bound}")
        print(f"growth root alpha_{table.k} = {alpha}")
        print(f"bound-maximizing k for this n: {table.best_k}")
    else:
        sys.stdout.write(
            "bound\n"
            f"n {table.n}\n"
            f"k {table.k}\n"
            f"theorem_bound {table.theorem_bound}\n"
            f"corollary_bound {table.corollary_bound}\n"
            f"alpha {alpha}\n"
            f"best_k {table.best_k}\n"
            "end\n"
        )
    return 0


def cmd_fib(args) -> int:
    if args.count < 1:
        raise ValueError(f"count must be positive, got {args.count}")
    vals = fib_prefix(args.k, args.count)
    if args.format == "pretty":
        print(f"F_{args.k}(1..{args.count}): " + " ".join(str(v) for v in vals))
    else:
        sys.stdout.write(
            "fib\n"
            f"k {args.k}\n"
            f"count {args.count}\n"
            "values " + " ".join(str(v) for v in vals) + "\nend\n"
        )
    return 0


def _parse_rows_file(path: str) -> list[tuple[int, ...]]:
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("rows file is empty")
    try:
        m = int(lines[0])
    except ValueError:
        raise ValueError(f"rows file must start with the row count, got {lines[0]!r}") from None
    if len(lines) != m + 1:
        raise ValueError(f"expected {m} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = tuple(int(tok) for tok in ln.split())
        except ValueError:
            raise ValueError(f"non-integer entry in row {ln!r}") from None
        if len(row) != m + 1:
            raise ValueError(f"rows must have {m + 1} entries, found {len(row)}")
        rows.append(row)
    return rows


def cmd_spectrum(args) -> int:
    if args.n is not None:
        report = spectrum_exhaustive(args.n, workers=args.workers, force=args.force)
    else:
        try:
            rows = _parse_rows_file(args.rows)
        except OSError as exc:
            print(f"error: cannot read {args.rows}: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            print(f"malformed rows file: {exc}", file=sys.stderr)
            return 1
        report = spectrum_family(rows)
    doc = report.to_text(include_values=not args.no_values)
    if args.format == "pretty":
        print(
            f"{report.mode} spectrum at n={report.n}: {report.count} values, "
            f"smallest missing natural {report.d} ({report.elapsed:.2f}s)"
        )
        if not args.no_values:
            print("values: " + " ".join(str(v) for v in report.values))
        if args.out:
            _emit(doc, args.out)
            print(f"wrote {args.out}")
    else:
        _emit(doc, args.out)
    return 0


def cmd_selftest(args) -> int:
    failures = 0
    cases = 0
    for k in range(2, args.k_max + 1):
        for n in range(2 * k, args.n_max + 1):
            report = verify_construction(
                n, k, sweep_limit=args.sweep_limit, sample=args.sample, seed=args.seed
            )
            cases += 1
            if report.all_passed:
                if args.format == "pretty":
                    print(
                        f"pass n={n} k={k} ({report.targets_swept} targets, "
                        f"{report.elapsed:.2f}s)"
                    )
                else:
                    print(f"pass n={n} k={k} targets {report.targets_swept}")
            else:
                failures += 1
                sys.stdout.write(report.to_text())
    print(f"selftest: {cases - failures}/{cases} cases passed")
    return 3 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bindet",
        description="Binary matrices with prescribed determinants: "
        "certified construction, exact bounds, brute-force spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("pretty", "structured"),
            default="pretty",
            help="pretty for humans, structured for byte-stable scripting output",
        )

    p = sub.add_parser("construct", help="build a certified matrix with a given determinant")
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument("--det", type=int, required=True, help="target determinant")
    p.add_argument("--k", type=int, default=None, help="step count (default: best for n)")
    p.add_argument("--out", default=None, help="write the document to this path")
    p.add_argument(
        "--emit",
        choices=("certificate", "matrix"),
        default="certificate",
        help="emit the full certificate or just the matrix",
    )
    add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-check a certificate or matrix file")
    p.add_argument("path", help="certificate or matrix text file")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="print the constructive range bounds for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("fib", help="print a k-step Fibonacci prefix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("spectrum", help="enumerate reachable determinants")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--n", type=int, default=None, help="exhaustive spectrum at this size")
    grp.add_argument("--rows", default=None, help="family spectrum over fixed rows from a file")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true", help="override the exhaustive size cap")
    p.add_argument("--no-values", action="store_true", help="omit the value list")
    p.add_argument("--out", default=None)
    add_format(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("selftest", help="run construction self-tests over a grid")
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--sweep-limit", type=int, default=512)
    p.add_argument("--sample", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 3
    except (
        TargetOutOfRangeError,
        EnumerationCapError,
        DependentRowsError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
