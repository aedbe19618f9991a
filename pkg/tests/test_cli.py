"""CLI behavior: round trips, exit statuses, output stability."""

import random

import pytest

from bindet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstruct:
    def test_emits_certificate(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "10", "--k", "3", "--det", "52",
                           "--format", "structured")
        assert code == 0
        assert out.startswith("certificate\n")
        assert "target 52" in out and "det 52" in out

    def test_zero_target(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "10", "--det", "0",
                           "--format", "structured")
        assert code == 0
        assert "det 0" in out

    def test_out_of_range_names_bound(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "10", "--k", "3", "--det", "53")
        assert code == 1
        assert "52" in err and "n=10" in err and "k=3" in err

    def test_matrix_emission(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "8", "--det", "5",
                           "--emit", "matrix", "--format", "structured")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "8" and len(lines) == 9

    def test_structured_output_is_stable(self, capsys):
        args = ("construct", "--n", "12", "--det", "-37", "--format", "structured")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_writes_file(self, capsys, tmp_path):
        path = tmp_path / "cert.txt"
        code, _, _ = run(capsys, "construct", "--n", "10", "--det", "7",
                         "--out", str(path), "--format", "structured")
        assert code == 0
        assert path.read_text().startswith("certificate\n")


class TestVerify:
    def make_cert(self, capsys, tmp_path, *extra):
        path = tmp_path / "cert.txt"
        code, _, _ = run(capsys, "construct", "--n", "10", "--k", "3", "--det", "21",
                         "--out", str(path), "--format", "structured", *extra)
        assert code == 0
        return path

    def test_round_trip(self, capsys, tmp_path):
        path = self.make_cert(capsys, tmp_path)
        code, out, _ = run(capsys, "verify", str(path), "--format", "structured")
        assert code == 0
        assert "status ok" in out and "det 21" in out

    def test_bit_flip_is_caught(self, capsys, tmp_path):
        path = self.make_cert(capsys, tmp_path)
        lines = path.read_text().splitlines()
        # Flip one 0/1 entry inside the matrix block (skip the size line).
        start = lines.index("matrix") + 2
        rng = random.Random(0)
        row = rng.randrange(start, start + 10)
        cells = lines[row].split()
        col = rng.randrange(len(cells))
        cells[col] = "1" if cells[col] == "0" else "0"
        lines[row] = " ".join(cells)
        path.write_text("\n".join(lines) + "\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code in (1, 3)
        assert "mismatch" in err

    def test_matrix_file_prints_determinant(self, capsys, tmp_path):
        path = tmp_path / "matrix.txt"
        code, _, _ = run(capsys, "construct", "--n", "9", "--det", "-4",
                         "--emit", "matrix", "--out", str(path), "--format", "structured")
        assert code == 0
        code, out, _ = run(capsys, "verify", str(path), "--format", "structured")
        assert code == 0
        assert "det -4" in out

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "junk.txt"
        path.write_text("certificate\nn ten\nmatrix\n1\n1\nend\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code == 1
        assert "malformed" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"))
        assert code == 1


class TestBound:
    def test_structured(self, capsys):
        code, out, _ = run(capsys, "bound", "--n", "10", "--k", "3",
                           "--format", "structured")
        assert code == 0
        assert "theorem_bound 52" in out

    def test_includes_corollary(self, capsys):
        code, out, _ = run(capsys, "bound", "--n", "16", "--format", "structured")
        assert code == 0
        assert "corollary_bound 20" in out

    def test_small_n(self, capsys):
        code, out, _ = run(capsys, "bound", "--n", "4", "--format", "structured")
        assert code == 0
        assert "theorem_bound 2" in out and "corollary_bound 0" in out


class TestFib:
    def test_values(self, capsys):
        code, out, _ = run(capsys, "fib", "--k", "3", "--count", "7",
                           "--format", "structured")
        assert code == 0
        assert "values 1 1 2 4 7 13 24" in out

    def test_rejects_bad_count(self, capsys):
        code, _, err = run(capsys, "fib", "--k", "3", "--count", "0")
        assert code == 1


class TestSpectrum:
    def test_exhaustive_n2(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "2", "--format", "structured")
        assert code == 0
        assert "values -1 0 1" in out and "d 2" in out

    def test_cap_is_enforced(self, capsys):
        code, _, err = run(capsys, "spectrum", "--n", "6")
        assert code == 1
        assert "force" in err

    def test_family_from_rows_file(self, capsys, tmp_path):
        path = tmp_path / "rows.txt"
        path.write_text("2\n0 1 0\n0 0 1\n")
        code, out, _ = run(capsys, "spectrum", "--rows", str(path),
                           "--format", "structured")
        assert code == 0
        assert "mode family" in out and "values 0 1" in out

    def test_malformed_rows_file(self, capsys, tmp_path):
        path = tmp_path / "rows.txt"
        path.write_text("2\n0 1 0\n")
        code, _, err = run(capsys, "spectrum", "--rows", str(path))
        assert code == 1
        assert "malformed rows file" in err

    def test_no_values_flag(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "2", "--no-values",
                           "--format", "structured")
        assert code == 0
        assert "values" not in out


class TestSelftest:
    def test_small_grid_passes(self, capsys):
        code, out, _ = run(capsys, "selftest", "--n-max", "8", "--k-max", "3",
                           "--sweep-limit", "64", "--sample", "20",
                           "--format", "structured")
        assert code == 0
        assert "selftest:" in out and "pass n=8" in out


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--n", "10"])  # missing --det
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
