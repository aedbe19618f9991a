"""The construction pipeline: seed, transform, rows, vector, subsets, certificates."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bindet import (
    ConstructionCertificate,
    IntMatrix,
    TargetOutOfRangeError,
    binarizing_transform,
    binary_rows,
    construct_matrix,
    det_exact,
    fib_prefix,
    greedy_subset,
    is_orthogonal_to_all,
    orthogonal_vector,
    seed_matrix,
    theorem_bound,
    verify_certificate,
)


class TestSeedMatrix:
    def test_matches_reference_10_3(self, seed_10_3):
        assert seed_matrix(10, 3).rows == seed_10_3

    def test_small_case_by_hand(self):
        # Row 3 is the first finishing row: diagonal 1 plus ones on columns
        # i-k..n-k = 1..2; the recurrence vector (1, 1, -2, -1) confirms it.
        assert seed_matrix(4, 2).rows == (
            (1, 0, 0, 0),
            (1, -1, 0, 0),
            (1, 1, 1, 0),
            (0, 1, 0, 1),
        )
        assert is_orthogonal_to_all(orthogonal_vector(4, 2), seed_matrix(4, 2).rows[1:])

    def test_ternary_lower_triangular(self):
        for n, k in ((8, 2), (9, 4), (20, 5)):
            m = seed_matrix(n, k)
            assert m.is_ternary()
            assert all(m.rows[i][j] == 0 for i in range(n) for j in range(i + 1, n))

    def test_determinant_closed_form(self):
        for k in range(2, 7):
            for n in range(2 * k, 2 * k + 10):
                expect = -1 if (n - k - 1) % 2 else 1
                assert det_exact(seed_matrix(n, k)) == expect

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            seed_matrix(5, 3)
        with pytest.raises(ValueError):
            seed_matrix(10, 1)


class TestBinarizingTransform:
    def test_matches_reference_10_3(self, transform_10_3):
        assert binarizing_transform(10, 3).rows == transform_10_3

    def test_unit_diagonal_and_top_row(self):
        for n, k in ((4, 2), (12, 3), (17, 5)):
            t = binarizing_transform(n, k)
            assert all(t.rows[i][i] == 1 for i in range(n))
            assert t.rows[0] == (1,) + (0,) * (n - 1)
            assert det_exact(t) == 1


class TestBinaryRows:
    def test_top_row_is_e1(self):
        for n, k in ((4, 2), (10, 3), (13, 4)):
            assert binary_rows(n, k)[0] == (1,) + (0,) * (n - 1)

    def test_last_row_is_its_own_seed_row(self):
        # For i > n - k the fold adds nothing, so r_i is the seed row.
        assert binary_rows(10, 3)[9] == (0, 0, 0, 0, 0, 0, 1, 0, 0, 1)

    def test_row_2_is_summed_seed_rows(self, seed_10_3):
        expect = tuple(
            a + b + c for a, b, c in zip(seed_10_3[1], seed_10_3[4], seed_10_3[7])
        )
        rows = binary_rows(10, 3)
        assert rows[1] == expect
        assert set(expect) <= {0, 1}

    def test_all_entries_binary_on_a_grid(self):
        for k in range(2, 7):
            for n in range(2 * k, 41):
                for row in binary_rows(n, k):
                    assert set(row) <= {0, 1}


class TestOrthogonalVector:
    def test_reference_value(self, v_10_3):
        assert orthogonal_vector(10, 3) == v_10_3

    def test_prefix_is_k_step_sequence(self):
        for n, k in ((10, 3), (20, 4), (30, 6)):
            v = orthogonal_vector(n, k)
            assert list(v[: n - k]) == fib_prefix(k, n - k)

    def test_boundary_shape(self):
        # At n = 2k the vector is k positive entries then k negative ones.
        for k in range(2, 7):
            v = orthogonal_vector(2 * k, k)
            assert all(x > 0 for x in v[:k])
            assert all(x < 0 for x in v[k:])

    def test_orthogonal_to_seed_and_binarized_rows(self):
        for n, k in ((8, 2), (9, 4), (14, 3), (21, 5)):
            v = orthogonal_vector(n, k)
            assert is_orthogonal_to_all(v, seed_matrix(n, k).rows[1:])
            assert is_orthogonal_to_all(v, binary_rows(n, k)[1:])


class TestGreedySubset:
    WEIGHTS = (1, 1, 2, 4, 7, 13, 24)

    def test_zero_target_empty(self):
        assert greedy_subset(self.WEIGHTS, 0) == ()

    def test_full_sum_takes_everything(self):
        assert greedy_subset(self.WEIGHTS, 52) == tuple(range(7))

    def test_greedy_trace_for_20(self):
        subset = greedy_subset(self.WEIGHTS, 20)
        assert subset == (4, 5)  # 7 + 13
        assert sum(self.WEIGHTS[i] for i in subset) == 20

    def test_every_target_reachable_exhaustively(self):
        for k in (2, 3, 4):
            weights = fib_prefix(k, 20)
            total = sum(weights)
            for a in range(total + 1):
                subset = greedy_subset(weights, a)
                assert sum(weights[i] for i in subset) == a

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(ValueError, match=r"weights\[2\]"):
            greedy_subset((1, 1, 0, 2), 1)

    def test_rejects_bad_first_weight(self):
        with pytest.raises(ValueError, match=r"weights\[0\]"):
            greedy_subset((2, 1, 1), 1)

    def test_rejects_completeness_violation(self):
        with pytest.raises(ValueError, match=r"weights\[3\]"):
            greedy_subset((1, 1, 2, 5), 3)

    def test_rejects_target_outside_range(self):
        with pytest.raises(ValueError, match="outside"):
            greedy_subset((1, 1, 2), 5)
        with pytest.raises(ValueError, match="outside"):
            greedy_subset((1, 1, 2), -1)


@st.composite
def complete_sequence(draw):
    length = draw(st.integers(1, 12))
    weights = [1]
    for _ in range(length - 1):
        weights.append(draw(st.integers(1, sum(weights))))
    return weights


@settings(max_examples=200, deadline=None)
@given(complete_sequence(), st.data())
def test_greedy_subset_property(weights, data):
    target = data.draw(st.integers(0, sum(weights)))
    subset = greedy_subset(weights, target)
    assert sum(weights[i] for i in subset) == target
    assert len(set(subset)) == len(subset)


class TestConstructMatrix:
    def test_zero_target_gives_singular_matrix(self):
        cert = construct_matrix(10, 0, 3)
        assert cert.subset == ()
        assert cert.matrix.rows[0] == (0,) * 10
        assert cert.certified_det == 0

    def test_full_bound_target(self):
        cert = construct_matrix(10, 52, 3)
        assert cert.certified_det == 52
        assert cert.matrix.is_binary()
        assert det_exact(cert.matrix) == 52

    def test_negative_target(self):
        cert = construct_matrix(10, -17, 3)
        assert cert.certified_det == -17
        assert cert.sign_swap_applied
        assert cert.matrix.is_binary()

    def test_default_k_is_best(self):
        cert = construct_matrix(12, 5)
        assert cert.params.k == 3  # best_k(12)
        assert cert.certified_det == 5

    def test_out_of_range_reports_bound(self):
        with pytest.raises(TargetOutOfRangeError, match="at most 52"):
            construct_matrix(10, 53, 3)
        with pytest.raises(TargetOutOfRangeError):
            construct_matrix(10, -53, 3)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            construct_matrix(3, 1)

    def test_certificate_invariants(self):
        cert = construct_matrix(11, -30, 3)
        n, k = cert.params.n, cert.params.k
        assert sum(cert.orthogonal[i] for i in cert.subset) == 30
        assert cert.top_row == tuple(
            1 if j in set(cert.subset) else 0 for j in range(n)
        )
        assert all(i < n - k for i in cert.subset)
        assert is_orthogonal_to_all(cert.orthogonal, cert.matrix.rows[1:])

    def test_negative_unit_determinant_branch(self):
        # n - k - 1 odd makes the raw unit-top-row determinant -1, forcing
        # the row-2/3 exchange before subset selection.
        assert det_exact(binary_rows(11, 3)) == -1
        for a in (0, 1, -1, 7, 96, -96):
            cert = construct_matrix(11, a, 3)
            assert cert.certified_det == a

    def test_sweep_small_case(self):
        bound = theorem_bound(8, 2)
        for a in range(-bound, bound + 1):
            assert construct_matrix(8, a, 2).certified_det == a


class TestCertificateSerialization:
    def test_round_trip(self):
        cert = construct_matrix(10, -29, 3)
        parsed = ConstructionCertificate.from_text(cert.to_text())
        assert parsed == cert

    def test_verify_clean(self):
        cert = construct_matrix(12, 100, 4)  # bound at (12, 4) is 116
        assert verify_certificate(cert) == []

    def test_verify_catches_flipped_bit(self):
        cert = construct_matrix(10, 21, 3)
        rng = random.Random(5)
        i = rng.randrange(10)
        j = rng.randrange(10)
        rows = [list(r) for r in cert.matrix.rows]
        rows[i][j] ^= 1
        mutated = ConstructionCertificate(
            params=cert.params,
            target=cert.target,
            orthogonal=cert.orthogonal,
            subset=cert.subset,
            top_row=cert.top_row,
            sign_swap_applied=cert.sign_swap_applied,
            matrix=IntMatrix.from_rows(rows),
            certified_det=cert.certified_det,
        )
        assert verify_certificate(mutated)

    def test_verify_catches_wrong_det_claim(self):
        cert = construct_matrix(10, 21, 3)
        lying = ConstructionCertificate(
            params=cert.params,
            target=22,
            orthogonal=cert.orthogonal,
            subset=cert.subset,
            top_row=cert.top_row,
            sign_swap_applied=cert.sign_swap_applied,
            matrix=cert.matrix,
            certified_det=22,
        )
        problems = verify_certificate(lying)
        assert any("recomputed" in p or "subset" in p for p in problems)

    def test_from_text_rejects_truncated(self):
        text = construct_matrix(10, 3, 3).to_text()
        with pytest.raises(ValueError):
            ConstructionCertificate.from_text(text.replace("end", ""))
        with pytest.raises(ValueError):
            ConstructionCertificate.from_text("certificate\nn 10\n")
