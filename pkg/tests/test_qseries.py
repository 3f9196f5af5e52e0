from fractions import Fraction

import pytest

from slnbranch import (
    QuadraticFormData,
    TruncatedSeries,
    branching_by_fow,
    canonical_pair,
    cartan_matrix,
    fermionic_series,
    inv_pochhammer,
    inverse_cartan,
    lattice_enumeration_bound,
    lattice_points,
)
from oracles import count_parts_at_most


class TestTruncatedSeries:
    def test_arithmetic_is_exact(self):
        a = TruncatedSeries([1, 2, 3], 4)
        b = TruncatedSeries([0, 1, 1, 1, 1])
        assert (a + b).coeffs == (1, 3, 4, 1, 1)
        assert (a - b).coeffs == (1, 1, 2, -1, -1)
        assert (a * b).coeffs == (0, 1, 3, 6, 6)

    def test_multiplication_truncates_to_shorter_order(self):
        a = TruncatedSeries([1, 1], 1)
        b = TruncatedSeries([1, 1, 1], 2)
        assert (a * b).order == 1

    def test_scalar_ops(self):
        a = TruncatedSeries([1, 1, 1])
        assert (a - 1).coeffs == (0, 1, 1)
        assert (3 * a).coeffs == (3, 3, 3)

    def test_shifts(self):
        a = TruncatedSeries([0, 1, 2], 2)
        assert a.shift_down(1).coeffs == (1, 2)
        assert a.shift_up(1).coeffs == (0, 0, 1)
        with pytest.raises(ValueError):
            TruncatedSeries([1, 0], 1).shift_down(1)

    def test_big_integers_stay_exact(self):
        big = 10**30
        a = TruncatedSeries([big, big], 1)
        assert (a * a).coeffs == (big * big, 2 * big * big)


class TestInvPochhammer:
    def test_k0(self):
        assert inv_pochhammer(0, 5).coeffs == (1, 0, 0, 0, 0, 0)

    def test_k1_geometric(self):
        assert inv_pochhammer(1, 3).coeffs == (1, 1, 1, 1)

    def test_k2(self):
        assert inv_pochhammer(2, 4).coeffs == (1, 1, 2, 2, 3)

    def test_counts_partitions_into_bounded_parts(self):
        for k in range(5):
            series = inv_pochhammer(k, 10)
            for d in range(11):
                assert series[d] == count_parts_at_most(d, k)


class TestCartan:
    def test_inverse_entries(self):
        inv = inverse_cartan(3)
        assert inv == (
            (Fraction(2, 3), Fraction(1, 3)),
            (Fraction(1, 3), Fraction(2, 3)),
        )

    @pytest.mark.parametrize("n", range(2, 9))
    def test_inverse_times_cartan_is_identity(self, n):
        c = cartan_matrix(n)
        inv = inverse_cartan(n)
        size = n - 1
        for i in range(size):
            for j in range(size):
                entry = sum(c[i][k] * inv[k][j] for k in range(size))
                assert entry == (1 if i == j else 0)


class TestQuadraticForm:
    def test_exponent_values(self):
        qf = QuadraticFormData.create(3, 1, 2)
        assert qf.exponent((1, 0)) == 1
        assert qf.exponent((0, 2)) == 2

    def test_excluded_point_from_bound_example(self):
        qf = QuadraticFormData.create(3, 0, 0)
        assert qf.exponent((3, 0)) == 6

    def test_n2_square_over_two(self):
        qf = QuadraticFormData.create(2, 0, 0)
        assert qf.exponent((2,)) == 2
        assert qf.exponent((4,)) == 8

    def test_create_validates(self):
        with pytest.raises(ValueError):
            QuadraticFormData.create(3, 2, 1)


class TestFermionicSeries:
    @pytest.mark.parametrize(
        "n,s,t,expected",
        [
            (3, 0, 0, (1, 0, 1)),
            (3, 1, 2, (0, 1, 2, 2)),
            (2, 0, 0, (1, 0, 1, 1, 2)),
        ],
    )
    def test_examples(self, n, s, t, expected):
        assert fermionic_series(n, s, t, len(expected) - 1).coeffs == expected

    def test_folding_reflected_pairs(self):
        assert canonical_pair(3, 2, 2) == (1, 1)
        assert canonical_pair(3, 1, 2) == (1, 2)
        assert canonical_pair(4, 3, 3) == (1, 1)
        series = fermionic_series(3, 2, 2, 3)
        assert series.coeffs == fermionic_series(3, 1, 1, 3).coeffs == (0, 1, 1, 2)

    def test_every_admissible_exponent_is_integral(self):
        # lattice_points raises on any fractional admissible exponent
        for n in (2, 3, 4):
            for s in range(n):
                for t in range(s, n):
                    for _, q in lattice_points(n, s, t, 8):
                        assert q >= 0

    def test_stability_under_larger_bound(self):
        # enlarging the shell cutoff cannot change coefficients <= order
        for n, s, t, order in [(3, 0, 0, 4), (2, 1, 1, 6), (4, 1, 2, 5)]:
            bound = lattice_enumeration_bound(n, s, t, order)
            base = fermionic_series(n, s, t, order).coeffs
            assert fermionic_series(n, s, t, order, bound=bound + n).coeffs == base
            richer = fermionic_series(n, s, t, order + n).coeffs
            assert richer[: order + 1] == base
            assert lattice_enumeration_bound(n, s, t, order + n) >= bound

    def test_agrees_with_enumeration_small(self):
        for n in (2, 3):
            for s in range(n):
                for t in range(s, n):
                    j = (s + t) % n
                    assert (
                        fermionic_series(n, s, t, 6).coeffs
                        == branching_by_fow(n, j, s, 6).coeffs
                    )

    def test_lattice_point_count_reported_examples(self):
        pts = list(lattice_points(3, 1, 2, 3))
        assert ((1, 0), 1) in pts and ((0, 2), 2) in pts
