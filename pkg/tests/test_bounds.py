from itertools import combinations

import mpmath
import pytest

from deckrecon.bounds import (exhaustive_reconstruction_number, predicate,
                              reconstruction_number_formula, set_reconstruction_number,
                              tee, translation_classes)
from deckrecon.deckset import SubsetT, multiset_decks_equal
from deckrecon.errors import InstanceTooLargeError
from deckrecon.witness import build_witness, verify_witness


def float_formula(n):
    with mpmath.workdps(60):
        inner = n + 1 - mpmath.log(n, 2)
        val = n + 1 - mpmath.log(inner, 2)
        nearest = mpmath.nint(val)
        if abs(val - nearest) < mpmath.mpf(10) ** -40:
            val = nearest
        return int(mpmath.floor(val))


def brute_force_r(n):
    """r(Z_2^n) from brute-force decks: max over class pairs of the least k
    with differing decks."""
    reps = [SubsetT(n, m) for m in translation_classes(n)]
    best = 1
    for T, U in combinations(reps, 2):
        k = 1
        while multiset_decks_equal(T, U, k):
            k += 1
        best = max(best, k)
    return best


class TestTee:
    @pytest.mark.parametrize("n,t", [(1, 0), (2, 0), (3, 1), (6, 2), (10, 2), (11, 3)])
    def test_examples(self, n, t):
        assert tee(n) == t

    def test_defining_inequality(self):
        for n in range(1, 3000):
            t = tee(n)
            assert 2**t + t <= n < 2 ** (t + 1) + t + 1

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            tee(0)


class TestFormula:
    @pytest.mark.parametrize("n,r", [(1, 1), (2, 2), (3, 2), (4, 3), (6, 4), (10, 8)])
    def test_examples(self, n, r):
        assert reconstruction_number_formula(n) == r

    def test_monotone_and_capped(self):
        prev = 0
        for n in range(1, 2049):
            r = reconstruction_number_formula(n)
            assert prev <= r <= n + 1
            prev = r

    def test_float_cross_check(self):
        for n in range(1, 2049):
            assert float_formula(n) == reconstruction_number_formula(n), n


class TestPredicate:
    def test_examples(self):
        assert predicate(4, 3)
        assert not predicate(3, 3)
        assert all(not predicate(n, n + 2) for n in range(1, 100))

    def test_equivalence(self):
        for n in range(1, 300):
            r = reconstruction_number_formula(n)
            for k in range(1, n + 3):
                assert predicate(n, k) == (k <= r)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            predicate(0, 1)


class TestClasses:
    @pytest.mark.parametrize("n,count", [(1, 3), (2, 7), (3, 46), (4, 4336)])
    def test_burnside_counts(self, n, count):
        # orbits of subsets under translation: (2^(2^n) + (2^n - 1) 2^(2^(n-1))) / 2^n
        assert count == (2 ** (2**n) + (2**n - 1) * 2 ** (2 ** (n - 1))) // 2**n
        assert len(translation_classes(n)) == count

    def test_too_large(self):
        with pytest.raises(InstanceTooLargeError):
            translation_classes(5)


class TestSetReconstructionNumber:
    def test_examples(self):
        assert set_reconstruction_number(SubsetT(1, (0,))) == 1
        assert set_reconstruction_number(SubsetT(2, (0, 1))) == 2
        assert set_reconstruction_number(SubsetT(2, ())) == 1

    def test_brute_force_n2(self):
        subsets = [SubsetT(2, tuple(x for x in range(4) if m >> x & 1)) for m in range(16)]
        for T in subsets:
            best = 1
            for U in subsets:
                if any(U == T.translate(z) for z in range(4)):
                    continue
                k = 1
                while multiset_decks_equal(T, U, k):
                    k += 1
                best = max(best, k)
            assert set_reconstruction_number(T) == best

    def test_too_large(self):
        with pytest.raises(InstanceTooLargeError):
            set_reconstruction_number(SubsetT(5, (0,)))


class TestExhaustive:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_small(self, n):
        res = exhaustive_reconstruction_number(n)
        assert res.r == reconstruction_number_formula(n) == brute_force_r(n)
        assert all(d == res.r for _, _, d in res.extremal_pairs)

    def test_n2_extremal_pair(self):
        res = exhaustive_reconstruction_number(2)
        assert (SubsetT(2, (0, 1)), SubsetT(2, (0, 3)), 2) in res.extremal_pairs

    def test_extremal_pairs_n3_by_decks(self):
        res = exhaustive_reconstruction_number(3)
        for A, B, d in res.extremal_pairs:
            assert multiset_decks_equal(A, B, d - 1) and not multiset_decks_equal(A, B, d)

    def test_workers_deterministic(self):
        assert exhaustive_reconstruction_number(4, workers=1) == \
            exhaustive_reconstruction_number(4, workers=2)

    def test_out_of_range(self):
        with pytest.raises(InstanceTooLargeError):
            exhaustive_reconstruction_number(5)

    def test_lower_bounds_meet_formula(self):
        for n in range(2, 5):
            best = max(k for k in range(2, n + 2) if predicate(n, k)
                       and verify_witness(*build_witness(n, k), k).valid)
            assert best == reconstruction_number_formula(n)
