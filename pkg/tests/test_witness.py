from itertools import combinations

import pytest

from deckrecon.deckset import SubsetT, find_translation
from deckrecon.errors import InfeasibleError
from deckrecon.gf2core import enumerate_coset
from deckrecon.witness import (build_witness, feasible_pairs, hyperplane_cosets,
                               verify_witness, witness_blocks)


def intersect(cosets):
    sets = [set(enumerate_coset(c)) for c in cosets]
    return set.intersection(*sets)


class TestHyperplaneCosets:
    def test_k3(self):
        cs = hyperplane_cosets(3)
        assert [enumerate_coset(c) for c in cs] == [[0, 2], [0, 3], [2, 3]]
        assert intersect(cs) == set()
        assert [intersect(pair) for pair in combinations(cs, 2)] == [{0}, {2}, {3}]

    @pytest.mark.parametrize("k", range(3, 11))
    def test_intersection_pattern(self, k):
        cs = hyperplane_cosets(k)
        assert len(cs) == k
        assert all(len(c.basis) == k - 2 for c in cs)
        assert intersect(cs) == set()
        for j in range(k):
            rest = intersect(cs[:j] + cs[j + 1:])
            assert rest
        # dropping x_1 = 0 leaves the all-ones vector
        assert (1 << (k - 1)) - 1 in intersect(cs[1:])

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            hyperplane_cosets(2)


class TestBuild:
    def test_examples(self):
        A, B = build_witness(2, 2)
        assert (A.members, B.members) == ((0, 1), (0, 3))
        A, B = build_witness(4, 3)
        assert A.members == (0, 2, 4, 7, 8, 9)
        assert B.members == (0, 2, 4, 7, 10, 11)

    @pytest.mark.parametrize("n,k", [(3, 3), (1, 2), (4, 4), (5, 1), (6, 9)])
    def test_infeasible(self, n, k):
        with pytest.raises(InfeasibleError):
            build_witness(n, k)

    def test_deterministic(self):
        assert build_witness(7, 5) == build_witness(7, 5)

    @pytest.mark.parametrize("n,k", [p for p in feasible_pairs(9) if p[1] >= 3])
    def test_sizes(self, n, k):
        A, B = build_witness(n, k)
        assert len(A) == len(B) == k * 2 ** (k - 2)

    @pytest.mark.parametrize("n,k", [p for p in feasible_pairs(9) if p[1] <= 6])
    def test_block_hypothesis(self, n, k):
        blocks_a, blocks_b = witness_blocks(n, k)
        for i in range(k):
            rest_a = [x for j, b in enumerate(blocks_a) if j != i for x in b]
            rest_b = [x for j, b in enumerate(blocks_b) if j != i for x in b]
            shifts = [z for z in range(1 << n)
                      if sorted(x ^ z for x in rest_a) == sorted(rest_b)]
            assert shifts


class TestVerify:
    def test_k2(self):
        A, B = build_witness(2, 2)
        rep = verify_witness(A, B, 2, blocks=witness_blocks(2, 2), method="set")
        assert rep.non_translate and rep.indist_level >= 1 and rep.valid
        assert rep.block_structure_ok and rep.cross_check

    def test_n4_k3(self):
        A, B = build_witness(4, 3)
        rep = verify_witness(A, B, 3, blocks=witness_blocks(4, 3), method="deck")
        assert rep.non_translate and rep.indist_level >= 2
        assert rep.block_structure_ok and rep.cross_check and rep.valid

    @pytest.mark.parametrize("n,k", [(2, 2), (4, 3), (5, 3), (5, 4)])
    def test_brute_force_set_decks(self, n, k):
        A, B = build_witness(n, k)
        rep = verify_witness(A, B, k, method="set")
        assert rep.cross_check is True and rep.valid

    def test_degenerate(self):
        A = SubsetT(3, (0, 1, 5))
        rep = verify_witness(A, A, 2)
        assert not rep.non_translate and not rep.valid

    def test_translate_detected(self):
        A = SubsetT(3, (0, 1, 5))
        assert not verify_witness(A, A.translate(3), 2).non_translate

    def test_bad_blocks_reported(self):
        A, B = build_witness(4, 3)
        blocks_a, blocks_b = witness_blocks(4, 3)
        blocks_b = [blocks_b[1], blocks_b[0], blocks_b[2]]
        rep = verify_witness(A, B, 3, blocks=(blocks_a, blocks_b))
        assert rep.block_structure_ok is False and not rep.valid

    def test_guard_trip_leaves_cross_check_unset(self):
        A, B = build_witness(12, 9)
        rep = verify_witness(A, B, 9, method="deck")
        assert rep.cross_check is None and rep.valid

    def test_non_translate_matches_scan(self):
        for n, k in feasible_pairs(6):
            A, B = build_witness(n, k)
            assert find_translation(A, B) is None
