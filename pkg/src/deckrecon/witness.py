"""Lower-bound witnesses: non-translate set pairs with matching small decks.

For k >= 3 the pair lives in Z_2^n with H = span(e_1..e_{k-1}).  Inside H
we take k hyperplane cosets c_i = h_i + H_i (x_1 = 0, x_i = x_{i+1},
x_{k-1} = 1) whose total intersection is empty but every (k-1)-fold
intersection is not.  Placing H_i and h_i + H_i in the i-th coset of H
gives blocks A_i and B_i, and A, B are their unions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import predicate
from .deckset import SubsetT, find_translation, multiset_decks_equal, set_decks_equal
from .errors import InfeasibleError, InstanceTooLargeError
from .gf2core import AffineCoset, enumerate_coset, kernel_of_functional
from .spectral import distinguishing_number


@dataclass(frozen=True)
class WitnessReport:
    n: int
    k: int
    A: SubsetT
    B: SubsetT
    non_translate: bool
    indist_level: float
    block_structure_ok: bool | None = None
    distinguishing_number: float = math.inf
    cross_check: bool | None = None

    @property
    def valid(self) -> bool:
        return (self.non_translate and self.indist_level >= self.k - 1
                and self.block_structure_ok is not False and self.cross_check is not False)


def hyperplane_cosets(k: int) -> list[AffineCoset]:
    """The k cosets x_1 = 0; x_i = x_{i+1} (i < k-1); x_{k-1} = 1 in Z_2^(k-1)."""
    if k < 3:
        raise ValueError(f"hyperplane cosets need k >= 3, got {k}")
    n = k - 1
    conditions = [(1, 0)]                                   # x_1 = 0
    conditions += [((1 << i) | (1 << (i + 1)), 0) for i in range(n - 1)]
    conditions += [(1 << (n - 1), 1 << (n - 1))]            # x_{k-1} = 1
    return [AffineCoset(n, tuple(kernel_of_functional(w, n)), shift)
            for w, shift in conditions]


def witness_blocks(n: int, k: int) -> tuple[list[list[int]], list[list[int]]]:
    """Blocks (A_1..A_k), (B_1..B_k) of the witness pair, each sorted."""
    if k < 2 or not predicate(n, k):
        raise InfeasibleError(f"no witness for n={n}, k={k}: predicate 2^(n+1-k) >= k is false")
    if k == 2:
        return [[0], [1]], [[0], [(1 << n) - 1]]
    blocks_a, blocks_b = [], []
    for i, c in enumerate(hyperplane_cosets(k)):
        g = i << (k - 1)    # i-th coset of H in increasing word order
        sub = AffineCoset(c.dim, c.basis, 0)
        blocks_a.append([g | x for x in enumerate_coset(sub)])
        blocks_b.append([g | x for x in enumerate_coset(c)])
    return blocks_a, blocks_b


def build_witness(n: int, k: int) -> tuple[SubsetT, SubsetT]:
    blocks_a, blocks_b = witness_blocks(n, k)
    A = SubsetT.of(n, (x for blk in blocks_a for x in blk))
    B = SubsetT.of(n, (x for blk in blocks_b for x in blk))
    return A, B


def _blocks_ok(n, blocks_a, blocks_b) -> bool:
    for i in range(len(blocks_a)):
        rest_a = SubsetT.of(n, (x for j, blk in enumerate(blocks_a) if j != i for x in blk))
        rest_b = SubsetT.of(n, (x for j, blk in enumerate(blocks_b) if j != i for x in blk))
        if len(rest_a) != len(rest_b) or find_translation(rest_a, rest_b) is None:
            return False
    return True


def verify_witness(A: SubsetT, B: SubsetT, k: int, blocks=None,
                   method: str = "fourier") -> WitnessReport:
    """Check a candidate witness pair and report, never raise.

    The indistinguishability level always comes from the spectral oracle.
    With ``method`` "deck" (multiset decks) or "set" (set decks) the claim
    of (k-1)-indistinguishability is also re-checked by brute force when
    the size guards allow; ``cross_check`` records that verdict.
    """
    non_translate = find_translation(A, B) is None
    d, _ = distinguishing_number(A, B)
    cross = None
    if method in ("deck", "set"):
        try:
            cross = (multiset_decks_equal(A, B, k - 1) if method == "deck"
                     else set_decks_equal(A, B, k - 1))
        except InstanceTooLargeError:
            cross = None
    elif method != "fourier":
        raise ValueError(f"unknown method {method!r}")
    block_ok = None if blocks is None else _blocks_ok(A.dim, *blocks)
    return WitnessReport(A.dim, k, A, B, non_translate, d - 1, block_ok, d, cross)


def feasible_pairs(max_n: int) -> list[tuple[int, int]]:
    """All (n, k) with n <= max_n, k >= 2 and 2^(n+1-k) >= k."""
    return [(n, k) for n in range(1, max_n + 1) for k in range(2, n + 2) if predicate(n, k)]


__all__ = [
    "WitnessReport", "hyperplane_cosets", "witness_blocks", "build_witness",
    "verify_witness", "feasible_pairs",
]
