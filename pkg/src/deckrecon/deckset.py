"""Multisets and sets over Z_2^n, their translates and linear images, and decks.

Everything here is brute force on purpose: these routines are the ground
truth the Fourier-side machinery in :mod:`deckrecon.spectral` is checked
against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, InstanceTooLargeError
from .gf2core import GroupElement, LinearMap, canonical_words, check_dim

DECK_GUARD = 20
SUBSET_ENUM_CAP = 10**7


class Multiset:
    """A map Z_2^dim -> N stored as a read-only count vector of length 2**dim."""

    __slots__ = ("dim", "counts")

    def __init__(self, dim: int, counts: Iterable[int]):
        check_dim(dim)
        arr = np.array(counts if isinstance(counts, np.ndarray) else list(counts))
        if arr.shape != (1 << dim,):
            raise ValueError(f"expected {1 << dim} counts for dim {dim}, got shape {arr.shape}")
        if arr.dtype != object:
            if not np.issubdtype(arr.dtype, np.integer):
                if not np.all(np.mod(arr, 1) == 0):
                    raise ValueError("counts must be integers")
            arr = arr.astype(np.int64)
        if np.any(arr < 0):
            raise ValueError("counts must be non-negative")
        arr.flags.writeable = False
        self.dim = dim
        self.counts = arr

    @classmethod
    def indicator(cls, dim: int, elements: Iterable[int]) -> Multiset:
        counts = np.zeros(1 << dim, dtype=np.int64)
        for e in elements:
            counts[int(e)] += 1
        return cls(dim, counts)

    @property
    def mass(self) -> int:
        return int(sum(int(c) for c in self.counts)) if self.counts.dtype == object \
            else int(self.counts.sum())

    def tolist(self) -> list[int]:
        return [int(c) for c in self.counts]

    def is_set(self) -> bool:
        return bool(np.all(self.counts <= 1))

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.counts)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.counts, other.counts))

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.tolist())))

    def __repr__(self) -> str:
        return f"Multiset(dim={self.dim}, counts={self.tolist()})"


@dataclass(frozen=True)
class SubsetT:
    """A subset of Z_2^dim, members kept strictly increasing."""

    dim: int
    members: tuple[int, ...]

    def __post_init__(self):
        check_dim(self.dim)
        ms = tuple(int(m) for m in self.members)
        if any(b <= a for a, b in zip(ms, ms[1:])):
            raise ValueError("members must be strictly increasing")
        if ms and not (0 <= ms[0] and ms[-1] < (1 << self.dim)):
            raise ValueError(f"members out of range for dim {self.dim}")
        object.__setattr__(self, "members", ms)

    @classmethod
    def of(cls, dim: int, elements: Iterable[int]) -> SubsetT:
        """Build from any iterable, sorting and de-duplicating."""
        return cls(dim, tuple(sorted({int(e) for e in elements})))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def translate(self, z: int) -> SubsetT:
        return SubsetT.of(self.dim, (m ^ z for m in self.members))

    def as_multiset(self) -> Multiset:
        return Multiset.indicator(self.dim, self.members)


@dataclass(frozen=True)
class DeckFingerprint:
    """Order-independent encoding of a set's k-deck.

    ``entries`` holds (canonical translate, multiplicity) pairs sorted by the
    canonical word tuple.
    """

    k: int
    entries: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def encode(self) -> list[list[int]]:
        """Each entry as ``[len, w_1, ..., w_len, multiplicity]``."""
        return [[len(c), *c, m] for c, m in self.entries]


def _as_multiset(x) -> Multiset:
    return x.as_multiset() if isinstance(x, SubsetT) else x


def _same_dim(*items) -> None:
    dims = {it.dim for it in items}
    if len(dims) != 1:
        raise DimensionMismatchError(f"mixed dimensions {sorted(dims)}")


def translate(f: Multiset, z: GroupElement | int) -> Multiset:
    """Translate by z: result.counts[m] == f.counts[m ^ z]."""
    if isinstance(z, GroupElement):
        _same_dim(f, z)
        z = z.value
    z = int(z)
    if not 0 <= z < (1 << f.dim):
        raise DimensionMismatchError(f"shift {z} out of range for dim {f.dim}")
    idx = np.arange(1 << f.dim, dtype=np.int64) ^ z
    return Multiset(f.dim, f.counts[idx])


def linear_image(f: Multiset, M: LinearMap) -> Multiset:
    """Push f forward along M: image(x) = sum of f(z) over M z == x."""
    if f.dim != M.dim_in:
        raise DimensionMismatchError(f"map expects dim {M.dim_in}, got {f.dim}")
    img = M.image_table()
    dtype = object if f.counts.dtype == object else np.int64
    out = np.zeros(1 << M.dim_out, dtype=dtype)
    np.add.at(out, img, f.counts)
    return Multiset(M.dim_out, out)


def multiset_deck_value(f: Multiset, tup: Sequence[GroupElement | int]) -> int:
    """deck_k(f) at (s_1, ..., s_k): sum over g of prod_j f(g + s_j), exactly."""
    if not tup:
        raise ValueError("tuple must be non-empty")
    words = []
    for s in tup:
        if isinstance(s, GroupElement):
            _same_dim(f, s)
            s = s.value
        words.append(int(s))
    idx = np.arange(1 << f.dim, dtype=np.int64)
    prod = np.ones(1 << f.dim, dtype=object)
    counts = f.counts.astype(object)
    for s in words:
        prod = prod * counts[idx ^ s]
    return int(prod.sum())


def _product_dtype(f: Multiset, g: Multiset, k: int):
    top = max(int(f.counts.max(initial=0)), int(g.counts.max(initial=0)), 1)
    return np.int64 if top**k * (1 << f.dim) < 2**62 else object


def multiset_decks_equal(f: Multiset, g: Multiset, k: int) -> bool:
    """True iff deck_i(f) == deck_i(g) for every i <= k.

    Decks are translation- and permutation-invariant in their arguments, so
    only tuples (0, s_2, ..., s_i) with s_2 <= ... <= s_i are compared.
    """
    f, g = _as_multiset(f), _as_multiset(g)
    _same_dim(f, g)
    if k < 1:
        return True
    if f.dim * (k - 1) > DECK_GUARD:
        raise InstanceTooLargeError(
            f"brute-force deck comparison needs dim*(k-1) <= {DECK_GUARD}, "
            f"got {f.dim}*{k - 1}")
    N = 1 << f.dim
    dtype = _product_dtype(f, g, k)
    fc = f.counts.astype(dtype)
    gc = g.counts.astype(dtype)
    idx = np.arange(N, dtype=np.int64)
    fshift = [fc[idx ^ s] for s in range(N)]
    gshift = [gc[idx ^ s] for s in range(N)]

    def walk(pf, pg, depth, start) -> bool:
        if pf.sum() != pg.sum():
            return False
        if depth == k:
            return True
        for s in range(start, N):
            if not walk(pf * fshift[s], pg * gshift[s], depth + 1, s):
                return False
        return True

    return walk(fc, gc, 1, 0)


def set_deck(T: SubsetT, k: int) -> DeckFingerprint:
    if not 0 <= k <= len(T):
        raise ValueError(f"k={k} outside 0..{len(T)}")
    n_subsets = comb(len(T), k)
    if n_subsets > SUBSET_ENUM_CAP:
        raise InstanceTooLargeError(f"C({len(T)}, {k}) = {n_subsets} subsets exceeds cap")
    classes = Counter(canonical_words(U) for U in combinations(T.members, k))
    return DeckFingerprint(k, tuple(sorted(classes.items())))


def set_decks_equal(T: SubsetT, U: SubsetT, k: int) -> bool:
    _same_dim(T, U)
    if len(T) != len(U):
        return k < 1
    return all(set_deck(T, i) == set_deck(U, i) for i in range(min(k, len(T)) + 1))


def find_translation(f: Multiset, g: Multiset) -> int | None:
    """Least z with translate(f, z) == g, or None."""
    f, g = _as_multiset(f), _as_multiset(g)
    _same_dim(f, g)
    if not np.array_equal(np.sort(f.counts), np.sort(g.counts)):
        return None
    # anchor on a value that is rare in g to keep the candidate list short
    values, freq = np.unique(g.counts, return_counts=True)
    rare = values[np.argmin(freq)]
    m0 = int(np.flatnonzero(g.counts == rare)[0])
    idx = np.arange(1 << f.dim, dtype=np.int64)
    candidates = sorted(m0 ^ int(m) for m in np.flatnonzero(f.counts == rare))
    for z in candidates:
        if np.array_equal(f.counts[idx ^ z], g.counts):
            return z
    return None


__all__ = [
    "Multiset", "SubsetT", "DeckFingerprint", "translate", "linear_image",
    "multiset_deck_value", "multiset_decks_equal", "set_deck", "set_decks_equal",
    "find_translation", "DECK_GUARD", "SUBSET_ENUM_CAP",
]
