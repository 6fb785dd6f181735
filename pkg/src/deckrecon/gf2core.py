"""Elements of Z_2^n as bit words, the +-1 pairing, and GF(2) linear maps.

Coordinate x_i lives in bit i-1 of a word, so e_i == 1 << (i-1) and the
all-ones vector h == (1 << n) - 1.  With this convention the pairing
exponent is just a popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, InstanceTooLargeError

MAX_DIM = 24


def check_dim(dim: int) -> None:
    if dim < 0:
        raise ValueError(f"dimension must be non-negative, got {dim}")
    if dim > MAX_DIM:
        raise InstanceTooLargeError(f"dimension {dim} exceeds the cap of {MAX_DIM}")


def parity(word: int) -> int:
    return word.bit_count() & 1


@dataclass(frozen=True, order=True)
class GroupElement:
    """An element of Z_2^dim stored as a bit word."""

    value: int
    dim: int

    def __post_init__(self):
        check_dim(self.dim)
        if not 0 <= self.value < (1 << self.dim):
            raise ValueError(f"value {self.value} out of range for dim {self.dim}")

    def __xor__(self, other: GroupElement) -> GroupElement:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dims {self.dim} and {other.dim}")
        return GroupElement(self.value ^ other.value, self.dim)

    __add__ = __xor__

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    @classmethod
    def zero(cls, dim: int) -> GroupElement:
        return cls(0, dim)

    @classmethod
    def basis(cls, i: int, dim: int) -> GroupElement:
        """Unit vector e_i, 1-based."""
        if not 1 <= i <= dim:
            raise ValueError(f"basis index {i} out of range for dim {dim}")
        return cls(1 << (i - 1), dim)

    @classmethod
    def all_ones(cls, dim: int) -> GroupElement:
        return cls((1 << dim) - 1, dim)


def _word(x) -> int:
    return x.value if isinstance(x, GroupElement) else int(x)


def pairing(x: GroupElement, y: GroupElement) -> int:
    """Return (-1) ** <x, y> as +1 or -1."""
    if x.dim != y.dim:
        raise DimensionMismatchError(f"pairing of dims {x.dim} and {y.dim}")
    return -1 if parity(x.value & y.value) else 1


# ---------------------------------------------------------------------------
# GF(2) linear algebra on int bitsets
# ---------------------------------------------------------------------------

def gf2_rank(words: Iterable[int]) -> int:
    """Rank over GF(2) of a family of bit words."""
    pivots: dict[int, int] = {}
    rank = 0
    for w in words:
        w = int(w)
        while w:
            top = w.bit_length() - 1
            if top not in pivots:
                pivots[top] = w
                rank += 1
                break
            w ^= pivots[top]
    return rank


def is_independent(words: Sequence[int]) -> bool:
    return gf2_rank(words) == len(words)


def span(words: Sequence[int]) -> list[int]:
    """All XOR combinations of ``words``, sorted; duplicates removed."""
    out = {0}
    for w in words:
        out |= {v ^ w for v in out}
    return sorted(out)


def kernel_of_functional(w: int, dim: int) -> list[int]:
    """A basis of {x in Z_2^dim : parity(w & x) == 0}.

    Deterministic: unit vectors outside the support of ``w``, then e_p + e_q
    for the lowest support bit p and each other support bit q.
    """
    basis = [1 << i for i in range(dim) if not (w >> i) & 1]
    support = [i for i in range(dim) if (w >> i) & 1]
    if support:
        p = support[0]
        basis += [(1 << p) | (1 << q) for q in support[1:]]
    return sorted(basis)


@dataclass(frozen=True)
class LinearMap:
    """A GF(2) linear map Z_2^dim_in -> Z_2^dim_out.

    ``cols[i]`` is the image of the basis vector e_{i+1}.
    """

    dim_in: int
    dim_out: int
    cols: tuple[int, ...] = field(default=())

    def __post_init__(self):
        check_dim(self.dim_in)
        check_dim(self.dim_out)
        cols = tuple(_word(c) for c in self.cols)
        object.__setattr__(self, "cols", cols)
        if len(cols) != self.dim_in:
            raise ValueError(f"expected {self.dim_in} columns, got {len(cols)}")
        bound = 1 << self.dim_out
        for c in cols:
            if not 0 <= c < bound:
                raise ValueError(f"column {c} out of range for dim_out {self.dim_out}")

    @classmethod
    def identity(cls, dim: int) -> LinearMap:
        return cls(dim, dim, tuple(1 << i for i in range(dim)))

    @classmethod
    def zero(cls, dim_in: int, dim_out: int) -> LinearMap:
        return cls(dim_in, dim_out, (0,) * dim_in)

    @classmethod
    def random(cls, dim_in: int, dim_out: int, rng: np.random.Generator) -> LinearMap:
        cols = [int(rng.integers(0, 1 << dim_out)) for _ in range(dim_in)]
        return cls(dim_in, dim_out, tuple(cols))

    @classmethod
    def random_invertible(cls, dim: int, rng: np.random.Generator) -> LinearMap:
        while True:
            m = cls.random(dim, dim, rng)
            if m.is_invertible():
                return m

    def __call__(self, x: int) -> int:
        """Apply to a raw word (no dimension checks)."""
        out = 0
        i = 0
        while x:
            if x & 1:
                out ^= self.cols[i]
            x >>= 1
            i += 1
        return out

    def image_table(self) -> np.ndarray:
        """Images of every word 0 .. 2**dim_in - 1, as an int64 array."""
        xs = np.arange(1 << self.dim_in, dtype=np.int64)
        img = np.zeros_like(xs)
        for i, c in enumerate(self.cols):
            if c:
                img ^= ((xs >> i) & 1) * c
        return img

    def rank(self) -> int:
        return gf2_rank(self.cols)

    def is_invertible(self) -> bool:
        return self.dim_in == self.dim_out and self.rank() == self.dim_in

    def transpose(self) -> LinearMap:
        rows = []
        for r in range(self.dim_out):
            row = 0
            for i, c in enumerate(self.cols):
                if (c >> r) & 1:
                    row |= 1 << i
            rows.append(row)
        return LinearMap(self.dim_out, self.dim_in, tuple(rows))

    def compose(self, inner: LinearMap) -> LinearMap:
        """``self`` after ``inner``."""
        if inner.dim_out != self.dim_in:
            raise DimensionMismatchError(
                f"cannot compose {self.dim_in}-dim input with {inner.dim_out}-dim output")
        return LinearMap(inner.dim_in, self.dim_out, tuple(self(c) for c in inner.cols))

    def inverse(self) -> LinearMap:
        if not self.is_invertible():
            raise ValueError("map is not invertible")
        n = self.dim_in
        # Gauss-Jordan on rows of [M | I]
        rows = [(r, 1 << i) for i, r in enumerate(self.transpose().cols)]
        # rows[i] = (row i of M as a word over inputs, identity tag)
        for col in range(n):
            piv = next(i for i in range(col, n) if (rows[i][0] >> col) & 1)
            rows[col], rows[piv] = rows[piv], rows[col]
            pr, pt = rows[col]
            for i in range(n):
                if i != col and (rows[i][0] >> col) & 1:
                    rows[i] = (rows[i][0] ^ pr, rows[i][1] ^ pt)
        # now row i reads x_i = sum of y_j over tag bits j: tags are rows of M^-1
        return LinearMap(n, n, tuple(t for _, t in rows)).transpose()


def apply(M: LinearMap, x: GroupElement) -> GroupElement:
    if x.dim != M.dim_in:
        raise DimensionMismatchError(f"map expects dim {M.dim_in}, got {x.dim}")
    return GroupElement(M(x.value), M.dim_out)


def dual(M: LinearMap) -> LinearMap:
    """The map M* with pairing(M x, y) == pairing(x, M* y): the transpose."""
    return M.transpose()


# ---------------------------------------------------------------------------
# Translation classes and cosets
# ---------------------------------------------------------------------------

def canonical_words(words: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically least sorted translate of a set of words.

    The least translate always starts with 0, so only shifts by members
    need to be tried.
    """
    ws = tuple(sorted(set(words)))
    if not ws:
        return ()
    return min(tuple(sorted(w ^ z for w in ws)) for z in ws)


def canonical_translate(elements: Iterable[GroupElement]) -> tuple[GroupElement, ...]:
    """Canonical representative of the translation class of a set.

    Returns the translate z + S, over all z, whose sorted element list is
    lexicographically least.
    """
    elements = list(elements)
    if not elements:
        return ()
    dims = {e.dim for e in elements}
    if len(dims) != 1:
        raise DimensionMismatchError(f"mixed dimensions {sorted(dims)}")
    dim = dims.pop()
    return tuple(GroupElement(w, dim) for w in canonical_words(e.value for e in elements))


@dataclass(frozen=True)
class AffineCoset:
    """The coset shift + span(basis) in Z_2^dim."""

    dim: int
    basis: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        check_dim(self.dim)
        basis = tuple(_word(b) for b in self.basis)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "shift", _word(self.shift))
        bound = 1 << self.dim
        if any(not 0 <= b < bound for b in basis) or not 0 <= self.shift < bound:
            raise ValueError("coset data out of range for its dimension")
        if not is_independent(basis):
            raise ValueError(f"basis {basis} is linearly dependent")

    def __contains__(self, x) -> bool:
        return gf2_rank(self.basis + (_word(x) ^ self.shift,)) == len(self.basis)

    def __len__(self) -> int:
        return 1 << len(self.basis)


def enumerate_coset(c: AffineCoset) -> list[int]:
    return sorted(c.shift ^ v for v in span(c.basis))


__all__ = [
    "MAX_DIM", "GroupElement", "LinearMap", "AffineCoset", "pairing", "apply",
    "dual", "canonical_translate", "canonical_words", "enumerate_coset",
    "gf2_rank", "is_independent", "span", "kernel_of_functional", "parity",
    "check_dim",
]
