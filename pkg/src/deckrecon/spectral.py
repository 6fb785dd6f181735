"""Walsh-Hadamard spectra and the Fourier-side indistinguishability oracle.

Two multisets f, g are k-indistinguishable exactly when
prod f^(x_j) == prod g^(x_j) for every zero-sum sequence x_1..x_i, i <= k.

The search for the shortest mismatching sequence works in three stages:

* length 1 is the sequence (0): total masses differ;
* length 2 sequences are (x, x): some |f^(x)| != |g^(x)|;
* otherwise the spectra share a support S and agree up to sign, so a
  sequence from S mismatches iff it uses an odd number of sign-flipped
  points.  Tagging each point of S with its flip bit lifts the problem to
  Z_2^(n+1), where the shortest mismatch is a BFS distance from 0 to the
  pure tag vector.

Products are always formed with Python ints, so no comparison can overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .deckset import Multiset, SubsetT, _as_multiset, _same_dim, find_translation
from .errors import InvariantViolationError, NotAMultisetError, TranslatesInputError
from .gf2core import LinearMap

# bool cells allowed in the suffix reachability table used for witness recovery
WITNESS_TABLE_BUDGET = 2 * 10**8


@dataclass(frozen=True, eq=False)
class Spectrum:
    dim: int
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (1 << self.dim,):
            raise ValueError(f"spectrum of dim {self.dim} needs {1 << self.dim} values")
        self.values.flags.writeable = False

    def __getitem__(self, x: int) -> int:
        return int(self.values[int(x)])

    def tolist(self) -> list[int]:
        return [int(v) for v in self.values]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.values, other.values))

    def __repr__(self) -> str:
        return f"Spectrum(dim={self.dim}, values={self.tolist()})"


@dataclass(frozen=True)
class ZeroSumWitness:
    elements: tuple[int, ...]
    product_left: int
    product_right: int


class Distinction(NamedTuple):
    number: float  # int, or math.inf for translates
    witness: ZeroSumWitness | None


def _butterfly(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    n = a.shape[0]
    h = 1
    while h < n:
        a = a.reshape(-1, 2, h)
        a = np.concatenate((a[:, 0, :] + a[:, 1, :], a[:, 0, :] - a[:, 1, :]), axis=1)
        h *= 2
    return a.reshape(n)


def _exact_dtype(values: np.ndarray, scale: int):
    if values.dtype == object:
        return object
    bound = int(np.abs(values).sum()) if values.size else 0
    return np.int64 if bound * scale < 2**62 else object


def wht(f) -> Spectrum:
    """Exact Walsh-Hadamard transform, f^(x) = sum_y f(y) (-1)^<x,y>."""
    f = _as_multiset(f)
    a = f.counts.astype(_exact_dtype(f.counts, 1))
    return Spectrum(f.dim, _butterfly(a))


def inverse_wht(s: Spectrum) -> Multiset:
    v = s.values.astype(_exact_dtype(s.values, 1))
    back = _butterfly(v)
    size = 1 << s.dim
    if any(int(x) % size for x in back):
        raise NotAMultisetError("inverse transform is not integral")
    counts = back // size
    if np.any(counts < 0):
        raise NotAMultisetError("inverse transform has negative entries")
    return Multiset(s.dim, counts)


def _product(values: np.ndarray, seq) -> int:
    out = 1
    for x in seq:
        out *= int(values[x])
    return out


def _witness(fs, gs, seq) -> ZeroSumWitness:
    return ZeroSumWitness(tuple(int(x) for x in seq), _product(fs, seq), _product(gs, seq))


class _Lifted(NamedTuple):
    support: np.ndarray   # sorted support words
    lifted: np.ndarray    # support words with the flip tag in bit n
    target: int           # 1 << n


def _lift(fs: np.ndarray, gs: np.ndarray, n: int) -> _Lifted:
    support = np.flatnonzero(fs != 0)
    flip = np.array([int(fs[x]) != int(gs[x]) for x in support], dtype=np.int64)
    return _Lifted(support.astype(np.int64), support.astype(np.int64) | (flip << n), 1 << n)


def _bfs_distance(lift: _Lifted, n: int, cap: int) -> int | None:
    """Fewest lifted support points (with repetition) XOR-ing to the target."""
    if not np.any(lift.lifted >> n):
        return None
    seen = np.zeros(1 << (n + 1), dtype=bool)
    seen[0] = True
    frontier = np.array([0], dtype=np.int64)
    gens = np.unique(lift.lifted)
    for depth in range(1, cap + 1):
        nxt = np.unique((frontier[:, None] ^ gens[None, :]).ravel())
        nxt = nxt[~seen[nxt]]
        if nxt.size == 0:
            return None
        if np.any(nxt == lift.target):
            return depth
        seen[nxt] = True
        frontier = nxt
    return None


def _least_witness(lift: _Lifted, n: int, d: int) -> tuple[int, ...]:
    """Lexicographically least strictly increasing d-tuple from the support
    whose lifted XOR is the target.

    A shortest mismatch of length >= 3 never repeats an element: dropping a
    repeated pair would leave a shorter mismatch.
    """
    L = lift.lifted
    m = L.size
    size = 1 << (n + 1)
    idx = np.arange(size, dtype=np.int64)
    if (m + 1) * d * size <= WITNESS_TABLE_BUDGET:
        # reach[i][j][v]: v is an XOR of j distinct points from L[i:]
        reach = np.zeros((m + 1, d, size), dtype=bool)
        reach[:, 0, 0] = True
        for i in range(m - 1, -1, -1):
            reach[i] = reach[i + 1]
            reach[i, 1:] |= reach[i + 1, :-1][:, idx ^ L[i]]
        out = []
        need, start = lift.target, 0
        for r in range(d, 0, -1):
            for i in range(start, m):
                if reach[i + 1, r - 1, need ^ L[i]]:
                    out.append(int(lift.support[i]))
                    need ^= int(L[i])
                    start = i + 1
                    break
            else:
                raise InvariantViolationError("witness table inconsistent with BFS distance")
        return tuple(out)

    # large instances: depth-first with order-free reachability pruning
    layers = [np.zeros(size, dtype=bool) for _ in range(d)]
    layers[0][0] = True
    for j in range(1, d):
        for x in np.unique(L):
            layers[j] |= layers[j - 1][idx ^ x]

    def dfs(start, r, need, acc):
        if r == 0:
            return acc if need == 0 else None
        for i in range(start, m - r + 1):
            rest = need ^ int(L[i])
            if layers[r - 1][rest]:
                found = dfs(i + 1, r - 1, rest, acc + [int(lift.support[i])])
                if found is not None:
                    return found
        return None

    found = dfs(0, d, lift.target, [])
    if found is None:
        raise InvariantViolationError("no witness at the BFS distance")
    return tuple(found)


def _mismatch(fs: np.ndarray, gs: np.ndarray, n: int, cap: int, want_witness: bool):
    """Shortest mismatch length (<= cap) and its least witness, or (None, None)."""
    if cap < 1:
        return None, None
    if int(fs[0]) != int(gs[0]):
        return 1, (0,) if want_witness else None
    if cap < 2:
        return None, None
    sq_f = fs.astype(object) ** 2
    sq_g = gs.astype(object) ** 2
    bad = np.flatnonzero(sq_f != sq_g)
    if bad.size:
        x = int(bad[0])
        return 2, (x, x) if want_witness else None
    lift = _lift(fs, gs, n)
    d = _bfs_distance(lift, n, cap)
    if d is None:
        return None, None
    return d, _least_witness(lift, n, d) if want_witness else None


def _spectra(f, g):
    f, g = _as_multiset(f), _as_multiset(g)
    _same_dim(f, g)
    return f, g, wht(f).values, wht(g).values


def fourier_indistinguishable(f, g, k: int) -> bool:
    """True iff every zero-sum sequence of length <= k has equal spectral products."""
    f, _, fs, gs = _spectra(f, g)
    d, _ = _mismatch(fs, gs, f.dim, k, want_witness=False)
    return d is None


def distinguishing_number(f, g) -> Distinction:
    """Least k at which f and g become k-distinguishable (math.inf for translates).

    The search runs to depth dim + 1; beyond that the pair must be translates,
    which is checked rather than assumed.
    """
    f, g, fs, gs = _spectra(f, g)
    d, seq = _mismatch(fs, gs, f.dim, f.dim + 1, want_witness=True)
    if d is not None:
        return Distinction(d, _witness(fs, gs, seq))
    if find_translation(f, g) is None:
        raise InvariantViolationError(
            f"no spectral mismatch up to length {f.dim + 1}, yet the pair are not translates")
    return Distinction(math.inf, None)


def separating_projection(f, g) -> tuple[LinearMap, int]:
    """A map into Z_2^max(k-1, 1) under which the pair keeps distinguishing number k.

    Its dual sends e_j to the j-th entry of the least witness, for j < k.
    """
    f, g = _as_multiset(f), _as_multiset(g)
    d, w = distinguishing_number(f, g)
    if d == math.inf:
        raise TranslatesInputError("inputs are translates; no separating map exists")
    target = max(d - 1, 1)
    cols = w.elements[: d - 1] if d > 1 else (0,)
    theta_dual = LinearMap(target, f.dim, tuple(cols))
    return theta_dual.transpose(), d


__all__ = [
    "Spectrum", "ZeroSumWitness", "Distinction", "wht", "inverse_wht",
    "fourier_indistinguishable", "distinguishing_number", "separating_projection",
]
