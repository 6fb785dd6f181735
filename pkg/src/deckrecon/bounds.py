"""The closed-form reconstruction number of Z_2^n and its exhaustive check.

r(Z_2^n) = floor(n + 1 - log2(n + 1 - log2 n)) is evaluated as n - t, where
t is the unique non-negative integer with 2^t + t <= n < 2^(t+1) + t + 1.
No floating point is involved.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .deckset import SubsetT
from .errors import InstanceTooLargeError, InvariantViolationError

EXHAUSTIVE_MAX_DIM = 4


def tee(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    t = 0
    while not (2**t + t <= n < 2 ** (t + 1) + t + 1):
        t += 1
    return t


def reconstruction_number_formula(n: int) -> int:
    return n - tee(n)


def predicate(n: int, k: int) -> bool:
    """Whether 2^(n+1-k) >= k, decided exactly (false for k > n + 1)."""
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be positive, got n={n}, k={k}")
    e = n + 1 - k
    if e < 0:
        return False
    # 2^e >= 2^bit_length(k) > k settles most cases without building 2^e
    return e >= k.bit_length() or (1 << e) >= k


@dataclass(frozen=True)
class ExhaustiveResult:
    n: int
    r: int
    extremal_pairs: list[tuple[SubsetT, SubsetT, int]]
    class_count: int


def translation_classes(n: int) -> list[tuple[int, ...]]:
    """One canonical representative (least sorted translate) per class, as word tuples."""
    if n > EXHAUSTIVE_MAX_DIM:
        raise InstanceTooLargeError(f"class enumeration is limited to n <= {EXHAUSTIVE_MAX_DIM}")
    N = 1 << n
    reps = []
    for mask in range(1 << N):
        members = tuple(x for x in range(N) if (mask >> x) & 1)
        if not members or all(tuple(sorted(x ^ z for x in members)) >= members
                              for z in members):
            reps.append(members)
    return reps


def _spectra(n: int, reps) -> np.ndarray:
    N = 1 << n
    had = np.array([[-1 if (x & y).bit_count() & 1 else 1 for y in range(N)]
                    for x in range(N)], dtype=np.int64)
    ind = np.zeros((len(reps), N), dtype=np.int64)
    for i, members in enumerate(reps):
        ind[i, list(members)] = 1
    return ind @ had.T


def _group_distances(job):
    """Distinguishing numbers for all pairs inside one |spectrum| group."""
    from .spectral import _mismatch

    n, items = job
    out = []
    for (i, fs), (j, gs) in combinations(items, 2):
        d, _ = _mismatch(fs, gs, n, n + 1, want_witness=False)
        if d is None:
            raise InvariantViolationError(
                f"distinct translation classes {i} and {j} show no spectral mismatch")
        out.append((i, j, d))
    return out


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("DECKRECON_WORKERS", "1")))
    except ValueError:
        return 1


def _pair_distances(n: int, reps, workers: int | None = None):
    """Distinguishing numbers (i, j, d) for class pairs that need a search.

    Pairs with different sizes have d = 1 and pairs with equal size but
    different absolute spectra have d = 2; both are counted without search.
    Only pairs sharing |spectrum| run the spectral search.
    """
    spec = _spectra(n, reps)
    groups: dict[bytes, list] = {}
    for i, row in enumerate(spec):
        groups.setdefault(np.abs(row).tobytes(), []).append((i, row))
    jobs = [(n, items) for items in groups.values() if len(items) > 1]
    workers = workers or _default_workers()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_group_distances, jobs, chunksize=8))
    else:
        chunks = [_group_distances(job) for job in jobs]
    deep = [t for chunk in chunks for t in chunk]
    return spec, groups, deep


def exhaustive_reconstruction_number(n: int, workers: int | None = None) -> ExhaustiveResult:
    """Ground-truth r(Z_2^n): the largest distinguishing number over class pairs."""
    if not 1 <= n <= EXHAUSTIVE_MAX_DIM:
        raise InstanceTooLargeError(f"exhaustive search supports 1 <= n <= {EXHAUSTIVE_MAX_DIM}")
    reps = translation_classes(n)
    spec, groups, deep = _pair_distances(n, reps, workers)
    sizes = [len(m) for m in reps]

    r = max((d for _, _, d in deep), default=0)
    same_size = any(sizes[i] == sizes[j] for i, j in combinations(range(len(reps)), 2))
    if r < 2 and same_size:
        r = 2
    if r < 1:
        r = 1

    pairs: list[tuple[int, int, int]] = []
    if r >= 3:
        pairs = [(i, j, d) for i, j, d in deep if d == r]
    else:
        group_of = {}
        for gid, items in enumerate(groups.values()):
            for i, _ in items:
                group_of[i] = gid
        for i, j in combinations(range(len(reps)), 2):
            if r == 1:
                pairs.append((i, j, 1))
            elif sizes[i] == sizes[j] and group_of[i] != group_of[j]:
                pairs.append((i, j, 2))
    extremal = [(SubsetT(n, reps[i]), SubsetT(n, reps[j]), d) for i, j, d in sorted(pairs)]
    return ExhaustiveResult(n, r, extremal, len(reps))


def set_reconstruction_number(T: SubsetT) -> int:
    """max over non-translates U of the distinguishing number of (T, U)."""
    from .spectral import _mismatch, wht

    n = T.dim
    if n > EXHAUSTIVE_MAX_DIM:
        raise InstanceTooLargeError(f"set reconstruction number needs dim <= {EXHAUSTIVE_MAX_DIM}")
    if n == 0:
        return 1
    reps = translation_classes(n)
    own = min((tuple(sorted(x ^ z for x in T.members)) for z in T.members), default=())
    fs = wht(T).values
    spec = _spectra(n, reps)
    best = 1
    for members, gs in zip(reps, spec):
        if members == own or len(members) != len(T):
            continue
        if not np.array_equal(np.abs(fs), np.abs(gs)):
            best = max(best, 2)
            continue
        d, _ = _mismatch(fs, gs, n, n + 1, want_witness=False)
        best = max(best, d)
    return best


__all__ = [
    "tee", "reconstruction_number_formula", "predicate", "ExhaustiveResult",
    "exhaustive_reconstruction_number", "set_reconstruction_number",
    "translation_classes", "EXHAUSTIVE_MAX_DIM",
]
