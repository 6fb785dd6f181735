"""Pairs of multisets on Z_2^(k-1) with distinguishing number k.

The standard family f_(a,b),(a_1..a_{k-1}) assigns a + sum a_i x_i to
even-weight points and b + sum a_i x_i to odd-weight points.  Swapping a
and b gives its twin, and every pair at distinguishing number k on
Z_2^(k-1) is a translated linear image of such a pair.

Note the sign at unit vectors: the transform of the family is
-2^(k-2) a_i at e_i, which is what ``standard_spectrum`` returns and what
the tests check against the direct transform.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .deckset import Multiset, linear_image, translate
from .errors import InvariantViolationError, VerificationFailureError
from .gf2core import LinearMap, is_independent
from .spectral import Spectrum, distinguishing_number, wht


@dataclass(frozen=True)
class StandardParams:
    k: int
    a: int
    b: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.k < 3:
            raise ValueError(f"the standard family needs k >= 3, got {self.k}")
        if len(self.coeffs) != self.k - 1:
            raise ValueError(f"expected {self.k - 1} coefficients, got {len(self.coeffs)}")
        if self.a < 0 or self.b < 0 or self.a == self.b:
            raise ValueError("a and b must be distinct non-negative integers")
        if any(c < 1 for c in self.coeffs):
            raise ValueError("coefficients must be positive")

    @property
    def dim(self) -> int:
        return self.k - 1

    def swapped(self) -> StandardParams:
        return replace(self, a=self.b, b=self.a)

    @classmethod
    def random(cls, k: int, rng: np.random.Generator, max_ab: int = 5,
               max_coeff: int = 4) -> StandardParams:
        a, b = (int(v) for v in rng.choice(max_ab + 1, size=2, replace=False))
        coeffs = tuple(int(c) for c in rng.integers(1, max_coeff + 1, size=k - 1))
        return cls(k, a, b, coeffs)


@dataclass(frozen=True)
class Classification:
    theta: LinearMap
    z1: int
    z2: int
    params: StandardParams


def standard_multiset(p: StandardParams) -> Multiset:
    n = p.dim
    xs = np.arange(1 << n, dtype=np.int64)
    weighted = np.zeros_like(xs)
    odd = np.zeros_like(xs)
    for i, c in enumerate(p.coeffs):
        bit = (xs >> i) & 1
        weighted += c * bit
        odd ^= bit
    return Multiset(n, np.where(odd == 1, p.b, p.a) + weighted)


def standard_spectrum(p: StandardParams) -> Spectrum:
    """Closed-form transform of the standard family (no transform is run)."""
    n = p.dim
    scale = 1 << (p.k - 2)
    vals = np.zeros(1 << n, dtype=np.int64)
    vals[0] = scale * (p.a + p.b + sum(p.coeffs))
    for i, c in enumerate(p.coeffs):
        vals[1 << i] = -scale * c
    vals[(1 << n) - 1] = scale * (p.a - p.b)
    return Spectrum(n, vals)


def standard_pair(p: StandardParams) -> tuple[Multiset, Multiset]:
    return standard_multiset(p), standard_multiset(p.swapped())


def _check_top_pair(f1: Multiset, f2: Multiset):
    if f1.dim != f2.dim:
        raise ValueError("pair must share a dimension")
    k = f1.dim + 1
    if k < 3:
        raise ValueError("classification needs multisets on Z_2^(k-1) with k >= 3")
    d, w = distinguishing_number(f1, f2)
    if d != k:
        raise ValueError(f"expected distinguishing number {k}, got {d}")
    return k, w


def standardize_pair(f1: Multiset, f2: Multiset) -> LinearMap:
    """An invertible map putting the pair in standard position.

    After the map, the least mismatching zero-sum sequence is
    (e_1, ..., e_{k-1}, h).
    """
    k, w = _check_top_pair(f1, f2)
    prefix = w.elements[: k - 1]
    if not is_independent(prefix):
        raise InvariantViolationError(
            f"witness prefix {prefix} is dependent; a shortest mismatch cannot be")
    # the dual sends e_i to the i-th witness entry
    theta = LinearMap(k - 1, k - 1, prefix).transpose()
    return theta


def _flip_mask(spec: np.ndarray, n: int) -> int:
    # translating by z negates the transform at e_i exactly when bit i of z is set
    return sum(1 << i for i in range(n) if spec[1 << i] > 0)


def classify_pair(f1: Multiset, f2: Multiset) -> Classification:
    """Recover (theta, z1, z2, params) with translate(theta f_j, z_j) standard.

    Parameters are read off the normalized counts and the result is only
    returned once both identities hold by direct multiset comparison.
    """
    theta = standardize_pair(f1, f2)
    n = f1.dim
    g1, g2 = linear_image(f1, theta), linear_image(f2, theta)
    z1 = _flip_mask(wht(g1).values, n)
    z2 = _flip_mask(wht(g2).values, n)
    n1, n2 = translate(g1, z1), translate(g2, z2)
    a, b = int(n1.counts[0]), int(n2.counts[0])
    coeffs = tuple(int(n1.counts[1 << i]) - b for i in range(n))
    try:
        params = StandardParams(n + 1, a, b, coeffs)
    except ValueError as exc:
        raise VerificationFailureError(f"read-off parameters are invalid: {exc}") from exc
    if standard_multiset(params) != n1 or standard_multiset(params.swapped()) != n2:
        raise VerificationFailureError(
            f"normalized pair does not match the standard family at {params}")
    return Classification(theta, z1, z2, params)


def max_multiplicity(f: Multiset) -> int:
    return int(f.counts.max(initial=0))


def random_standard_instance(k: int, rng: np.random.Generator):
    """A standard pair disguised by a random invertible map and translations.

    Returns (f1, f2, params).
    """
    p = StandardParams.random(k, rng)
    s1, s2 = standard_pair(p)
    theta0 = LinearMap.random_invertible(k - 1, rng)
    z1, z2 = (int(v) for v in rng.integers(0, 1 << (k - 1), size=2))
    f1 = translate(linear_image(s1, theta0), z1)
    f2 = translate(linear_image(s2, theta0), z2)
    return f1, f2, p


__all__ = [
    "StandardParams", "Classification", "standard_multiset", "standard_spectrum",
    "standard_pair", "standardize_pair", "classify_pair", "max_multiplicity",
    "random_standard_instance",
]
