"""Independent brute-force oracles for the test suite.

None of these reuse the package's fast paths: transforms are defining
sums, zero-sum sequences are enumerated literally, and translations are
found by trying every shift.
"""

from itertools import combinations_with_replacement


def naive_pairing(x, y):
    return -1 if bin(x & y).count("1") % 2 else 1


def naive_wht(counts):
    N = len(counts)
    return [sum(int(counts[y]) * naive_pairing(x, y) for y in range(N)) for x in range(N)]


def _xor(seq):
    out = 0
    for x in seq:
        out ^= x
    return out


def _prod(vals, seq):
    out = 1
    for x in seq:
        out *= vals[x]
    return out


def naive_zero_sum_mismatches(f_counts, g_counts, length):
    """Nondecreasing zero-sum sequences of the given length over
    U = {x : f^(x) != 0 or g^(x) != 0} with unequal spectral products,
    in lexicographic order."""
    fs, gs = naive_wht(f_counts), naive_wht(g_counts)
    U = [x for x in range(len(fs)) if fs[x] or gs[x]]
    for seq in combinations_with_replacement(U, length):
        if _xor(seq) == 0 and _prod(fs, seq) != _prod(gs, seq):
            yield seq


def naive_fourier_indistinguishable(f_counts, g_counts, k):
    return not any(next(naive_zero_sum_mismatches(f_counts, g_counts, i), None)
                   for i in range(1, k + 1))


def naive_distnum(f_counts, g_counts):
    """(d, lexicographically least witness) by literal enumeration, or (inf, None)."""
    n = len(f_counts).bit_length() - 1
    for i in range(1, n + 2):
        seq = next(naive_zero_sum_mismatches(f_counts, g_counts, i), None)
        if seq is not None:
            return i, seq
    return float("inf"), None


def naive_translates(f_counts, g_counts):
    N = len(f_counts)
    return [z for z in range(N)
            if all(f_counts[m ^ z] == g_counts[m] for m in range(N))]


def naive_canonical(words, dim):
    words = set(words)
    if not words:
        return ()
    return min(tuple(sorted(w ^ z for w in words)) for z in range(1 << dim))
