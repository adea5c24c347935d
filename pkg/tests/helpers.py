"""Shared brute-force oracles and small-case generators for the test-suite."""

import itertools
import math

from spanconfig.combinat import Composition, compositions


def small_alphas(nmax, kmax, nmin=1):
    for n in range(nmin, nmax + 1):
        for k in range(1, kmax + 1):
            for parts in compositions(n, k):
                yield Composition(parts, k)


def brute_op_count(alpha):
    """All maps [n] -> [k] that are onto and injective on each batch."""
    off = alpha.offsets()
    count = 0
    for w in itertools.product(range(alpha.k), repeat=alpha.n):
        if len(set(w)) != alpha.k:
            continue
        if all(len(set(w[off[i]:off[i + 1]])) == alpha.parts[i] for i in range(alpha.r)):
            count += 1
    return count


def set_partitions(n):
    """Restricted growth strings of length n."""
    if n == 0:
        yield ()
        return
    def rec(prefix, m):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(m + 2):
            yield from rec(prefix + [b], max(m, b))
    yield from rec([0], 0)


def stirling2_brute(n, k):
    return sum(1 for p in set_partitions(n) if (max(p) + 1 if p else 0) == k)


def qbinom_by_subsets(k, d):
    """Sum over d-subsets of q^(sum of s_i - i)."""
    out = [0] * (d * (k - d) + 1)
    for S in itertools.combinations(range(1, k + 1), d):
        out[sum(s - i for i, s in enumerate(S, start=1))] += 1
    return out


def qmultinomial_by_inversions(parts):
    """Sum over words with content given by parts of q^inv."""
    word = [i for i, a in enumerate(parts) for _ in range(a)]
    counts = {}
    for w in set(itertools.permutations(word)):
        inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        counts[inv] = counts.get(inv, 0) + 1
    return [counts.get(d, 0) for d in range(max(counts) + 1)]


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c

