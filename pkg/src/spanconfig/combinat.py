"""Compositions, set sequences, ordered set partitions and the words attached to them.

Letters of ``[n]`` and rows of ``[k]`` are 1-based throughout this module, so the
objects read the same way they are written by hand.  Subsets of ``[k]`` are kept
as bitmasks (bit ``i - 1`` stands for ``i``); the mask is the canonical form used
for hashing and equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class InvalidCode(ValueError):
    """Raised when a word is not the coinversion code of any ordered set partition."""


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Composition:
    """A sequence of positive parts, each at most ``k``."""

    parts: tuple[int, ...]
    k: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if not parts:
            raise ValueError("a composition needs at least one part")
        for p in parts:
            if not 1 <= p <= self.k:
                raise ValueError(f"part {p} outside [1, {self.k}]")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def factorial(self) -> int:
        """Order of the parabolic subgroup, the product of the part factorials."""
        return math.prod(math.factorial(p) for p in self.parts)

    def offsets(self) -> tuple[int, ...]:
        """Partial sums ``(0, a_1, a_1 + a_2, ..., n)``."""
        return tuple(itertools.accumulate(self.parts, initial=0))


def batches(alpha: Composition) -> tuple[range, ...]:
    """Half-open ranges of 1-based letters, one per part of ``alpha``."""
    off = alpha.offsets()
    return tuple(range(off[i] + 1, off[i + 1] + 1) for i in range(alpha.r))


def parabolic_generators(alpha: Composition) -> tuple[int, ...]:
    """Indices ``p`` of the adjacent transpositions ``(p, p+1)`` lying inside a batch."""
    return tuple(p for b in batches(alpha) for p in list(b)[:-1])


def compositions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` with parts at most ``max_part``, in lex order."""
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in compositions(n - first, max_part):
            yield (first,) + rest


# -- set sequences ---------------------------------------------------------


@dataclass(frozen=True)
class SetSequence:
    """A tuple of nonempty subsets of ``[k]``, stored as bitmasks."""

    masks: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "masks", tuple(self.masks))
        full = (1 << self.k) - 1
        if not self.masks:
            raise ValueError("a set sequence needs at least one set")
        for m in self.masks:
            if m == 0:
                raise ValueError("empty set in set sequence")
            if m & ~full:
                raise ValueError(f"set {elements_of(m)} not inside [1, {self.k}]")

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], k: int) -> "SetSequence":
        return cls(tuple(mask_of(s) for s in sets), k)

    @property
    def sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(m) for m in self.masks)

    @property
    def r(self) -> int:
        return len(self.masks)

    def type(self) -> Composition:
        return Composition(tuple(m.bit_count() for m in self.masks), self.k)

    def union_masks(self) -> tuple[int, ...]:
        """Initial unions ``I_1 | ... | I_t`` for ``t = 1..r``."""
        return tuple(itertools.accumulate(self.masks, lambda a, b: a | b))

    def __len__(self):
        return len(self.masks)


def covers(s: SetSequence) -> bool:
    return s.union_masks()[-1] == (1 << s.k) - 1


def enumerate_set_sequences(alpha: Composition) -> list[SetSequence]:
    """Every set sequence of type ``alpha``, ordered lexicographically by sorted sets."""
    choices = [list(itertools.combinations(range(1, alpha.k + 1), a)) for a in alpha.parts]
    return [SetSequence.from_sets(combo, alpha.k) for combo in itertools.product(*choices)]


def set_sequence_matrix(s: SetSequence) -> tuple[tuple[int, ...], ...]:
    """The ``k x r`` 0,1-matrix whose column ``t`` is the indicator of ``I_t``."""
    return tuple(
        tuple((m >> i) & 1 for m in s.masks)
        for i in range(s.k)
    )


def set_sequence_from_matrix(matrix: Sequence[Sequence[int]]) -> SetSequence:
    k = len(matrix)
    if k == 0:
        raise ValueError("matrix has no rows")
    r = len(matrix[0])
    masks = []
    for t in range(r):
        col = [matrix[i][t] for i in range(k)]
        if any(v not in (0, 1) for v in col):
            raise ValueError("matrix entries must be 0 or 1")
        if not any(col):
            raise ValueError(f"column {t + 1} is zero; empty sets are not allowed")
        masks.append(mask_of(i + 1 for i in range(k) if col[i]))
    return SetSequence(tuple(masks), k)


# -- ordered set partitions -------------------------------------------------


@dataclass(frozen=True)
class OrderedSetPartition:
    """A sequence of disjoint nonempty blocks whose union is ``[n]``."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise ValueError("ordered set partitions have no empty blocks")
        letters = sorted(x for b in blocks for x in b)
        if letters != list(range(1, len(letters) + 1)):
            raise ValueError(f"blocks {blocks} do not partition [1, {len(letters)}]")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_assignment(cls, word: Sequence[int], k: int) -> "OrderedSetPartition":
        """Build from ``word[i - 1]`` = 1-based block index of letter ``i``."""
        blocks: list[list[int]] = [[] for _ in range(k)]
        for i, b in enumerate(word, start=1):
            blocks[b - 1].append(i)
        return cls(tuple(tuple(b) for b in blocks))

    def assignment(self) -> tuple[int, ...]:
        word = [0] * self.n
        for j, b in enumerate(self.blocks, start=1):
            for x in b:
                word[x - 1] = j
        return tuple(word)

    def block_of(self, letter: int) -> int:
        for j, b in enumerate(self.blocks, start=1):
            if letter in b:
                return j
        raise KeyError(letter)


def in_op(sigma: OrderedSetPartition, alpha: Composition) -> bool:
    """Whether every batch of letters lands in pairwise distinct blocks."""
    if sigma.k != alpha.k or sigma.n != alpha.n:
        return False
    w = sigma.assignment()
    return all(len({w[i - 1] for i in b}) == len(b) for b in batches(alpha))


def enumerate_op(alpha: Composition) -> list[OrderedSetPartition]:
    """Ordered set partitions of ``[n]`` into ``k`` blocks with each batch spread out.

    Sorted lexicographically by block-assignment word.  Empty when ``k > n``.
    """
    k = alpha.k
    per_batch = [list(itertools.permutations(range(1, k + 1), a)) for a in alpha.parts]
    full = set(range(1, k + 1))
    out = []
    for combo in itertools.product(*per_batch):
        word = tuple(itertools.chain.from_iterable(combo))
        if set(word) == full:
            out.append(OrderedSetPartition.from_assignment(word, k))
    return out


def act_on_op(p: int, sigma: OrderedSetPartition) -> OrderedSetPartition:
    """Swap letters ``p`` and ``p + 1``."""
    swap = {p: p + 1, p + 1: p}
    return OrderedSetPartition(tuple(tuple(swap.get(x, x) for x in b) for b in sigma.blocks))


# -- skip sequences and nonskip monomials ------------------------------------


def skip_sequence(S: Iterable[int], n: int) -> tuple[int, ...]:
    """``gamma_i = i - j + 1`` when ``i`` is the ``j``-th smallest element of ``S``, else 0."""
    gamma = [0] * n
    for j, i in enumerate(sorted(S), start=1):
        if not 1 <= i <= n:
            raise ValueError(f"{i} is not in [1, {n}]")
        gamma[i - 1] = i - j + 1
    return tuple(gamma)


def reverse_skip(S: Iterable[int], n: int) -> tuple[int, ...]:
    return skip_sequence(S, n)[::-1]


def reverse_skip_monomial(S: Iterable[int], n: int) -> tuple[int, ...]:
    """Exponent vector of ``x_1^{gamma_n} ... x_n^{gamma_1}``; same tuple as :func:`reverse_skip`."""
    return reverse_skip(S, n)


@lru_cache(maxsize=None)
def reverse_skip_vectors(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Reverse skip sequences of all ``(n - k + 1)``-subsets of ``[n]``.

    For ``k > n + 1`` there are no such subsets; callers treat ``k > n`` specially.
    """
    size = n - k + 1
    if size < 0:
        return ()
    return tuple(reverse_skip(S, n) for S in itertools.combinations(range(1, n + 1), size))


def dominates_reverse_skip(word: Sequence[int], k: int) -> bool:
    """Whether ``gamma(S)^* <= word`` componentwise for some ``|S| = n - k + 1``.

    When ``k > n`` the top ``k`` elementary symmetric polynomials include ``e_0 = 1``,
    so every word is treated as dominating.
    """
    n = len(word)
    if k > n:
        return True
    return any(all(g <= a for g, a in zip(gamma, word)) for gamma in reverse_skip_vectors(n, k))


def batch_caps(alpha: Composition) -> tuple[int, ...]:
    """Exclusive exponent cap ``k - j + 1`` for the ``j``-th variable of each batch."""
    return tuple(alpha.k - j + 1 for a in alpha.parts for j in range(1, a + 1))


def is_alpha_nonskip(m: Sequence[int], alpha: Composition) -> bool:
    if len(m) != alpha.n:
        raise ValueError(f"exponent vector has length {len(m)}, expected {alpha.n}")
    if any(a >= cap for a, cap in zip(m, batch_caps(alpha))):
        return False
    return not dominates_reverse_skip(m, alpha.k)


def enumerate_nonskip(alpha: Composition) -> list[tuple[int, ...]]:
    """All alpha-nonskip exponent vectors in lexicographic order."""
    if alpha.k > alpha.n:
        return []
    ranges = [range(cap) for cap in batch_caps(alpha)]
    return [m for m in itertools.product(*ranges) if not dominates_reverse_skip(m, alpha.k)]


# -- coinversion codes ------------------------------------------------------


def coinversion_code(sigma: OrderedSetPartition) -> tuple[int, ...]:
    mins = [b[0] for b in sigma.blocks]
    code = []
    for i in range(1, sigma.n + 1):
        j = sigma.block_of(i)
        later = sum(1 for jp in range(j + 1, sigma.k + 1) if mins[jp - 1] > i)
        code.append(later if i == mins[j - 1] else later + j - 1)
    return tuple(code)


def coinversion_labels(blocks: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Label empty blocks ``0, 1, ...`` from right to left, then nonempty blocks left to right."""
    k = len(blocks)
    labels = [0] * k
    nxt = 0
    for j in reversed(range(k)):
        if not blocks[j]:
            labels[j] = nxt
            nxt += 1
    for j in range(k):
        if blocks[j]:
            labels[j] = nxt
            nxt += 1
    return tuple(labels)


def is_code(c: Sequence[int], k: int) -> bool:
    """Whether ``c`` is the coinversion code of some ordered set partition with ``k`` blocks."""
    return all(0 <= x < k for x in c) and not dominates_reverse_skip(c, k)


def iota_insert(c: Sequence[int], k: int) -> OrderedSetPartition:
    """Inverse of :func:`coinversion_code`: insert ``i`` into the block labelled ``c_i``."""
    if not all(0 <= x < k for x in c):
        raise InvalidCode(f"{tuple(c)} has an entry outside [0, {k - 1}]")
    if dominates_reverse_skip(c, k):
        raise InvalidCode(f"{tuple(c)} dominates a reverse skip sequence for k={k}")
    blocks: list[list[int]] = [[] for _ in range(k)]
    for i, ci in enumerate(c, start=1):
        labels = coinversion_labels(blocks)
        blocks[labels.index(ci)].append(i)
    if any(not b for b in blocks):
        raise InvalidCode(f"insertion of {tuple(c)} left an empty block")
    return OrderedSetPartition(tuple(tuple(b) for b in blocks))


def alpha_decreasing(w: Sequence[int], alpha: Composition) -> bool:
    """Whether each batch of ``w`` is strictly decreasing."""
    return all(
        all(w[i - 1] > w[i] for i in list(b)[:-1])
        for b in batches(alpha)
    )


def is_alpha_compatible(sigma: OrderedSetPartition, alpha: Composition) -> bool:
    """Replay the batches; each must enter blocks of strictly decreasing label."""
    assign = sigma.assignment()
    blocks: list[list[int]] = [[] for _ in range(sigma.k)]
    for b in batches(alpha):
        labels = coinversion_labels(blocks)
        got = [labels[assign[i - 1] - 1] for i in b]
        if any(x <= y for x, y in zip(got, got[1:])):
            return False
        for i in b:
            blocks[assign[i - 1] - 1].append(i)
    return True


# -- the free S_n action on words ------------------------------------------


def unusual_act(i: int, w: Sequence[int]) -> tuple[int, ...]:
    """Apply ``s_i`` to ``w`` under the free action on nonnegative words."""
    n = len(w)
    if not 1 <= i <= n - 1:
        raise IndexError(f"s_{i} is not a generator for words of length {n}")
    out = list(w)
    a, b = out[i - 1], out[i]
    if a > b:
        out[i - 1], out[i] = b, a - 1
    else:
        out[i - 1], out[i] = b + 1, a
    return tuple(out)


def act_by_word(reduced_word: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """Apply ``s_{i_1} s_{i_2} ... s_{i_l}`` (rightmost factor first)."""
    out = tuple(w)
    for i in reversed(reduced_word):
        out = unusual_act(i, out)
    return out


def inversion_encode(b: Sequence[int]) -> tuple[int, ...]:
    """Inversion code: for letter ``j``, count later letters in ``{0, ..., j - 1}``."""
    positive = [x for x in b if x > 0]
    n = len(positive)
    if sorted(positive) != list(range(1, n + 1)) or any(x < 0 for x in b):
        raise ValueError(f"{tuple(b)} must use each of 1..{n} once plus zeros")
    if b and b[0] == 0:
        raise ValueError("padded words start with a positive letter")
    pos = {x: p for p, x in enumerate(b) if x > 0}
    return tuple(sum(1 for y in b[pos[j] + 1:] if y < j) for j in range(1, n + 1))


def inversion_decode(c: Sequence[int]) -> tuple[int, ...]:
    """The unique padded word with inversion code ``c``.

    The number of zeros is forced: it is ``max_j (c_j - j + 1)``.
    """
    zeros = max([cj - j for j, cj in enumerate(c)], default=0)
    word: list[int] = [0] * max(zeros, 0)
    for j, cj in enumerate(c, start=1):
        word.insert(len(word) - cj, j)
    return tuple(word)


def transferred_act(i: int, w: Sequence[int]) -> tuple[int, ...]:
    """Swap letters ``i`` and ``i + 1`` of the padded word whose inversion code is ``w``."""
    n = len(w)
    if not 1 <= i <= n - 1:
        raise IndexError(f"s_{i} is not a generator for words of length {n}")
    swap = {i: i + 1, i + 1: i}
    return inversion_encode(tuple(swap.get(x, x) for x in inversion_decode(w)))


def orbit_decreasing_rep(w: Sequence[int]) -> tuple[int, ...]:
    """The strictly decreasing word in the orbit of ``w`` under :func:`unusual_act`.

    ``unusual_act(i, .)`` is conjugate, under word reversal, to
    ``transferred_act(n - i, .)``.  So reverse, decode to a padded word, put the
    positive letters in decreasing order in place, encode, and reverse back.
    """
    b = list(inversion_decode(tuple(w)[::-1]))
    slots = [p for p, x in enumerate(b) if x > 0]
    for p, x in zip(slots, sorted((b[p] for p in slots), reverse=True)):
        b[p] = x
    return inversion_encode(b)[::-1]


def orbit(w: Sequence[int], generators: Iterable[int] | None = None) -> set[tuple[int, ...]]:
    """Orbit of ``w`` under the subgroup generated by the given ``s_i`` (default: all)."""
    w = tuple(w)
    gens = tuple(range(1, len(w))) if generators is None else tuple(generators)
    seen = {w}
    stack = [w]
    while stack:
        x = stack.pop()
        for i in gens:
            y = unusual_act(i, x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen
