"""Cells of the product of Grassmannians, Poincare polynomials and rank counts."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .combinat import (
    Composition,
    SetSequence,
    covers,
    elements_of,
    enumerate_op,
    enumerate_set_sequences,
)
from .linalg import pattern_matrix, unipotent_pattern


class BoundExceeded(ValueError):
    pass


class NonConstantAlpha(ValueError):
    pass


@dataclass(frozen=True)
class Cell:
    seq: SetSequence
    stars_pm: int
    stars_u: int
    gr_dim: int

    @property
    def dim(self) -> int:
        return self.stars_pm + self.stars_u

    @property
    def codim(self) -> int:
        return self.gr_dim - self.dim

    @property
    def covering(self) -> bool:
        return covers(self.seq)

    def rank_profile(self) -> tuple[tuple[int, ...], ...]:
        """``|J_t & [i]|`` for each stage ``t`` and row ``i``, with ``J_t`` the initial unions."""
        k = self.seq.k
        return tuple(
            tuple(sum(1 for x in elements_of(u) if x <= i) for i in range(1, k + 1))
            for u in self.seq.union_masks()
        )


def grassmannian_dim(alpha: Composition) -> int:
    return sum(a * (alpha.k - a) for a in alpha.parts)


def make_cell(seq: SetSequence) -> Cell:
    alpha = seq.type()
    return Cell(seq, pattern_matrix(seq).stars(), len(unipotent_pattern(seq)), grassmannian_dim(alpha))


def paving_key(c: Cell):
    """Non-covering cells first, then total northwest rank, then dimension (smallest first)."""
    return (c.covering, sum(map(sum, c.rank_profile())), c.dim, c.seq.masks)


@dataclass(frozen=True)
class PavingReport:
    alpha: Composition
    cells: tuple[Cell, ...]
    poincare_gr: tuple[int, ...]
    poincare_x: tuple[int, ...]

    @property
    def betti(self) -> tuple[int, ...]:
        """Ranks of ``H^0, H^1, ..., H^{2 top}`` of the spanning configuration space."""
        out = []
        for c in self.poincare_x:
            out.extend([c, 0])
        return tuple(out[:-1]) if out else ()


def _series(values: Sequence[int]) -> tuple[int, ...]:
    if not values:
        return ()
    out = [0] * (max(values) + 1)
    for v in values:
        out[v] += 1
    return tuple(out)


def enumerate_cells(alpha: Composition) -> PavingReport:
    cells = sorted((make_cell(s) for s in enumerate_set_sequences(alpha)), key=paving_key)
    return PavingReport(
        alpha,
        tuple(cells),
        _series([c.codim for c in cells]),
        _series([c.codim for c in cells if c.covering]),
    )


def poly_text(coeffs: Sequence[int], var: str = "q") -> str:
    """``[1, 2, 1]`` becomes ``1 + 2q + q^2``."""
    parts = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if d == 0 else var if d == 1 else f"{var}^{d}"
        if d == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}{mono}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# -- rank counts ---------------------------------------------------------------


def count_covering_matrices(alpha: Composition) -> int:
    """Inclusion-exclusion over the set of rows forced to be zero."""
    k = alpha.k
    return sum(
        (-1) ** s * math.comb(k, s) * math.prod(math.comb(k - s, a) for a in alpha.parts)
        for s in range(k + 1)
    )


def total_rank(alpha: Composition) -> int:
    return sum(1 for c in enumerate_cells(alpha).cells if c.covering)


def rank_consistency(alpha: Composition, max_n: int = 6) -> bool:
    """Cell count, orbit count and invariant Hilbert series all agree, degree by degree."""
    from .polyalg import invariant_hilbert

    if alpha.n > max_n:
        raise BoundExceeded(f"|alpha| = {alpha.n} exceeds the bound {max_n}")
    rep = enumerate_cells(alpha)
    total = sum(rep.poincare_x)
    op = len(enumerate_op(alpha))
    if op % alpha.factorial() or op // alpha.factorial() != total:
        return False
    if total != count_covering_matrices(alpha):
        return False
    return _trim(invariant_hilbert(alpha)) == _trim(list(rep.poincare_x))


def _trim(c: Sequence[int]) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


# -- the S_r permutation character ------------------------------------------------


def permutation_character(alpha: Composition, pi: Sequence[int]) -> int:
    """Covering sequences fixed by permuting positions: ``(I_{pi(1)}, ..., I_{pi(r)}) = (I_1, ..., I_r)``."""
    if len(set(alpha.parts)) != 1:
        raise NonConstantAlpha(f"{alpha.parts} is not constant")
    r = alpha.r
    pi = tuple(pi)
    if sorted(pi) != list(range(1, r + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{r}")
    return sum(
        1 for s in enumerate_set_sequences(alpha)
        if covers(s) and all(s.masks[pi[t] - 1] == s.masks[t] for t in range(r))
    )


def sr_fixed_count(d: int, r: int, k: int, pi: Sequence[int]) -> int:
    return permutation_character(Composition((d,) * r, k), pi)


# -- product-formula oracles ----------------------------------------------------


def _pmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pdiv_exact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in reversed(range(len(q))):
        c, r = divmod(a[i + len(b) - 1], b[-1])
        assert r == 0
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    assert not any(a)
    return q


def q_factorial(m: int) -> list[int]:
    out = [1]
    for i in range(1, m + 1):
        out = _pmul(out, [1] * i)
    return out


def q_multinomial(parts: Sequence[int]) -> list[int]:
    """``[n]_q! / prod [a_i]_q!`` with ``n = sum(parts)``."""
    den = [1]
    for a in parts:
        den = _pmul(den, q_factorial(a))
    return _pdiv_exact(q_factorial(sum(parts)), den)


def gaussian_binomial(k: int, d: int) -> list[int]:
    return q_multinomial((d, k - d))


def gr_poincare_product(alpha: Composition) -> list[int]:
    out = [1]
    for a in alpha.parts:
        out = _pmul(out, gaussian_binomial(alpha.k, a))
    return out


def jump_compatible(alpha: Composition, unions: Sequence[Sequence[int]]) -> list[SetSequence]:
    """Set sequences of type ``alpha`` whose initial unions are the given chain."""
    from .combinat import mask_of

    target = tuple(mask_of(u) for u in unions)
    return [s for s in enumerate_set_sequences(alpha) if s.union_masks() == target]


def brute_covering_count(alpha: Composition) -> int:
    """Column-by-column enumeration of 0,1-matrices with the given column sums and no zero row."""
    full = (1 << alpha.k) - 1
    cols = [
        [sum(1 << (i - 1) for i in c) for c in itertools.combinations(range(1, alpha.k + 1), a)]
        for a in alpha.parts
    ]
    count = 0
    for combo in itertools.product(*cols):
        u = 0
        for m in combo:
            u |= m
        count += u == full
    return count
