"""Exact block matrices over the rationals: pi-CREF, pattern matrices and mixed reduction.

Rows and pivot sets are 1-based (rows of ``[k]``); column indices inside matrices
are 0-based like ordinary Python lists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .combinat import Composition, SetSequence, elements_of, mask_of

ZERO, ONE, STAR = "0", "1", "*"


class RankDeficient(ValueError):
    pass


class BlockRankDeficient(RankDeficient):
    def __init__(self, block: int):
        super().__init__(f"block {block} does not have full column rank")
        self.block = block


class BadSubsetSize(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatMatrix:
    """Dense immutable matrix of Fractions."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(_frac(x) for x in row) for row in rows)
        if not self.rows or not self.rows[0]:
            raise DimensionMismatch("matrices must have positive dimensions")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise DimensionMismatch("ragged rows")
        self._hash = None

    @classmethod
    def identity(cls, k: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "RatMatrix":
        return cls(list(zip(*cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in r] for r in self.rows]})"

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        return RatMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def columns(self) -> list[tuple[Fraction, ...]]:
        return list(zip(*self.rows))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.columns())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def column_slice(self, start: int, stop: int) -> "RatMatrix":
        return RatMatrix([r[start:stop] for r in self.rows])

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def is_unit_lower_triangular(self) -> bool:
        k, m = self.shape
        if k != m:
            return False
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(k) for j in range(i, k)
        )


def hstack(blocks: Sequence[RatMatrix]) -> RatMatrix:
    return RatMatrix([sum((b.rows[i] for b in blocks), ()) for i in range(blocks[0].nrows)])


def block_diag(blocks: Sequence[RatMatrix]) -> RatMatrix:
    n = sum(b.ncols for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append([0] * off + list(r) + [0] * (n - off - b.ncols))
        off += b.ncols
    return RatMatrix(rows)


def _row_echelon(rows: list[list[Fraction]]) -> int:
    """Gaussian elimination in place; returns the rank."""
    rank = 0
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rank, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        piv = rows[rank][c]
        for i in range(rank + 1, nrows):
            f = rows[i][c] / piv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rank(a: RatMatrix) -> int:
    return _row_echelon(a.to_lists())


def det(a: RatMatrix) -> Fraction:
    n, m = a.shape
    if n != m:
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = a.to_lists()
    sign = 1
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    out = Fraction(sign)
    for i in range(n):
        out *= rows[i][i]
    return out


def inverse(a: RatMatrix) -> RatMatrix:
    n, m = a.shape
    if n != m:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a.rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise RankDeficient("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return RatMatrix([r[n:] for r in aug])


def maximal_minor(a: RatMatrix, rows: Iterable[int]) -> Fraction:
    """Determinant of the square submatrix on the given 1-based rows, taken in increasing order."""
    rows = sorted(rows)
    if len(rows) != a.ncols:
        raise BadSubsetSize(f"need {a.ncols} rows, got {len(rows)}")
    return det(a.submatrix([r - 1 for r in rows], range(a.ncols)))


# -- pi-CREF ------------------------------------------------------------------


def _check_perm(pi: Sequence[int], k: int) -> tuple[int, ...]:
    pi = tuple(pi)
    if sorted(pi) != list(range(1, k + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{k}")
    return pi


def pi_cref(a: RatMatrix, pi: Sequence[int]) -> tuple[RatMatrix, RatMatrix, tuple[int, ...]]:
    """Column-reduce ``a`` with rows prioritised in the order ``pi``.

    Returns ``(b, g, pivots)`` with ``b = a @ g``; ``pivots`` lists the pivot row of
    each column of ``b`` (columns sorted by priority of their pivot row).
    """
    k, d = a.shape
    pi = _check_perm(pi, k)
    cols = [list(c) for c in a.columns()]
    ops = [[Fraction(int(i == j)) for i in range(d)] for j in range(d)]  # column j of g
    pivot_of: dict[int, int] = {}
    for row in pi:
        r = row - 1
        c = next((j for j in range(d) if j not in pivot_of and cols[j][r] != 0), None)
        if c is None:
            continue
        pivot_of[c] = row
        s = cols[c][r]
        cols[c] = [x / s for x in cols[c]]
        ops[c] = [x / s for x in ops[c]]
        for j in range(d):
            if j != c and cols[j][r] != 0:
                f = cols[j][r]
                cols[j] = [x - f * y for x, y in zip(cols[j], cols[c])]
                ops[j] = [x - f * y for x, y in zip(ops[j], ops[c])]
    if len(pivot_of) < d:
        raise RankDeficient(f"rank {len(pivot_of)} < {d}")
    prio = {row: p for p, row in enumerate(pi)}
    order = sorted(range(d), key=lambda j: prio[pivot_of[j]])
    b = RatMatrix.from_columns([cols[j] for j in order])
    g = RatMatrix.from_columns([ops[j] for j in order])
    return b, g, tuple(pivot_of[j] for j in order)


def cref_template(k: int, pivots: Iterable[int], pi: Sequence[int]) -> tuple[tuple[str, ...], ...]:
    """The {0,1,*} shape (as a list of rows) of a pi-CREF with the given pivot rows."""
    pi = _check_perm(pi, k)
    prio = {row: p for p, row in enumerate(pi)}
    piv = sorted(set(pivots), key=lambda r: prio[r])
    cols = []
    for p in piv:
        col = []
        for row in range(1, k + 1):
            if row == p:
                col.append(ONE)
            elif row in piv or prio[row] < prio[p]:
                col.append(ZERO)
            else:
                col.append(STAR)
        cols.append(col)
    return tuple(zip(*cols)) if cols else tuple(() for _ in range(k))


def minor_recovery_check(a: RatMatrix, pi: Sequence[int]) -> bool:
    """Every off-pivot entry of the pi-CREF is plus or minus a ratio of maximal minors of ``a``."""
    b, _, pivots = pi_cref(a, pi)
    k, d = a.shape
    I = set(pivots)
    base = maximal_minor(a, I)
    if base == 0:
        return False
    for s in range(d):
        for r in range(1, k + 1):
            if r in I:
                continue
            J = (I - {pivots[s]}) | {r}
            q = maximal_minor(a, J) / base
            if b[r - 1, s] not in (q, -q):
                return False
    return True


# -- set-sequence patterns ------------------------------------------------------


def permutation_sequence(s: SetSequence) -> list[tuple[int, ...]]:
    k = s.k
    out = []
    prior = 0
    for m in s.masks:
        fresh = [i for i in range(1, k + 1) if not (prior >> (i - 1)) & 1]
        old = list(elements_of(prior))
        out.append(tuple(fresh + old))
        prior |= m
    return out


def _new_and_outside(s: SetSequence) -> list[tuple[list[int], set[int]]]:
    """Per stage: rows newly pivoted, and rows outside the union through that stage."""
    out = []
    prior = 0
    full = set(range(1, s.k + 1))
    for m in s.masks:
        now = prior | m
        out.append((list(elements_of(m & ~prior)), full - set(elements_of(now))))
        prior = now
    return out


@dataclass(frozen=True)
class UnipotentPattern:
    positions: frozenset
    k: int

    def __len__(self):
        return len(self.positions)

    def grid(self) -> tuple[tuple[str, ...], ...]:
        return tuple(
            tuple(ONE if i == j else STAR if (i, j) in self.positions else ZERO for j in range(1, self.k + 1))
            for i in range(1, self.k + 1)
        )

    def conforms(self, u: RatMatrix) -> bool:
        if u.shape != (self.k, self.k):
            return False
        for i in range(1, self.k + 1):
            for j in range(1, self.k + 1):
                v = u[i - 1, j - 1]
                if i == j:
                    if v != 1:
                        return False
                elif (i, j) not in self.positions and v != 0:
                    return False
        return True


def unipotent_pattern(s: SetSequence) -> UnipotentPattern:
    """Positions ``(j, i)`` with ``j > i``, ``i`` newly pivoted at some stage and ``j`` outside the union so far."""
    pos = set()
    for new, outside in _new_and_outside(s):
        for i in new:
            for j in outside:
                if j > i:
                    pos.add((j, i))
    return UnipotentPattern(frozenset(pos), s.k)


@dataclass(frozen=True)
class PatternMatrix:
    cells: tuple[tuple[str, ...], ...]
    alpha: Composition
    source: SetSequence

    def stars(self) -> int:
        return sum(row.count(STAR) for row in self.cells)

    def block(self, t: int) -> tuple[tuple[str, ...], ...]:
        """Block ``t`` (0-based) as rows."""
        off = self.alpha.offsets()
        return tuple(row[off[t]:off[t + 1]] for row in self.cells)

    def has_zero_row(self) -> bool:
        return any(all(c == ZERO for c in row) for row in self.cells)

    def text(self) -> str:
        """Rows separated by ``/``, blocks by ``|``."""
        off = self.alpha.offsets()
        return " | ".join(
            "/".join("".join(row[off[t]:off[t + 1]]) for row in self.cells)
            for t in range(self.alpha.r)
        )


def pattern_matrix(s: SetSequence) -> PatternMatrix:
    k = s.k
    perms = permutation_sequence(s)
    stages = _new_and_outside(s)
    block_cols = []
    for t, m in enumerate(s.masks):
        pi = perms[t]
        tmpl = cref_template(k, elements_of(m), pi)
        prio = {row: p for p, row in enumerate(pi)}
        piv = sorted(elements_of(m), key=lambda r: prio[r])
        cols = [list(c) for c in zip(*tmpl)]
        new, outside = stages[t]
        for i in new:
            c = piv.index(i)
            for j in outside:
                if j > i:
                    cols[c][j - 1] = ZERO
        block_cols.extend(cols)
    return PatternMatrix(tuple(zip(*block_cols)), s.type(), s)


def fits_pattern(b: RatMatrix, s: SetSequence) -> bool:
    pm = pattern_matrix(s)
    if b.shape != (s.k, pm.alpha.n):
        raise DimensionMismatch(f"matrix is {b.shape}, pattern is {(s.k, pm.alpha.n)}")
    for row_p, row_b in zip(pm.cells, b.rows):
        for c, v in zip(row_p, row_b):
            if c == ZERO and v != 0 or c == ONE and v != 1:
                return False
    return True


# -- mixed reduction --------------------------------------------------------------


@dataclass(frozen=True)
class BlockMatrix:
    matrix: RatMatrix
    alpha: Composition

    def __post_init__(self):
        if self.matrix.shape != (self.alpha.k, self.alpha.n):
            raise DimensionMismatch(
                f"matrix is {self.matrix.shape}, alpha needs {(self.alpha.k, self.alpha.n)}"
            )

    def block(self, t: int) -> RatMatrix:
        off = self.alpha.offsets()
        return self.matrix.column_slice(off[t], off[t + 1])

    def check_blocks(self):
        for t, a in enumerate(self.alpha.parts):
            if rank(self.block(t)) < a:
                raise BlockRankDeficient(t + 1)


@dataclass(frozen=True)
class MixedReductionResult:
    seq: SetSequence
    u: RatMatrix
    b: RatMatrix
    g: RatMatrix

    @property
    def covering(self) -> bool:
        return self.seq.union_masks()[-1] == (1 << self.seq.k) - 1

    def product(self) -> RatMatrix:
        return self.u @ self.b @ self.g


def mixed_reduce(a: BlockMatrix, trace: list | None = None) -> MixedReductionResult:
    """Factor ``a = u @ b @ g`` with ``b`` fitting the pattern of the output set sequence.

    If ``trace`` is a list, a snapshot of the working matrix is appended after every stage.
    """
    alpha = a.alpha
    k = alpha.k
    off = alpha.offsets()
    work = a.matrix.to_lists()
    u = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    masks = []
    levi = []
    prior = 0
    for t in range(alpha.r):
        pi = [i for i in range(1, k + 1) if not (prior >> (i - 1)) & 1] + list(elements_of(prior))
        block = RatMatrix([row[off[t]:off[t + 1]] for row in work])
        try:
            bt, gt, pivots = pi_cref(block, pi)
        except RankDeficient:
            raise BlockRankDeficient(t + 1) from None
        levi.append(inverse(gt))
        for i in range(k):
            work[i][off[t]:off[t + 1]] = bt.rows[i]
        m = mask_of(pivots)
        now = prior | m
        for c, i in enumerate(pivots):
            if (prior >> (i - 1)) & 1:
                continue
            col = off[t] + c
            for j in range(i + 1, k + 1):
                if (now >> (j - 1)) & 1:
                    continue
                f = work[j - 1][col]
                if f:
                    work[j - 1] = [x - f * y for x, y in zip(work[j - 1], work[i - 1])]
                    for row in u:
                        row[i - 1] += f * row[j - 1]
        masks.append(m)
        prior = now
        if trace is not None:
            trace.append(RatMatrix(work))
    seq = SetSequence(tuple(masks), k)
    return MixedReductionResult(seq, RatMatrix(u), RatMatrix(work), block_diag(levi))


# -- northwest ranks and jump sets -----------------------------------------------


def nw_rank(a: RatMatrix, i: int, j: int) -> int:
    k, n = a.shape
    if not (0 <= i <= k and 0 <= j <= n):
        raise IndexError(f"northwest corner ({i}, {j}) outside a {k}x{n} matrix")
    if i == 0 or j == 0:
        return 0
    return rank(a.submatrix(range(i), range(j)))


def jump_sets(a: BlockMatrix) -> list[frozenset]:
    out = []
    k = a.alpha.k
    for c in a.alpha.offsets()[1:]:
        ranks = [nw_rank(a.matrix, i, c) for i in range(k + 1)]
        out.append(frozenset(i for i in range(1, k + 1) if ranks[i] > ranks[i - 1]))
    return out


# -- sampling ---------------------------------------------------------------------


def fill_pattern(cells: Sequence[Sequence[str]], values: Iterable) -> RatMatrix:
    it = iter(values)
    return RatMatrix([[0 if c == ZERO else 1 if c == ONE else next(it) for c in row] for row in cells])


def random_levi(rng: random.Random, alpha: Composition, lo: int = -9, hi: int = 9) -> RatMatrix:
    blocks = []
    for a in alpha.parts:
        while True:
            g = RatMatrix([[rng.randint(lo, hi) for _ in range(a)] for _ in range(a)])
            if det(g) != 0:
                break
        blocks.append(g)
    return block_diag(blocks)


def random_block_matrix(rng: random.Random, alpha: Composition, lo: int = -9, hi: int = 9) -> BlockMatrix:
    """Integer entries in ``[lo, hi]``, redrawing blocks that are not of full rank."""
    blocks = []
    for a in alpha.parts:
        while True:
            blk = RatMatrix([[rng.randint(lo, hi) for _ in range(a)] for _ in range(alpha.k)])
            if rank(blk) == a:
                break
        blocks.append(blk)
    return BlockMatrix(hstack(blocks), alpha)


def sample_from_cell(rng: random.Random, s: SetSequence, lo: int = -9, hi: int = 9):
    """A random matrix ``u @ b @ g`` built from the cell of ``s``; returns ``(a, u, b, g)``."""
    pm = pattern_matrix(s)
    up = unipotent_pattern(s)
    b = fill_pattern(pm.cells, (rng.randint(lo, hi) for _ in range(pm.stars())))
    u = fill_pattern(up.grid(), (rng.randint(lo, hi) for _ in range(len(up))))
    g = random_levi(rng, pm.alpha, lo, hi)
    return BlockMatrix(u @ b @ g, pm.alpha), u, b, g

