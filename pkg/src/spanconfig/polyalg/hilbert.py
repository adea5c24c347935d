"""Graded dimensions of the quotient ring and of its parabolic invariants."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

from ..combinat import Composition, parabolic_generators
from .groebner import groebner_basis, normal_form, standard_monomials
from .poly import Poly


def hilbert_series(monomials: Iterable[Sequence[int]]) -> list[int]:
    """Coefficient list of ``sum q^deg(m)``; empty when there are no monomials."""
    counts = Counter(sum(m) for m in monomials)
    if not counts:
        return []
    return [counts.get(d, 0) for d in range(max(counts) + 1)]


def quotient_standard_monomials(alpha: Composition) -> list[tuple[int, ...]]:
    gb = groebner_basis(alpha)
    return standard_monomials(gb.leading_monomials(), alpha.n)


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def invariant_hilbert(alpha: Composition) -> list[int]:
    """Per degree, the dimension of the subspace fixed by the parabolic subgroup.

    Each generator acts by a variable swap followed by reduction to normal form;
    the fixed space is the common kernel of ``M - I`` over the generators.
    """
    gb = groebner_basis(alpha)
    std = standard_monomials(gb.leading_monomials(), alpha.n)
    gens = parabolic_generators(alpha)
    by_deg: dict[int, list] = {}
    for m in std:
        by_deg.setdefault(sum(m), []).append(m)
    if not by_deg:
        return []
    out = []
    for d in range(max(by_deg) + 1):
        basis = by_deg.get(d, [])
        N = len(basis)
        if N == 0 or not gens:
            out.append(N)
            continue
        index = {m: i for i, m in enumerate(basis)}
        rows = []
        for p in gens:
            # column j of M_p is the image of basis[j]
            img = [normal_form(Poly.monomial(m).swap_vars(p), gb) for m in basis]
            for i in range(N):
                rows.append([img[j].terms.get(basis[i], Fraction(0)) - (1 if i == j else 0) for j in range(N)])
            assert all(set(f.terms) <= index.keys() for f in img)
        out.append(N - _rank(rows))
    return out
