"""Elementary and complete homogeneous polynomials and the defining ideal generators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..combinat import Composition, batches
from .poly import Poly


def elementary(d: int, vars: Sequence[int], n: int) -> Poly:
    """``e_d`` in the listed 1-based variables."""
    if d < 0:
        return Poly.zero(n)
    terms = {}
    for S in itertools.combinations(sorted(vars), d):
        e = [0] * n
        for i in S:
            e[i - 1] = 1
        terms[tuple(e)] = 1
    return Poly(terms, n)


def complete_homog(d: int, vars: Sequence[int], n: int) -> Poly:
    if d < 0:
        return Poly.zero(n)
    terms = {}
    for S in itertools.combinations_with_replacement(sorted(vars), d):
        e = [0] * n
        for i in S:
            e[i - 1] += 1
        terms[tuple(e)] = 1
    return Poly(terms, n)


@dataclass(frozen=True)
class IdealSpec:
    alpha: Composition
    generators: tuple[Poly, ...]

    @property
    def k(self) -> int:
        return self.alpha.k


def ideal_generators(alpha: Composition) -> IdealSpec:
    """Top ``k`` elementary symmetric polynomials, then ``h_{k-a+1}..h_k`` on each batch.

    Indices ``d < 0`` are dropped; when ``k > n`` the list contains ``e_0 = 1``.
    """
    n, k = alpha.n, alpha.k
    allv = range(1, n + 1)
    gens = [elementary(d, allv, n) for d in range(n, n - k, -1) if d >= 0]
    for b, a in zip(batches(alpha), alpha.parts):
        gens.extend(complete_homog(d, b, n) for d in range(k - a + 1, k + 1))
    return IdealSpec(alpha, tuple(gens))


def divided_difference(i: int, f: Poly) -> Poly:
    """``(f - s_i f) / (x_i - x_{i+1})``, expanded monomial by monomial."""
    n = f.n
    if not 1 <= i <= n - 1:
        raise IndexError(f"no divided difference {i} in {n} variables")
    out: dict = {}
    for m, c in f.terms.items():
        a, b = m[i - 1], m[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        hi, lo = max(a, b), min(a, b)
        for j in range(hi - lo):
            e = list(m)
            e[i - 1], e[i] = hi - 1 - j, lo + j
            e = tuple(e)
            out[e] = out.get(e, 0) + sign * c
    return Poly(out, n)


def isobaric(i: int, f: Poly) -> Poly:
    """``pi_i f = d_i(x_i f)``."""
    return divided_difference(i, Poly.var(i, f.n) * f)
