"""Demazure characters from weak compositions via isobaric operators."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .poly import Poly
from .symmetric import isobaric


def _ascent(gamma: Sequence[int], rightmost: bool) -> int | None:
    idx = range(len(gamma) - 1)
    if rightmost:
        idx = reversed(idx)
    for i in idx:
        if gamma[i] < gamma[i + 1]:
            return i + 1
    return None


@lru_cache(maxsize=None)
def _demazure(gamma: tuple[int, ...], rightmost: bool) -> Poly:
    i = _ascent(gamma, rightmost)
    if i is None:
        return Poly.monomial(gamma)
    g = list(gamma)
    g[i - 1], g[i] = g[i], g[i - 1]
    return isobaric(i, _demazure(tuple(g), rightmost))


def demazure(gamma: Sequence[int], rightmost: bool = False) -> Poly:
    """``kappa_gamma``: a weakly decreasing ``gamma`` gives ``x^gamma``, else ``kappa_gamma = pi_i kappa_{s_i gamma}`` at an ascent.

    The ascent fixed at each step is the leftmost one, or the rightmost with
    ``rightmost=True``; both routes give the same polynomial.
    """
    gamma = tuple(int(x) for x in gamma)
    if any(x < 0 for x in gamma):
        raise ValueError(f"{gamma} has a negative entry")
    kappa = _demazure(gamma, rightmost)
    assert kappa.has_integer_coefficients(), gamma
    assert kappa.lead() == (gamma, 1), gamma
    return kappa
