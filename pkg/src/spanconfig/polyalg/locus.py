"""The finite point locus indexed by ordered set partitions."""

from __future__ import annotations

from dataclasses import dataclass

from ..combinat import Composition, OrderedSetPartition, batches, enumerate_op
from .poly import Poly
from .symmetric import complete_homog, elementary


@dataclass(frozen=True)
class PointLocus:
    alpha: Composition
    points: tuple[tuple[int, ...], ...]
    eta: tuple[int, ...]


def point_of(sigma: OrderedSetPartition, eta=None) -> tuple[int, ...]:
    """Coordinate ``i`` is ``eta_j`` where ``j`` is the block containing ``i``."""
    eta = eta or tuple(range(1, sigma.k + 1))
    return tuple(eta[j - 1] for j in sigma.assignment())


def point_locus(alpha: Composition) -> PointLocus:
    eta = tuple(range(1, alpha.k + 1))
    return PointLocus(alpha, tuple(point_of(s, eta) for s in enumerate_op(alpha)), eta)


def _const(value, n: int) -> Poly:
    return Poly.one(n) * value


def inhomogeneous_relations(alpha: Composition) -> list[Poly]:
    """Polynomials vanishing on the locus whose top-degree parts are the ideal generators."""
    n, k = alpha.n, alpha.k
    eta = range(1, k + 1)
    # constants e_j(eta), h_j(eta) evaluated once
    e_eta = [elementary(j, range(1, k + 1), k).evaluate(eta) for j in range(k + 1)]
    h_eta = [complete_homog(j, range(1, k + 1), k).evaluate(eta) for j in range(n + 1)]
    allv = range(1, n + 1)
    out = []
    for d in range(max(n - k + 1, 0), n + 1):
        f = Poly.zero(n)
        for j in range(d + 1):
            f = f + elementary(d - j, allv, n) * ((-1) ** j * h_eta[j])
        out.append(f)
    for b, a in zip(batches(alpha), alpha.parts):
        for d in range(k - a + 1, k + 1):
            f = Poly.zero(n)
            for j in range(min(k, d) + 1):
                f = f + complete_homog(d - j, b, n) * ((-1) ** j * e_eta[j])
            out.append(f)
    return out


def vanishing_checks(alpha: Composition) -> bool:
    pts = point_locus(alpha).points
    return all(f.evaluate(p) == 0 for f in inhomogeneous_relations(alpha) for p in pts)
