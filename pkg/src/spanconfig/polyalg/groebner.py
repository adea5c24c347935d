"""Buchberger's algorithm under neglex, and the closed-form basis it is compared with."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ..combinat import Composition, batches, reverse_skip_vectors
from .demazure import demazure
from .poly import Monomial, Poly, divides, mono_div, mono_lcm, neglex_key
from .symmetric import complete_homog, ideal_generators


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic elements, sorted by leading monomial."""

    basis: tuple[Poly, ...]
    n: int
    order: str = "neglex"

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.lead_monomial() for g in self.basis)

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials())


def _reduce(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Full reduction: no term of the result is divisible by a leading monomial of ``basis``."""
    todo = dict(f.terms)
    rem = {}
    leads = [(g.lead_monomial(), g.lead_coeff(), g) for g in basis]
    while todo:
        m = max(todo, key=neglex_key)
        c = todo.pop(m)
        for lm, lc, g in leads:
            if divides(lm, m):
                q = mono_div(m, lm)
                f_c = c / lc
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = todo.get(t, 0) - f_c * gc
                    if v:
                        todo[t] = v
                    else:
                        todo.pop(t, None)
                break
        else:
            rem[m] = c
    return Poly(rem, f.n)


def normal_form(f: Poly, gb: GroebnerBasis | Sequence[Poly]) -> Poly:
    basis = gb.basis if isinstance(gb, GroebnerBasis) else gb
    return _reduce(f, basis)


def s_polynomial(f: Poly, g: Poly) -> Poly:
    mf, cf = f.lead()
    mg, cg = g.lead()
    l = mono_lcm(mf, mg)
    return f.mul_term(mono_div(l, mf), 1 / cf) - g.mul_term(mono_div(l, mg), 1 / cg)


def _pair_key(l: Monomial) -> tuple:
    return (sum(l), neglex_key(l))


def buchberger(gens: Iterable[Poly]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are taken by the normal strategy (smallest lcm degree, ties broken by
    neglex on the lcm) and skipped when the leading monomials are coprime.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    n = gens[0].n
    G: list[Poly] = []
    queue: list = []
    tie = itertools.count()

    def add(h: Poly):
        h = h.monic()
        idx = len(G)
        G.append(h)
        lh = h.lead_monomial()
        for j in range(idx):
            lj = G[j].lead_monomial()
            if all(a == 0 or b == 0 for a, b in zip(lh, lj)):
                continue
            l = mono_lcm(lh, lj)
            heapq.heappush(queue, (_pair_key(l), next(tie), j, idx))

    for g in gens:
        h = _reduce(g, G)
        if h:
            add(h)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        h = _reduce(s_polynomial(G[i], G[j]), G)
        if h:
            add(h)
    return GroebnerBasis(_interreduce(G), n)


def _interreduce(G: list[Poly]) -> tuple[Poly, ...]:
    G = sorted(G, key=lambda g: neglex_key(g.lead_monomial()))
    minimal = []
    for g in G:
        lm = g.lead_monomial()
        if not any(divides(h.lead_monomial(), lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _reduce(g - Poly.monomial(g.lead_monomial(), g.lead_coeff()), others)
        out.append((Poly.monomial(g.lead_monomial(), g.lead_coeff()) + r).monic())
    return tuple(sorted(out, key=lambda g: neglex_key(g.lead_monomial())))


def is_groebner(basis: Sequence[Poly]) -> bool:
    """Every S-pair reduces to zero."""
    return all(
        not _reduce(s_polynomial(f, g), basis)
        for f, g in itertools.combinations(basis, 2)
    )


def standard_monomials(leads: Iterable[Monomial], n: int) -> list[Monomial]:
    """Monomials divisible by none of ``leads``, in lexicographic order of exponents.

    Raises ``ValueError`` if the set is infinite.
    """
    leads = list(leads)
    if any(sum(m) == 0 for m in leads):
        return []
    bound = []
    for i in range(n):
        pure = [m[i] for m in leads if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            raise ValueError(f"no pure power of x_{i + 1} among the leading monomials")
        bound.append(min(pure))
    return [
        m for m in itertools.product(*(range(b) for b in bound))
        if not any(divides(l, m) for l in leads)
    ]


@lru_cache(maxsize=None)
def groebner_basis(alpha: Composition) -> GroebnerBasis:
    return buchberger(ideal_generators(alpha).generators)


def claimed_groebner(alpha: Composition) -> list[Poly]:
    """Demazure characters of reverse skip sequences, then partial ``h`` polynomials on batch prefixes."""
    n, k = alpha.n, alpha.k
    out = [demazure(g) for g in reverse_skip_vectors(n, k)] if k <= n else [Poly.one(n)]
    for b in batches(alpha):
        b = list(b)
        for j in range(1, len(b) + 1):
            out.append(complete_homog(k - j + 1, b[:j], n))
    return out


@dataclass(frozen=True)
class ClaimReport:
    members: bool
    integral: bool
    monic: bool
    same_initial_ideal: bool

    def __bool__(self):
        return self.members and self.integral and self.monic and self.same_initial_ideal


def verify_claimed_groebner(alpha: Composition) -> ClaimReport:
    gb = groebner_basis(alpha)
    claimed = claimed_groebner(alpha)
    members = all(not normal_form(f, gb) for f in claimed)
    integral = all(f.has_integer_coefficients() for f in claimed)
    monic = all(f.lead_coeff() == 1 for f in claimed)
    same = set(standard_monomials((f.lead_monomial() for f in claimed), alpha.n)) == set(
        standard_monomials(gb.leading_monomials(), alpha.n)
    )
    return ClaimReport(members, integral, monic, same)
