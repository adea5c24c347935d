"""Sparse polynomials in ``x_1..x_n`` over the rationals, ordered by neglex."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class LengthMismatch(ValueError):
    pass


def neglex_key(m: Sequence[int]) -> tuple[int, ...]:
    """Sort key: lex on the reversed exponent vector, so ``x_n > x_{n-1} > ... > x_1``."""
    return tuple(m[::-1])


def neglex_less(m1: Sequence[int], m2: Sequence[int]) -> bool:
    if len(m1) != len(m2):
        raise LengthMismatch(f"monomials of lengths {len(m1)} and {len(m2)}")
    return neglex_key(m1) < neglex_key(m2)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(b: Sequence[int], a: Sequence[int]) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Immutable map from exponent tuples to nonzero Fractions.

    The leading term is computed once and cached.
    """

    __slots__ = ("terms", "n", "_lead")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]], n: int):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != n:
                raise LengthMismatch(f"monomial {m} in a ring with {n} variables")
            c = clean.get(m, 0) + Fraction(c)
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean
        self.n = n
        self._lead = None

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls({}, n)

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls({(0,) * n: 1}, n)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Poly":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def var(cls, i: int, n: int) -> "Poly":
        """The variable ``x_i`` (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls({tuple(e): 1}, n)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead(self) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        if self._lead is None:
            m = max(self.terms, key=neglex_key)
            self._lead = (m, self.terms[m])
        return self._lead

    def lead_monomial(self) -> Monomial:
        return self.lead()[0]

    def lead_coeff(self) -> Fraction:
        return self.lead()[1]

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending neglex order."""
        return sorted(self.terms.items(), key=lambda t: neglex_key(t[0]), reverse=True)

    def _check(self, other: "Poly"):
        if self.n != other.n:
            raise LengthMismatch(f"rings with {self.n} and {other.n} variables")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, self.n)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()}, self.n)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly({m: c * v for m, v in self.terms.items()}, self.n)
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out, self.n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out = Poly.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    def mul_term(self, m: Sequence[int], c) -> "Poly":
        c = Fraction(c)
        return Poly({mono_mul(m, m2): c * v for m2, v in self.terms.items()}, self.n)

    def monic(self) -> "Poly":
        return self * (1 / self.lead_coeff())

    def __eq__(self, other):
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({self.text()!r})"

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def top_component(self) -> "Poly":
        d = self.degree()
        return Poly({m: c for m, c in self.terms.items() if sum(m) == d}, self.n)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def swap_vars(self, p: int) -> "Poly":
        """Exchange ``x_p`` and ``x_{p+1}``."""
        def sw(m):
            m = list(m)
            m[p - 1], m[p] = m[p], m[p - 1]
            return tuple(m)
        return Poly({sw(m): c for m, c in self.terms.items()}, self.n)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = " ".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m, start=1) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c} {mono}")
        return " + ".join(parts).replace("+ -", "- ")
