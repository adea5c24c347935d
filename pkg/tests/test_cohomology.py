import itertools
import math
import random

import pytest

from helpers import brute_op_count, qbinom_by_subsets, qmultinomial_by_inversions, small_alphas, stirling2_brute, trim
from spanconfig import combinat as cb
from spanconfig import cohomology as co
from spanconfig import linalg as la
from spanconfig.combinat import Composition
from spanconfig.polyalg import invariant_hilbert

SEED = 0xC0FFEE


def test_two_lines_in_the_plane():
    rep = co.enumerate_cells(Composition((1, 1), 2))
    assert sorted(c.dim for c in rep.cells) == [0, 1, 1, 2]
    assert sorted(c.dim for c in rep.cells if c.covering) == [1, 2]
    assert rep.poincare_x == (1, 1)
    assert co.poly_text(rep.poincare_x) == "1 + q"
    assert rep.betti == (1, 0, 1)
    assert rep.poincare_gr == (1, 2, 1)


def test_poly_text():
    assert co.poly_text([1, 2, 1]) == "1 + 2q + q^2"
    assert co.poly_text([0, -1, 3]) == "-q + 3q^2"
    assert co.poly_text([]) == "0"


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_single_batch_is_a_grassmannian(k):
    for d in range(1, k + 1):
        rep = co.enumerate_cells(Composition((d,), k))
        assert len(rep.cells) == math.comb(k, d)
        assert list(rep.poincare_gr) == co.gaussian_binomial(k, d) == qbinom_by_subsets(k, d)
        assert rep.poincare_x == ((1,) if d == k else ())


def test_q_oracles_agree():
    for parts in itertools.chain.from_iterable(cb.compositions(n, n) for n in range(1, 6)):
        assert co.q_multinomial(parts) == qmultinomial_by_inversions(parts)
    assert co.q_factorial(3) == [1, 2, 2, 1]


def test_displayed_matrix_count():
    alpha = Composition((2, 1, 2, 1), 3)
    assert co.count_covering_matrices(alpha) == co.brute_covering_count(alpha) == 69
    assert co.total_rank(alpha) == 69
    shown = cb.SetSequence.from_sets([(1, 3), (3,), (2, 3), (1,)], 3)
    assert shown in cb.enumerate_set_sequences(alpha) and cb.covers(shown)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_full_batch_has_rank_one(k):
    assert co.total_rank(Composition((k,), k)) == 1


@pytest.mark.parametrize("alpha", list(small_alphas(6, 4)), ids=str)
def test_counts_and_product_formula(alpha):
    rep = co.enumerate_cells(alpha)
    assert sum(rep.poincare_gr) == len(rep.cells) == math.prod(math.comb(alpha.k, a) for a in alpha.parts)
    assert sum(rep.poincare_x) == co.count_covering_matrices(alpha)
    assert co.count_covering_matrices(alpha) == co.brute_covering_count(alpha)
    assert trim(rep.poincare_gr) == trim(co.gr_poincare_product(alpha))
    for c in rep.cells:
        assert 0 <= c.dim <= c.gr_dim
        assert c.covering == cb.covers(c.seq)
    assert all(v >= 0 for v in rep.poincare_x)
    assert rep.betti[1::2] == (0,) * len(rep.betti[1::2])
    assert rep.betti[::2] == rep.poincare_x


@pytest.mark.parametrize("alpha", list(small_alphas(6, 4)), ids=str)
def test_paving_order(alpha):
    cells = co.enumerate_cells(alpha).cells
    flags = [c.covering for c in cells]
    assert flags == sorted(flags)
    prof = [c.rank_profile() for c in cells]
    for i, j in itertools.combinations(range(len(cells)), 2):
        # a strictly smaller rank function must come first
        below = all(a <= b for ra, rb in zip(prof[j], prof[i]) for a, b in zip(ra, rb))
        if below and prof[i] != prof[j] and cells[i].covering == cells[j].covering:
            pytest.fail(f"{cells[j].seq} should precede {cells[i].seq}")


@pytest.mark.parametrize("alpha", list(small_alphas(5, 3)), ids=str)
def test_rank_consistency(alpha):
    assert co.rank_consistency(alpha)
    rep = co.enumerate_cells(alpha)
    assert trim(rep.poincare_x) == trim(invariant_hilbert(alpha))
    assert brute_op_count(alpha) == alpha.factorial() * co.total_rank(alpha)


def test_rank_consistency_bound():
    with pytest.raises(co.BoundExceeded):
        co.rank_consistency(Composition((1,) * 7, 2))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(1, 5)])
def test_rank_is_surjection_count(n, k):
    assert co.total_rank(Composition((1,) * n, k)) == math.factorial(k) * stirling2_brute(n, k)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_flag_case(k):
    for parts in cb.compositions(k, k):
        rep = co.enumerate_cells(Composition(parts, k))
        assert list(rep.poincare_x) == co.q_multinomial(parts)


def test_character_values():
    assert co.sr_fixed_count(1, 2, 2, (2, 1)) == 0
    assert co.sr_fixed_count(1, 2, 2, (1, 2)) == co.total_rank(Composition((1, 1), 2))
    with pytest.raises(co.NonConstantAlpha):
        co.permutation_character(Composition((1, 2), 2), (1, 2))
    with pytest.raises(ValueError):
        co.sr_fixed_count(1, 2, 2, (1, 1))


def cycle_type(pi):
    seen, out = set(), []
    for i in range(1, len(pi) + 1):
        if i not in seen:
            n = 0
            while i not in seen:
                seen.add(i)
                i = pi[i - 1]
                n += 1
            out.append(n)
    return tuple(sorted(out))


@pytest.mark.parametrize("d,r,k", [(d, r, k) for d in (1, 2) for r in (1, 2, 3) for k in (1, 2, 3) if d <= k])
def test_character_is_a_class_function(d, r, k):
    values = {}
    for pi in itertools.permutations(range(1, r + 1)):
        values.setdefault(cycle_type(pi), set()).add(co.sr_fixed_count(d, r, k, pi))
    assert all(len(v) == 1 for v in values.values())
    assert values[(1,) * r] == {co.total_rank(Composition((d,) * r, k))}


def test_sampled_cells_match_strata():
    rng = random.Random(SEED)
    shapes = [Composition(p, k) for k in range(1, 5) for n in range(1, 7) for p in cb.compositions(n, k)]
    done = 0
    while done < 200:
        alpha = rng.choice(shapes)
        a = la.random_block_matrix(rng, alpha)
        r = la.mixed_reduce(a)
        J = [frozenset(cb.elements_of(m)) for m in r.seq.union_masks()]
        assert la.jump_sets(a) == J
        assert r.covering == cb.covers(r.seq) == (la.rank(a.matrix) == alpha.k)
        done += 1


def test_six_cells_for_one_jump_sequence():
    cells = co.jump_compatible(Composition((2, 2, 2), 4), [(1, 3), (1, 3, 4), (1, 3, 4)])
    assert len(cells) == 6
