import random
from itertools import product as iproduct
from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from mixedbraids.bounds import analyze, tc_bounds
from mixedbraids.braid import BraidWord, alpha, concat, delta, exponent_sum, free_reduce, invert, permutation_of
from mixedbraids.equivalence import equals, is_trivial
from mixedbraids.linking import linking_matrix
from mixedbraids.permutations import CycleType, GroupSpec, Permutation, conjugate, cycle_type, fit_into_young
from mixedbraids.rewriting import rewrite, rewrite_once

from oracles import subset_sum_fit


def words_on(n, max_len=20):
    letter = st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))).map(lambda t: t[0] * t[1])
    return st.lists(letter, max_size=max_len).map(lambda xs: BraidWord(n, tuple(xs)))


@st.composite
def word_tuples(draw, count, max_n=7, max_len=20):
    n = draw(st.integers(2, max_n))
    return tuple(draw(words_on(n, max_len)) for _ in range(count))


@st.composite
def perm_pairs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    a = draw(st.permutations(range(n)))
    b = draw(st.permutations(range(n)))
    return Permutation(tuple(a)), Permutation(tuple(b))


@st.composite
def group_specs(draw, max_n=8, extra=False):
    n = draw(st.integers(2, max_n))
    perms = st.permutations(range(n)).map(lambda t: Permutation(tuple(t)))
    gens = draw(st.lists(perms, max_size=3))
    g = GroupSpec.generated(n, gens)
    if not extra:
        return g
    more = draw(st.lists(perms, max_size=2))
    return g, GroupSpec.generated(n, gens + more)


# braid words

@given(word_tuples(3))
def test_concat_associative(ws):
    a, b, c = ws
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@given(word_tuples(2))
def test_permutation_is_homomorphism(ws):
    a, b = ws
    assert permutation_of(a * b) == permutation_of(a) * permutation_of(b)
    assert permutation_of(invert(a)) == permutation_of(a).inverse()


@given(word_tuples(1))
def test_free_reduce_idempotent(ws):
    (w,) = ws
    once = free_reduce(w)
    assert free_reduce(once) == once
    assert exponent_sum(once) == exponent_sum(w)
    assert equals(once, w)


@given(word_tuples(1, max_len=30), st.integers(0, 2**32 - 1))
def test_single_rewrite_preserves_invariants(ws, seed):
    (w,) = ws
    v = rewrite_once(random.Random(seed), w)
    assert exponent_sum(v) == exponent_sum(w)
    assert permutation_of(v) == permutation_of(w)
    assert linking_matrix(v) == linking_matrix(w)


@settings(max_examples=60)
@given(word_tuples(1, max_n=6, max_len=16), st.integers(0, 2**32 - 1))
def test_rewrites_stay_equal(ws, seed):
    (w,) = ws
    assert equals(rewrite(random.Random(seed), w, 20), w)


@settings(max_examples=60)
@given(word_tuples(2, max_n=6, max_len=16))
def test_group_laws(ws):
    a, b = ws
    assert is_trivial(a * invert(a))
    assert equals(a * b * invert(b), a)


# permutations

@given(perm_pairs())
def test_cycle_type_conjugation_invariant(pq):
    p, q = pq
    assert cycle_type(conjugate(p, q)) == cycle_type(p)


@given(st.integers(2, 24), st.integers(0, 60))
def test_rotation_powers(n, p):
    d = gcd(p, n)
    assert cycle_type(permutation_of(delta(n)) ** p).parts == (n // d,) * d


@given(st.integers(1, 14).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, n), st.lists(st.integers(1, n), min_size=1, max_size=n))))
def test_fit_into_young_matches_subset_sum(args):
    n, k, raw = args
    # turn the raw draw into a partition of n
    parts, left = [], n
    for x in raw:
        if left == 0:
            break
        parts.append(min(x, left))
        left -= parts[-1]
    if left:
        parts.append(left)
    got = fit_into_young(CycleType(tuple(parts)), n - k, k)
    assert (got is not None) == subset_sum_fit(parts, n - k, k)
    if got is not None:
        first, last = got
        assert sum(first) == n - k and sum(last) == k
        assert sorted(first + last) == sorted(parts)


# bounds

@given(group_specs(), st.integers(2, 5))
def test_bounds_monotone_in_m(g, m):
    a, b = tc_bounds(g.degree, g, m), tc_bounds(g.degree, g, m + 1)
    assert a.lower <= b.lower and a.upper <= b.upper
    assert g.degree - 1 <= a.lower <= a.upper <= m * (g.degree - 1)


@given(group_specs(extra=True), st.integers(2, 4))
def test_smaller_group_gets_larger_lower_bound(pair, m):
    small, big = pair
    assert analyze(big).block_sizes() <= analyze(small).block_sizes()
    assert tc_bounds(small.degree, small, m).lower >= tc_bounds(big.degree, big, m).lower


@given(group_specs())
def test_block_lower_matches_two_point_formula(g):
    n = g.degree
    for b in analyze(g).bipartitions:
        k = min(b.first, b.k)
        if k >= 2:
            assert 2 * (n - 1) - k + 1 == 2 * n - k - 1


@given(group_specs(), st.integers(2, 5))
def test_exactness_characterised(g, m):
    # exact needs a fixed point for the lower end, and either a second fixed
    # point or a coprime bipartition for the upper end
    info = analyze(g)
    r = tc_bounds(g.degree, g, m)
    coprime = any(b.coprime for b in info.bipartitions)
    expected = info.fixed_points >= 2 or (info.fixed_points == 1 and coprime)
    assert r.exact == expected
    if r.exact:
        assert r.lower == m * (g.degree - 1) - 1


def test_exact_without_two_fixed_points_exists():
    g = GroupSpec.parse_generators(8, "(1 2 3 4 5);(6 7)")
    r = tc_bounds(8, g, 2)
    assert analyze(g).fixed_points == 1
    assert (r.lower, r.upper, r.exact) == (13, 13, True)


def test_exhaustive_small_alpha_products_commute():
    for n in range(2, 5):
        for i, j in iproduct(range(1, n), repeat=2):
            assert equals(alpha(n, i) * alpha(n, j), alpha(n, j) * alpha(n, i))
