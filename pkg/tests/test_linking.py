import itertools
import random

import pytest

from mixedbraids.braid import BraidWord, alpha, alpha_product, embed, full_twist, sigma
from mixedbraids.equivalence import is_pure
from mixedbraids.linking import (
    conjugated_profile,
    disjointness_certificate,
    exponents_from_linking,
    has_alpha_shape,
    last_block_linked,
    linking_matrix,
    pure_generator,
    random_block_braid,
    random_pure_braid,
)
from mixedbraids.permutations import GroupSpec, member
from mixedbraids.braid import permutation_of
from mixedbraids.rewriting import random_word

from oracles import crossing_linking


def test_linking_examples():
    assert linking_matrix(BraidWord.parse(2, "1 1")).lk(1, 2) == 1
    # alpha_2 in B_4 carries strand 2 round both later strands
    prof = linking_matrix(alpha(4, 2))
    assert [(i, j) for i, j in itertools.combinations(range(1, 5), 2) if prof.lk(i, j)] == [(2, 3), (2, 4)]
    assert crossing_linking(4, alpha(4, 2).letters) == {(2, 3): 2, (2, 4): 2}
    twist = linking_matrix(full_twist(3))
    assert all(twist.lk(i, j) == 1 for i, j in itertools.combinations(range(1, 4), 2))


def test_alpha_linking_pattern():
    for n in range(2, 9):
        for j in range(1, n):
            prof = linking_matrix(alpha(n, j))
            nonzero = {(a, b) for a, b in itertools.combinations(range(1, n + 1), 2) if prof.lk(a, b)}
            assert nonzero == {(j, b) for b in range(j + 1, n + 1)}
            assert exponents_from_linking(alpha(n, j)) == tuple(int(i == j) for i in range(1, n))


def test_pure_profile_matches_oracle():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 6)
        w = random_pure_braid(rng, n, rng.randint(0, 6))
        assert is_pure(w)
        sums = crossing_linking(n, w.letters)
        prof = linking_matrix(w)
        for a, b in itertools.combinations(range(1, n + 1), 2):
            assert 2 * prof.lk(a, b) == sums.get((a, b), 0)


def test_components_of_non_pure_word():
    prof = linking_matrix(BraidWord.parse(3, "1 1 1"))
    assert prof.components == ((1, 2), (3,))
    assert prof.is_zero()
    prof = linking_matrix(BraidWord.parse(3, "1 2 2"))
    assert prof.components == ((1, 2), (3,))
    assert prof.lk(1, 2) == 1


def test_exponents_round_trip():
    assert exponents_from_linking(alpha_product(4, (2, -1, 3))) == (2, -1, 3)
    assert exponents_from_linking(BraidWord(5)) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        exponents_from_linking(sigma(3, 1))
    assert has_alpha_shape(linking_matrix(alpha_product(5, (1, -2, 0, 4))))
    assert not has_alpha_shape(linking_matrix(pure_generator(4, 1, 2)))


def test_conjugated_profile_examples():
    prof = conjugated_profile(BraidWord.parse(3, "1 1"), sigma(3, 2))
    assert prof.lk(1, 3) == 1 and prof.lk(1, 2) == 0 and prof.lk(2, 3) == 0
    w = alpha_product(4, (1, 2, -1))
    g = pure_generator(4, 2, 3)
    assert conjugated_profile(w, g) == linking_matrix(w)
    rng = random.Random(0)
    for _ in range(20):
        assert conjugated_profile(full_twist(3), random_word(rng, 3, 10)) == linking_matrix(full_twist(3))


def test_last_block_linked():
    for m in itertools.product(range(-2, 3), repeat=3):
        if any(m):
            assert last_block_linked(linking_matrix(alpha_product(4, m)), 2)
    assert not last_block_linked(linking_matrix(BraidWord(4)), 2)
    assert not last_block_linked(linking_matrix(embed(BraidWord.parse(2, "1 1"), 5)), 2)
    with pytest.raises(ValueError):
        last_block_linked(linking_matrix(BraidWord(3)), 4)


def test_random_block_braid_stays_in_block():
    rng = random.Random(1)
    for _ in range(50):
        w = random_block_braid(rng, 6, 2, 10)
        assert member(permutation_of(w), GroupSpec.mixed(4, 2))


def test_disjointness_small():
    rep = disjointness_certificate(4, 2, 30, seed=5)
    assert rep.ok and rep.word_checks == 30
    rep = disjointness_certificate(3, 1, 30, seed=5)
    assert rep.ok
    with pytest.raises(ValueError):
        disjointness_certificate(2, 1, 1)
