import pytest

from mixedbraids.braid import epsilon, full_twist, permutation_of
from mixedbraids.equivalence import equals
from mixedbraids.permutations import GroupSpec, cycle_type, member
from mixedbraids.torsion import (
    brute_force_torsion,
    gcd_triple,
    torsion_free,
    torsion_report,
    torsion_witness,
)


def test_gcd_verdicts():
    assert not torsion_free(4, 2)
    assert torsion_free(8, 3)
    assert not torsion_free(5, 2)
    assert gcd_triple(8, 3) == (1, 1, 1)
    # gcd(x, 0) = x closes the k = 1 case
    assert gcd_triple(5, 1) == (1, 1, 4)
    assert torsion_free(2, 1)
    with pytest.raises(ValueError):
        torsion_free(4, 4)


def test_witness_4_2():
    w = torsion_witness(4, 2).witness
    assert w.source == "delta" and w.exponent == 2
    p = permutation_of(w.word)
    assert cycle_type(p).parts == (2, 2)
    assert member(p, GroupSpec.mixed(2, 2))
    assert w.order == (2, 2)
    assert equals(w.word ** 2, full_twist(4))


def test_witness_3_1_comes_from_epsilon():
    w = torsion_witness(3, 1).witness
    assert w.source == "epsilon" and w.exponent == 1
    # pi(epsilon) = (2 3) is outside S_2 x S_1, so the witness is a conjugate of epsilon
    assert cycle_type(permutation_of(w.word)).parts == (2, 1)
    assert member(permutation_of(w.word), GroupSpec.mixed(2, 1))
    assert equals(w.word ** 2, full_twist(3))
    assert equals(epsilon(3) ** 2, full_twist(3))


def test_torsion_free_has_no_witness():
    with pytest.raises(ValueError):
        torsion_witness(8, 3)
    rep = torsion_report(8, 3)
    assert rep.torsion_free and rep.witness is None
    assert rep.to_dict() == {"n": 8, "k": 3, "gcds": [1, 1, 1], "torsion_free": True, "witness": None}


def test_brute_force_examples():
    assert brute_force_torsion(4, 2) is False
    assert brute_force_torsion(7, 3) == torsion_free(7, 3)
    for n in range(3, 10):
        for k in range(1, n):
            assert brute_force_torsion(n, k) == torsion_free(n, k)


def test_report_serialisation():
    d = torsion_report(4, 2).to_dict()
    assert d["torsion_free"] is False
    assert set(d["witness"]) == {"word", "source", "exponent", "order"}
    assert d["witness"]["order"] == {"m": 2, "l": 2}
