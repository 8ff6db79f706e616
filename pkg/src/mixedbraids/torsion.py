"""Torsion in mixed braid groups modulo their centre.

``B_{n-k,k} / <Delta^2>`` has torsion exactly when some power of the rotation
``delta`` (or of ``epsilon``) is conjugate into ``S_{n-k} x S_k`` after
projecting, which reduces to gcd arithmetic on ``n``, ``n-1``, ``k`` and ``k-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from mixedbraids.braid import BraidWord, concat, delta, epsilon, invert, lift, permutation_of
from mixedbraids.permutations import (
    GroupSpec,
    conjugator_realizing,
    cycle_type,
    fit_into_young,
    member,
)


def _check_range(n: int, k: int):
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")


def gcd_triple(n: int, k: int) -> tuple[int, int, int]:
    return gcd(n, k), gcd(n - 1, k), gcd(n - 1, k - 1)


def torsion_free(n: int, k: int) -> bool:
    _check_range(n, k)
    if n == 2:
        return True
    return gcd_triple(n, k) == (1, 1, 1)


@dataclass(frozen=True)
class Witness:
    word: BraidWord
    source: str  # "delta" or "epsilon"
    exponent: int
    order: tuple[int, int]  # (m, l) with word^m == Delta^l


@dataclass(frozen=True)
class TorsionReport:
    n: int
    k: int
    gcds: tuple[int, int, int]
    torsion_free: bool
    witness: Witness | None = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "gcds": list(self.gcds),
            "torsion_free": self.torsion_free,
            "witness": None,
        }
        if self.witness is not None:
            w = self.witness
            out["witness"] = {
                "word": list(w.word.letters),
                "source": w.source,
                "exponent": w.exponent,
                "order": {"m": w.order[0], "l": w.order[1]},
            }
        return out


def _conjugate_into_block(rotation: BraidWord, power: int, n: int, k: int) -> BraidWord:
    x = permutation_of(rotation) ** power
    beta = conjugator_realizing(x, n - k, k)
    sb = lift(beta)
    return concat(concat(sb, rotation ** power), invert(sb))


def torsion_witness(n: int, k: int) -> TorsionReport:
    """An explicit braid in ``B_{n-k,k}`` whose image modulo the centre has finite order.

    delta powers are tried before epsilon powers, smallest exponent first.
    """
    if torsion_free(n, k):
        raise ValueError(f"B_{{{n - k},{k}}} modulo its centre is torsion-free")
    witness = None
    for p in range(1, n):
        if k % (n // gcd(p, n)) == 0:
            d = gcd(p, n)
            w = _conjugate_into_block(delta(n), p, n, k)
            witness = Witness(w, "delta", p, (n // d, 2 * p // d))
            break
    else:
        for q in range(1, n - 1):
            e = (n - 1) // gcd(q, n - 1)
            if k % e == 0 or (k - 1) % e == 0:
                d = gcd(q, n - 1)
                w = _conjugate_into_block(epsilon(n), q, n, k)
                witness = Witness(w, "epsilon", q, ((n - 1) // d, 2 * q // d))
                break
    assert witness is not None, "gcd test and rotation search disagree"
    assert member(permutation_of(witness.word), GroupSpec.mixed(n - k, k))
    return TorsionReport(n, k, gcd_triple(n, k), False, witness)


def torsion_report(n: int, k: int) -> TorsionReport:
    if torsion_free(n, k):
        return TorsionReport(n, k, gcd_triple(n, k), True)
    return torsion_witness(n, k)


def brute_force_torsion(n: int, k: int) -> bool:
    """Torsion-freeness decided by enumerating rotation powers and testing cycle types directly.

    No gcd shortcut: every ``pi(delta)^p`` and ``pi(epsilon)^q`` is built as a
    permutation and checked for a split into blocks of sizes ``n-k`` and ``k``.
    """
    _check_range(n, k)
    if n == 2:
        return True
    d = permutation_of(delta(n))
    e = permutation_of(epsilon(n))
    for p in range(1, n):
        if fit_into_young(cycle_type(d ** p), n - k, k) is not None:
            return False
    for q in range(1, n - 1):
        if fit_into_young(cycle_type(e ** q), n - k, k) is not None:
            return False
    return True
