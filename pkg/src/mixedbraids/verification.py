"""Desk-scale verification suites.

Each suite runs a batch of exact checks and returns a :class:`SuiteResult`;
``python -m mixedbraids verify <suite>`` and the acceptance tests both call
these functions.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from mixedbraids.braid import (
    BraidWord,
    alpha,
    alpha_product,
    delta,
    epsilon,
    exponent_sum,
    full_twist,
    permutation_of,
    sigma,
)
from mixedbraids.bounds import tc_bounds
from mixedbraids.equivalence import equals
from mixedbraids.linking import (
    conjugated_profile,
    disjointness_certificate,
    exponents_from_linking,
    linking_matrix,
)
from mixedbraids.permutations import GroupSpec, Permutation, member
from mixedbraids.rewriting import random_word, rewrite
from mixedbraids.torsion import brute_force_torsion, gcd_triple, torsion_free, torsion_witness


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def check(self, ok: bool, what: str):
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        good = self.checks - len(self.failures)
        return f"{status} {self.name}: {good}/{self.checks} checks ({self.seconds:.2f}s)"


def center_identities(seed: int = 0) -> SuiteResult:
    res = SuiteResult("center")
    for n in range(3, 7):
        twist = full_twist(n)
        res.check(equals(delta(n) ** n, twist).equal, f"delta^{n} != Delta^2 in B_{n}")
        res.check(equals(epsilon(n) ** (n - 1), twist).equal, f"epsilon^{n - 1} != Delta^2 in B_{n}")
        for i in range(1, n):
            s = sigma(n, i)
            res.check(equals(twist * s, s * twist).equal, f"Delta^2 does not commute with sigma_{i} in B_{n}")
    return res


def alpha_structure(seed: int = 0) -> SuiteResult:
    res = SuiteResult("an-structure")
    for n in range(2, 7):
        for i, j in itertools.combinations(range(1, n), 2):
            a, b = alpha(n, i), alpha(n, j)
            res.check(equals(a * b, b * a).equal, f"alpha_{i} and alpha_{j} do not commute in B_{n}")
        for m in itertools.product(range(-3, 4), repeat=n - 1):
            got = exponents_from_linking(alpha_product(n, m))
            res.check(got == m, f"round trip {m} -> {got} in B_{n}")
    return res


def _invariants(w: BraidWord):
    prof = linking_matrix(w)
    return prof, len(prof.components), permutation_of(w), exponent_sum(w)


def relation_invariance(seed: int = 0, words: int = 1000, rewrites: int = 50) -> SuiteResult:
    res = SuiteResult("invariance")
    rng = random.Random(seed)
    for t in range(words):
        n = rng.randint(2, 7)
        w = random_word(rng, n, rng.randint(0, 40))
        before = _invariants(w)
        v = rewrite(rng, w, rewrites)
        res.check(_invariants(v) == before and len(v) <= 64, f"trial {t}: invariants changed for {w} -> {v}")
    return res


def conjugation_equivariance(seed: int = 0, trials: int = 1000) -> SuiteResult:
    res = SuiteResult("equivariance")
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(2, 6)
        w = random_word(rng, n, rng.randint(0, 24))
        g = random_word(rng, n, rng.randint(0, 24))
        expected = linking_matrix(w).permuted(permutation_of(g))
        res.check(conjugated_profile(w, g) == expected, f"trial {t}: w={w} g={g}")
    return res


def torsion_oracle(seed: int = 0, max_n: int = 12, word_check_max_n: int = 5) -> SuiteResult:
    res = SuiteResult("torsion-oracle")
    for n in range(3, max_n + 1):
        for k in range(1, n):
            fast, slow = torsion_free(n, k), brute_force_torsion(n, k)
            res.check(fast == slow, f"(n,k)=({n},{k}): gcds {gcd_triple(n, k)} say {fast}, enumeration says {slow}")
            if fast:
                continue
            wit = torsion_witness(n, k).witness
            res.check(member(permutation_of(wit.word), GroupSpec.mixed(n - k, k)),
                      f"({n},{k}) witness leaves the block subgroup")
            if n <= word_check_max_n:
                m, l = wit.order
                res.check(equals(wit.word ** m, full_twist(n) ** (l // 2)).equal,
                          f"({n},{k}) witness^{m} != Delta^{l}")
    return res


def _fixed_two(n: int) -> GroupSpec:
    gens = [Permutation.transposition(n, i, i + 1) for i in range(1, n - 2)]
    return GroupSpec.generated(n, gens)


def bound_fidelity(seed: int = 0) -> SuiteResult:
    res = SuiteResult("bounds")

    def expect(n, g, m, lo, hi, label):
        r = tc_bounds(n, g, m)
        res.check((r.lower, r.upper) == (lo, hi), f"{label}: got [{r.lower},{r.upper}], want [{lo},{hi}]")

    for n in range(2, 11):
        expect(n, GroupSpec.pure(n), 2, 2 * n - 3, 2 * n - 3, f"pure P_{n}")
    for n in range(3, 11):
        for m in range(2, 6):
            expect(n, _fixed_two(n), m, m * (n - 1) - 1, m * (n - 1) - 1, f"S_{n - 2}x1x1, n={n}, m={m}")
    for n in range(4, 13):
        for k in range(2, n - 1):
            if gcd_triple(n, k) != (1, 1, 1):
                continue
            # the smaller block sets the lower bound; the gcd condition is symmetric in k <-> n-k
            small = min(k, n - k)
            expect(n, GroupSpec.mixed(n - k, k), 2, 2 * n - small - 1, 2 * n - 3, f"B_({n - k},{k})")
    expect(8, GroupSpec.mixed(5, 3), 2, 12, 13, "B_(5,3)")
    for n in range(2, 11):
        expect(n, GroupSpec.full(n), 2, n - 1, 2 * n - 2, f"full B_{n}")
    return res


def disjointness(seed: int = 0) -> SuiteResult:
    res = SuiteResult("disjointness")
    for n, k, samples in ((4, 2, 200), (3, 1, 100), (5, 2, 100), (5, 3, 100)):
        rep = disjointness_certificate(n, k, samples, seed=seed)
        res.check(rep.ok and rep.conjugates_linked == samples and rep.embedded_unlinked == samples,
                  f"(n,k)=({n},{k}): {len(rep.counterexamples)} counterexamples")
        res.check(rep.word_checks == samples, f"(n,k)=({n},{k}): only {rep.word_checks} word checks")
    return res


def word_problem(seed: int = 0, pairs: int = 500) -> SuiteResult:
    res = SuiteResult("word-problem")
    rng = random.Random(seed)
    for t in range(pairs):
        n = rng.randint(2, 7)
        root = random_word(rng, n, rng.randint(0, 32))
        a = rewrite(rng, root, rng.randint(1, 60))
        b = rewrite(rng, root, rng.randint(1, 60))
        res.check(equals(a, b).equal, f"equal pair {t} judged unequal: {a} | {b}")
    made = 0
    while made < pairs:
        n = rng.randint(2, 7)
        a = random_word(rng, n, rng.randint(0, 64))
        b = random_word(rng, n, rng.randint(0, 64))
        pa, pb = permutation_of(a), permutation_of(b)
        if pa == pb and linking_matrix(a) == linking_matrix(b):
            continue
        made += 1
        res.check(not equals(a, b).equal, f"unequal pair judged equal: {a} | {b}")
    return res


SUITES = {
    "center": center_identities,
    "an-structure": alpha_structure,
    "invariance": relation_invariance,
    "equivariance": conjugation_equivariance,
    "torsion-oracle": torsion_oracle,
    "bounds": bound_fidelity,
    "disjointness": disjointness,
    "word-problem": word_problem,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    start = time.perf_counter()
    res = SUITES[name](seed)
    res.seconds = time.perf_counter() - start
    return res

