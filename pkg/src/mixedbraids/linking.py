"""Linking numbers of braid closures.

Closing a braid joins each strand's ends; the components are the cycles of the
braid's permutation, indexed here by their smallest strand label. For a pure
braid every component is a single strand, so profiles are strand-indexed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from mixedbraids import kernels
from mixedbraids.braid import (
    BraidWord,
    StrandMismatchError,
    alpha_product,
    concat,
    embed,
    invert,
    permutation_of,
)
from mixedbraids.equivalence import equals, is_trivial
from mixedbraids.permutations import Permutation


@dataclass(frozen=True)
class LinkingProfile:
    """Symmetric integer matrix of linking numbers between closure components.

    ``components`` lists each component's strand labels in increasing order.
    """

    components: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.components)

    def lk(self, i: int, j: int) -> int:
        """Linking number of components ``i`` and ``j`` (1-based positions in ``components``)."""
        return self.matrix[i - 1][j - 1]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def linked_indices(self) -> list[int]:
        return [i + 1 for i, row in enumerate(self.matrix) if any(row)]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.matrix]

    def permuted(self, p: Permutation) -> LinkingProfile:
        """Move the entry for components ``C, D`` to ``p(C), p(D)``, then reorder."""
        images = [tuple(sorted(p(x) for x in comp)) for comp in self.components]
        order = sorted(range(self.size), key=lambda i: images[i][0])
        return LinkingProfile(
            tuple(images[i] for i in order),
            tuple(tuple(self.matrix[i][j] for j in order) for i in order),
        )


def linking_matrix(w: BraidWord) -> LinkingProfile:
    n = w.strand_count
    sums, _ = kernels.crossing_sums(n, list(w.letters))
    comps = [tuple(sorted(c)) for c in permutation_of(w).cycles(include_fixed=True)]
    owner = {}
    for c, comp in enumerate(comps):
        for x in comp:
            owner[x - 1] = c
    size = len(comps)
    totals = [[0] * size for _ in range(size)]
    for a in range(n):
        for b in range(n):
            ca, cb = owner[a], owner[b]
            if ca != cb:
                totals[ca][cb] += sums[a][b]
    matrix = []
    for row in totals:
        for x in row:
            # two distinct closed components always cross an even number of times
            assert x % 2 == 0, "odd crossing count between components"
        matrix.append(tuple(x // 2 for x in row))
    return LinkingProfile(tuple(comps), tuple(matrix))


def exponents_from_linking(w: BraidWord) -> tuple[int, ...]:
    """Exponents ``m`` with ``w == alpha_1^m_1 ... alpha_{n-1}^m_{n-1}`` when ``w`` lies in A_n.

    In A_n strand ``i`` links every later strand exactly ``m_i`` times, so
    ``m_i = lk(i, n)``. Membership in A_n is not checked.
    """
    if not permutation_of(w).is_identity():
        raise ValueError("exponents are only defined for pure braids")
    prof = linking_matrix(w)
    n = w.strand_count
    return tuple(prof.lk(i, n) for i in range(1, n))


def has_alpha_shape(profile: LinkingProfile) -> bool:
    """True when ``lk(i, j)`` depends only on ``i`` for every ``i < j``, as it does on A_n."""
    n = profile.size
    return all(profile.lk(i, j) == profile.lk(i, n) for i in range(1, n) for j in range(i + 1, n + 1))


def conjugated_profile(w: BraidWord, g: BraidWord) -> LinkingProfile:
    """Profile of ``g w g^-1``; equals ``linking_matrix(w).permuted(permutation_of(g))``."""
    if w.strand_count != g.strand_count:
        raise StrandMismatchError(f"B_{w.strand_count} vs B_{g.strand_count}")
    return linking_matrix(concat(concat(g, w), invert(g)))


def last_block_linked(p: LinkingProfile, k: int) -> bool:
    """Whether enough of the last ``k`` components link with some other component.

    For ``k >= 2`` at least two of them must be linked; for ``k == 1`` the last
    component alone must be linked.
    """
    if not 1 <= k <= p.size:
        raise ValueError(f"block size {k} outside 1..{p.size}")
    needed = 2 if k >= 2 else 1
    linked = sum(1 for i in range(p.size - k, p.size) if any(p.matrix[i]))
    return linked >= needed


def pure_generator(n: int, i: int, j: int) -> BraidWord:
    """A_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1."""
    if not 1 <= i < j <= n:
        raise ValueError(f"A_{i}{j} not defined in P_{n}")
    down = tuple(range(j - 1, i, -1))
    return BraidWord(n, down + (i, i) + tuple(-x for x in reversed(down)))


def random_pure_braid(rng: random.Random, n: int, length: int) -> BraidWord:
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    letters: list[int] = []
    for _ in range(length):
        i, j = rng.choice(pairs)
        gen = pure_generator(n, i, j)
        letters.extend(gen.letters if rng.random() < 0.5 else invert(gen).letters)
    return BraidWord(n, tuple(letters))


def random_block_braid(rng: random.Random, n: int, k: int, length: int) -> BraidWord:
    """A random element of the preimage of ``S_{n-k} x S_k``.

    Uses the generators sigma_i (i != n-k) and sigma_{n-k}^2.
    """
    cut = n - k
    letters: list[int] = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        sign = rng.choice((1, -1))
        letters.extend([sign * i] * (2 if i == cut else 1))
    return BraidWord(n, tuple(letters))


@dataclass
class DisjointnessReport:
    n: int
    k: int
    samples: int
    conjugates_linked: int = 0
    embedded_unlinked: int = 0
    word_checks: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def disjointness_certificate(n: int, k: int, samples: int, seed: int = 0,
                             word_check_max_n: int = 5) -> DisjointnessReport:
    """Sample the claim that no nontrivial ``gamma sigma gamma^-1`` (sigma in A_n) is a pure
    braid on the first strands.

    ``gamma`` ranges over the preimage of ``S_{n-k} x S_k`` and the pure braid
    lives on the first ``n-k+1`` strands (first ``n-1`` when ``k == 1``). For each
    sample the last block must be linked for the conjugate and unlinked for
    the embedded braid; for ``n <= word_check_max_n`` the two words are also
    compared directly.
    """
    if n < 3 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 3 and 1 <= k <= n-1, got n={n}, k={k}")
    rng = random.Random(seed)
    inner = n - k + 1 if k >= 2 else n - 1
    report = DisjointnessReport(n, k, samples)
    for _ in range(samples):
        m = [0] * (n - 1)
        while not any(m):
            m = [rng.randint(-2, 2) for _ in range(n - 1)]
        sigma = alpha_product(n, m)
        gamma = random_block_braid(rng, n, k, rng.randint(0, 8))
        rho = random_pure_braid(rng, inner, rng.randint(1, 4))
        while is_trivial(rho).equal:
            rho = random_pure_braid(rng, inner, rng.randint(1, 4))
        rho = embed(rho, n)

        conj_ok = last_block_linked(conjugated_profile(sigma, gamma), k)
        emb_ok = not last_block_linked(linking_matrix(rho), k)
        report.conjugates_linked += conj_ok
        report.embedded_unlinked += emb_ok
        word_ok = True
        if n <= word_check_max_n:
            report.word_checks += 1
            conj = concat(concat(gamma, sigma), invert(gamma))
            word_ok = not equals(conj, rho).equal
        if not (conj_ok and emb_ok and word_ok):
            report.counterexamples.append({"m": m, "gamma": str(gamma), "rho": str(rho)})
    return report
