"""Braid words in the Artin generators and the projection to the symmetric group.

A word is a tuple of signed generator indices: ``i`` stands for ``sigma_i`` and
``-i`` for its inverse. A positive letter ``i`` carries the strand in position
``i`` over the strand in position ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from mixedbraids.permutations import Permutation, reduced_word


class StrandMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        n = self.strand_count
        if n < 1:
            raise ValueError(f"strand count must be >= 1, got {n}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > n - 1:
                raise ValueError(f"generator index {x} out of range for B_{n}")

    @classmethod
    def parse(cls, n: int, text: str) -> BraidWord:
        """``"1 2 -1"`` -> sigma_1 sigma_2 sigma_1^-1 on ``n`` strands."""
        try:
            letters = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError:
            raise ValueError(f"malformed braid word: {text!r}") from None
        return cls(n, tuple(letters))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else invert(self)
        return BraidWord(self.strand_count, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return invert(self)

    def exponent_sum(self) -> int:
        return exponent_sum(self)

    def permutation(self) -> Permutation:
        return permutation_of(self)

    def __str__(self):
        return " ".join(map(str, self.letters))


def sigma(n: int, i: int, sign: int = 1) -> BraidWord:
    if not 1 <= i <= n - 1:
        raise ValueError(f"sigma_{i} does not exist in B_{n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return BraidWord(n, (sign * i,))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strand_count != b.strand_count:
        raise StrandMismatchError(f"cannot multiply B_{a.strand_count} by B_{b.strand_count}")
    return BraidWord(a.strand_count, a.letters + b.letters)


def product(n: int, words: Iterable[BraidWord]) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strand_count != n:
            raise StrandMismatchError(f"expected B_{n}, got B_{w.strand_count}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(a.strand_count, tuple(-x for x in reversed(a.letters)))


def free_reduce(a: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in a.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(a.strand_count, tuple(stack))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def _require_two_strands(n: int):
    if n < 2:
        raise ValueError(f"need at least 2 strands, got {n}")


def delta(n: int) -> BraidWord:
    """sigma_1 ... sigma_{n-1}, the rotation whose n-th power is the full twist."""
    _require_two_strands(n)
    return BraidWord(n, tuple(range(1, n)))


def epsilon(n: int) -> BraidWord:
    """sigma_1 delta; its (n-1)-st power is the full twist."""
    _require_two_strands(n)
    return BraidWord(n, (1,) + tuple(range(1, n)))


def full_twist(n: int) -> BraidWord:
    """The literal word (sigma_1 ... sigma_{n-1})^n, of length n(n-1)."""
    return delta(n) ** n


def alpha(n: int, j: int) -> BraidWord:
    """sigma_j ... sigma_{n-2} sigma_{n-1}^2 sigma_{n-2} ... sigma_j.

    Strand ``j`` passes over strands ``j+1..n`` and returns under them, so it
    links once with each later strand and the word is pure.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"alpha_{j} is not defined in B_{n}")
    up = tuple(range(j, n))
    return BraidWord(n, up + up[::-1])


def alpha_product(n: int, exponents) -> BraidWord:
    """alpha_1^m_1 alpha_2^m_2 ... alpha_{n-1}^m_{n-1}."""
    exponents = tuple(exponents)
    if len(exponents) != n - 1:
        raise ValueError(f"need {n - 1} exponents, got {len(exponents)}")
    return product(n, (alpha(n, j) ** m for j, m in enumerate(exponents, start=1)))


def embed(w: BraidWord, n_target: int) -> BraidWord:
    """The same letters on ``n_target`` strands; the added strands sit at the end, untouched."""
    if n_target < w.strand_count:
        raise ValueError(f"cannot embed B_{w.strand_count} into B_{n_target}")
    return BraidWord(n_target, w.letters)


def permutation_of(w: BraidWord) -> Permutation:
    """Image in S_n: letter ``+-i`` maps to the transposition (i i+1), multiplied left to right."""
    table = list(range(w.strand_count))
    # table represents the running product t_1 * ... * t_j; right-multiplying by s_i swaps entries
    for x in w.letters:
        i = abs(x) - 1
        table[i], table[i + 1] = table[i + 1], table[i]
    return Permutation(tuple(table))


def lift(p: Permutation) -> BraidWord:
    """A positive braid word projecting to ``p`` (the positive lift of a reduced word)."""
    return BraidWord(p.degree, tuple(reduced_word(p)))
