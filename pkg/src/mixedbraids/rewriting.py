"""Random words and random applications of the defining relations of B_n.

Every move here preserves the braid a word represents, so the results feed
the invariance and word-problem checks.
"""

from __future__ import annotations

import random

from mixedbraids.braid import BraidWord

MAX_LENGTH = 64


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def rewrite_once(rng: random.Random, w: BraidWord, max_length: int = MAX_LENGTH) -> BraidWord:
    """Apply one randomly chosen relation (or free insertion/cancellation) somewhere in ``w``."""
    letters = w.letters
    n = w.strand_count
    moves = []
    L = len(letters)
    for j in range(L - 1):
        a, b = letters[j], letters[j + 1]
        if a == -b:
            moves.append((j, 2, ()))
        elif abs(abs(a) - abs(b)) >= 2:
            moves.append((j, 2, (b, a)))
    for j in range(L - 2):
        a, b, c = letters[j:j + 3]
        if abs(abs(a) - abs(b)) != 1:
            continue
        if a == c and (a > 0) == (b > 0):
            # sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j, or its inverse
            moves.append((j, 3, (b, a, b)))
        elif a > 0 and b > 0 and c == -a:
            # sigma_i sigma_j sigma_i^-1 = sigma_j^-1 sigma_i sigma_j
            moves.append((j, 3, (-b, a, b)))
        elif a < 0 and b > 0 and c == -a:
            # the same relation read backwards
            moves.append((j, 3, (b, -a, -b)))
    if n >= 2 and L + 2 <= max_length and (not moves or rng.random() < 0.25):
        x = rng.choice((1, -1)) * rng.randint(1, n - 1)
        moves.append((rng.randint(0, L), 0, (x, -x)))
    if not moves:
        return w
    start, width, repl = rng.choice(moves)
    return BraidWord(n, letters[:start] + repl + letters[start + width:])


def rewrite(rng: random.Random, w: BraidWord, steps: int, max_length: int = MAX_LENGTH) -> BraidWord:
    for _ in range(steps):
        w = rewrite_once(rng, w, max_length)
    return w
