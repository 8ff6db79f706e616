"""Independent reference implementations used only by the tests."""

from itertools import combinations


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _apply_letter(images, letter):
    """Right action of one Artin generator on the images of the free generators x_1..x_n."""
    i = abs(letter) - 1
    a, b = images[i], images[i + 1]
    inv = lambda w: tuple(-x for x in reversed(w))
    images = list(images)
    if letter > 0:
        # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        images[i] = _free_reduce(a + b + inv(a))
        images[i + 1] = a
    else:
        # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        images[i] = b
        images[i + 1] = _free_reduce(inv(b) + a + b)
    return images


def artin_action(n, letters):
    """Images of the free generators under the (faithful) Artin representation."""
    images = [(j,) for j in range(1, n + 1)]
    for letter in letters:
        images = _apply_letter(images, letter)
    return tuple(images)


def strand_permutation(n, letters):
    """1-based images p(s): the start position of the strand ending at position s."""
    at = list(range(1, n + 1))  # at[pos] = strand label currently there
    for x in letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    return tuple(at)


def crossing_linking(n, letters):
    """Pairwise crossing-sign sums between strands labelled by start position, halved on components."""
    at = list(range(1, n + 1))
    sums = {}
    for x in letters:
        i = abs(x) - 1
        a, b = sorted((at[i], at[i + 1]))
        sums[a, b] = sums.get((a, b), 0) + (1 if x > 0 else -1)
        at[i], at[i + 1] = at[i + 1], at[i]
    return sums


def subset_sum_fit(parts, n_minus_k, k):
    """Brute force: does some sub-multiset of ``parts`` sum to ``k`` (the rest to n-k)?"""
    if sum(parts) != n_minus_k + k:
        return None
    for r in range(len(parts) + 1):
        for idx in combinations(range(len(parts)), r):
            if sum(parts[i] for i in idx) == k:
                return True
    return False
