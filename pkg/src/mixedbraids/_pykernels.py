"""Pure-Python hot kernels. ``_ckernels.pyx`` mirrors this file line for line.

Simple braids are stored as 0-based permutation tables ``x`` together with
their inverses. ``x`` is the permutation ``s_i1 * ... * s_ir`` of any positive
reduced word ``i1..ir`` for the simple braid, so

* ``i`` is a right descent (``x`` may end with ``sigma_i``) iff ``x[i] > x[i+1]``;
* ``i`` is a left descent (``x`` may start with ``sigma_i``) iff ``xinv[i] > xinv[i+1]``.
"""


class StepBudgetExceeded(RuntimeError):
    """The normal-form computation hit its elementary-step budget before finishing."""


def _simple_factors(n, letters):
    """Rewrite a signed word as ``Delta^p F_1 ... F_L`` with every ``F_j`` simple.

    ``sigma_i^-1 = Delta^-1 (Delta sigma_i^-1)``; each ``Delta^-1`` is pushed to the
    front, flipping every factor it passes through ``x -> w0 x w0``.
    """
    top = n - 1
    factors = []
    flips = 0
    for letter in reversed(letters):
        i = abs(letter) - 1
        if flips & 1:
            i = n - 2 - i
        x = list(range(n))
        if letter > 0:
            x[i], x[i + 1] = i + 1, i
        else:
            # w0 * s_i
            x = [top - j for j in range(n)]
            x[i], x[i + 1] = x[i + 1], x[i]
            flips += 1
        factors.append(x)
    factors.reverse()
    return -flips, factors


def _inverse(x):
    inv = [0] * len(x)
    for i, v in enumerate(x):
        inv[v] = i
    return inv


def _left_weight(a, ainv, b, binv, n):
    """Move sigma_i from the front of ``b`` to the back of ``a`` until ``L(b) <= R(a)``.

    Works in place; returns the number of letters moved.
    """
    moved = 0
    i = 0
    while i < n - 1:
        if binv[i] > binv[i + 1] and a[i] < a[i + 1]:
            # a <- a s_i
            a[i], a[i + 1] = a[i + 1], a[i]
            ainv[a[i]] = i
            ainv[a[i + 1]] = i + 1
            # b <- s_i b
            binv[i], binv[i + 1] = binv[i + 1], binv[i]
            b[binv[i]] = i
            b[binv[i + 1]] = i + 1
            moved += 1
            i = 0
        else:
            i += 1
    return moved


def normal_form(n, letters, budget):
    """Left normal form ``(p, factors, steps)`` of the braid word ``letters`` in ``B_n``.

    ``factors`` are tuples (0-based permutation tables) with no leading ``Delta``
    and no trailing identity; the braid is trivial iff ``p == 0`` and
    ``factors == []``.
    """
    if n < 2:
        return 0, [], 0
    p, raw = _simple_factors(n, letters)
    delta = list(range(n - 1, -1, -1))
    ident = list(range(n))
    nf = []
    nfinv = []
    steps = 0
    start = 0  # nf[start:] is the live part; leading Deltas are popped by advancing start
    for f in raw:
        nf.append(f)
        nfinv.append(_inverse(f))
        j = len(nf) - 1
        while j > start:
            steps += 1
            moved = _left_weight(nf[j - 1], nfinv[j - 1], nf[j], nfinv[j], n)
            steps += moved
            if not moved:
                break
            j -= 1
        if steps > budget:
            raise StepBudgetExceeded(f"normal form exceeded {budget} steps")
        while start < len(nf) and nf[start] == delta:
            start += 1
            p += 1
        while len(nf) > start and nf[-1] == ident:
            nf.pop()
            nfinv.pop()
    return p, [tuple(x) for x in nf[start:]], steps


def crossing_sums(n, letters):
    """Signed crossing counts between strands, plus each strand's final position.

    Strands are labelled by starting position (0-based). ``sums[a][b]`` is the
    sum of the signs of the letters in which strands ``a`` and ``b`` cross.
    """
    sums = [[0] * n for _ in range(n)]
    at = list(range(n))  # at[position] = strand
    for letter in letters:
        i = abs(letter) - 1
        sign = 1 if letter > 0 else -1
        a, b = at[i], at[i + 1]
        sums[a][b] += sign
        sums[b][a] += sign
        at[i], at[i + 1] = b, a
    final = [0] * n
    for pos, strand in enumerate(at):
        final[strand] = pos
    return sums, final
