"""Symmetric-group machinery: permutations, cycle types, group specs and Young-subgroup fitting.

Permutations act on ``{1, ..., n}``. Composition follows the function
convention ``(p * q)(x) == p(q(x))``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MEMBERSHIP_CAP = 10**6


class GroupTooLargeError(RuntimeError):
    """Closure enumeration of a generated group exceeded its element cap."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` stored as a 0-based image table."""

    table: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.table) != list(range(len(self.table))):
            raise ValueError(f"not a bijection: {self.table}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from 1-based images: ``images[i-1] == p(i)``."""
        return cls(tuple(x - 1 for x in images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        table = list(range(n))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} repeated in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                table[a - 1] = b - 1
        return cls(tuple(table))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        return cls.from_cycles(n, [(i, j)])

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` or ``""`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+[\s,]*)*\)\s*)*", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [[int(x) for x in re.findall(r"\d+", body)]
                  for body in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(n, [c for c in cycles if c])

    @property
    def degree(self) -> int:
        return len(self.table)

    def __call__(self, x: int) -> int:
        return self.table[x - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def inverse(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.table))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles (1-based), each starting at its smallest point, ordered by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self.table[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __str__(self):
        return self.cycle_notation()


def _check_degrees(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p * q``: apply ``q`` first, then ``p``."""
    _check_degrees(p, q)
    return Permutation(tuple(p.table[x] for x in q.table))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.table):
        inv[x] = i
    return Permutation(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    table = list(range(p.degree))
    for cyc in p.cycles():
        length = len(cyc)
        for pos, x in enumerate(cyc):
            table[x - 1] = cyc[(pos + k) % length] - 1
    return Permutation(tuple(table))


def conjugate(p: Permutation, q: Permutation) -> Permutation:
    """``q p q^-1``."""
    return q * p * q.inverse()


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, fixed points included as 1's, stored in non-increasing order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.parts):
            raise ValueError(f"cycle lengths must be positive: {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def canonical(self) -> Permutation:
        """The permutation whose cycles occupy consecutive points in the order of ``parts``."""
        cycles, start = [], 1
        for length in self.parts:
            cycles.append(tuple(range(start, start + length)))
            start += length
        return Permutation.from_cycles(self.degree, cycles)

    def __str__(self):
        return "{" + ",".join(map(str, self.parts)) + "}"


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in p.cycles(include_fixed=True)))


def fit_into_young(c: CycleType | Sequence[int], n_minus_k: int, k: int):
    """Split the parts of ``c`` into blocks of sizes ``n_minus_k`` and ``k``.

    Returns ``(first_block_parts, last_block_parts)`` or ``None`` when no
    sub-multiset of the parts sums to ``k``. An element of cycle type ``c`` is
    conjugate into ``S_{n-k} x S_k`` exactly when such a split exists.
    """
    parts = c.parts if isinstance(c, CycleType) else tuple(sorted(c, reverse=True))
    if sum(parts) != n_minus_k + k or n_minus_k < 0 or k < 0:
        raise ValueError(f"parts {parts} do not sum to {n_minus_k}+{k}")
    # reach[s] = index of the part that first reached sum s
    reach: dict[int, tuple[int, int]] = {0: (-1, -1)}
    for idx, part in enumerate(parts):
        for s in sorted(reach, reverse=True):
            t = s + part
            if t <= k and t not in reach:
                reach[t] = (idx, s)
    if k not in reach:
        return None
    chosen = []
    s = k
    while s:
        idx, prev = reach[s]
        chosen.append(idx)
        s = prev
    last = tuple(sorted((parts[i] for i in chosen), reverse=True))
    rest = Counter(parts) - Counter(last)
    first = tuple(sorted(rest.elements(), reverse=True))
    return first, last


def conjugator_realizing(c: CycleType | Permutation, n_minus_k: int, k: int) -> Permutation:
    """A ``beta`` with ``beta x beta^-1`` inside ``S_{n-k} x S_k``.

    ``x`` is ``c`` itself when a permutation is passed, otherwise the canonical
    element of the cycle type. Cycles chosen for the last block are relabelled
    onto ``n-k+1..n``, the others onto ``1..n-k``.
    """
    p = c if isinstance(c, Permutation) else c.canonical()
    split = fit_into_young(cycle_type(p), n_minus_k, k)
    if split is None:
        raise ValueError(f"cycle type {cycle_type(p)} does not fit S_{n_minus_k} x S_{k}")
    if member(p, GroupSpec.mixed(n_minus_k, k)):
        return Permutation.identity(p.degree)
    wanted = Counter(split[1])
    first_slots = iter(range(n_minus_k))
    last_slots = iter(range(n_minus_k, n_minus_k + k))
    beta = [0] * p.degree
    # longest cycles first so the multiset match is deterministic
    for cyc in sorted(p.cycles(include_fixed=True), key=lambda cy: (-len(cy), cy)):
        if wanted[len(cyc)] > 0:
            wanted[len(cyc)] -= 1
            slots = last_slots
        else:
            slots = first_slots
        for x in cyc:
            beta[x - 1] = next(slots)
    result = Permutation(tuple(beta))
    assert member(conjugate(p, result), GroupSpec.mixed(n_minus_k, k))
    return result


def reduced_word(p: Permutation) -> list[int]:
    """Indices ``i1..ir`` (1-based) of a reduced word with ``p == s_i1 * ... * s_ir``."""
    table = list(p.table)
    suffix = []
    while True:
        for i in range(len(table) - 1):
            if table[i] > table[i + 1]:
                table[i], table[i + 1] = table[i + 1], table[i]
                suffix.append(i + 1)
                break
        else:
            break
    return suffix[::-1]


@dataclass(frozen=True)
class GroupSpec:
    """A subgroup of ``S_n``: a named family or the group generated by a list of permutations."""

    degree: int
    kind: str  # "pure" | "full" | "mixed" | "generated"
    blocks: tuple[int, int] | None = None
    generators: tuple[Permutation, ...] = field(default=())

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if self.kind not in ("pure", "full", "mixed", "generated"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "mixed":
            a, b = self.blocks
            if a < 0 or b < 0 or a + b != self.degree:
                raise ValueError(f"blocks {self.blocks} do not partition {self.degree}")
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {self.degree}")

    @classmethod
    def pure(cls, n: int) -> GroupSpec:
        return cls(n, "pure")

    @classmethod
    def full(cls, n: int) -> GroupSpec:
        return cls(n, "full")

    @classmethod
    def mixed(cls, n_minus_k: int, k: int) -> GroupSpec:
        return cls(n_minus_k + k, "mixed", (n_minus_k, k))

    @classmethod
    def generated(cls, n: int, gens: Iterable[Permutation]) -> GroupSpec:
        return cls(n, "generated", None, tuple(gens))

    @classmethod
    def parse_generators(cls, n: int, text: str) -> GroupSpec:
        """``"(1 2)(3 4);(1 2 3)"`` -> group generated by the listed permutations."""
        gens = [Permutation.parse(chunk, n) for chunk in text.split(";") if chunk.strip()]
        return cls.generated(n, gens)

    def generating_set(self) -> list[Permutation]:
        n = self.degree
        if self.kind == "pure":
            return []
        if self.kind == "full":
            return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]
        if self.kind == "mixed":
            a, _ = self.blocks
            return [Permutation.transposition(n, i, i + 1) for i in range(1, n) if i != a]
        return list(self.generators)

    def describe(self) -> str:
        if self.kind == "mixed":
            return f"mixed({self.blocks[0]},{self.blocks[1]})"
        if self.kind == "generated":
            return "<" + ";".join(map(str, self.generators)) + ">"
        return self.kind


def orbits(g: GroupSpec) -> list[tuple[int, ...]]:
    """Orbit partition of ``{1..n}``, each orbit sorted, orbits ordered by smallest point."""
    n = g.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in g.generating_set():
        for x, y in enumerate(gen.table):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x + 1)
    return sorted(tuple(v) for v in groups.values())


def group_elements(g: GroupSpec, cap: int = MEMBERSHIP_CAP) -> set[tuple[int, ...]]:
    """All elements (as 0-based tables) of a generated group, by breadth-first closure."""
    gens = [p.table for p in g.generating_set()]
    ident = tuple(range(g.degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                e = tuple(s[x] for x in h)
                if e not in seen:
                    seen.add(e)
                    if len(seen) > cap:
                        raise GroupTooLargeError(f"group order exceeds cap {cap}")
                    nxt.append(e)
        frontier = nxt
    return seen


def member(p: Permutation, g: GroupSpec, cap: int = MEMBERSHIP_CAP) -> bool:
    if p.degree != g.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {g.degree}")
    if g.kind == "pure":
        return p.is_identity()
    if g.kind == "full":
        return True
    if g.kind == "mixed":
        a, _ = g.blocks
        return all((x < a) == (y < a) for x, y in enumerate(p.table))
    if p.is_identity():
        return True
    # membership requires p to preserve every orbit; cheap rejection first
    for orb in orbits(g):
        if {p(x) for x in orb} != set(orb):
            return False
    return p.table in group_elements(g, cap)

