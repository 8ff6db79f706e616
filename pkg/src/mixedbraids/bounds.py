"""Intervals for the (higher) topological complexity of G-braid groups.

Every G-braid group ``B_n^G`` has cohomological dimension ``n - 1``. The
engine reduces ``G`` to the Young subgroups ``S_a x S_b`` containing it up to
relabelling (conjugate subgroups of S_n give isomorphic braid groups) and
applies whichever block theorems are licensed.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from mixedbraids.permutations import GroupSpec, orbits
from mixedbraids.torsion import gcd_triple

# tag -> statement; emitted with each bound that contributes
STATEMENTS = {
    "baseline-lower": "cd(B_n^G) = n-1 <= TC_m(B_n^G)",
    "baseline-upper": "TC_m(B_n^G) <= m*cd(B_n^G) = m(n-1)",
    "block-lower": "G <= S_{n-k} x S_k, k >= 2  =>  TC_m(B_n^G) >= m(n-1)-k+1",
    "fixed-point-lower": "G <= S_{n-1} x {1}  =>  TC_m(B_n^G) >= m(n-1)-1",
    "coprime-block-upper": "G <= S_{n-k} x S_k, (n,k)=(n-1,k)=(n-1,k-1)=1  =>  TC_m(B_n^G) <= m(n-1)-1",
    "two-fixed-points-upper": "G <= S_{n-2} x {1}^2  =>  TC_m(B_n^G) <= m(n-1)-1",
}


@dataclass(frozen=True)
class Bipartition:
    """Blocks of sizes ``(n - k, k)``, each a union of orbits."""

    first: int
    k: int
    gcds: tuple[int, int, int]
    last_orbits: tuple[tuple[int, ...], ...]

    @property
    def coprime(self) -> bool:
        return self.gcds == (1, 1, 1)


@dataclass(frozen=True)
class GroupAnalysis:
    degree: int
    orbits: tuple[tuple[int, ...], ...]
    fixed_points: int
    bipartitions: tuple[Bipartition, ...]

    def block_sizes(self) -> set[tuple[int, int]]:
        return {(b.first, b.k) for b in self.bipartitions}


def analyze(g: GroupSpec) -> GroupAnalysis:
    """Orbits, fixed points and every ``(n-k, k)`` split of the orbits, ``1 <= k <= n-1``."""
    n = g.degree
    orbs = tuple(orbits(g))
    # sums reachable by sub-multisets of orbits, remembering one witness per sum
    reach: dict[int, tuple[int, ...]] = {0: ()}
    for idx, orb in enumerate(orbs):
        for s, chosen in sorted(reach.items(), reverse=True):
            t = s + len(orb)
            if t not in reach:
                reach[t] = chosen + (idx,)
    parts = []
    for k in range(1, n):
        if k in reach:
            parts.append(Bipartition(n - k, k, gcd_triple(n, k), tuple(orbs[i] for i in reach[k])))
    fixed = sum(1 for o in orbs if len(o) == 1)
    return GroupAnalysis(n, orbs, fixed, tuple(parts))


def cd_of(n: int) -> int:
    if n < 2:
        raise ValueError(f"cohomological dimension needs n >= 2, got {n}")
    return n - 1


@dataclass
class BoundReport:
    n: int
    m: int
    cd: int
    lower: int
    upper: int
    exact: bool
    provenance: list[dict] = field(default_factory=list)
    group: str = ""

    def to_dict(self, with_group: bool = False) -> dict:
        out = asdict(self)
        group = out.pop("group")
        if with_group:
            out = {"group": group, **out}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _entry(tag: str, bound: str, value: int, note: str = "") -> dict:
    out = {"tag": tag, "quote": STATEMENTS[tag], "bound": f"{bound} {value}"}
    if note:
        out["note"] = note
    return out


def _attaining(candidates, value):
    seen, out = set(), []
    for v, e in candidates:
        if v == value and e["tag"] not in seen:
            seen.add(e["tag"])
            out.append(e)
    return out


def tc_bounds(n: int, g: GroupSpec, m: int = 2) -> BoundReport:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if g.degree != n:
        raise ValueError(f"group acts on {g.degree} points, expected {n}")
    info = analyze(g)
    cd = cd_of(n)
    top = m * (n - 1)

    # the higher-m block statements are printed with TC where TC_m is meant
    as_tcm = "; read as a TC_m statement" if m > 2 else ""

    lowers = [(cd, _entry("baseline-lower", "lower", cd))]
    for b in info.bipartitions:
        k = min(b.first, b.k)
        if k >= 2 and b.k == k:
            lowers.append((top - k + 1, _entry("block-lower", "lower", top - k + 1,
                                               f"blocks ({b.first},{b.k}), up to relabelling{as_tcm}")))
    if info.fixed_points >= 1:
        lowers.append((top - 1, _entry("fixed-point-lower", "lower", top - 1)))

    uppers = [(top, _entry("baseline-upper", "upper", top,
                           "standard dimension bound" if m > 2 else ""))]
    if info.fixed_points >= 2:
        uppers.append((top - 1, _entry("two-fixed-points-upper", "upper", top - 1, as_tcm.lstrip("; "))))
    coprime = [b for b in info.bipartitions if b.coprime and b.k <= b.first]
    if coprime:
        b = coprime[0]
        uppers.append((top - 1, _entry("coprime-block-upper", "upper", top - 1,
                                       f"blocks ({b.first},{b.k}), up to relabelling")))

    lower = max(v for v, _ in lowers)
    upper = min(v for v, _ in uppers)
    prov = _attaining(lowers, lower) + _attaining(uppers, upper)
    if lower > upper:
        raise AssertionError(f"inconsistent bounds [{lower}, {upper}] for n={n}, {g.describe()}")
    return BoundReport(n, m, cd, lower, upper, lower == upper, prov, g.describe())


def bounds_table(rows) -> list[BoundReport]:
    """``rows`` is an iterable of ``(n, GroupSpec, m)``; reports come back in the same order."""
    return [tc_bounds(n, g, m) for n, g, m in rows]


CSV_FIELDS = ["n", "m", "group", "cd", "lower", "upper", "exact"]


def to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow({"n": r.n, "m": r.m, "group": r.group, "cd": r.cd,
                         "lower": r.lower, "upper": r.upper, "exact": r.exact})
    return buf.getvalue()

