"""Stanley depth of I and S/I through interval partitions of the characteristic poset.

For ``g`` the exponent vector of lcm(G(I)), the poset is the set of
``a <= g`` with ``x^a`` in I (ideal mode) or not in I (quotient mode).  A
partition into intervals ``[b, c]`` gives a Stanley decomposition whose
spaces have dimension ``#{j : c_j = g_j}``, and the best such partition
realises the Stanley depth.

The search at level ``k`` uses two refinements that never lose a solution:
a point with value ``>= k`` can always stand alone, and any interval
``[b, c]`` with value ``>= k`` splits into intervals whose tops raise ``b``
to ``g`` on exactly ``k - value(b)`` coordinates.  So only points of value
below ``k`` need covering, each by one of finitely many normalized intervals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

import numpy as np

from .core import MonomialIdeal, member

DEFAULT_BOX_CAP = 200_000
DEFAULT_BUDGET = 10**7


class BoxTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CharacteristicPoset:
    n: int
    g: tuple
    mode: str
    points: tuple  # sorted by (total degree, point)

    def value(self, c) -> int:
        return sum(1 for cj, gj in zip(c, self.g) if cj == gj)

    def __len__(self):
        return len(self.points)

    def __contains__(self, z):
        return z in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {z: k for k, z in enumerate(self.points)}
            object.__setattr__(self, "_idx", idx)
        return idx


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple  # ((b, c), ...)
    k: int

    def to_dict(self, poset: CharacteristicPoset | None = None) -> dict:
        out = {"k": self.k, "intervals": [[list(b), list(c)] for b, c in self.intervals]}
        if poset is not None:
            out["mode"] = poset.mode
            out["g"] = list(poset.g)
        return out


@dataclass
class SdepthResult:
    mode: str
    value: int | None  # None when a budget cap hit at the deciding level
    lower: int
    certificate: IntervalPartition
    poset: CharacteristicPoset = field(repr=False)
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.value is not None


def char_poset(I: MonomialIdeal, mode: str = "ideal", g=None,
               cap: int = DEFAULT_BOX_CAP) -> CharacteristicPoset:
    if mode not in ("ideal", "quotient"):
        raise ValueError(f"mode must be 'ideal' or 'quotient', got {mode!r}")
    if not I.is_proper_nonzero:
        raise ValueError("the characteristic poset needs a proper nonzero ideal")
    lcm_exp = I.lcm_exponent()
    if g is None:
        g = lcm_exp
    g = tuple(int(x) for x in g)
    if len(g) != I.n or any(a < b for a, b in zip(g, lcm_exp)):
        raise ValueError(f"g={g} must dominate the lcm exponent {lcm_exp}")
    box = int(np.prod([x + 1 for x in g], dtype=object))
    if box > cap:
        raise BoxTooLarge(f"box of {box} points exceeds the cap of {cap}")
    grid = np.indices([x + 1 for x in g]).reshape(I.n, -1).T
    inside = np.zeros(len(grid), dtype=bool)
    for gen in I.gens:
        inside |= np.all(grid >= np.array(gen), axis=1)
    keep = grid[inside] if mode == "ideal" else grid[~inside]
    pts = sorted((tuple(int(e) for e in z) for z in keep), key=lambda z: (sum(z), z))
    return CharacteristicPoset(I.n, g, mode, tuple(pts))


def interval_points(b, c):
    return product(*(range(x, y + 1) for x, y in zip(b, c)))


class _Search:
    """Exact cover of the points of value < k by normalized intervals.

    Points of value < k are primary columns (covered exactly once), points of
    value >= k are secondary (covered at most once, as interval tops).  The
    search always branches on the uncovered point with the fewest remaining
    intervals, ties going to the smallest point in the linear extension, and
    remembers covered sets already shown to be dead ends.
    """

    def __init__(self, poset: CharacteristicPoset, k: int, budget: int):
        self.P = poset
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.val = [poset.value(z) for z in poset.points]
        self.poor = [i for i, v in enumerate(self.val) if v < k]

    def rows(self) -> list:
        idx = self.P._index
        g = self.P.g
        n = self.P.n
        out = []
        for i in self.poor:
            p = self.P.points[i]
            nonfull = [j for j in range(n) if p[j] != g[j]]
            for T in combinations(nonfull, self.k - self.val[i]):
                top = tuple(g[j] if j in T else p[j] for j in range(n))
                if top in idx:
                    out.append((p, top, [idx[z] for z in interval_points(p, top)]))
        return out

    def counting_ok(self) -> bool:
        """Level counts on a 0/1 box, where every interval size is a binomial."""
        k = self.k
        U = [0] * (k + 1)
        for v in self.val:
            if v <= k:
                U[v] += 1
        m = []
        for r in range(k):
            forced = U[r] - sum(mr * comb(k - rr, r - rr) for rr, mr in enumerate(m))
            if forced < 0:
                return False
            m.append(forced)
        return sum(m) <= U[k]

    def run(self):
        """Return a list of intervals, None if impossible, or 'budget'."""
        if not self.poor:
            return []
        if all(x <= 1 for x in self.P.g) and not self.counting_ok():
            return None
        rows = self.rows()
        cols = [r[2] for r in rows]
        X = {c: set() for c in range(len(self.P.points))}
        for r, cs in enumerate(cols):
            for c in cs:
                X[c].add(r)
        remaining = set(self.poor)
        rank_of = {c: t for t, c in enumerate(self.poor)}
        failed = set()
        covered = 0

        def select(r):
            saved = []
            for j in cols[r]:
                for i in X[j]:
                    for c in cols[i]:
                        if c != j:
                            X[c].discard(i)
                saved.append(X.pop(j))
                remaining.discard(j)
            return saved

        def deselect(r, saved):
            for j in reversed(cols[r]):
                X[j] = saved.pop()
                if j in rank_of:
                    remaining.add(j)
                for i in X[j]:
                    for c in cols[i]:
                        if c != j:
                            X[c].add(i)

        def choose():
            c = min(remaining, key=lambda c: (len(X[c]), rank_of[c]))
            return sorted(X[c])

        chosen = []
        stack = [[choose(), 0, None, 0]]
        while stack:
            frame = stack[-1]
            if frame[2] is not None:
                r = chosen.pop()
                deselect(r, frame[2])
                covered ^= frame[3]
                frame[2] = None
            cands, nxt = frame[0], frame[1]
            if nxt >= len(cands):
                failed.add(covered)
                stack.pop()
                continue
            frame[1] += 1
            self.nodes += 1
            if self.nodes > self.budget:
                return "budget"
            r = cands[nxt]
            frame[2] = select(r)
            mask = 0
            for j in cols[r]:
                mask |= 1 << j
            frame[3] = mask
            covered |= mask
            chosen.append(r)
            if not remaining:
                return [(rows[r][0], rows[r][1]) for r in chosen]
            if covered in failed:
                continue
            nxt_cands = choose()
            if not nxt_cands:
                failed.add(covered)
                continue
            stack.append([nxt_cands, 0, None, 0])
        return None


def admits_partition(poset: CharacteristicPoset, k: int, budget: int = DEFAULT_BUDGET):
    """Partition with every interval value >= k, None if none exists, or 'budget'.

    The returned partition lists the searched intervals followed by the
    singletons of value >= k left over.
    """
    if not 0 <= k <= poset.n:
        raise ValueError(f"k must lie in [0, {poset.n}]")
    search = _Search(poset, k, budget)
    found = search.run()
    admits_partition.last_nodes = search.nodes
    if found is None or found == "budget":
        return found
    covered = set()
    for b, c in found:
        covered.update(interval_points(b, c))
    rest = [(z, z) for z in poset.points if z not in covered]
    return IntervalPartition(tuple(found) + tuple(rest), k)


admits_partition.last_nodes = 0


def sdepth(I: MonomialIdeal, mode: str = "ideal", g=None, budget: int = DEFAULT_BUDGET,
           box_cap: int = DEFAULT_BOX_CAP) -> SdepthResult:
    P = char_poset(I, mode, g, box_cap)
    best = IntervalPartition(tuple((z, z) for z in P.points), 0)
    nodes = 0
    for k in range(1, P.n + 1):
        found = admits_partition(P, k, budget)
        nodes += admits_partition.last_nodes
        if found is None:
            return SdepthResult(mode, k - 1, k - 1, best, P, nodes)
        if found == "budget":
            return SdepthResult(mode, None, k - 1, best, P, nodes)
        best = found
    return SdepthResult(mode, P.n, P.n, best, P, nodes)


def sdepth_ideal(I: MonomialIdeal, **kw) -> int | None:
    return sdepth(I, "ideal", **kw).value


def sdepth_quotient(I: MonomialIdeal, **kw) -> int | None:
    return sdepth(I, "quotient", **kw).value


# ---------- certificates ----------

def check_certificate(I: MonomialIdeal, intervals, k: int, mode: str = "ideal", g=None):
    """Check a partition certificate from scratch.

    Returns ``(True, None)`` or ``(False, reason)`` naming the first offending
    point or interval.  Uses only ideal membership, not the search machinery.
    """
    if g is None:
        g = I.lcm_exponent()
    g = tuple(g)
    n = I.n

    def in_poset(z):
        return member(I, z) == (mode == "ideal")

    seen = set()
    for b, c in intervals:
        b, c = tuple(b), tuple(c)
        if len(b) != n or len(c) != n:
            return False, f"interval {[list(b), list(c)]} has the wrong length"
        if any(x > y for x, y in zip(b, c)) or any(y > h or x < 0 for x, y, h in zip(b, c, g)):
            return False, f"interval {[list(b), list(c)]} is not inside the box"
        if sum(1 for y, h in zip(c, g) if y == h) < k:
            return False, f"interval {[list(b), list(c)]} has value below {k}"
        for z in product(*(range(x, y + 1) for x, y in zip(b, c))):
            if not in_poset(z):
                return False, f"point {list(z)} lies outside the poset"
            if z in seen:
                return False, f"point {list(z)} is covered twice"
            seen.add(z)
    for z in product(*(range(h + 1) for h in g)):
        if in_poset(z) and z not in seen:
            return False, f"point {list(z)} is not covered"
    return True, None


def certificate_to_json(result: SdepthResult) -> str:
    return json.dumps(result.certificate.to_dict(result.poset), sort_keys=True)


def certificate_from_dict(data: dict):
    """Return ``(intervals, k, mode, g)``; a full sdepth report is also accepted."""
    if "certificate" in data:
        data = data["certificate"]
    intervals = [(tuple(b), tuple(c)) for b, c in data["intervals"]]
    g = tuple(data["g"]) if data.get("g") is not None else None
    return intervals, int(data["k"]), data.get("mode", "ideal"), g
