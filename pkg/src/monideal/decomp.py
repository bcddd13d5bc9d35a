"""Irredundant primary decomposition, associated primes, size and bigsize."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import (
    MonomialIdeal,
    contains_ideal,
    ideal_sum,
    intersect,
    intersect_all,
    radical_support,
    support,
    variable,
)


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """Prime generated by the variables with the given 0-based indices."""

    support: tuple

    def __init__(self, support: Iterable[int]):
        object.__setattr__(self, "support", tuple(sorted(set(support))))

    @property
    def height(self) -> int:
        return len(self.support)

    def ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal.prime(n, self.support)

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i + 1}" for i in self.support) + ")"


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    radical: MonomialPrime

    def __post_init__(self):
        if MonomialPrime(radical_support(self.ideal)) != self.radical:
            raise ValueError(f"{self.ideal} does not have radical {self.radical}")


@dataclass(frozen=True)
class Decomposition:
    components: tuple

    @property
    def primes(self) -> tuple:
        return tuple(c.radical for c in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def to_list(self) -> list:
        return [
            {"gens": [list(g) for g in c.ideal.gens], "radical": list(c.radical.support)}
            for c in self.components
        ]


@dataclass(frozen=True)
class SizeReport:
    a: int
    b: int
    size: int
    bigsize: int


def _is_primary_shape(I: MonomialIdeal):
    """Return a splitting variable if ``I`` is not yet primary, else None."""
    pure = {next(iter(support(g))) for g in I.gens if len(support(g)) == 1}
    counts = Counter()
    for g in I.gens:
        for i in support(g):
            if i not in pure:
                counts[i] += 1
    if not counts:
        return None
    # variable in the most generators; ties to the lowest index
    return min(counts, key=lambda i: (-counts[i], i))


def _split_leaves(I: MonomialIdeal, out: set) -> None:
    stack = [I]
    seen = set()
    while stack:
        J = stack.pop()
        if J in seen:
            continue
        seen.add(J)
        i = _is_primary_shape(J)
        if i is None:
            out.add(J)
            continue
        b = max(g[i] for g in J.gens)
        g = next(g for g in J.gens if g[i] == b)
        power = variable(J.n, i, b)
        rest = tuple(0 if j == i else e for j, e in enumerate(g))
        stack.append(ideal_sum(J, MonomialIdeal(J.n, [power])))
        stack.append(ideal_sum(J, MonomialIdeal(J.n, [rest])))


def _component_order(c: PrimaryComponent):
    return (c.radical.height, c.radical.support, c.ideal.gens)


def primary_decomposition(I: MonomialIdeal) -> Decomposition:
    """Irredundant primary decomposition by splitting ``x_i^b w`` into ``x_i^b`` and ``w``."""
    if not I.is_proper_nonzero:
        raise ValueError("primary decomposition needs a proper nonzero ideal")
    leaves: set = set()
    _split_leaves(I, leaves)
    groups = defaultdict(list)
    for J in leaves:
        groups[radical_support(J)].append(J)
    comps = sorted(
        (PrimaryComponent(intersect_all(sorted(js, key=lambda J: J.gens)), MonomialPrime(supp))
         for supp, js in groups.items()),
        key=_component_order,
    )
    # greedy redundancy removal: drop from the back so minimal primes survive
    kept = list(comps)
    for c in reversed(comps):
        others = [d for d in kept if d is not c]
        if others and contains_ideal(c.ideal, intersect_all([d.ideal for d in others])):
            kept = others
    return Decomposition(tuple(kept))


def associated_primes(I: MonomialIdeal) -> tuple:
    return primary_decomposition(I).primes


def minimal_cover_count(supports: list, target: frozenset) -> int:
    """Least number of the given sets whose union is ``target`` (exact)."""
    for t in range(1, len(supports) + 1):
        for combo in combinations(supports, t):
            if len(frozenset().union(*combo)) == len(target):
                return t
    raise ValueError("supports do not cover the target")


def universal_cover_count(supports: list, target: frozenset) -> int:
    """Least t such that every t of the given sets union to ``target``."""
    for t in range(1, len(supports) + 1):
        if all(len(frozenset().union(*combo)) == len(target)
               for combo in combinations(supports, t)):
            return t
    raise ValueError("supports do not cover the target")


def size_bigsize(ass: Iterable[MonomialPrime], n: int) -> SizeReport:
    supports = [frozenset(P.support) for P in ass]
    if not supports:
        raise ValueError("size needs at least one associated prime")
    total = frozenset().union(*supports)
    b = len(total)
    a = minimal_cover_count(supports, total)
    a2 = universal_cover_count(supports, total)
    return SizeReport(a=a, b=b, size=a + (n - b) - 1, bigsize=a2 + (n - b) - 1)


def size_report(I: MonomialIdeal) -> SizeReport:
    return size_bigsize(associated_primes(I), I.n)


def is_star_condition(ass: Iterable[MonomialPrime]) -> bool:
    """Every prime owns a variable that lies in no other prime."""
    supports = [frozenset(P.support) for P in ass]
    for k, s in enumerate(supports):
        others = frozenset().union(*(t for j, t in enumerate(supports) if j != k))
        if not s - others:
            return False
    return True


def has_minimal_depth(I: MonomialIdeal, p: int | None = None) -> bool:
    from .homology import depth_ideal

    kwargs = {} if p is None else {"p": p}
    return depth_ideal(I, **kwargs) == size_report(I).size + 1
