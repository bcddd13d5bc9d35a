"""Monomials, monomial ideals and the operations the rest of the package builds on.

A monomial in ``n`` variables is a plain tuple of ``n`` nonnegative exponents,
``x1^2*x3`` in three variables being ``(2, 0, 1)``.  Ideals keep their minimal
generators in lex-descending order, so two ideals are equal exactly when their
dataclass fields are equal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

Monomial = tuple

# exponents beyond this are treated as an overflow rather than silently kept
MAX_EXPONENT = 2**63 - 1


class RingMismatch(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ExponentOverflow(OverflowError):
    pass


# ---------- monomial arithmetic ----------

def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int, e: int = 1) -> Monomial:
    """The monomial ``x_{i+1}^e`` (``i`` is 0-based)."""
    return tuple(e if j == i else 0 for j in range(n))


def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(min, a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / b`` for ``b | a``."""
    if not divides(b, a):
        raise ValueError(f"{b} does not divide {a}")
    return tuple(x - y for x, y in zip(a, b))


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def compare_lex(u: Monomial, v: Monomial) -> int:
    """Pure lex with x1 > x2 > ... > xn; returns -1, 0 or 1."""
    if len(u) != len(v):
        raise RingMismatch(f"monomials live in {len(u)} and {len(v)} variables")
    for a, b in zip(u, v):
        if a != b:
            return 1 if a > b else -1
    return 0


def lex_key(m: Monomial) -> Monomial:
    # tuple comparison on exponent vectors is exactly pure lex
    return m


def minimalize(gens: Iterable[Monomial]) -> tuple:
    """Drop every monomial divisible by another one; result is lex-descending."""
    ordered = sorted(set(gens), key=sum)
    kept: list = []
    for g in ordered:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, reverse=True))


# ---------- ideals ----------

@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of ``K[x1..xn]`` given by its minimal generators."""

    n: int
    gens: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a ring needs at least one variable")
        gens = tuple(tuple(int(e) for e in g) for g in self.gens)
        for g in gens:
            if len(g) != self.n:
                raise RingMismatch(f"generator {g} does not have {self.n} exponents")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "gens", minimalize(gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def whole(cls, n: int) -> "MonomialIdeal":
        return cls(n, (unit(n),))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(n, [variable(n, i) for i in range(n)])

    @classmethod
    def prime(cls, n: int, supp: Iterable[int]) -> "MonomialIdeal":
        return cls(n, [variable(n, i) for i in supp])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (unit(self.n),)

    @property
    def is_proper_nonzero(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def lcm_exponent(self) -> Monomial:
        out = unit(self.n)
        for g in self.gens:
            out = lcm(out, g)
        return out

    def __contains__(self, m: Monomial) -> bool:
        return member(self, m)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise RingMismatch(f"ideals live in {I.n} and {J.n} variables")


def member(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != I.n:
        raise RingMismatch(f"monomial {m} is not in {I.n} variables")
    return any(divides(g, m) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, I.gens + J.gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, [lcm(a, b) for a in I.gens for b in J.gens])


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty intersection")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``I : m`` for a monomial ``m``."""
    if len(m) != I.n:
        raise RingMismatch(f"monomial {m} is not in {I.n} variables")
    return MonomialIdeal(I.n, [quotient(g, gcd(g, m)) for g in I.gens])


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff J is a subset of I."""
    _same_ring(I, J)
    return all(member(I, g) for g in J.gens)


def radical_support(I: MonomialIdeal) -> frozenset:
    """Support of the radical, for ideals of the shape of a primary monomial ideal.

    Only meaningful when every variable that occurs in a generator also has a
    pure power among the generators; anything else raises.
    """
    occurring = frozenset().union(*(support(g) for g in I.gens)) if I.gens else frozenset()
    pure = frozenset(next(iter(support(g))) for g in I.gens if len(support(g)) == 1)
    if occurring != pure:
        raise ValueError(f"{I} is not primary: no pure power of x{min(occurring - pure) + 1}")
    return pure


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All degree ``d`` monomials in lex-descending order."""
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            yield (e,) + rest


def monomials_up_to_degree(n: int, d: int) -> Iterator[Monomial]:
    for t in range(d + 1):
        yield from monomials_of_degree(n, t)


def monomials_in_box(top: Monomial) -> Iterator[Monomial]:
    return product(*(range(e + 1) for e in top))


def lex_successor(w: Monomial) -> Monomial | None:
    """Next smaller monomial of the same degree in lex order, or None."""
    n = len(w)
    # rightmost position i < n-1 with w[i] > 0: move one unit from i to i+1 and
    # push everything after i+1 into position i+1
    for i in range(n - 2, -1, -1):
        if w[i] > 0:
            tail = sum(w[i + 1:])
            out = list(w[:i]) + [w[i] - 1, tail + 1] + [0] * (n - i - 2)
            return tuple(out)
    return None


def lexsegment_set(u: Monomial, v: Monomial) -> list:
    if len(u) != len(v):
        raise RingMismatch("u and v live in different rings")
    if degree(u) != degree(v):
        raise ValueError(f"degree mismatch: deg u = {degree(u)}, deg v = {degree(v)}")
    if compare_lex(u, v) < 0:
        raise ValueError("lexsegment needs u >= v in lex order")
    out = [u]
    w = u
    while w != v:
        w = lex_successor(w)
        out.append(w)
    return out


def lexsegment(n: int, d: int, u: Monomial, v: Monomial) -> MonomialIdeal:
    """Ideal generated by the degree ``d`` monomials w with u >= w >= v."""
    if d < 2:
        raise ValueError("lexsegments are only defined for d >= 2")
    if len(u) != n or len(v) != n:
        raise RingMismatch(f"u and v must have {n} exponents")
    if degree(u) != d or degree(v) != d:
        raise ValueError(f"u and v must have degree {d}")
    return MonomialIdeal(n, lexsegment_set(u, v))


def check_alpha(alpha: Sequence[int], n: int) -> tuple:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != n:
        raise RingMismatch(f"alpha has {len(alpha)} entries, ring has {n} variables")
    if any(a < 1 for a in alpha):
        raise ValueError("every entry of alpha must be >= 1")
    return alpha


def modify_monomial(g: Monomial, alpha: Sequence[int]) -> Monomial:
    out = tuple(e * a for e, a in zip(g, alpha))
    if any(e > MAX_EXPONENT for e in out):
        raise ExponentOverflow(f"exponent of {g} under {tuple(alpha)} exceeds {MAX_EXPONENT}")
    return out


def modify_generators(gens: Sequence[Monomial], alpha: Sequence[int]) -> list:
    """Apply x_i -> x_i^{a_i} to a generator list, keeping its order and length."""
    return [modify_monomial(g, alpha) for g in gens]


def modify_trivial(I: MonomialIdeal, alpha: Sequence[int]) -> MonomialIdeal:
    """The trivial modification of a squarefree ideal."""
    alpha = check_alpha(alpha, I.n)
    if not I.is_squarefree:
        raise ValueError(f"{I} is not squarefree")
    return MonomialIdeal(I.n, modify_generators(I.gens, alpha))


# ---------- text and structured formats ----------

def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"\s*x(\d+)(?:\s*\^\s*(\d+))?\s*")


def parse_monomial(text: str, n: int, line: int = 1, column: int = 1) -> Monomial:
    s = text.strip()
    if s == "1":
        return unit(n)
    exps = [0] * n
    col = column + (len(text) - len(text.lstrip()))
    for piece in text.split("*"):
        match = _FACTOR.fullmatch(piece)
        if not match:
            raise ParseError(f"cannot read factor {piece.strip()!r}", line, col)
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"unknown variable x{i} (ring has {n} variables)", line, col)
        e = 1 if match.group(2) is None else int(match.group(2))
        if e == 0:
            raise ParseError(f"zero exponent on x{i}", line, col)
        exps[i - 1] += e
        col += len(piece) + 1
    return tuple(exps)


def parse_ideal(text: str) -> MonomialIdeal:
    """Read the two-line ``vars:``/``gens:`` format.  A ``/`` also separates lines."""
    lines = [ln for ln in re.split(r"[\n/]", text)]
    content = [(k + 1, ln) for k, ln in enumerate(lines) if ln.strip()]
    if len(content) != 2:
        raise ParseError("expected a 'vars:' line and a 'gens:' line", 1, 1)
    (lv, vline), (lg, gline) = content
    m = re.fullmatch(r"\s*vars\s*:\s*(\d+)\s*", vline)
    if not m:
        raise ParseError("expected 'vars: <n>'", lv, 1)
    n = int(m.group(1))
    if n < 1:
        raise ParseError("vars must be positive", lv, m.start(1) + 1)
    m = re.fullmatch(r"(\s*gens\s*:)(.*)", gline)
    if not m:
        raise ParseError("expected 'gens: ...'", lg, 1)
    body = m.group(2)
    gens = []
    if body.strip():
        col = len(m.group(1)) + 1
        for item in body.split(","):
            if not item.strip():
                raise ParseError("empty generator", lg, col)
            gens.append(parse_monomial(item, n, lg, col))
            col += len(item) + 1
    return MonomialIdeal(n, gens)


def render_ideal(I: MonomialIdeal) -> str:
    return f"vars: {I.n}\ngens: " + ", ".join(format_monomial(g) for g in I.gens)


def ideal_to_dict(I: MonomialIdeal) -> dict:
    return {"n": I.n, "gens": [list(g) for g in I.gens]}


def ideal_from_dict(data: dict) -> MonomialIdeal:
    return MonomialIdeal(int(data["n"]), [tuple(g) for g in data["gens"]])


def load_ideal(text: str) -> MonomialIdeal:
    """Accept either the text format or its JSON counterpart."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return ideal_from_dict(json.loads(stripped))
    return parse_ideal(text)
