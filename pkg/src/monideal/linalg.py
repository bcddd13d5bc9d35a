"""Ranks of sparse integer matrices over a prime field or over the rationals.

A matrix is given as a list of sparse rows, each a dict ``{column: value}``.
Characteristic 0 uses fraction-free integer elimination, so every
intermediate value is an exact integer.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

DEFAULT_CHARACTERISTIC = 32003


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_characteristic(p: int) -> int:
    p = int(p)
    if p != 0 and not _is_prime(p):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    return p


def rank(rows: list, p: int = DEFAULT_CHARACTERISTIC) -> int:
    if check_characteristic(p) == 0:
        return _rank_rational(rows)
    return _rank_mod_p(rows, p)


def _rank_mod_p(rows: list, p: int) -> int:
    pivots: dict = {}  # pivot column -> normalized row (pivot entry 1)
    r = 0
    for row in rows:
        cur = {c: v % p for c, v in row.items() if v % p}
        while cur:
            c = min(cur)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(cur[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in cur.items()}
                r += 1
                break
            f = cur[c]
            for k, v in prow.items():
                nv = (cur.get(k, 0) - f * v) % p
                if nv:
                    cur[k] = nv
                else:
                    cur.pop(k, None)
    return r


def _rank_rational(rows: list) -> int:
    pivots: dict = {}
    r = 0
    for row in rows:
        cur = {c: v for c, v in row.items() if v}
        while cur:
            c = min(cur)
            prow = pivots.get(c)
            if prow is None:
                g = 0
                for v in cur.values():
                    g = gcd(g, v)
                pivots[c] = {k: v // g for k, v in cur.items()}
                r += 1
                break
            a, b = prow[c], cur[c]
            # cur <- a*cur - b*prow, then strip the content
            new = {}
            for k in set(cur) | set(prow):
                nv = a * cur.get(k, 0) - b * prow.get(k, 0)
                if nv:
                    new[k] = nv
            g = 0
            for v in new.values():
                g = gcd(g, v)
            cur = {k: v // g for k, v in new.items()} if g > 1 else new
    return r
