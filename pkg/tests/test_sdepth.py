import json
import random
from functools import lru_cache

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from monideal.core import MonomialIdeal, modify_trivial
from monideal.sdepth import (
    BoxTooLarge,
    admits_partition,
    certificate_from_dict,
    certificate_to_json,
    char_poset,
    check_certificate,
    interval_points,
    sdepth,
    sdepth_ideal,
    sdepth_quotient,
)


@st.composite
def small_ideals(draw, n_max=3, max_gens=3, max_exp=2, squarefree=False):
    n = draw(st.integers(1, n_max))
    top = 1 if squarefree else max_exp
    gens = draw(st.lists(st.tuples(*[st.integers(0, top)] * n).filter(any),
                         min_size=1, max_size=max_gens))
    return MonomialIdeal(n, gens)


def brute_sdepth(poset):
    """Largest k with a partition into intervals of value >= k, any interval shape allowed.

    The least uncovered point in a linear extension must be the bottom of its
    interval, so trying every admissible top for it is exhaustive.
    """
    pts = poset.points
    inside = set(pts)
    g = poset.g

    def value(c):
        return sum(1 for x, y in zip(c, g) if x == y)

    def tops(p):
        return [c for c in pts if all(a <= b for a, b in zip(p, c))
                and all(z in inside for z in interval_points(p, c))]

    def admits(k):
        @lru_cache(maxsize=None)
        def go(covered):
            rest = [p for p in pts if p not in covered]
            if not rest:
                return True
            p = rest[0]
            for c in tops(p):
                if value(c) < k:
                    continue
                box = set(interval_points(p, c))
                if box & covered:
                    continue
                if go(covered | frozenset(box)):
                    return True
            return False
        return go(frozenset())

    best = 0
    for k in range(1, poset.n + 1):
        if not admits(k):
            break
        best = k
    return best


def test_poset_examples():
    P = char_poset(MonomialIdeal(2, [(1, 0), (0, 1)]), "ideal")
    assert P.g == (1, 1) and set(P.points) == {(1, 0), (0, 1), (1, 1)}
    P = char_poset(MonomialIdeal(2, [(1, 1)]), "quotient")
    assert set(P.points) == {(0, 0), (1, 0), (0, 1)}
    P = char_poset(MonomialIdeal(1, [(2,)]), "ideal")
    assert P.g == (2,) and P.points == ((2,),)
    with pytest.raises(BoxTooLarge):
        char_poset(MonomialIdeal(2, [(400, 0), (0, 400)]), cap=1000)
    with pytest.raises(ValueError):
        char_poset(MonomialIdeal(2, [(1, 0)]), "bogus")


def test_admits_examples():
    P = char_poset(MonomialIdeal(2, [(1, 0), (0, 1)]), "ideal")
    part = admits_partition(P, 1)
    assert part is not None
    assert check_certificate(MonomialIdeal(2, [(1, 0), (0, 1)]), part.intervals, 1)[0]
    assert admits_partition(P, 2) is None
    assert admits_partition(P, 0).intervals
    with pytest.raises(ValueError):
        admits_partition(P, 3)


def test_sdepth_examples():
    assert sdepth_ideal(MonomialIdeal(2, [(1, 0)])) == 2
    assert sdepth_ideal(MonomialIdeal(2, [(1, 0), (0, 1)])) == 1
    assert sdepth_quotient(MonomialIdeal(2, [(1, 1)])) == 1


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 2), (4, 2), (5, 3)])
def test_maximal_ideal(n, expected):
    res = sdepth(MonomialIdeal.maximal(n))
    assert res.value == expected
    assert check_certificate(MonomialIdeal.maximal(n), res.certificate.intervals, expected)[0]


def test_budget_is_indeterminate_not_false():
    res = sdepth(MonomialIdeal.maximal(5), budget=1)
    assert res.value is None and not res.exact
    assert res.lower <= 3


@given(small_ideals(), st.sampled_from(["ideal", "quotient"]))
@settings(max_examples=60, deadline=None)
def test_matches_unnormalized_oracle(I, mode):
    P = char_poset(I, mode)
    assume(0 < len(P) <= 14)
    res = sdepth(I, mode)
    assert res.value == brute_sdepth(P)


@given(small_ideals(n_max=4, max_gens=4), st.sampled_from(["ideal", "quotient"]))
@settings(max_examples=60, deadline=None)
def test_certificate_and_monotonicity(I, mode):
    res = sdepth(I, mode)
    assume(res.exact and len(res.poset) > 0)
    k = res.value
    ok, why = check_certificate(I, res.certificate.intervals, k, mode)
    assert ok, why
    for j in range(k + 1):
        assert admits_partition(res.poset, j) is not None
    if k < I.n:
        assert admits_partition(res.poset, k + 1) is None


@given(small_ideals(n_max=4, max_gens=4), st.sampled_from(["ideal", "quotient"]), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_mutated_certificates_rejected(I, mode, rnd):
    res = sdepth(I, mode)
    ivs = list(res.certificate.intervals)
    assume(ivs)
    k = res.value
    dropped = ivs[:]
    del dropped[rnd.randrange(len(dropped))]
    assert not check_certificate(I, dropped, k, mode)[0]
    b, c = rnd.choice(ivs)
    z = tuple(rnd.randint(x, y) for x, y in zip(b, c))
    overlap = ivs + [(z, z)]
    ok, why = check_certificate(I, overlap, 0, mode)
    assert not ok and "twice" in why


def test_certificate_rejects_bad_intervals():
    I = MonomialIdeal(2, [(1, 0), (0, 1)])
    good = [((1, 0), (1, 1)), ((0, 1), (0, 1))]
    assert check_certificate(I, good, 1) == (True, None)
    ok, why = check_certificate(I, good, 2)
    assert not ok and "value below 2" in why
    ok, why = check_certificate(I, [((0, 0), (1, 1))], 0)
    assert not ok and "outside the poset" in why
    ok, why = check_certificate(I, [((1, 0), (1, 1))], 1)
    assert not ok and "[0, 1]" in why


def test_certificate_json_roundtrip():
    I = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)])
    res = sdepth(I, "quotient")
    data = json.loads(certificate_to_json(res))
    intervals, k, mode, g = certificate_from_dict(data)
    assert (k, mode, g) == (res.value, "quotient", res.poset.g)
    assert check_certificate(I, intervals, k, mode, g)[0]
    assert certificate_from_dict({"certificate": data})[1] == k


@given(small_ideals(n_max=3, max_gens=3), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_permutation_invariance(I, rnd):
    perm = list(range(I.n))
    rnd.shuffle(perm)
    J = MonomialIdeal(I.n, [tuple(g[perm[j]] for j in range(I.n)) for g in I.gens])
    assert sdepth_ideal(I) == sdepth_ideal(J)
    assert sdepth_quotient(I) == sdepth_quotient(J)


@given(small_ideals(n_max=4, max_gens=4, squarefree=True), st.tuples(*[st.integers(1, 3)] * 4))
@settings(max_examples=40, deadline=None)
def test_trivial_modification_invariance(I, alpha):
    J = modify_trivial(I, alpha[:I.n])
    assert sdepth_ideal(J) == sdepth_ideal(I)


def test_exponent_bump_family():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 3)
        vs = list({tuple(rng.randint(0, 1) for _ in range(n - 1)) for _ in range(rng.randint(1, 4))})
        vs = [v for v in vs if any(v)] or [(1,) * (n - 1)]
        r = rng.randint(1, len(vs))
        a = rng.randint(1, 2)
        gens = [(a,) + v for v in vs[:r]] + [(0,) + v for v in vs[r:]]
        bumped = [(a + 1,) + v for v in vs[:r]] + [(0,) + v for v in vs[r:]]
        assert sdepth_ideal(MonomialIdeal(n, gens)) == sdepth_ideal(MonomialIdeal(n, bumped))


@given(small_ideals(n_max=3, max_gens=3))
@settings(max_examples=40, deadline=None)
def test_quotient_stable_under_larger_box(I):
    g = tuple(x + 1 for x in I.lcm_exponent())
    assert sdepth_quotient(I) == sdepth_quotient(I, g=g)
    assert sdepth_ideal(I) == sdepth_ideal(I, g=g)


def test_g_must_dominate_lcm():
    with pytest.raises(ValueError):
        char_poset(MonomialIdeal(2, [(2, 1)]), g=(1, 1))
