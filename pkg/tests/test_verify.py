import json

import pytest

from monideal.core import MonomialIdeal, intersect, modify_generators
from monideal.decomp import MonomialPrime, associated_primes, is_star_condition, size_report
from monideal.homology import depth_ideal, depth_quotient
from monideal.verify import (
    WORKED_EXAMPLE_ALPHA,
    WORKED_EXAMPLE_GENS,
    WORKED_EXAMPLE_IMAGE,
    CorpusSpec,
    _instances,
    default_spec,
    gen_bigsize_one,
    gen_lexsegments,
    gen_random_ideals,
    gen_star_family,
    lex_case,
    lex_subcase_pairs,
    replay,
    run_suite,
)


def test_lex_n3_d2_has_21_ideals():
    spec = default_spec("lex", n_min=3, n_max=3, d_min=2, d_max=2, include_subcases=False)
    triples = list(gen_lexsegments(spec))
    assert len(triples) == 21
    assert sum(1 for _, u, v in triples if u == v) == 6
    report = run_suite("lex", spec)
    assert report.status == "pass"
    assert report.tallies["minimal_depth"]["pass"] == 21


def test_lex_stream_contains_subcases():
    triples = set(gen_lexsegments(default_spec("lex")))
    assert (6, (1, 0, 0, 3, 0, 0), (0, 4, 0, 0, 0, 0)) in triples
    for t in lex_subcase_pairs():
        assert t in triples


def test_subcase_values():
    n, u, v = 6, (1, 0, 0, 3, 0, 0), (0, 4, 0, 0, 0, 0)
    assert lex_case(u, v) == ("v_eq_x2_pow_d", 3, 2)
    cases = {lex_case(u, v)[0] for _, u, v in lex_subcase_pairs()}
    assert {"v_eq_x2_pow_d", "v_eq_x2_pow_d1_xj", "xn_u_over_x1_ge_v", "remaining"} <= cases


@pytest.mark.parametrize("suite", ["star", "bigsize1", "bounds", "stanley", "modification"])
def test_streams_are_deterministic(suite):
    spec = default_spec(suite, count=8)
    a = [(i.kind, i.data) for i in _instances(spec)]
    b = [(i.kind, i.data) for i in _instances(spec)]
    assert a == b
    other = [(i.kind, i.data) for i in _instances(default_spec(suite, count=8, seed=spec.seed + 1))]
    assert a != other


def test_random_stream_contract():
    spec = default_spec("bounds", count=60, n_min=4, n_max=4, max_gens=5, max_exp=3)
    ideals = list(gen_random_ideals(spec))
    assert len(ideals) == 60 and len(set(ideals)) == 60
    for I in ideals:
        assert I.is_proper_nonzero and len(I.gens) <= 5
        assert max(max(g) for g in I.gens) <= 3


def test_star_family_examples():
    I = intersect(MonomialIdeal.prime(4, [0, 1]), MonomialIdeal.prime(4, [2, 3]))
    assert depth_quotient(I) == 1
    assert is_star_condition([MonomialPrime([0, 2]), MonomialPrime([1, 2])])
    I = MonomialIdeal(3, [(1, 1, 1)])
    assert set(associated_primes(I)) == {MonomialPrime([k]) for k in range(3)}
    for I, primes in gen_star_family(default_spec("star", count=15)):
        assert set(associated_primes(I)) == {MonomialPrime(P) for P in primes}
        assert is_star_condition(associated_primes(I))


def test_bigsize_one_stream():
    rep = size_report(MonomialIdeal(3, [(0, 1, 0), (1, 0, 1)]))
    assert rep.bigsize == 1
    for I in gen_bigsize_one(default_spec("bigsize1", count=15)):
        r = size_report(I)
        assert r.bigsize == 1 and r.size == 1
        assert depth_ideal(I) == 2


def test_example_generators():
    assert modify_generators(WORKED_EXAMPLE_GENS, WORKED_EXAMPLE_ALPHA) == WORKED_EXAMPLE_IMAGE


@pytest.mark.parametrize("suite", ["star", "bigsize1", "bounds", "stanley", "modification"])
def test_small_suites_pass(suite):
    report = run_suite(suite, default_spec(suite, count=10))
    assert report.status == "pass", [r.to_dict() for r in report.violations]
    doc = report.to_dict()
    assert doc["schema_version"] == 1 and doc["suite"] == suite
    assert doc["spec"]["characteristic"] == 32003
    json.dumps(doc, sort_keys=True)


def test_workers_give_same_results():
    spec = default_spec("bounds", count=20)
    one = run_suite("bounds", spec).to_dict(full=True)
    two = run_suite("bounds", spec, workers=2).to_dict(full=True)
    assert one == two


def test_replay_reproduces_a_comparison():
    # payloads survive a JSON round trip and re-run the same claims
    spec = default_spec("bounds", count=1)
    inst = _instances(spec)[0]
    payload = {"suite": "bounds", "spec": spec.to_dict(),
               "instance": {"id": inst.id, "kind": inst.kind, "data": inst.data}}
    payload = json.loads(json.dumps(payload))
    results = replay(payload)
    assert results and all(r.instance == inst.id for r in results)
    assert {r.claim for r in results} == {"bigsize_ge_size", "depth_ge_size_plus_1", "sdepth_ge_size_plus_1"}


def test_sdepth_budget_reports_indeterminate():
    spec = CorpusSpec("bounds", count=15, budget=1)
    report = run_suite("bounds", spec)
    statuses = {r.status for r in report.results if r.claim == "sdepth_ge_size_plus_1"}
    assert "violation" not in statuses
    assert "indeterminate" in statuses
    ind = report.to_dict()["indeterminate"][0]
    assert "budget" in ind["observed"]["reason"]
    assert ind["payload"]["suite"] == "bounds"


def test_unknown_suite():
    with pytest.raises((KeyError, ValueError)):
        default_spec("nope")


def violating_payload():
    # the maximal ideal has bigsize 0, so the bigsize1 claims fail on it
    spec = default_spec("bigsize1", count=1)
    return {"suite": "bigsize1", "spec": spec.to_dict(),
            "instance": {"id": "hand-00000", "kind": "bigsize1",
                         "data": {"ideal": {"n": 3, "gens": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}}}}


def test_replay_reproduces_violation():
    results = replay(json.loads(json.dumps(violating_payload())))
    by_claim = {r.claim: r for r in results}
    assert by_claim["bigsize_one"].status == "violation"
    assert by_claim["bigsize_one"].observed["bigsize"] == 0
