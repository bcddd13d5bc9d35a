"""Instance generators and theorem suites.

Each suite turns a :class:`CorpusSpec` into a deterministic list of
instances and checks its claims on every one of them.  Failures are data:
a suite always runs to the end and reports per-claim tallies, with the full
instance attached to every violation so it can be replayed.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .core import (
    MonomialIdeal,
    colon,
    compare_lex,
    ideal_from_dict,
    ideal_to_dict,
    intersect_all,
    lexsegment_set,
    modify_generators,
    modify_trivial,
    monomials_of_degree,
    variable,
)
from .decomp import MonomialPrime, associated_primes, is_star_condition, size_bigsize
from .homology import TooManyGenerators, depth_quotient
from .linalg import DEFAULT_CHARACTERISTIC
from .sdepth import DEFAULT_BOX_CAP, BoxTooLarge, sdepth

SCHEMA_VERSION = 1
SUITES = ("lex", "star", "bigsize1", "bounds", "stanley", "modification")

WORKED_EXAMPLE_GENS = [
    (1, 1, 1, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 1, 1, 0),
    (0, 1, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1, 0, 1),
    (1, 1, 0, 0, 0, 1, 1),
]
WORKED_EXAMPLE_ALPHA = (2, 3, 6, 3, 7, 8, 2)
WORKED_EXAMPLE_IMAGE = [
    (2, 3, 6, 0, 0, 0, 0),
    (0, 3, 0, 3, 0, 0, 0),
    (0, 0, 0, 3, 7, 8, 0),
    (0, 3, 0, 0, 0, 8, 0),
    (0, 0, 0, 0, 7, 0, 2),
    (2, 3, 0, 0, 0, 8, 2),
]


@dataclass
class CorpusSpec:
    suite: str
    seed: int = 0
    count: int = 100
    n_min: int = 2
    n_max: int = 4
    d_min: int = 2
    d_max: int = 3
    max_gens: int = 5
    max_exp: int = 3
    max_alpha: int = 3
    s_max: int = 4
    exhaustive: bool = True
    include_subcases: bool = True
    worked_example: bool = False
    budget: int = 10**6
    box_cap: int = DEFAULT_BOX_CAP
    gen_cap: int = 40
    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        self.seed = int(self.seed) & (2**64 - 1)

    def to_dict(self) -> dict:
        return asdict(self)


def default_spec(suite: str, **overrides) -> CorpusSpec:
    base = {
        "lex": dict(n_min=3, n_max=4, d_min=2, d_max=3, exhaustive=True),
        "star": dict(count=100, n_min=2, n_max=6, s_max=4, max_exp=2),
        "bigsize1": dict(count=50, n_min=3, n_max=5, max_exp=2),
        "bounds": dict(count=500, n_min=2, n_max=4, max_gens=5, max_exp=3),
        "stanley": dict(count=20, n_min=2, n_max=4, s_max=3, max_exp=2, d_max=3),
        "modification": dict(count=100, n_min=2, n_max=4, max_alpha=3, max_gens=4),
    }[suite]
    base.update(overrides)
    return CorpusSpec(suite=suite, **base)


@dataclass
class Instance:
    id: str
    kind: str
    data: dict

    @property
    def ideal(self) -> MonomialIdeal:
        return ideal_from_dict(self.data["ideal"])


@dataclass
class CheckResult:
    instance: str
    claim: str
    status: str  # pass | violation | indeterminate
    observed: dict
    expected: str
    payload: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "instance": self.instance,
            "claim": self.claim,
            "status": self.status,
            "observed": self.observed,
            "expected": self.expected,
        }
        if self.payload is not None:
            out["payload"] = self.payload
        return out


@dataclass
class SuiteReport:
    spec: CorpusSpec
    results: list = field(default_factory=list)

    @property
    def tallies(self) -> dict:
        out: dict = {}
        for r in self.results:
            out.setdefault(r.claim, Counter())[r.status] += 1
        return {c: {s: t[s] for s in ("pass", "violation", "indeterminate")}
                for c, t in sorted(out.items())}

    @property
    def status(self) -> str:
        statuses = {r.status for r in self.results}
        if "violation" in statuses:
            return "violation"
        if "indeterminate" in statuses:
            return "indeterminate"
        return "pass"

    @property
    def violations(self) -> list:
        return [r for r in self.results if r.status == "violation"]

    def to_dict(self, full: bool = False) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.spec.suite,
            "spec": self.spec.to_dict(),
            "status": self.status,
            "instances": len({r.instance for r in self.results}),
            "tallies": self.tallies,
            "violations": [r.to_dict() for r in self.violations],
            "indeterminate": [r.to_dict() for r in self.results if r.status == "indeterminate"],
            **({"results": [r.to_dict() for r in self.results]} if full else {}),
        }


# ---------- generators ----------

def _rng(spec: CorpusSpec, salt: str) -> random.Random:
    return random.Random(f"{spec.seed}:{spec.suite}:{salt}")


def _mono(n, entries) -> tuple:
    out = [0] * n
    for i, e in entries:
        out[i] += e
    return tuple(out)


def lex_subcase_pairs() -> list:
    """Constructed (n, u, v) triples for each branch of the lexsegment case analysis."""
    return [
        (6, _mono(6, [(0, 1), (3, 3)]), _mono(6, [(1, 4)])),           # v = x2^d, l = 4
        (5, _mono(5, [(0, 1), (3, 1), (4, 1)]), _mono(5, [(1, 3)])),   # v = x2^d, l = 4
        (6, _mono(6, [(0, 1), (4, 1)]), _mono(6, [(1, 2)])),           # v = x2^d, l = 5
        (5, _mono(5, [(0, 1), (4, 1)]), _mono(5, [(1, 1), (2, 1)])),   # v = x2 x3, l = 5
        (7, _mono(7, [(0, 1), (5, 2)]), _mono(7, [(1, 2), (2, 1)])),   # v = x2^2 x3, l = 6
        (6, _mono(6, [(0, 1), (5, 2)]), _mono(6, [(1, 2), (3, 1)])),   # v = x2^2 x4, l = 6
        (3, _mono(3, [(0, 2)]), _mono(3, [(1, 1), (2, 1)])),           # x_n u / x_1 >= v
        (3, _mono(3, [(0, 3)]), _mono(3, [(0, 1), (1, 2)])),           # b_1 > 0
        (4, _mono(4, [(1, 1), (2, 1)]), _mono(4, [(2, 1), (3, 1)])),   # leading zeros
        (3, _mono(3, [(0, 1), (1, 1)]), _mono(3, [(1, 2)])),           # remaining case
    ]


def gen_lexsegments(spec: CorpusSpec):
    """Yield ``(n, u, v)`` triples with u >= v, exhaustively or sampled."""
    seen = set()
    for n in range(max(spec.n_min, 2), spec.n_max + 1):
        for d in range(max(spec.d_min, 2), spec.d_max + 1):
            mons = list(monomials_of_degree(n, d))
            pairs = [(mons[a], mons[b]) for a in range(len(mons)) for b in range(a, len(mons))]
            if not spec.exhaustive:
                rng = _rng(spec, f"lex:{n}:{d}")
                pairs = sorted(rng.sample(pairs, min(spec.count, len(pairs))),
                               key=lambda p: (tuple(-e for e in p[0]), tuple(-e for e in p[1])))
            for u, v in pairs:
                seen.add((n, u, v))
                yield n, u, v
    if spec.include_subcases:
        for t in lex_subcase_pairs():
            if t not in seen:
                yield t


def _random_monomial(rng, n, max_exp, support=None) -> tuple:
    support = range(n) if support is None else support
    while True:
        m = [0] * n
        for i in support:
            m[i] = rng.randint(0, max_exp)
        if any(m):
            return tuple(m)


def _distinct(rng, spec: CorpusSpec, max_exp: int):
    # draw until `count` distinct ideals, giving up on repeats after many tries
    seen = set()
    tries = 0
    while len(seen) < spec.count and tries < 100 * spec.count:
        tries += 1
        n = rng.randint(spec.n_min, spec.n_max)
        k = rng.randint(1, spec.max_gens)
        I = MonomialIdeal(n, [_random_monomial(rng, n, max_exp) for _ in range(k)])
        if I not in seen:
            seen.add(I)
            yield I


def gen_random_ideals(spec: CorpusSpec, salt: str = "random"):
    return _distinct(_rng(spec, salt), spec, spec.max_exp)


def gen_squarefree_ideals(spec: CorpusSpec, salt: str = "squarefree"):
    return _distinct(_rng(spec, salt), spec, 1)


def _primary_component(rng, n, supp, max_exp) -> MonomialIdeal:
    gens = [variable(n, i, rng.randint(1, max_exp)) for i in supp]
    if len(supp) > 1 and max_exp > 1 and rng.random() < 0.5:
        # an extra mixed generator keeps the component primary but not irreducible
        gens.append(_random_monomial(rng, n, max_exp - 1, supp))
    return MonomialIdeal(n, gens)


def star_primes(rng, s: int, n: int) -> list:
    """``s`` supports covering all ``n`` variables, each with a private variable."""
    if n < s:
        raise ValueError(f"star family needs n >= s, got n={n}, s={s}")
    order = list(range(n))
    rng.shuffle(order)
    supports = [{order[i]} for i in range(s)]
    for j in order[s:]:
        owners = [i for i in range(s) if rng.random() < 0.5] or [rng.randrange(s)]
        for i in owners:
            supports[i].add(j)
    return [tuple(sorted(x)) for x in supports]


def gen_star_family(spec: CorpusSpec, salt: str = "star"):
    """Yield ``(I, primes)`` where the primes satisfy the private-variable condition."""
    rng = _rng(spec, salt)
    made = 0
    while made < spec.count:
        s = rng.randint(1, spec.s_max)
        n = rng.randint(max(s, spec.n_min), max(s, spec.n_max))
        primes = star_primes(rng, s, n)
        I = intersect_all([_primary_component(rng, n, P, spec.max_exp) for P in primes])
        if len(I.gens) > spec.gen_cap:
            continue
        made += 1
        yield I, primes


def gen_bigsize_one(spec: CorpusSpec, salt: str = "bigsize1"):
    """Yield ideals of bigsize one: pairwise the primes cover every variable, singly none does."""
    rng = _rng(spec, salt)
    made = 0
    while made < spec.count:
        n = rng.randint(max(3, spec.n_min), max(3, spec.n_max))
        s = rng.randint(2, min(n, 4))
        # disjoint nonempty sets of missing variables
        order = list(range(n))
        rng.shuffle(order)
        cuts = sorted(rng.sample(range(1, n), s - 1)) if s > 1 else []
        blocks = [order[a:b] for a, b in zip([0] + cuts, cuts + [n])]
        missing = [set(rng.sample(b, rng.randint(1, len(b)))) for b in blocks]
        primes = [tuple(j for j in range(n) if j not in m) for m in missing]
        if any(not P for P in primes):
            continue
        I = intersect_all([_primary_component(rng, n, P, spec.max_exp) for P in primes])
        if len(I.gens) > spec.gen_cap:
            continue
        rep = size_bigsize(associated_primes(I), n)
        if rep.bigsize != 1:
            continue
        made += 1
        yield I


def gen_exponent_bump_pairs(spec: CorpusSpec, salt: str = "bump"):
    """Pairs (I, I') differing only in the x1-power a -> a+1 on the first r generators."""
    rng = _rng(spec, salt)
    for _ in range(spec.count):
        n = rng.randint(max(2, spec.n_min), spec.n_max)
        m = rng.randint(2, max(2, spec.max_gens))
        r = rng.randint(1, m - 1)
        a = rng.randint(1, spec.max_alpha)
        vs = []
        for i in range(m):
            if i < r:
                v = [0] + [rng.randint(0, spec.max_exp) for _ in range(n - 1)]
            else:
                v = list(_random_monomial(rng, n, spec.max_exp, range(1, n)))
            vs.append(v)
        I = MonomialIdeal(n, [tuple([a] + v[1:]) if i < r else tuple(v) for i, v in enumerate(vs)])
        J = MonomialIdeal(n, [tuple([a + 1] + v[1:]) if i < r else tuple(v) for i, v in enumerate(vs)])
        yield I, J, a, r


# ---------- lexsegment case analysis ----------

def lex_case(u: tuple, v: tuple) -> tuple:
    """``(case, depth(I), size(I))`` predicted by the case analysis for L(u, v)."""
    n, d = len(u), sum(u)
    if u == v:
        return "principal", n, n - 1
    if d == 1:
        h = v.index(1) - u.index(1) + 1
        return "linear", n - h + 1, n - h
    if u[0] == 0:
        case, dp, sz = lex_case(u[1:], v[1:])
        return case, dp + 1, sz + 1
    if v[0] > 0:
        b = v[0]
        case, dp, sz = lex_case((u[0] - b,) + u[1:], (0,) + v[1:])
        return case, dp, sz
    w = (u[0] - 1,) + u[1:-1] + (u[-1] + 1,) if n > 1 else u
    if compare_lex(w, v) >= 0:
        return "xn_u_over_x1_ge_v", 1, 0
    l = next(i for i in range(1, n) if u[i]) + 1
    if l >= 4 and v == (0, d) + (0,) * (n - 2):
        return "v_eq_x2_pow_d", l - 1, l - 2
    for j in range(3, n - 1):
        target = [0] * n
        target[1] = d - 1
        target[j - 1] += 1
        if v == tuple(target) and l >= j + 2:
            return "v_eq_x2_pow_d1_xj", l - j + 1, l - j
    return "remaining", 2, 1


# ---------- checks ----------

def _status(ok: bool) -> str:
    return "pass" if ok else "violation"


class _Ctx:
    """Per-instance cache of computed invariants."""

    def __init__(self, spec: CorpusSpec):
        self.spec = spec
        self.cache: dict = {}

    def size(self, I):
        key = ("size", I)
        if key not in self.cache:
            self.cache[key] = size_bigsize(associated_primes(I), I.n)
        return self.cache[key]

    def depth_q(self, I):
        key = ("depth", I)
        if key not in self.cache:
            self.cache[key] = depth_quotient(I, self.spec.characteristic, self.spec.gen_cap)
        return self.cache[key]

    def sdepth(self, I, mode):
        """Exact sdepth or a string saying why there is none."""
        key = ("sdepth", I, mode)
        if key not in self.cache:
            try:
                res = sdepth(I, mode, budget=self.spec.budget, box_cap=self.spec.box_cap)
                self.cache[key] = res.value if res.exact else f"budget exceeded (sdepth >= {res.lower})"
            except BoxTooLarge as exc:
                self.cache[key] = str(exc)
        return self.cache[key]


def _sdepth_claim(inst, claim, value, bound, expected, observed) -> CheckResult:
    if isinstance(value, str):
        return CheckResult(inst.id, claim, "indeterminate", {**observed, "reason": value}, expected)
    return CheckResult(inst.id, claim, _status(value >= bound), observed, expected)


def _check_lex(inst: Instance, ctx: _Ctx) -> list:
    I = inst.ideal
    u, v = tuple(inst.data["u"]), tuple(inst.data["v"])
    rep = ctx.size(I)
    dq = ctx.depth_q(I)
    obs = {"size": rep.size, "bigsize": rep.bigsize, "depth_ideal": dq + 1}
    case, e_depth, e_size = lex_case(u, v)
    out = [
        CheckResult(inst.id, "minimal_depth", _status(dq + 1 == rep.size + 1), obs,
                    "depth_ideal == size + 1"),
        CheckResult(inst.id, f"case_values:{case}",
                    _status((dq + 1, rep.size) == (e_depth, e_size)), obs,
                    f"depth_ideal == {e_depth} and size == {e_size}"),
    ]
    if v[0] > 0 and u != v:
        J = colon(I, variable(I.n, 0, v[0]))
        rj = ctx.size(J)
        obs2 = {"size": rep.size, "size_reduced": rj.size,
                "depth_ideal": dq + 1, "depth_ideal_reduced": ctx.depth_q(J) + 1}
        out.append(CheckResult(inst.id, "x1_power_reduction",
                               _status(rj.size == rep.size and ctx.depth_q(J) == dq), obs2,
                               "size and depth unchanged by I -> I : x1^b1"))
    return out


def _check_star(inst: Instance, ctx: _Ctx) -> list:
    I = inst.ideal
    primes = sorted(MonomialPrime(P) for P in inst.data["primes"])
    s = len(primes)
    ass = sorted(associated_primes(I))
    rep = ctx.size(I)
    dq = ctx.depth_q(I)
    obs = {"s": s, "size": rep.size, "depth_quotient": dq, "depth_ideal": dq + 1}
    out = [
        CheckResult(inst.id, "ass_recovered", _status(ass == primes and is_star_condition(ass)),
                    {"ass": [list(P.support) for P in ass]}, "Ass(S/I) equals the constructed primes"),
        CheckResult(inst.id, "depth_quotient", _status(dq == s - 1 + (I.n - rep.b)), obs,
                    "depth_quotient == s - 1 (all variables covered)"),
        CheckResult(inst.id, "minimal_depth", _status(dq + 1 == rep.size + 1), obs,
                    "depth_ideal == size + 1"),
    ]
    sq = ctx.sdepth(I, "quotient")
    out.append(_sdepth_claim(inst, "sdepth_quotient_ge_depth", sq, dq, "sdepth_quotient >= depth_quotient",
                             {**obs, "sdepth_quotient": sq}))
    return out


def _check_bigsize1(inst: Instance, ctx: _Ctx) -> list:
    I = inst.ideal
    rep = ctx.size(I)
    dq = ctx.depth_q(I)
    obs = {"size": rep.size, "bigsize": rep.bigsize, "depth_quotient": dq, "depth_ideal": dq + 1}
    out = [
        CheckResult(inst.id, "bigsize_one", _status(rep.bigsize == 1), obs, "bigsize == 1"),
        CheckResult(inst.id, "minimal_depth", _status(dq + 1 == rep.size + 1), obs,
                    "depth_ideal == size + 1"),
    ]
    if rep.size == 1:
        out.append(CheckResult(inst.id, "depth_ideal_two", _status(dq + 1 == 2), obs, "depth_ideal == 2"))
    sq = ctx.sdepth(I, "quotient")
    out.append(_sdepth_claim(inst, "sdepth_quotient_ge_depth", sq, dq, "sdepth_quotient >= depth_quotient",
                             {**obs, "sdepth_quotient": sq}))
    return out


def _check_bounds(inst: Instance, ctx: _Ctx) -> list:
    I = inst.ideal
    rep = ctx.size(I)
    dq = ctx.depth_q(I)
    obs = {"size": rep.size, "bigsize": rep.bigsize, "depth_ideal": dq + 1}
    out = [
        CheckResult(inst.id, "bigsize_ge_size", _status(rep.bigsize >= rep.size), obs, "bigsize >= size"),
        CheckResult(inst.id, "depth_ge_size_plus_1", _status(dq + 1 >= rep.size + 1), obs,
                    "depth_ideal >= size + 1"),
    ]
    si = ctx.sdepth(I, "ideal")
    out.append(_sdepth_claim(inst, "sdepth_ge_size_plus_1", si, rep.size + 1, "sdepth_ideal >= size + 1",
                             {**obs, "sdepth_ideal": si}))
    return out


def _check_stanley(inst: Instance, ctx: _Ctx) -> list:
    I = inst.ideal
    cls = inst.data["class"]
    dq = ctx.depth_q(I)
    si = ctx.sdepth(I, "ideal")
    sq = ctx.sdepth(I, "quotient")
    obs = {"class": cls, "depth_ideal": dq + 1, "depth_quotient": dq,
           "sdepth_ideal": si, "sdepth_quotient": sq}
    return [
        _sdepth_claim(inst, f"stanley_ideal:{cls}", si, dq + 1, "sdepth_ideal >= depth_ideal", obs),
        _sdepth_claim(inst, f"stanley_quotient:{cls}", sq, dq, "sdepth_quotient >= depth_quotient", obs),
    ]


def _check_modification(inst: Instance, ctx: _Ctx) -> list:
    out = []
    if inst.kind == "bump":
        I, J = ideal_from_dict(inst.data["ideal"]), ideal_from_dict(inst.data["bumped"])
        a, b = ctx.sdepth(I, "ideal"), ctx.sdepth(J, "ideal")
        obs = {"sdepth_ideal": a, "sdepth_bumped": b}
        if isinstance(a, str) or isinstance(b, str):
            return [CheckResult(inst.id, "exponent_bump", "indeterminate", obs, "sdepth(I) == sdepth(I')")]
        return [CheckResult(inst.id, "exponent_bump", _status(a == b), obs, "sdepth(I) == sdepth(I')")]
    if inst.kind == "x1_multiple":
        I, J = ideal_from_dict(inst.data["ideal"]), ideal_from_dict(inst.data["inner"])
        a, b = ctx.size(I).size, ctx.size(J).size
        return [CheckResult(inst.id, "x1_multiple_size", _status(a == b),
                            {"size": a, "size_inner": b}, "size(x1^b I') == size(I')")]
    I = inst.ideal
    alpha = tuple(inst.data["alpha"])
    if inst.kind == "worked_example":
        image = modify_generators(WORKED_EXAMPLE_GENS, WORKED_EXAMPLE_ALPHA)
        out.append(CheckResult(inst.id, "example_generators",
                               _status(image == WORKED_EXAMPLE_IMAGE),
                               {"image": [list(g) for g in image]}, "the printed generators, in order"))
    J = modify_trivial(I, alpha)
    a, b = ctx.sdepth(I, "ideal"), ctx.sdepth(J, "ideal")
    dI, dJ = ctx.depth_q(I) + 1, ctx.depth_q(J) + 1
    obs = {"sdepth_ideal": a, "sdepth_modified": b, "depth_ideal": dI, "depth_modified": dJ}
    if isinstance(a, str) or isinstance(b, str):
        out.append(CheckResult(inst.id, "sdepth_invariant", "indeterminate", obs, "sdepth(I^a) == sdepth(I)"))
        out.append(CheckResult(inst.id, "stanley_transfer", "indeterminate", obs,
                               "sdepth(I) >= depth(I) implies sdepth(I^a) >= depth(I^a)"))
        return out
    out.append(CheckResult(inst.id, "sdepth_invariant", _status(a == b), obs, "sdepth(I^a) == sdepth(I)"))
    transfer = dJ <= dI and (a < dI or b >= dJ)
    out.append(CheckResult(inst.id, "stanley_transfer", _status(transfer), obs,
                           "depth(I^a) <= depth(I), and sdepth(I) >= depth(I) implies sdepth(I^a) >= depth(I^a)"))
    return out


_CHECKS = {
    "lex": _check_lex,
    "star": _check_star,
    "bigsize1": _check_bigsize1,
    "bounds": _check_bounds,
    "stanley": _check_stanley,
    "modification": _check_modification,
}


# ---------- instance streams ----------

def _instances(spec: CorpusSpec) -> list:
    name = spec.suite
    out = []

    def add(kind, data):
        out.append(Instance(f"{name}-{len(out):05d}", kind, data))

    if name == "lex":
        for n, u, v in gen_lexsegments(spec):
            add("lexsegment", {"ideal": ideal_to_dict(MonomialIdeal(n, lexsegment_set(u, v))),
                               "u": list(u), "v": list(v)})
    elif name == "star":
        for I, primes in gen_star_family(spec):
            add("star", {"ideal": ideal_to_dict(I), "primes": [list(P) for P in primes]})
    elif name == "bigsize1":
        for I in gen_bigsize_one(spec):
            add("bigsize1", {"ideal": ideal_to_dict(I)})
    elif name == "bounds":
        for I in gen_random_ideals(spec):
            add("random", {"ideal": ideal_to_dict(I)})
    elif name == "stanley":
        for I, _ in gen_star_family(spec, "stanley-star"):
            add("stanley", {"ideal": ideal_to_dict(I), "class": "star"})
        for I in gen_bigsize_one(spec, "stanley-bigsize1"):
            add("stanley", {"ideal": ideal_to_dict(I), "class": "bigsize1"})
        lex_spec = CorpusSpec("lex", seed=spec.seed, count=spec.count, n_min=spec.n_min,
                              n_max=spec.n_max, d_min=spec.d_min, d_max=spec.d_max,
                              exhaustive=False, include_subcases=False)
        for n, u, v in gen_lexsegments(lex_spec):
            add("stanley", {"ideal": ideal_to_dict(MonomialIdeal(n, lexsegment_set(u, v))),
                            "class": "lexsegment"})
    elif name == "modification":
        if spec.worked_example:
            I = MonomialIdeal(7, WORKED_EXAMPLE_GENS)
            add("worked_example", {"ideal": ideal_to_dict(I), "alpha": list(WORKED_EXAMPLE_ALPHA)})
            return out
        rng = _rng(spec, "alpha")
        for I in gen_squarefree_ideals(spec):
            alpha = [rng.randint(1, spec.max_alpha) for _ in range(I.n)]
            add("trivial", {"ideal": ideal_to_dict(I), "alpha": alpha})
        for I, J, a, r in gen_exponent_bump_pairs(spec):
            add("bump", {"ideal": ideal_to_dict(I), "bumped": ideal_to_dict(J), "a": a, "r": r})
        rng = _rng(spec, "x1")
        for J in gen_random_ideals(spec, "x1-inner"):
            b = rng.randint(1, spec.max_exp)
            I = MonomialIdeal(J.n, [(g[0] + b,) + g[1:] for g in J.gens])
            add("x1_multiple", {"ideal": ideal_to_dict(I), "inner": ideal_to_dict(J), "b": b})
    return out


def check_instance(spec: CorpusSpec, inst: Instance) -> list:
    ctx = _Ctx(spec)
    try:
        return _CHECKS[spec.suite](inst, ctx)
    except TooManyGenerators as exc:
        return [CheckResult(inst.id, "computable", "indeterminate", {"reason": str(exc)}, "within caps")]


def _attach_payloads(spec, inst, results):
    for r in results:
        if r.status != "pass":
            r.payload = {"suite": spec.suite, "spec": spec.to_dict(),
                         "instance": {"id": inst.id, "kind": inst.kind, "data": inst.data}}
    return results


def _run_one(args):
    spec, inst = args
    return _attach_payloads(spec, inst, check_instance(spec, inst))


def run_suite(name: str, spec: CorpusSpec | None = None, workers: int = 1) -> SuiteReport:
    spec = spec or default_spec(name)
    if spec.suite != name:
        raise ValueError(f"spec is for suite {spec.suite!r}, not {name!r}")
    insts = _instances(spec)
    report = SuiteReport(spec)
    jobs = [(spec, inst) for inst in insts]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_run_one, jobs, chunksize=8))
    else:
        chunks = [_run_one(job) for job in jobs]
    for chunk in chunks:
        report.results.extend(chunk)
    return report


def replay(payload: dict) -> list:
    """Re-run the checks recorded in a violation payload."""
    spec = CorpusSpec(**payload["spec"])
    raw = payload["instance"]
    return check_instance(spec, Instance(raw["id"], raw["kind"], raw["data"]))
