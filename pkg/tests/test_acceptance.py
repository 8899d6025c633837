"""Acceptance suite: one test per criterion, with its time budget."""
import random
import time
from collections import Counter

from dp1.egraph import CliqueQuery, build_graph, eleven_extends, is_Kn, max_clique, sample_clique
from dp1.exactnum import field_make
from dp1.fixtures import EX_5_3, FIXTURES
from dp1.identities import DEFAULT_PRIME, run_suite
from dp1.picard import (
    K,
    degree_profile,
    exceptional_classes,
    pair_scan,
    pairing,
    partner_indices,
    row_of,
)
from dp1.plane import PlaneCurve
from dp1.search import ten_curve_trials
from dp1.verify import verify_example
from dp1.weighted import verify_weighted_example
from dp1.weyl import find_isometry, orbit, random_element, simple_reflections


class Timer:
    def __init__(self, budget: float):
        self.budget = budget

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.budget, f"took {self.elapsed:.1f}s, budget {self.budget}s"


def test_01_exceptional_classes():
    with Timer(1.0):
        cs = exceptional_classes()
        assert len(cs) == 240 and len(set(cs)) == 240
        rows = Counter(row_of(c) for c in cs)
        assert [rows[i] for i in range(7)] == [8, 28, 56, 56, 56, 28, 8]
        assert all(pairing(c, c) == -1 and pairing(c, K) == -1 for c in cs)


def test_02_degree_profile_and_pair_scans():
    with Timer(10.0):
        assert all(degree_profile(c) == {3: 1, 0: 56, 1: 126, 2: 56} for c in exceptional_classes())
        assert set(pair_scan(2, (2, 2))) == {1}
        assert set(pair_scan(1, (1, 1))) == {60}
        assert set(pair_scan(1, (1, 0))) == {32}


def test_03_max_cliques():
    g = build_graph()
    with Timer(300.0):
        r = max_clique(g, CliqueQuery({1, 2, 3}))
        assert r.size == 16 and g.is_clique(r.witness, {1, 2, 3}) and is_Kn(g, r.witness) == 8
        r = max_clique(g, CliqueQuery({1, 2}))
        assert r.size == 12 and g.is_clique(r.witness, {1, 2})


def test_04_eleven_cliques_extend():
    g = build_graph()
    with Timer(600.0):
        rep = eleven_extends(g, samples=10_000, seed=0)
    assert rep.samples == 10_000
    assert rep.counterexamples == []
    assert rep.extended == 10_000


def test_05_weyl():
    g = build_graph()
    rng = random.Random(0)
    with Timer(300.0):
        assert all(s.preserves_pairing() for s in simple_reflections())
        assert len(orbit(0)) == 240
        k8 = max_clique(g, CliqueQuery({1, 2, 3})).witness
        p = partner_indices()
        pairs = sorted({tuple(sorted((v, p[v]))) for v in k8})

        def random_k6():
            chosen = rng.sample(pairs, 6)
            return random_element(80, rng).apply_set([x for pr in chosen for x in pr])

        adj = g.masks({1, 2})
        failures = 0
        for _ in range(100):
            a, b = random_k6(), random_k6()
            assert is_Kn(g, a) == 6 and is_Kn(g, b) == 6
            perm = find_isometry(a, b)
            failures += perm is None or not perm.preserves_pairing() or perm.apply_set(a) != sorted(b)
        for _ in range(100):
            a, _ = sample_clique(adj, 12, rng)
            b, _ = sample_clique(adj, 12, rng)
            perm = find_isometry(a, b)
            failures += perm is None or not perm.preserves_pairing() or perm.apply_set(a) != sorted(b)
    assert failures == 0


def _printed_reproduced(fid):
    rep = verify_example(fid, strict=False)
    return rep, [c.name for c in rep.curves if not c.matches]


def test_06_example_char2():
    with Timer(30.0):
        rep, bad = _printed_reproduced("5.1")
    assert rep.general_position and rep.general_position_rank
    cubics = [c for c in rep.curves if c.name.startswith("C")]
    assert len(cubics) == 5 and bad == []
    assert rep.count == 16 and rep.on_ramification is True


def test_07_example_rationals():
    with Timer(30.0):
        rep, bad = _printed_reproduced("5.2")
    assert bad == []
    F = field_make("QQ")
    c78 = PlaneCurve.parse(F, FIXTURES["5.2"].curves[1].equation).canonical().terms()
    assert c78["x^2y"] == "-3/4" and c78["xy^2"] == "-31/12" and c78["xyz"] == "10/3"
    assert rep.count == 10 and rep.on_ramification is True


def test_08_example_seven_primes():
    with Timer(120.0):
        reps = {p: verify_example(f.id, strict=False) for p, f in EX_5_3.items()}
    assert sorted(reps) == [3, 5, 7, 11, 13, 17, 19]
    for p, rep in reps.items():
        assert rep.general_position, p
        assert rep.count == 10 and rep.on_ramification is True, p


def test_09_example_char3():
    with Timer(60.0):
        rep, bad = _printed_reproduced("5.4")
    kinds = Counter(c.cls.split(";")[0] for c in rep.curves)
    assert kinds == {"1": 2, "2": 4, "4": 4, "5": 2}
    assert bad == []
    assert all(c.through_at for c in rep.curves)
    assert rep.count == 12 and rep.on_ramification is False


def test_10_identity_suite():
    with Timer(60.0):
        rep = run_suite("all", samples=200, p=DEFAULT_PRIME, seed=0)
    names = {r.name: r for r in rep.identities}
    for n in (
        "KEY1-DETL",
        "KEY1-DETL'",
        "KEY2-DETN",
        "KEY2-DELTA",
        "KEY2-DELTA-GRAM",
        "KEY2-F2-COMBINATION",
        "KEY2-GAMMA-COMBINATION",
        "KEY2-PHI-SPLIT",
    ):
        r = names[n]
        assert r.ok and r.samples == 200, n
        assert r.error_probability < 1e-5, n
        assert r.error_bound_union < 1e-5, n
    loci = {r.name: r for r in rep.loci}
    for f in ("F1", "F2", "F3"):
        r = loci[f"KEY1-{f}-DIVIDES-DETN"]
        assert r.ok and r.samples == 200
    assert loci["CONTROL"].passes == 0
    assert rep.ratio.ok and rep.ratio.exponents is not None
    assert rep.ok


def test_11_ten_curves_not_concurrent():
    # literal random octuples, then octuples built so L1, L2, C1..C4 share a point
    with Timer(600.0):
        for mode in ("random", "key2"):
            for desc in ("gf:2:x^5+x^2+1", "gf:7:x^2+6x+3", "gf:11:x^2+7x+2"):
                rep = ten_curve_trials(desc, configs=1000, seed=0, mode=mode)
                assert rep.general == 1000, (mode, desc)
                if mode == "key2":
                    assert rep.conditioned == 1000, desc
                assert rep.events == [], (mode, desc)


def test_12_weighted_example():
    with Timer(30.0):
        rep = verify_weighted_example(p=7, beta=1)
    assert 1 <= rep.count <= 10
    assert all(rep.on_surface) and all(rep.through_q) and all(rep.chart_check)
    assert rep.to_json()["status"] == "PARTIAL"
