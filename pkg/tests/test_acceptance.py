"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines as
they happen; they are also repeated in the terminal summary.
"""

import itertools
import json
import random
import subprocess
import sys
import time

import pytest

from gkgraph.analysis import analyze
from gkgraph.cli import main
from gkgraph.constructions import build_complement, build_frobenius, frobenius_field, lookup
from gkgraph.finfield import make_field, sqrt
from gkgraph.groups import is_fixed_point_free
from gkgraph.primegraph import (
    components,
    graph_from_spectrum,
    graphs_equal,
    independence_sets,
    to_dot,
    to_json,
)
from gkgraph.report import verify_paper
from gkgraph.spectrum import (
    Spectrum,
    compute_spectrum,
    divisor_closure,
    divisors,
    is_antichain,
    maximal_elements,
    mu,
)

SEED = 1


class Criterion:
    """Times a criterion and records its verdict line whatever the outcome."""

    def __init__(self, log, number, title, limit):
        self.log, self.number, self.title, self.limit = log, number, title, limit
        self.details = []

    def note(self, text):
        self.details.append(text)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        if exc_type is None and not ok:
            self.note(f"too slow, limit {self.limit}s")
        line = f"criterion {self.number}: {'PASS' if ok else 'FAIL'} {self.title} [{elapsed:.1f}s]"
        if self.details:
            line += " " + "; ".join(self.details)
        self.log[self.number] = line
        print(line)
        if exc_type is None:
            assert ok, line
        return False


@pytest.fixture(scope="module")
def pgl():
    entry = lookup("PGL(2,49)")
    return entry, compute_spectrum(entry.group)


def test_criterion_1_mu_of_pgl249(acceptance_log):
    with Criterion(acceptance_log, 1, "mu(PGL(2,49)) = {7, 48, 50}", 30) as c:
        entry = lookup("PGL(2,49)")
        assert entry.degree == 50
        spectrum = compute_spectrum(entry.group)
        assert spectrum.strategy == "exhaustive"
        assert entry.group.order == 117_600
        assert set(mu(spectrum).maxima) == {7, 48, 50}
        c.note(f"mu = {list(mu(spectrum).maxima)}")


def test_criterion_2_components(acceptance_log, pgl):
    with Criterion(acceptance_log, 2, "components {2,3,5} and {7}, no edge 3-5", 1) as c:
        g = graph_from_spectrum(pgl[1])
        comps = components(g)
        assert {frozenset(x) for x in comps} == {frozenset({2, 3, 5}), frozenset({7})}
        assert not g.adjacent(3, 5)
        c.note(f"components = {comps}")


def test_criterion_3_complement(acceptance_log):
    with Criterion(acceptance_log, 3, "complement over GF(49) is SL(2,5)", 1) as c:
        C, ev = build_complement(make_field(7, 2))
        assert C.order == 120
        assert ev.involutions == 1
        assert ev.center_order == 2
        assert ev.quotient_order == 60 and ev.quotient_simple
        assert ev.spectrum == (1, 2, 3, 4, 5, 6, 10)
        report = verify_paper(seed=SEED, only=["V3"])
        evidence = report.claim("V3").evidence
        assert report.passed
        assert evidence["y_order"] == ev.generator_orders["y"]
        assert evidence["stated_relation_y5_eq_1"] in ("agrees", "disagrees")
        c.note(f"y has order {evidence['y_order']}, y^5 = 1 {evidence['stated_relation_y5_eq_1']}")


def test_criterion_4_fixed_point_free(acceptance_log):
    with Criterion(acceptance_log, 4, "fixed-point-free over GF(7^(2m)), m = 1, 2, 3", 10) as c:
        for m in (1, 2, 3):
            C, _ = build_complement(frobenius_field(m))
            cert = is_fixed_point_free(C)
            assert cert.ok and cert.witness is None
            assert cert.checked == 119
        c.note("0 witnesses")


def test_criterion_5_frobenius_m1(acceptance_log, pgl):
    with Criterion(acceptance_log, 5, "frobenius(1) exhaustive spectrum and graph", 120) as c:
        res = build_frobenius(1)
        assert res.group.order == 288_120
        assert res.exhaustive.strategy == "exhaustive"
        assert res.exhaustive.orders == (1, 2, 3, 4, 5, 6, 7, 10)
        assert res.exhaustive.orders == res.decomposition.orders
        assert graphs_equal(graph_from_spectrum(res.exhaustive), graph_from_spectrum(pgl[1]))
        c.note(f"spectrum = {list(res.exhaustive.orders)}")


def test_criterion_6_equal_graphs(acceptance_log, pgl):
    expected = {
        "S(7)": {"exhaustive"},
        "fixture:U3(5)": {"exhaustive"},
        "fixture:U3(5).2": {"exhaustive", "fixture"},
        "fixture:U4(3).2": {"fixture"},
    }
    with Criterion(acceptance_log, 6, "S7, U3(5), U3(5).2, U4(3).2 share the graph", 300) as c:
        target = graph_from_spectrum(pgl[1])
        for spec, allowed in expected.items():
            a = analyze(spec, seed=SEED)
            assert a.strategy in allowed, (spec, a.strategy)
            assert graphs_equal(a.graph, target), spec
            if a.strategy == "fixture":
                # sampled elements witness every edge and contradict nothing
                assert a.witnesses is not None and not a.contradictions
                assert all(p * q in a.witnesses for p, q in a.graph.edges)
            c.note(f"{spec}: {a.strategy}")


def test_criterion_7_order_15(acceptance_log):
    with Criterion(acceptance_log, 7, "order-15 elements in A8-A10, J2, S6(2), O8+(2)", 180) as c:
        for spec in ("A(8)", "A(9)", "A(10)"):
            a = analyze(spec, seed=SEED)
            assert a.strategy == "exhaustive" and 15 in a.spectrum, spec
        for spec in ("fixture:J2", "fixture:S6(2)", "fixture:O8+(2)"):
            a = analyze(spec, seed=SEED, samples=50_000, force_randomized=True)
            assert a.strategy == "randomized" and 15 in a.spectrum, spec
        c.note("15 found in all six")


def test_criterion_8_unrecognizability_witness(acceptance_log, capsys):
    with Criterion(acceptance_log, 8, "compare S(7) PGL(2,49) exits 0 with different orders", 60) as c:
        code = main(["compare", "S(7)", "PGL(2,49)", "--no-cache"])
        out = capsys.readouterr().out
        assert code == 0
        assert "order 5040" in out and "order 117600" in out
        c.note("exit 0, orders 5040 != 117600")


def _sqrt_complete(k):
    F = make_field(7, k)
    squares = set()
    for v in range(F.q):
        squares.add(F.mul(v, v))
    for v in range(F.q):
        r = sqrt(F.from_index(v))
        if v in squares:
            assert r is not None and F.mul(r.value, r.value) == v
        else:
            assert r is None


def test_criterion_9_properties(acceptance_log):
    with Criterion(acceptance_log, 9, "property suites", 120) as c:
        rng = random.Random(SEED)

        # divisor closure and Lagrange for every exhaustive spectrum at hand
        exhaustive = 0
        for spec in ("S(5)", "S(7)", "A(8)", "PGL(2,7)", "PGL(2,49)", "SL(2,5)", "fixture:L3(4)"):
            G = lookup(spec).group
            s = compute_spectrum(G)
            for n in s:
                assert G.order % n == 0
                assert set(divisors(n)) <= s.as_set()
            assert divisor_closure(mu(s).maxima) == s.orders
            exhaustive += 1

        # mu is an antichain that regenerates its input's closure
        for _ in range(500):
            ns = [rng.randint(1, 500) for _ in range(rng.randint(1, 10))]
            s = divisor_closure(ns)
            top = maximal_elements(s)
            assert is_antichain(top)
            assert divisor_closure(top) == s

        # graph and partition invariants
        primes = [2, 3, 5, 7, 11]
        for _ in range(300):
            vs = sorted(rng.sample(primes, rng.randint(0, 5)))
            es = [e for e in itertools.combinations(vs, 2) if rng.random() < 0.4]
            orders = divisor_closure([1] + vs + [p * q for p, q in es])
            order = 1
            for n in orders:
                order *= n
            g = graph_from_spectrum(Spectrum(orders, "exhaustive", order))
            assert g.vertices == tuple(vs) and set(g.edges) == set(es)
            comps = components(g)
            assert sorted(v for comp in comps for v in comp) == list(g.vertices)
            assert all(any(p in comp and q in comp for comp in comps) for p, q in g.edges)
            for size in range(1, len(vs) + 1):
                for ind in independence_sets(g, size):
                    assert not any(g.adjacent(p, q) for p, q in itertools.combinations(ind, 2))

        # sqrt soundness and completeness over GF(7^k)
        for k in (1, 2, 3, 4):
            _sqrt_complete(k)

        # exports are byte-identical across two separate runs
        runs = []
        for _ in range(2):
            outs = []
            for fmt in ("json", "dot"):
                proc = subprocess.run(
                    [sys.executable, "-m", "gkgraph", "graph", "PGL(2,49)", "--no-cache", "--format", fmt],
                    capture_output=True, check=True,
                )
                outs.append(proc.stdout)
            runs.append(outs)
        assert runs[0] == runs[1]
        g = graph_from_spectrum(compute_spectrum(lookup("PGL(2,49)").group))
        assert runs[0] == [to_json(g).encode() + b"\n", to_dot(g).encode()]
        assert json.loads(runs[0][0]) == {"vertices": [2, 3, 5, 7], "edges": [[2, 3], [2, 5]]}
        c.note(f"{exhaustive} exhaustive spectra, sqrt over GF(7^k) k<=4, exports stable")

