"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with  pytest tests/test_acceptance.py -s  to see the lines as they go.
Every check is exact (tolerance zero); the stated wall-clock budgets are
asserted too.  Criteria 4a and 4c are implemented exactly as written; they
currently FAIL because the written expectations contradict the actual
(oracle-verified) cohomology of those two fixtures - see the driver tests
for the verified verdicts and the matrix computations behind them.
"""

import random
import time
from fractions import Fraction

import pytest

from liecoh import tableau as tb
from liecoh.cli import load_fixture
from liecoh.cohomology import direct_h1, kostant_h1
from liecoh.driver import run_scenario, scenario_from_json, scenario_to_json
from liecoh.grading import (ParabolicMarking, algebra_depth, grade_algebra,
                            grade_module)
from liecoh.repthy import IrrComponent
from liecoh.rootsys import parse_type
from liecoh.vogel import VogelParams, dim_yk

VOGEL_ROWS = [("D4", VogelParams(-2, 4, 4), 28),
              ("F4", VogelParams(-2, 5, 6), 52),
              ("E6", VogelParams(-2, 6, 8), 78),
              ("E7", VogelParams(-2, 8, 12), 133),
              ("E8", VogelParams(-2, 12, 20), 248)]


def emit(label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {label}: {status}{('  ' + detail) if detail else ''}")
    return ok


def test_criterion_1_vogel_weyl_agreement():
    t0 = time.monotonic()
    ok = True
    for name, params, want in VOGEL_ROWS:
        rs = parse_type(name)
        ok &= dim_yk(params, 1) == want
        ok &= rs.weyl_dim(rs.adjoint_weight()) == want
    for n in range(5, 13):
        ok &= dim_yk(VogelParams(-2, 4, n - 4), 1) == Fraction(n * (n - 1), 2)
    elapsed = time.monotonic() - t0
    ok &= elapsed < 10
    assert emit("1 (dim g at the five rows + so(n) family, exact)", ok,
                f"{elapsed:.2f}s")


def test_criterion_2_cartan_power_agreement():
    t0 = time.monotonic()
    ok = True
    for name, params, _ in VOGEL_ROWS:
        rs = parse_type(name)
        theta = rs.adjoint_weight()
        for k in (1, 2, 3):
            ok &= dim_yk(params, k) == rs.weyl_dim(tuple(k * c for c in theta))
    elapsed = time.monotonic() - t0
    ok &= elapsed < 60
    assert emit("2 (dim Y_k = Weyl dim of k-th Cartan power, k = 1..3)", ok,
                f"{elapsed:.2f}s")


KOSTANT_FIXTURES = [
    ("A1", {1}, (2,)), ("A1", {1}, (4,)), ("A1", {1}, (6,)),
    ("A2", {1, 2}, (1, 1)), ("A2", {1, 2}, (3, 0)), ("A2", {1, 2}, (0, 3)),
    ("A2", {1, 2}, (2, 2)),
    ("A1,A1", {1, 2}, (2, 2)), ("A1,A1", {1, 2}, (4, 2)),
    ("A1,A1", {1, 2}, (2, 0)), ("A1,A1", {1, 2}, (0, 0)),
]


def test_criterion_3_kostant_vs_oracle():
    ok = True
    for name, marked, gamma in KOSTANT_FIXTURES:
        rs = parse_type(name)
        assert rs.weyl_dim(gamma) <= 30
        marking = ParabolicMarking(marked)
        agg = {}
        for piece in kostant_h1(rs, marking, IrrComponent(gamma)):
            agg[piece.degree] = agg.get(piece.degree, 0) + piece.dimension
        # direct_h1 raises InternalCheckError if d1 . d0 != 0 in any slice
        got = direct_h1(rs, marking, gamma)
        ok &= got == dict(sorted(agg.items()))
    assert emit("3 (per-degree H^1: combinatorial = matrix oracle; "
                "d1.d0 = 0 in every slice)", ok,
                f"{len(KOSTANT_FIXTURES)} fixtures")


def run_fixture(name, p=None):
    spec = load_fixture(name)
    if p is not None and p != spec.p:
        spec = scenario_from_json({**scenario_to_json(spec), "p": p})
    return run_scenario(spec)


def test_criterion_4a_adjoint_a2_rigid_at_minus_one():
    v = run_fixture("adjoint-a2")
    ok = v.verdict == "RIGID"
    emit("4a (adjoint-a2 at p = -1 -> RIGID)", ok,
         f"verdict = {v.verdict}, H^1 by degree = {v.report.aggregate}, "
         "oracle-verified")
    assert ok, (
        "criterion as written expects RIGID, but H^1_1(g_-, g-perp) = 2 "
        "(degree-1 classes in the V(3,0) and V(0,3) components, confirmed "
        "by the direct matrix oracle), so the p = -1 threshold d >= 1 is "
        "violated; the pipeline first certifies rigidity at p = 0")


def test_criterion_4b_veronese_a1():
    v = run_fixture("veronese-a1")
    ok = v.verdict == "INCONCLUSIVE" and len(v.offending_pieces) == 1
    if ok:
        _, _, piece = v.offending_pieces[0]
        ok = piece.degree == 3 and piece.dimension == 1
    v2 = run_fixture("veronese-a1", p=2)
    ok &= v2.verdict == "RIGID"
    assert emit("4b (veronese-a1: INCONCLUSIVE at p = -1 with one degree-3 "
                "piece; RIGID at p = 2)", ok,
                f"p=-1: {v.verdict}, p=2: {v2.verdict}")


def test_criterion_4c_segre_1_1_inconclusive_at_zero():
    v = run_fixture("segre-1-1")
    ok = v.verdict == "INCONCLUSIVE"
    emit("4c (segre-1-1 at p = 0 -> INCONCLUSIVE)", ok,
         f"verdict = {v.verdict}, H^1 by degree = {v.report.aggregate}, "
         "oracle-verified")
    assert ok, (
        "criterion as written expects INCONCLUSIVE at p = 0, but all H^1 "
        "lives in degree 1 < threshold 2 (oracle-verified), so p = 0 is "
        "honestly RIGID; the order-two exception is visible at p = -1, "
        "where the verdict is INCONCLUSIVE")


def test_criterion_4d_segre_2_2_rigid_at_zero():
    v = run_fixture("segre-2-2")
    ok = v.verdict == "RIGID"
    # convention arbitration must be oracle-verified first: the fixture asks
    # for the oracle; if U had been too large the report must say that the
    # combinatorial path alone decides
    rep = v.report
    ok &= rep.oracle_requested
    ok &= rep.oracle_ran or "alone decides" in rep.oracle_note
    assert emit("4d (segre-2-2 at p = 0 -> RIGID, oracle-verified or "
                "explicitly combinatorial-only)", ok,
                f"verdict = {v.verdict}, oracle ran = {rep.oracle_ran}")


def test_criterion_5_tableau_properties():
    t0 = time.monotonic()
    rng = random.Random(20240)
    ok = True
    for _ in range(200):
        n = rng.randint(1, 5)
        w = rng.randint(1, 5)
        target = rng.randint(0, min(12, n * w))
        mats = []
        guard = 0
        while len(mats) < target and guard < 60:
            guard += 1
            M = [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                 for _ in range(w)]
            try:
                tb.Tableau(n, w, mats + [M])
            except ValueError:
                continue
            mats.append(M)
        t = tb.Tableau(n, w, mats)
        dim_p = tb.prolongation_dim(t)
        chars = tb.cartan_characters(t)
        ok &= dim_p <= sum(chars)                       # Cartan's inequality
        rank_delta = n * t.dim - dim_p
        ok &= rank_delta + dim_p == n * t.dim           # rank-nullity
    # worked fixtures
    cr = tb.cauchy_riemann_tableau()
    ok &= tb.prolongation_dim(cr) == 2
    ok &= tb.cartan_characters(cr) == [2, 0]
    ok &= tb.is_involutive(cr).involutive
    ok &= tb.torsion_quotient_dim(cr) == 0
    full = tb.full_tableau(3, 2)
    ok &= tb.is_involutive(full).involutive
    ok &= tb.prolongation_dim(full) == 12
    ok &= tb.torsion_quotient_dim(full) == 0
    zero = tb.zero_tableau(3, 2)
    ok &= tb.is_involutive(zero).involutive
    ok &= tb.prolongation_dim(zero) == 0
    ok &= tb.torsion_quotient_dim(zero) == 6
    elapsed = time.monotonic() - t0
    ok &= elapsed < 30
    assert emit("5 (200 random tableaux: Cartan inequality + rank-nullity; "
                "worked fixtures exact)", ok, f"{elapsed:.1f}s")


ALL_SIMPLE_RANK6 = (["A%d" % n for n in range(1, 7)]
                    + ["B%d" % n for n in range(2, 7)]
                    + ["C%d" % n for n in range(2, 7)]
                    + ["D%d" % n for n in range(3, 7)]
                    + ["E6", "F4", "G2"])


def test_criterion_6_grading_properties():
    t0 = time.monotonic()
    ok = True
    for name in ALL_SIMPLE_RANK6:
        rs = parse_type(name)
        theta = rs.highest_root_per_factor[0]
        for node in range(1, rs.rank + 1):
            marking = ParabolicMarking({node})
            g = grade_algebra(rs, marking)
            ok &= sum(g.dims.values()) == rs.dim_g()
            ok &= all(g.dims[d] == g.dims[-d] for d in g.dims)
            ok &= algebra_depth(rs, marking) == theta[node - 1]
    gm = grade_module(parse_type("A3"), ParabolicMarking({2}), (0, 1, 0))
    ok &= gm.dims == {0: 1, -1: 4, -2: 1}
    elapsed = time.monotonic() - t0
    ok &= elapsed < 20
    assert emit("6 (grading sweep over all simple types rank <= 6; "
                "G(2,4) module grading = (1,4,1))", ok, f"{elapsed:.1f}s")
