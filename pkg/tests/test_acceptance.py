"""End-to-end acceptance: one test per advertised guarantee.

The terminal summary prints one PASS/FAIL/SKIP line per criterion (see
conftest.pytest_terminal_summary).  The rank-6 exhaustive equivalence
run only executes when THETAVEX_ACCEPT_N6=1 is set; at present it fails
honestly, listing the four rank-6 windows on which the corner-geometry
route disagrees with the pattern and construction routes.
"""

import os

import pytest

from conftest import assert_structural_facts
from thetavex import theta
from thetavex.classify import enumerate_theta_vexillary, verify_equivalence
from thetavex.diagram import corners, full_corners, reflect
from thetavex.sigperm import SignedPermutation
from thetavex.theta import StepPlacement, ThetaTriple

BIG_T = ThetaTriple((3, 4, 5, 6, 9), (8, 6, 5, 4, 2), (7, 4, 2, -3, -6), 10)
BIG = SignedPermutation([10, 1, 5, 3, -2, -4, 6, -9, -8, -7])

THETA_VEXILLARY_COUNTS = {1: 2, 2: 8, 3: 44, 4: 286, 5: 2061, 6: 15964}


def test_criterion_1_golden_construction():
    w, trace = theta.construct_with_trace(BIG_T, 10)
    assert w == BIG
    assert trace == (
        StepPlacement(1, ((-9, 8), (-8, 9), (-7, 10))),
        StepPlacement(2, ((-4, 6),)),
        StepPlacement(3, ((-2, 5),)),
        StepPlacement(4, ((3, 4),)),
        StepPlacement(5, ((1, 2), (5, 3), (6, 7))),
        StepPlacement(6, ((10, 1),)),
    )


def test_criterion_2_golden_dual():
    dual = theta.construct_inverse(BIG_T)
    assert dual.window == (2, -5, 4, -6, 3, 7, -10, -9, -8, 1)
    assert dual == theta.construct(BIG_T).inverse()


def test_criterion_3_golden_corner_taxonomy():
    cs = corners(BIG)
    assert [c.triple for c in cs.ne_path] == [
        (3, 8, 7),
        (4, 6, 4),
        (5, 5, 2),
        (6, 4, -3),
        (7, 2, -3),
        (9, 2, -6),
    ]
    assert [c.triple for c in cs.unessential] == [(6, 2, -1)]
    assert cs.other == ()
    assert [c.triple for c in theta.optional_corners(BIG, BIG_T, cs)] == [(7, 2, -3)]


def test_criterion_4_reflection_fidelity():
    fc = full_corners(SignedPermutation([-2, 3, 1]).embed_odd())
    assert {c.triple for c in fc} == {(1, 3, -1), (1, 1, 2), (3, 0, -1), (2, -2, 2)}
    image = {c.triple: reflect(c).triple for c in fc}
    assert image[(1, 3, -1)] == (2, -2, 2) and image[(2, -2, 2)] == (1, 3, -1)
    assert image[(1, 1, 2)] == (3, 0, -1) and image[(3, 0, -1)] == (1, 1, 2)


def test_criterion_5_exhaustive_equivalence_through_rank_five():
    for n in range(1, 6):
        summary = verify_equivalence(n, jobs=2 if n >= 4 else 1)
        assert summary.mismatches == (), summary.describe()
        assert summary.theta_vexillary == THETA_VEXILLARY_COUNTS[n]


@pytest.mark.skipif(
    os.environ.get("THETAVEX_ACCEPT_N6") != "1",
    reason="rank-6 sweep runs only with THETAVEX_ACCEPT_N6=1",
)
def test_criterion_5b_exhaustive_equivalence_rank_six():
    summary = verify_equivalence(6, jobs=4, allow_large=True)
    assert summary.mismatches == (), (
        "three-way agreement fails at rank 6 on: "
        + "; ".join(" ".join(map(str, win)) for win in summary.mismatches)
    )


def test_criterion_6_round_trip_uniqueness():
    for n in range(1, 7):
        seen = set()
        for t in theta.generate_triples(n):
            w = theta.construct(t)
            back = theta.recover(w)
            assert back == t
            assert theta.construct(back) == w
            assert w.window not in seen
            seen.add(w.window)
        assert len(seen) == THETA_VEXILLARY_COUNTS[n]


def test_criterion_7_structural_property_suite():
    for n in range(1, 6):
        for t in theta.generate_triples(n):
            assert_structural_facts(t)


def test_criterion_8_pinned_counts_from_pattern_oracle():
    for n in (3, 4, 5):
        count = sum(1 for _ in enumerate_theta_vexillary(n))
        assert count == THETA_VEXILLARY_COUNTS[n]
