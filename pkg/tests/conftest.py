"""Shared strategies, brute-force oracles, and the acceptance summary."""

import itertools

import hypothesis.strategies as st

from thetavex.sigperm import SignedPermutation

_ACCEPTANCE_OUTCOMES = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE_OUTCOMES[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, after the regular test output."""
    if not _ACCEPTANCE_OUTCOMES:
        return
    word = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE_OUTCOMES):
        name = nodeid.split("::")[-1]
        body = name.removeprefix("test_criterion_")
        num, _, rest = body.partition("_")
        outcome = _ACCEPTANCE_OUTCOMES[nodeid]
        terminalreporter.write_line(
            f"criterion {num} ({rest.replace('_', ' ')}): "
            f"{word.get(outcome, outcome.upper())}"
        )


@st.composite
def signed_permutations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    values = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.tuples(*([st.sampled_from((1, -1))] * n)))
    return SignedPermutation([s * v for s, v in zip(signs, values)])


def naive_find_pattern(w, pattern):
    """All-subsequences scan; returns the first (lex-least) witness or None.

    Kept deliberately independent of the library's DFS matcher so the two
    can cross-check each other.
    """
    n, m = w.n, pattern.n
    pat = pattern.window
    for combo in itertools.combinations(range(1, n + 1), m):
        vals = [w(i) for i in combo]
        if any((v > 0) != (pv > 0) for v, pv in zip(vals, pat)):
            continue
        ok = True
        for x in range(m):
            for y in range(x + 1, m):
                if (abs(vals[x]) < abs(vals[y])) != (abs(pat[x]) < abs(pat[y])):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return combo
    return None


def length_by_descent_stripping(w):
    """Independent length oracle: apply simple reflections at descents
    until the identity is reached; the number of steps is the length."""
    win = list(w.window)
    steps = 0
    while True:
        if win[0] < 0:
            win[0] = -win[0]
            steps += 1
            continue
        for d in range(len(win) - 1):
            if win[d] > win[d + 1]:
                win[d], win[d + 1] = win[d + 1], win[d]
                steps += 1
                break
        else:
            return steps


def assert_structural_facts(t):
    """Every structural fact the library promises for one valid triple,
    checked against its constructed permutation at the triple's own rank.

    Used both by the spot checks in test_theta.py and by the exhaustive
    sweep in test_acceptance.py, so a regression shows up in both.
    """
    from thetavex import diagram, theta

    w, trace = theta.construct_with_trace(t)
    winv = w.inverse()
    s = t.s
    a = theta.derive(t).a
    full = w.embed_odd()
    d = diagram.build_extended_diagram(w)

    # box count realizes the length
    assert len(d.diagram_boxes) == w.length()

    # descent set of w is read off p, with -q wedged into each drop
    assert w.descents() == frozenset(p - 1 for p in t.p)
    for i in range(1, s + 1):
        pi, qi = t.p[i - 1], t.q[i - 1]
        assert w(pi - 1) > -qi >= w(pi)

    # descent set of the inverse is read off q, split at the sign cut
    assert winv.descents() == frozenset(
        (t.q[i - 1] - 1 if i < a else -t.q[i - 1]) for i in range(1, s + 1)
    )
    for i in range(1, s + 1):
        pi, qi = t.p[i - 1], t.q[i - 1]
        if i < a:
            assert winv(qi - 1) > -pi >= winv(qi)
        else:
            assert winv(-qi) > pi - 1 >= winv(-qi + 1)

    # the triple's boxes, and their reflections, are SE corners of the
    # full form
    for i in range(1, s + 1):
        pi, qi = t.p[i - 1], t.q[i - 1]
        assert diagram.is_se_corner(full, qi - 1, -pi)
        assert diagram.is_se_corner(full, -qi, pi - 1)

    # k_i is both the rank at (p_i, q_i) and the region's dot count
    for ki, pi, qi in t.entries():
        assert diagram.rank(w, pi, qi) == ki
        assert diagram.count_dots_in_region(d, pi, qi) == ki

    # step i places inside its own region and outside the previous one;
    # the finishing step stays outside the last region
    by_step = {sp.step: sp.placements for sp in trace}
    for i in range(1, s + 1):
        pi, qi = t.p[i - 1], t.q[i - 1]
        for v, z in by_step[i]:
            assert v <= -qi and z >= pi
            if i >= 2:
                assert not (v <= -t.q[i - 2] and z >= t.p[i - 2])
    if s:
        for v, z in by_step[s + 1]:
            assert not (v <= -t.q[-1] and z >= t.p[-1])

    # the triple's positions sit on the NE path with matching rank values
    cs = diagram.corners(w)
    ne = {c.position: c.k for c in cs.ne_path}
    for ki, pi, qi in t.entries():
        assert ne.get((pi, qi)) == ki

    # exclusion: under each strict drop of p, the staircase region holds
    # only triple positions -- and exactly one when q also drops strictly
    positions = {c.position for c in cs}
    tau = set(zip(t.p, t.q))
    for i in range(1, s):
        if t.p[i - 1] <= t.p[i]:
            continue
        region = {
            (p, q) for (p, q) in positions if p > t.p[i] and q <= t.q[i - 1]
        }
        assert region <= tau
        if i == 1 or t.q[i - 2] > t.q[i - 1]:
            assert region == {(t.p[i - 1], t.q[i - 1])}
    if s:
        assert {(p, q) for (p, q) in positions if q <= t.q[-1]} <= tau

    # corner decomposition: triple, optional, unessential -- disjoint,
    # exhaustive, with the first two making up the NE path
    opts = {c.position for c in theta.optional_corners(w, t, cs)}
    une = {c.position for c in cs.unessential}
    assert cs.other == ()
    assert tau | opts == set(ne)
    assert not (tau & opts) and not (tau & une) and not (opts & une)
    assert tau | opts | une == positions
