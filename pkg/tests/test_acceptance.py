"""Acceptance gate: every quantitative claim at its stated tolerance.

All values are exact integers, computed at characteristic 32003 with a GF(2)
cross-run; a field disagreement fails the criterion with a torsion diagnostic.
One summary line prints per criterion (run with -s to see them on success).
The minutes-scale cases carry the 'long' marker and are deselected by default.
"""

import pytest

from rookideal.verify import long_suite, paper_suite, properties_suite


@pytest.fixture(scope="module")
def paper_cases():
    return {case.id: case for case in paper_suite(include_long_stubs=False)}


def _check(name, cases):
    failed = [c for c in cases if c.status != "pass"]
    total = sum(c.seconds for c in cases)
    status = "FAIL" if failed else "PASS"
    print(f"ACCEPTANCE {name}: {status} ({len(cases)} checks, {total:.2f}s)")
    for case in failed:
        print(f"  {case.id}: expected {case.expected} got {case.computed}")
    assert not failed
    return total


def _select(paper_cases, prefix):
    return [case for cid, case in sorted(paper_cases.items()) if cid.startswith(prefix)]


def test_criterion_1_decomposition(paper_cases):
    cases = _select(paper_cases, "decomposition-")
    assert len(cases) == 13
    total = _check("1 minimal-prime decomposition", cases)
    assert total < 10.0


def test_criterion_2_prime_profile(paper_cases):
    cases = _select(paper_cases, "profile-")
    assert len(cases) == 13
    _check("2 height/dim/bight profile", cases)


def test_criterion_3_single_row_powers(paper_cases):
    cases = _select(paper_cases, "power-1x")
    assert len(cases) == 12
    total = _check("3 single-row powers", cases)
    assert total < 5.0


def test_criterion_4_two_row_powers(paper_cases):
    cases = _select(paper_cases, "power-2x")
    assert len(cases) == 8
    _check("4 two-row powers (regular range)", cases)


def test_criterion_5_three_row_boards(paper_cases):
    cases = _select(paper_cases, "three-row-")
    assert len(cases) == 2
    _check("5 three-row boards", cases)


def test_criterion_6_fixtures(paper_cases):
    cases = _select(paper_cases, "fixture-")
    assert len(cases) == 6
    _check("6 fixture regularities", cases)


def test_criterion_7_induced_matching(paper_cases):
    cases = _select(paper_cases, "matching-")
    assert len(cases) == 4
    _check("7 induced-matching lower bound", cases)


def test_criterion_8_a_invariant(paper_cases):
    cases = _select(paper_cases, "a-invariant-")
    assert len(cases) == 9
    _check("8 a-invariant vanishing", cases)


def test_criterion_9_face_ring_depth(paper_cases):
    cases = _select(paper_cases, "blvz-")
    assert len(cases) == 10
    _check("9 face-ring depth cross-check", cases)


def test_criterion_11_property_suite():
    _check("11 property suite", properties_suite())


@pytest.mark.long
def test_criterion_4_long_depth_drop():
    cases = [c for c in long_suite() if c.id.startswith("power-")]
    assert len(cases) == 2
    _check("4-long two-row depth drop", cases)


@pytest.mark.long
def test_criterion_10_four_by_four():
    cases = [c for c in long_suite() if c.id == "four-four"]
    _check("10 four-by-four stretch", cases)
