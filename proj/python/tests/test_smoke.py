import itertools

import pytest

import emptypt

SIX = [(0, 0), (40, 0), (20, 40), (20, 10), (14, 16), (25, 17)]


def in_triangle(a, b, c, p):
    def cross(o, u, v):
        return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0])

    s = [cross(a, b, p), cross(b, c, p), cross(c, a, p)]
    return all(x > 0 for x in s) or all(x < 0 for x in s)


def test_hole_and_gon():
    square = [(0, 0), (10, 0), (10, 10), (0, 10)]
    assert sorted(emptypt.find_k_hole(square, 4)) == sorted(square)
    hole = emptypt.find_k_hole(square + [(5, 4)], 4)
    assert hole is not None and (5, 4) in hole
    assert emptypt.find_convex_kgon(square + [(5, 4)], 5) is None


def test_pseudo_triangle_witness():
    w = emptypt.find_pseudo_triangle(SIX, 5)
    assert w is not None and w["empty"]
    assert len(w["vertices"]) == 5
    assert len(w["chains"]) == 3
    assert w["class"] in {"standard", "mountain", "fan", "triangle"}


def test_lambda_matches_brute_force():
    pts = emptypt.bft_construct(6, 2)
    worst = max(
        sum(in_triangle(a, b, c, p) for p in pts) for a, b, c in itertools.combinations(pts, 3)
    )
    assert emptypt.lambda_convexity(pts) == worst <= 2
    assert emptypt.find_convex_kgon(pts, 6) is None


def test_constructions():
    r = emptypt.empty_6pt_triangular(SIX)
    assert r["class"] == "standard" and r["empty"] and not r["oracle_fallback"]
    assert r["strictly_decreasing"]
    five = emptypt.empty_5pt_triangular(SIX)
    assert len(five["vertices"]) == 5


def test_m_value():
    assert [emptypt.m_value(v) for v in range(3, 9)] == [3, 5, 7, 11, 15, 23]


def test_reports():
    up = emptypt.verify_upper("E", 5, 6, 9, trials=50)
    assert up["outcome"] == "PASS" and up["mode"] == "sampled"
    lo = emptypt.verify_lower("F", 6, 6)
    assert lo["outcome"] == "PASS" and lo["n"] == 11
    assert emptypt.verify_property("lemma4-octagon", trials=50)["outcome"] == "PASS"
    rep = emptypt.table_report(trials=20, slow_trials=3)
    assert rep["passed"]
    assert rep == emptypt.table_report(trials=20, slow_trials=3)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        emptypt.find_k_hole([(0, 0), (1, 1), (2, 2)], 3)
    with pytest.raises(ValueError):
        emptypt.verify_property("nope")
