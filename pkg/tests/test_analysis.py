import math

import pytest

from reference_shapes import B8, D16, R4, V8
from smallgon.analysis import (
    GraphClass,
    asymptotic_ratio_L,
    asymptotic_ratio_W,
    correction_L,
    correction_W,
    extract_diameter_graph,
    gap_perimeter_bn,
    gap_perimeter_dn,
    gap_report,
    gap_width_bn,
    gap_width_dn,
    lambda_star,
    leading_gap_L,
    leading_gap_W,
    make_table,
)
from smallgon.constructions import bn_scalar_metrics, build_dn, dn_closed_form, upper_bounds
from smallgon.geometry import Polygon
from smallgon.optimize import solve_bn_star, solve_dn_star


@pytest.mark.parametrize("n", [16, 32, 64])
def test_dn_graph_counts(n):
    g = extract_diameter_graph(build_dn(n).polygon)
    assert g.cycle_length == 3 * n // 4 - 1
    assert g.pendant_count == n // 4 + 1
    assert g.edge_count == n
    assert g.classification is GraphClass.D_FAMILY


def test_d16_reference_graph():
    # coordinates carry 4 decimals, so unit distances hold to ~1e-4
    g = extract_diameter_graph(Polygon(D16), tol=5e-4)
    assert (g.cycle_length, g.pendant_count) == (11, 5)


def test_v8_graph():
    g = extract_diameter_graph(Polygon(V8), tol=5e-4)
    assert g.edge_count == 8
    assert (g.cycle_length, g.pendant_count) == (5, 3)
    assert g.classification is GraphClass.B_FAMILY


def test_b8_fixture_graph():
    g = extract_diameter_graph(Polygon(B8), tol=5e-4)
    assert g.classification is GraphClass.B_FAMILY


def test_square_graph_is_other():
    g = extract_diameter_graph(Polygon(R4))
    assert g.edge_count == 2
    assert g.classification is GraphClass.OTHER


def test_gap_display_values():
    assert gap_perimeter_dn(64) == pytest.approx(1.33e-11, rel=0.02)
    assert gap_perimeter_dn(128) == pytest.approx(5.19e-14, rel=0.02)


@pytest.mark.parametrize("n", [16, 32, 64])
def test_gaps_match_subtraction_where_resolvable(n):
    ub_l, ub_w = upper_bounds(n)
    length, w = dn_closed_form(n)
    assert abs(gap_perimeter_dn(n) - (ub_l - length)) <= 1e-15
    assert abs(gap_width_dn(n) - (ub_w - w)) <= 1e-15
    lb, wb = bn_scalar_metrics(n)
    assert abs(gap_perimeter_bn(n) - (ub_l - lb)) <= 1e-15
    assert abs(gap_width_bn(n) - (ub_w - wb)) <= 1e-15


@pytest.mark.parametrize("n", [16, 32, 64, 128, 256, 512, 1024])
def test_gaps_positive_and_ordered(n):
    assert 0 < gap_perimeter_dn(n) < gap_perimeter_bn(n)
    assert 0 < gap_width_dn(n) < gap_width_bn(n)


@pytest.mark.parametrize("n", [64, 128, 256, 512])
def test_asymptotic_bands(n):
    assert abs(asymptotic_ratio_L(n) - 1) <= 3 * correction_L(n)
    assert abs(asymptotic_ratio_W(n) - 1) <= 3 * correction_W(n)


def test_ratio_approaches_one_like_correction():
    for n in (256, 512, 1024):
        assert (asymptotic_ratio_L(n) - 1) / correction_L(n) == pytest.approx(1, abs=0.05)
        assert (asymptotic_ratio_W(n) - 1) / correction_W(n) == pytest.approx(1, abs=0.05)


def test_ratio_at_16_within_remainder():
    # next series term is O(n^-4); at n = 16 it moves the ratio by ~0.01
    assert asymptotic_ratio_L(16) - 1 == pytest.approx(correction_L(16), abs=0.02)


def test_leading_terms():
    assert leading_gap_L(64) == pytest.approx(math.pi**9 / (8 * 64**8))
    assert leading_gap_W(64) == pytest.approx(math.pi**5 / (4 * 64**5))


def test_table1_row():
    rows = make_table(1).to_text().splitlines()
    assert rows[2].split() == ["16", "3.1214451523", "3.1365427675", "3.1365475080", "3.1365484905", "0.8283"]
    assert len(rows) == 6


def test_table2_values():
    t = make_table(2)
    assert t.rows[-1][0] == 256
    assert t.to_csv().splitlines()[1] == "16,0.9807852804,0.9949956687,0.9951068324,0.9951847267,0.5880"
    fractions = [r[-1] for r in t.rows]
    assert fractions == sorted(fractions)
    assert [round(f, 4) for f in fractions] == [0.5880, 0.8015, 0.9016, 0.9509, 0.9755]


def test_table1_fractions_increase():
    fractions = [r[-1] for r in make_table(1).rows]
    assert [round(f, 4) for f in fractions] == [0.8283, 0.9604, 0.9903, 0.9976]


def test_table3_and_lambda():
    t = make_table(3)
    lams = [r[-1] for r in t.rows]
    assert all(0.19 < x < 0.22 for x in lams)
    assert lams == sorted(lams, reverse=True)
    assert [round(x, 4) for x in lams[:2]] == [0.2122, 0.1947]
    # lambda_64 rests on a 2.5e-12 gain, a few ulps of pi
    assert lams[2] == pytest.approx(0.1908, abs=2e-4)


@pytest.mark.parametrize("n", [16, 32, 64])
def test_refutation_ordering(n):
    b, d = solve_bn_star(n), solve_dn_star(n)
    assert b.objective < dn_closed_form(n)[0] < d.objective < upper_bounds(n)[0]
    assert 0 < lambda_star(d) < 1


def test_table4_shape():
    t = make_table(4)
    assert [(r[0], r[1]) for r in t.rows] == [(16, 0), (32, 0), (32, 1), (64, 0), (64, 1), (64, 2), (64, 3)]
    assert t.to_csv().splitlines()[0].count(",") == 7


def test_unknown_table():
    with pytest.raises(ValueError):
        make_table(5)


@pytest.mark.parametrize("n", [16, 32, 64, 128])
def test_gap_report(n):
    r = gap_report(n)
    assert r.gap_L > 0 and r.gap_W > 0
    assert 0 < r.fraction_L < 1
    assert r.lambda_star is None


def test_gap_report_with_optimum():
    assert gap_report(16, with_optimum=True).lambda_star == pytest.approx(0.2122, abs=5e-5)
