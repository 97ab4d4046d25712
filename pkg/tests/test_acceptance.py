"""Acceptance gate.

One test per headline guarantee, in dependency order, each with a hard
wall-clock budget.  Run with -v to get a single pass/fail line per
guarantee.  Everything here is exact arithmetic; the budgets are the
only tolerances.
"""

import time
from fractions import Fraction

from delpezzo5 import dp5
from delpezzo5.hilbert import (HilbertPolynomial, hilbert_function,
                               hilbert_function_direct, hilbert_polynomial)
from delpezzo5.homspaces import tangent_dimension
from delpezzo5.verify import run_suite

LINE_HP = HilbertPolynomial((1, 1))
CONIC_HP = HilbertPolynomial((1, 2))
CUBIC_HP = HilbertPolynomial((1, 3))
QUARTIC_HP = HilbertPolynomial((1, 4))
QUINTIC_CURVE_HP = HilbertPolynomial((0, 5))


class _Clock:
    def __init__(self, budget: float):
        self.budget = budget
        self.start = time.perf_counter()

    def check(self):
        elapsed = time.perf_counter() - self.start
        assert elapsed < self.budget, (
            f"finished correct but too slow: {elapsed:.1f}s "
            f"against a {self.budget:.0f}s budget")


def test_criterion_01_coordinate_change_matches_the_two_presentations():
    clock = _Clock(5.0)
    model = dp5.build_model()
    result = dp5.coordinate_change_check(model)
    assert result["hyperplanes_vanish"]
    assert result["bijective"]
    assert result["ideal_equal"]
    assert result["passed"]
    clock.check()


def test_criterion_02_lowering_orbit_spans_the_invariant_seven_space():
    clock = _Clock(1.0)
    result = dp5.invariant_subspace_check(dp5.build_model())
    assert result["chain_length"] == 7
    assert result["dimension"] == 7
    assert result["matches"]
    assert result["passed"]
    clock.check()


def test_criterion_03_three_fixed_lines_with_tangent_dimension_two():
    clock = _Clock(10.0)
    model = dp5.build_model()
    records = dp5.fixed_curves(model, 1)
    assert len(records) == 3
    assert {r.label for r in records} == {"l0", "l1", "l2"}
    for r in records:
        assert r.ideal == model.lines[r.label]
        assert r.ideal.saturate_irrelevant() == r.ideal
        assert hilbert_polynomial(r.ideal) == LINE_HP
        assert tangent_dimension(r.ideal, within=model.threefold) == 2
    clock.check()


def test_criterion_04_five_fixed_conics_with_tangent_dimension_four():
    clock = _Clock(30.0)
    model = dp5.build_model()
    records = dp5.fixed_curves(model, 2)
    expected = dp5.expected_conic_ideals(model)
    assert len(records) == 5
    assert {r.details["omitted_weight"] for r in records} == set(expected)
    for r in records:
        assert r.ideal == expected[r.details["omitted_weight"]]
        assert hilbert_polynomial(r.ideal) == CONIC_HP
        assert tangent_dimension(r.ideal, within=model.threefold) == 4
    clock.check()


def test_criterion_05_ten_fixed_cubics_with_tangent_dimension_six():
    clock = _Clock(120.0)
    model = dp5.build_model()
    records = dp5.fixed_curves(model, 3)
    expected = {frozenset(pair): ideal
                for pair, ideal, _ in dp5.expected_cubic_rows(model)}
    assert len(records) == 10
    assert {frozenset(r.details["vertex_pair"]) for r in records} == set(expected)
    for r in records:
        assert r.ideal == expected[frozenset(r.details["vertex_pair"])]
        assert hilbert_polynomial(r.ideal) == CUBIC_HP
        assert tangent_dimension(r.ideal, within=model.threefold) == 6
    clock.check()


def test_criterion_06_thirty_fixed_quartics_paired_by_the_involution():
    clock = _Clock(600.0)
    model = dp5.build_model()
    census = dp5.enumerate_fixed_quartics(model)
    records = census.records

    assert len(records) == 30
    assert len({r.curve.canonical_key() for r in records}) == 30
    for r in records:
        assert r.curve_hilbert == QUARTIC_HP
        assert r.curve.is_torus_fixed()
        assert dp5.linear_span_dimension(r.curve) == 4
        assert r.curve.contains_ideal(model.threefold)
        assert r.relative_tangent == 8

    # the mirror involution on the thirty curves: fourteen swapped
    # pairs plus two self-symmetric members, one per reducible-table
    # row plus the irreducible rational normal quartic
    assert len(census.orbits) == 16
    rows = [o.row for o in census.orbits if o.label != "C4"]
    assert sorted(rows) == list(range(1, 16))
    assert sum(1 for o in census.orbits if o.label == "C4") == 1
    self_mirror = {(o.label, o.row) for o in census.orbits if o.self_mirror}
    assert self_mirror == {("C4", None), ("l1+l2+C2", 2)}
    assert all(len(o.members) == (1 if o.self_mirror else 2)
               for o in census.orbits)
    assert sum(len(o.members) for o in census.orbits) == 30
    clock.check()


def test_criterion_07_residual_arithmetic_across_all_thirty_sections():
    clock = _Clock(600.0)
    model = dp5.build_model()
    census = dp5.enumerate_fixed_quartics(model)
    secants = 0
    for r in census.records:
        assert r.quintic_hilbert == QUINTIC_CURVE_HP
        quintic = (list(r.quintic_hilbert.coeffs) + [0, 0])[:2]
        curve = (list(r.curve_hilbert.coeffs) + [0, 0])[:2]
        # section minus residual is m - 1, the line's contribution
        assert [q - c for q, c in zip(quintic, curve)] == [Fraction(-1), Fraction(1)]
        if r.secant_hilbert is not None:
            assert r.secant_hilbert == HilbertPolynomial((2,))
            secants += 1
        else:
            assert model.lines[r.line].contains_ideal(r.curve)
    assert secants > 0
    clock.check()


def test_criterion_08_rational_normal_quartic_is_determinantal():
    clock = _Clock(30.0)
    result = dp5.rnc_check(dp5.build_model())
    assert result["determinantal_equal"]
    assert result["hilbert"] == QUARTIC_HP
    assert result["torus_fixed"]
    assert result["span"] == 4
    assert result["on_threefold"]
    assert isinstance(result["tangent_ambient"], int)
    assert isinstance(result["tangent_relative"], int)
    assert result["tangent_relative"] == 8
    clock.check()


def test_criterion_09_hom_bound_for_the_vertex_cubic_against_the_middle_line():
    clock = _Clock(30.0)
    assert dp5.vertex_cubic_hom_bound(dp5.build_model()) <= 2
    clock.check()


def test_criterion_10_threefold_hilbert_polynomial_and_monomial_oracle():
    clock = _Clock(10.0)
    model = dp5.build_model()
    hp = hilbert_polynomial(model.threefold)
    assert hp.coeffs == (Fraction(1), Fraction(8, 3), Fraction(5, 2), Fraction(5, 6))
    assert hp(1) == 7
    assert hp.variety_degree() == 5
    for d in range(9):
        structured = hilbert_function(model.threefold, d)
        counted = hilbert_function_direct(model.threefold, d)
        assert structured == counted == hp(d)
    clock.check()


def test_criterion_11_randomized_property_suites_pass():
    clock = _Clock(60.0)
    report = run_suite("properties")
    assert report.status == "pass"
    total = 0
    for check in report.checks:
        assert check.status == "pass"
        total += int(check.actual.split()[0])
    assert total >= 100
    clock.check()
