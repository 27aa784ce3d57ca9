import random
from fractions import Fraction

import pytest

from chaosmark.conjugacy import DigitReal, encode
from chaosmark.dynamics import BoolState, Strategy, SystemPoint
from chaosmark.errors import DimensionError, DomainError
from chaosmark.metrics import (
    comparison_table,
    format_sig12,
    fraction_distance,
    integral_distance,
    point_distance,
    real_distance,
    render_comparison_csv,
    state_distance,
    strategy_distance,
)


def rand_point(rng, n=10, depth=8):
    return SystemPoint(
        Strategy(tuple(rng.randrange(n) for _ in range(depth)), n),
        BoolState(tuple(rng.randrange(2) for _ in range(n))),
    )


def rand_real(rng, n=10, depth=8):
    return DigitReal(
        n, rng.randrange(1 << n), tuple(rng.randrange(n) for _ in range(depth))
    )


class TestStateDistance:
    def test_identity(self):
        e = BoolState.from_string("0110010011")
        assert state_distance(e, e) == 0

    def test_maximal(self):
        assert state_distance(BoolState.zeros(10), BoolState((1,) * 10)) == 10

    def test_single_bit(self):
        a = BoolState.from_string("1" + "0" * 9)
        assert state_distance(a, BoolState.zeros(10)) == 1

    def test_mismatch(self):
        with pytest.raises(DimensionError):
            state_distance(BoolState.zeros(3), BoolState.zeros(4))


class TestStrategyDistance:
    def test_identical(self):
        s = Strategy((1, 2, 3), 10)
        assert strategy_distance(s, s) == 0

    def test_single_term_by_hand(self):
        a = Strategy((0, 0, 0), 10)
        b = Strategy((9, 0, 0), 10)
        assert strategy_distance(a, b) == Fraction(81, 100)

    def test_prefix_agreement_bounds_value(self):
        rng = random.Random(3)
        for _ in range(300):
            k = rng.randint(1, 10)
            depth = k + rng.randint(1, 8)
            shared = [rng.randrange(10) for _ in range(k)]
            a = shared + [rng.randrange(10) for _ in range(depth - k)]
            b = shared + [rng.randrange(10) for _ in range(depth - k)]
            v = strategy_distance(Strategy(tuple(a), 10), Strategy(tuple(b), 10))
            assert v < Fraction(1, 10**k)

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            strategy_distance(Strategy((1,), 10), Strategy((1, 2), 10))

    def test_base_n_weights_variant(self):
        a = Strategy((15,) * 20, 16)
        b = Strategy((0,) * 20, 16)
        assert strategy_distance(a, b, base_n_weights=True) < 1
        # the two weightings are genuinely different sums
        assert strategy_distance(a, b, base_n_weights=True) != strategy_distance(a, b)
        # for ten cells the variants coincide
        c = Strategy((9, 3, 1), 10)
        d = Strategy((0, 0, 0), 10)
        assert strategy_distance(c, d, base_n_weights=True) == strategy_distance(c, d)


class TestPointDistance:
    def test_identical(self):
        rng = random.Random(5)
        p = rand_point(rng)
        assert point_distance(p, p) == 0

    def test_floor_counts_differing_cells(self):
        s = Strategy((1, 2, 3), 10)
        a = SystemPoint(s, BoolState.from_string("1110000000"))
        b = SystemPoint(s, BoolState.zeros(10))
        assert point_distance(a, b) == 3

    def test_floor_equals_state_distance(self):
        rng = random.Random(13)
        for _ in range(500):
            a, b = rand_point(rng), rand_point(rng)
            d = point_distance(a, b)
            assert int(d) == state_distance(a.state, b.state)

    def test_metric_axioms(self):
        rng = random.Random(17)
        for _ in range(300):
            a, b, c = (rand_point(rng) for _ in range(3))
            dab, dba = point_distance(a, b), point_distance(b, a)
            assert dab >= 0
            assert dab == dba
            assert (dab == 0) == (a == b)
            assert point_distance(a, c) <= dab + point_distance(b, c)


class TestIffSemantics:
    """Fractional part vs strategy prefix, at the exact threshold.

    The sharp cutoff is (9/10) * 10^-k: the first k terms agree iff the
    fractional part is below it. The plain 10^-k bound holds one-sidedly.
    """

    def test_both_directions_at_exact_threshold(self):
        rng = random.Random(23)
        for _ in range(400):
            k = rng.randint(1, 16)
            depth = k + rng.randint(1, 6)
            a = [rng.randrange(10) for _ in range(depth)]
            b = list(a)
            if rng.random() < 0.5:
                # force a disagreement somewhere in the first k terms
                j = rng.randrange(k)
                b[j] = (a[j] + rng.randint(1, 9)) % 10
            sa, sb = Strategy(tuple(a), 10), Strategy(tuple(b), 10)
            frac = strategy_distance(sa, sb)
            agree = a[:k] == b[:k]
            assert (frac < Fraction(9, 10) * Fraction(1, 10**k)) == agree
            if agree:
                assert frac < Fraction(1, 10**k)

    def test_first_digit_disagreement_is_visible(self):
        a = Strategy((4,) + (0,) * 7, 10)
        b = Strategy((5,) + (0,) * 7, 10)
        assert strategy_distance(a, b) == Fraction(9, 100)


class TestIntervalMetric:
    def test_integral_identity(self):
        x = DigitReal(10, 700, (1, 2))
        assert integral_distance(x, x) == 0

    def test_integral_single_bit(self):
        a = DigitReal(10, 512, ())
        b = DigitReal(10, 0, ())
        assert integral_distance(a, b) == 1

    def test_integral_all_bits(self):
        assert integral_distance(DigitReal(10, 1023, ()), DigitReal(10, 0, ())) == 10

    def test_fraction_examples(self):
        a = DigitReal(10, 0, (1, 2, 3))
        b = DigitReal(10, 0, (1, 2, 4))
        assert fraction_distance(a, b) == Fraction(1, 1000)
        assert fraction_distance(DigitReal(10, 0, (9,)), DigitReal(10, 0, (0,))) == Fraction(9, 10)

    def test_fraction_identity(self):
        x = DigitReal(10, 3, (7, 7))
        assert fraction_distance(x, x) == 0

    def test_fraction_length_mismatch(self):
        with pytest.raises(DimensionError):
            fraction_distance(DigitReal(10, 0, (1,)), DigitReal(10, 0, (1, 2)))

    def test_metric_axioms(self):
        rng = random.Random(29)
        for _ in range(300):
            x, y, z = (rand_real(rng) for _ in range(3))
            dxy = real_distance(x, y)
            assert dxy >= 0
            assert dxy == real_distance(y, x)
            assert (dxy == 0) == (x == y)
            assert real_distance(x, z) <= dxy + real_distance(y, z)

    def test_zero_iff_same_encoded_point(self):
        rng = random.Random(31)
        for _ in range(200):
            p, q = rand_point(rng), rand_point(rng)
            zero = real_distance(encode(p), encode(q)) == 0
            assert zero == (p == q)


class TestComparisonTable:
    def test_row_count_and_consistency(self):
        ref = DigitReal.parse("1.234")
        rows = comparison_table(ref, 0, 5, 500, depth=6)
        assert len(rows) == 500
        # every metric entry re-derives from the exact oracle
        for sample, metric, euclid in rows[::37]:
            padded = DigitReal(10, ref.integral, (ref.fraction + (0,) * 6)[:6])
            assert metric == real_distance(sample, padded)
            assert euclid == abs(sample.value() - padded.value())

    def test_euclid_v_shape_minimum(self):
        ref = DigitReal.parse("3")
        rows = comparison_table(ref, 0, 5, 500, depth=6)
        euclids = [row[2] for row in rows]
        assert min(euclids) == 0
        assert euclids.index(min(euclids)) == 300  # x = 3.0

    def test_csv_rendering(self):
        ref = DigitReal.parse("1.234")
        csv = render_comparison_csv(comparison_table(ref, 0, 5, 10, depth=4))
        lines = csv.strip().split("\n")
        assert lines[0] == "x,D,euclid"
        assert len(lines) == 11

    def test_bad_grid(self):
        ref = DigitReal.parse("1.2")
        with pytest.raises(DomainError):
            comparison_table(ref, 5, 0, 10)
        with pytest.raises(DomainError):
            comparison_table(ref, 0, 5, 1)


def test_format_sig12():
    assert format_sig12(Fraction(1, 3)) == "0.333333333333"
    assert format_sig12(Fraction(81, 100)) == "0.81"
