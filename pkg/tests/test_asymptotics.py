import math

import mpmath
import numpy as np
import pytest

from smallbias import asymptotics as asy


def test_new_at_one():
    assert asy.logk_exponent(asy.NEW, 1.0) == pytest.approx(4.0, abs=1e-12)


@pytest.mark.parametrize("alpha", [0.51, 0.6, 1.0, 2.5, 10.0])
def test_norm_trace_4_is_bt(alpha):
    assert asy.logk_exponent(asy.norm_trace(4), alpha) == pytest.approx(
        asy.logk_exponent(asy.BT, alpha), abs=1e-12
    )


def test_norm_trace_4_coefficients():
    nt = asy.norm_trace(4)
    assert nt.intercept == asy.BT.intercept and nt.slope == asy.BT.slope
    assert nt.alpha_min == 0.5


def test_validity():
    with pytest.raises(ValueError):
        asy.logk_exponent(asy.BT, 0.4)
    with pytest.raises(ValueError):
        asy.logk_exponent(asy.BT, 0.5)
    with pytest.raises(ValueError):
        asy.logk_exponent(asy.norm_trace(9), 0.3)
    assert asy.logk_exponent(asy.norm_trace(9), 1 / 3) > 0
    with pytest.raises(ValueError):
        asy.norm_trace(3)


def test_crossovers():
    x = asy.crossover(asy.NEW, asy.RS)
    assert abs(x.alpha - 1) < 1e-12 and x.valid_for_both
    x = asy.crossover(asy.NEW, asy.AG)
    assert abs(x.alpha - 1) < 1e-12
    assert asy.crossover(asy.GVLP, asy.GVLP) is None


@pytest.mark.parametrize("alpha", [0.5, 2.0])
def test_new_versus_rs_and_ag(alpha):
    new = asy.logk_exponent(asy.NEW, alpha)
    assert (new < asy.logk_exponent(asy.RS, alpha)) == (alpha < 1)
    assert (new < asy.logk_exponent(asy.AG, alpha)) == (alpha > 1)


def test_gvlp_lowest():
    for alpha in np.linspace(0.01, 5, 200):
        low = asy.logk_exponent(asy.GVLP, alpha)
        for c in asy.default_curves(range(4, 20)):
            if c is not asy.GVLP and c.is_valid(alpha):
                assert low < asy.logk_exponent(c, alpha)


def test_margin_examples():
    # direct evaluation of both lines at alpha = 1/sqrt(5)
    a = 1 / math.sqrt(5)
    direct = asy.logk_exponent(asy.norm_trace(5), a) - asy.logk_exponent(asy.NEW, a)
    assert asy.norm_trace_margin(5) == pytest.approx(direct, abs=1e-12)
    assert asy.norm_trace_margin(5) == pytest.approx(2.6833 - 2.5259, abs=1e-3)
    assert asy.norm_trace_margin(9) > 0
    with pytest.raises(ValueError):
        asy.norm_trace_margin(4)


@pytest.mark.parametrize("l", range(5, 101))
def test_margin_positive(l):
    assert asy.norm_trace_margin(l) > 0


def test_cubic_root():
    r = asy.cubic_positive_root()
    assert abs(r - 2.119) < 1e-3
    assert abs(r**3 - 4 / 3 * r**2 - 5 / 3 * r) < 1e-9
    oracle = max(float(z.real) for z in mpmath.polyroots([1, -mpmath.mpf(4) / 3, -mpmath.mpf(5) / 3, 0]))
    assert r == pytest.approx(oracle, abs=1e-12)
    # sign: negative just below the root, positive above
    assert 3**3 - 4 / 3 * 9 - 5 / 3 * 3 == pytest.approx(10)
    assert (2.0**3 - 4 / 3 * 4 - 5 / 3 * 2) < 0


def test_bias_denominator():
    assert asy.bias_denominator(1 - 1 / math.e) == pytest.approx(1 - 2 / math.e, abs=1e-12)
    assert asy.bias_denominator(0.5) == pytest.approx(0.5 + 0.5 * math.log(0.5), abs=1e-15)
    assert asy.bias_denominator(0.5) == pytest.approx(0.1534, abs=1e-4)
    for eps in (1e-2, 1e-3, 1e-5):
        assert abs(asy.bias_denominator(eps) / (eps**2 / 2) - 1) < 0.01
    for bad in (0, 1, -0.1, 1.5):
        with pytest.raises(ValueError):
            asy.bias_denominator(bad)


def test_bias_denominator_increasing():
    xs = np.linspace(1e-4, 1 - 1e-4, 1000)
    ys = [asy.bias_denominator(x) for x in xs]
    assert all(b > a for a, b in zip(ys, ys[1:]))
    assert all(y > 0 for y in ys)


def test_compare_at_examples():
    valid, invalid = asy.compare_at(1.0)
    vals = dict(valid)
    assert vals["RS"] == pytest.approx(4.0) and vals["AG"] == pytest.approx(4.0)
    assert vals["New"] == pytest.approx(4.0) and vals["GVLP"] == pytest.approx(3.0)
    assert valid[0][0] == "GVLP"
    vals = dict(asy.compare_at(0.6)[0])
    assert vals["BT"] == pytest.approx(2.75) and vals["New"] == pytest.approx(2.9333, abs=1e-4)
    valid, invalid = asy.compare_at(0.3)
    vals = dict(valid)
    assert "BT" in invalid
    assert vals["New"] == pytest.approx(2.1333, abs=1e-4) and vals["RS"] == pytest.approx(2.6)
    assert [v for _, v in valid] == sorted(v for _, v in valid)
