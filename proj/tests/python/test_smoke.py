import math
import os
import subprocess

import pytest

import meanbounds as mb


def test_eval_quadratic_and_equal_arguments():
    assert mb.eval_mean("power:2", 1.0, 7.0) == pytest.approx(5.0, rel=1e-15)
    assert mb.eval_mean(mb.MeanKind.of(mb.MeanTag.SandorYang), 3.0, 3.0) == 3.0


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        mb.PositivePair(-1.0, 2.0)
    with pytest.raises(ValueError):
        mb.parse_mean("no-such-mean")
    with pytest.raises(ValueError):
        mb.sharp_lambda(0.0)


def test_sandor_yang_between_arithmetic_and_quadratic():
    for a, b in [(1.0, 2.0), (1e-3, 5.0), (7.0, 7.5)]:
        assert mb.verify_sandor_yang_between_a_q(a, b)
        assert mb.verify_chain_corollary31(a, b)


def test_endpoints():
    sy = mb.MeanKind.of(mb.MeanTag.SandorYang)
    lower = mb.best_exponent(sy, mb.Family.Power, mb.Side.Lower)
    upper = mb.best_exponent(sy, mb.Family.Power, mb.Side.Upper)
    assert lower.numeric == pytest.approx(mb.closed_form_p0(), abs=1e-3)
    assert upper.numeric == pytest.approx(4.0 / 3.0, abs=1e-3)
    assert lower.within_tolerance() and upper.within_tolerance()
    assert mb.find_witness(sy, mb.Family.Power, 4.0 / 3.0, mb.Side.Upper) is None


def test_kernels_and_constants():
    p0 = mb.closed_form_p0()
    t0 = mb.find_t0(p0)
    assert abs(mb.f1(t0, p0)) <= 1e-13
    assert math.exp(mb.F(t0, p0)) == pytest.approx(1.012, abs=1e-3)
    assert mb.u_n(1, 4.0 / 3.0) == pytest.approx(0.0, abs=1e-14)
    labels = [row[0] for row in mb.sharp_constant_table()]
    assert labels[:2] == ["p0", "lambda_inf"]


def test_series_root():
    # 1 + t - t^2 has its positive root at the golden ratio
    assert mb.detect_sign_change([1.0, 1.0, -1.0]) == 1
    assert mb.series_positive_root([1.0, 1.0, -1.0], 10.0) == pytest.approx(
        (1 + math.sqrt(5)) / 2, rel=1e-12)


@pytest.mark.skipif("MEANBOUNDS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_eval_matches_module():
    out = subprocess.run([os.environ["MEANBOUNDS_CLI"], "eval", "--mean", "toader",
                          "--a", "1", "--b", "2"], capture_output=True, text=True, check=True)
    assert float(out.stdout) == pytest.approx(mb.eval_mean("toader", 1.0, 2.0), rel=1e-14)
