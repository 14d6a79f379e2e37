import math

import pytest

from steadyparts.asymptotics import (
    C,
    KAPPA,
    LogValue,
    asym_D,
    asym_M,
    asym_c,
    asym_p,
    asym_pi,
    f_saddle,
    log_of_bigint,
)
from steadyparts.bipartite import pi_value, d_value, AlphaCache
from steadyparts.crank import build_crank_columns
from steadyparts.formatting import ratio_string, sci_from_int, sci_from_log
from steadyparts.partitions import build_c_table, build_p_table


@pytest.fixture(scope="module")
def p5000():
    return build_p_table(5000)


@pytest.fixture(scope="module")
def c2000():
    return build_c_table(2000)


def ratio(exact: int, approx: LogValue) -> float:
    return math.exp(log_of_bigint(exact).log - approx.log)


class TestConstants:
    def test_c_range(self):
        assert 4.05 < C < 4.06

    def test_kappa_value(self):
        assert KAPPA == pytest.approx(5.0 ** 2.5 / (16.0 * 3.0 ** 1.5))


class TestLogValue:
    def test_mul_is_add(self):
        a = LogValue.of(3.0)
        b = LogValue.of(7.0)
        assert (a * b).log == pytest.approx(math.log(21.0))

    def test_zero_bottom(self):
        z = LogValue.zero()
        assert z.is_zero()
        assert z < LogValue.of(1e-300)

    def test_order_preserved(self):
        assert LogValue.of(2.0) < LogValue.of(3.0)


class TestLogOfBigint:
    def test_one(self):
        assert log_of_bigint(1).log == 0.0

    def test_power_of_ten(self):
        got = log_of_bigint(10 ** 100).log
        assert got == pytest.approx(100 * math.log(10), rel=1e-10)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            log_of_bigint(0)

    def test_huge_input_precision(self):
        v = 7 ** 4000
        assert log_of_bigint(v).log == pytest.approx(4000 * math.log(7), rel=1e-12)

    def test_table1_value(self):
        p = build_p_table(100)
        c = build_c_table(100)
        v = pi_value(100, 100, c, p)
        assert log_of_bigint(v).log == pytest.approx(math.log(2.02082e13), rel=1e-5)


class TestAsymP:
    def test_ratio_at_100(self, p5000):
        assert 0.9 <= ratio(p5000.p(100), asym_p(100)) <= 1.1

    def test_monotone(self):
        logs = [asym_p(n).log for n in range(10, 1001)]
        assert all(a < b for a, b in zip(logs, logs[1:]))

    def test_ratio_at_5000(self, p5000):
        # leading Hardy-Ramanujan term at n = 5000; deviation is ~0.63%
        assert abs(ratio(p5000.p(5000), asym_p(5000)) - 1) < 0.007


class TestAsymC:
    def test_ratio_at_1000(self, c2000):
        assert 0.9 <= ratio(c2000.c(1000), asym_c(1000)) <= 1.1

    def test_ratio_improves(self, c2000):
        devs = [abs(ratio(c2000.c(n), asym_c(n)) - 1) for n in (100, 500, 1000, 2000)]
        assert all(a > b for a, b in zip(devs, devs[1:]))

    def test_grows_faster_than_p(self):
        for n in range(100, 2001, 100):
            assert asym_c(n).log > asym_p(n).log


class TestSaddleFunction:
    def test_endpoints(self):
        assert f_saddle(0.0) == 1.0
        assert f_saddle(1.0) == pytest.approx(math.sqrt(2.0 / 3.0))

    def test_maximum_value(self):
        assert f_saddle(0.4) == pytest.approx(math.sqrt(5.0 / 3.0), rel=1e-12)

    def test_quadratic_coefficient(self):
        for t in (1e-2, 1e-3):
            est = (f_saddle(0.4) - f_saddle(0.4 + t)) / t**2
            assert abs(est - KAPPA) / KAPPA < 0.05

    def test_monotone_on_stated_intervals(self):
        grid = [i * 1e-3 for i in range(1001)]
        vals = [f_saddle(x) for x in grid]
        split = 400  # x = 2/5
        assert all(a < b for a, b in zip(vals[:split], vals[1 : split + 1]))
        assert all(a > b for a, b in zip(vals[split:-1], vals[split + 1 :]))

    def test_domain(self):
        with pytest.raises(ValueError):
            f_saddle(1.5)


class TestAsymM:
    def test_k_zero_closed_form(self):
        for ell in (1, 10, 400):
            want = (
                math.log(math.pi / (48.0 * math.sqrt(2.0)))
                + 2.0 * math.pi * math.sqrt(ell / 6.0)
                - 1.5 * math.log(ell)
            )
            assert asym_M(0, ell).log == pytest.approx(want, rel=1e-12)

    def test_exact_ratio_at_400(self, p5000):
        cols = build_crank_columns([0, 10, 20], 420, p5000)
        for k in (0, 10, 20):
            r = ratio(cols.value(k, k + 400), asym_M(k, 400))
            assert abs(r - 1) < 0.15, (k, r)

    def test_increasing_in_k(self):
        limit = (
            math.log(math.pi / (12.0 * math.sqrt(2.0)))
            + 2.0 * math.pi * math.sqrt(400.0 / 6.0)
            - 1.5 * math.log(400.0)
        )
        logs = [asym_M(k, 400).log for k in range(0, 200, 10)]
        assert all(a < b for a, b in zip(logs, logs[1:]))
        assert logs[-1] < limit


class TestAsymD:
    def test_diagonal_damping(self):
        # |n-m| = 0 makes the damping factor exactly 1/4
        n = 50
        want = math.log(5.0 * C / 96.0) + C * math.sqrt(n) - 2.0 * math.log(n) + math.log(0.25)
        assert asym_D(n, n).log == pytest.approx(want, rel=1e-12)

    def test_exact_ratio_at_2500(self, p5000):
        c = build_c_table(2500)
        col0 = build_crank_columns([0], 2500, p5000)
        r = ratio(d_value(2500, 2500, c, col0), asym_D(2500, 2500))
        assert abs(r - 1) < 0.10, r

    def test_symmetric_about_n(self):
        n = 37
        for m in range(1, 2 * n):
            assert asym_D(m, n).log == asym_D(2 * n - m, n).log

    def test_boundary_rejected(self):
        with pytest.raises(ValueError):
            asym_D(100, 50)  # m = 2n gives mu = 0
        with pytest.raises(ValueError):
            asym_D(101, 50)  # m > 2n


class TestAsymPi:
    def test_caption_values(self):
        assert sci_from_log(asym_pi(100, 100)) == "2.14152e13"
        assert sci_from_log(asym_pi(1600, 1600)) == "2.32601e64"

    def test_diagonal_specialization(self):
        n = 123
        want = math.log(5.0 / 96.0) + C * math.sqrt(n) - 1.5 * math.log(n)
        assert asym_pi(n, n).log == pytest.approx(want, rel=1e-12)

    def test_ratio_columns_of_table1(self, p5000):
        c = build_c_table(1640)
        cache = AlphaCache(p5000)
        expect = {
            (100, 100): "0.9436",
            (100, 110): "0.9060",
            (1600, 1600): "0.9858",
            (1600, 1640): "0.9754",
        }
        for (m, n), want in expect.items():
            v = pi_value(m, n, c, p5000, cache)
            assert ratio_string(log_of_bigint(v), asym_pi(m, n)) == want

    def test_monotone_convergence_on_diagonal(self, p5000):
        c = build_c_table(1600)
        cache = AlphaCache(p5000)
        devs = []
        for L in (10, 20, 30, 40):
            v = pi_value(L * L, L * L, c, p5000, cache)
            devs.append(abs(ratio(v, asym_pi(L * L, L * L)) - 1))
        assert all(a > b for a, b in zip(devs, devs[1:]))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            asym_pi(0, 5)


class TestFormatting:
    def test_sci_small(self):
        assert sci_from_int(1) == "1.00000e0"
        assert sci_from_int(1234567) == "1.23457e6"

    def test_round_half_even(self):
        assert sci_from_int(1000005) == "1.00000e6"
        assert sci_from_int(1000015) == "1.00002e6"

    def test_sci_from_log_rollover(self):
        lv = LogValue(math.log(9.999999e9))
        assert sci_from_log(lv) == "1.00000e10"
