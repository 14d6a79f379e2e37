import pytest

from steadyparts.bipartite import (
    AlphaCache,
    EnumerationCapExceeded,
    ProductCapExceeded,
    SteadyPair,
    alpha,
    build_pi_table,
    d_value,
    d_value_by_difference,
    enumerate_steady,
    gf_table,
    pi_value,
)
from steadyparts.crank import build_crank_table
from steadyparts.partitions import build_c_table, build_p_table


@pytest.fixture(scope="module")
def p_table():
    return build_p_table(200)


@pytest.fixture(scope="module")
def c_table():
    return build_c_table(200)


@pytest.fixture(scope="module")
def crank60():
    return build_crank_table(60)


@pytest.fixture(scope="module")
def cache(p_table):
    return AlphaCache(p_table)


class TestAlpha:
    def test_k_zero(self, p_table):
        for s in range(10):
            assert alpha(s, 0, p_table) == 1

    def test_small_values(self, p_table):
        assert alpha(0, 1, p_table) == 0  # p(1) - p(0)
        assert alpha(1, 2, p_table) == 1  # p(2) - p(0)

    def test_short_table_raises(self):
        with pytest.raises(IndexError):
            alpha(0, 11, build_p_table(10))


class TestEnumerate:
    def test_empty_bipartite_number(self):
        assert enumerate_steady(0, 0)[0] == 1

    def test_one_sided(self):
        for k in range(1, 8):
            assert enumerate_steady(0, k)[0] == 1
            assert enumerate_steady(k, 0)[0] == 1

    def test_two_one(self):
        count, pairs = enumerate_steady(2, 1, collect=True)
        assert count == 2
        witnesses = {p.parts for p in pairs}
        assert witnesses == {(((2, 1)),), ((1, 1), (1, 0))}

    def test_collected_pairs_are_valid(self):
        for m in range(5):
            for n in range(5):
                count, pairs = enumerate_steady(m, n, collect=True)
                assert count == len(pairs)
                for sp in pairs:
                    assert sp.is_valid()
                    assert sp.weight() == (m, n)

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            enumerate_steady(30, 30, cap=40)

    def test_steady_pair_rejects_violation(self):
        assert not SteadyPair(((1, 0), (1, 1))).is_valid()
        assert not SteadyPair(((1, 1), (0, 0))).is_valid()


class TestPiValue:
    def test_edges(self, c_table, p_table):
        for k in range(15):
            assert pi_value(0, k, c_table, p_table) == 1
            assert pi_value(k, 0, c_table, p_table) == 1

    def test_two_one(self, c_table, p_table):
        assert pi_value(2, 1, c_table, p_table) == 2

    def test_table1_leading_digits(self):
        from steadyparts.formatting import sci_from_int

        p = build_p_table(100)
        c = build_c_table(100)
        assert sci_from_int(pi_value(100, 100, c, p)) == "2.02082e13"

    def test_symmetry(self, c_table, p_table, cache):
        for m in range(25):
            for n in range(m):
                assert pi_value(m, n, c_table, p_table, cache) == pi_value(
                    n, m, c_table, p_table, cache
                )


class TestThreeWayAgreement:
    def test_box_ten(self, c_table, p_table, cache):
        g = gf_table(10, 10)
        for m in range(11):
            for n in range(11):
                conv = pi_value(m, n, c_table, p_table, cache)
                assert conv == g.pi(m, n), (m, n)
                assert conv == enumerate_steady(m, n)[0], (m, n)

    def test_build_pi_table_matches_gf(self, c_table, p_table):
        t = build_pi_table(12, 12, c_table, p_table)
        g = gf_table(12, 12)
        for m in range(13):
            for n in range(13):
                assert t.pi(m, n) == g.pi(m, n)

    def test_gf_cap(self):
        with pytest.raises(ProductCapExceeded):
            gf_table(61, 61)


class TestDValue:
    def test_first_column(self, c_table, crank60):
        for n in range(0, 61, 5):
            assert d_value(0, n, c_table, crank60) == 1

    def test_one_one(self, c_table, crank60):
        assert d_value(1, 1, c_table, crank60) == 0

    def test_vanishing_beyond_2n(self, c_table, crank60):
        assert d_value(5, 2, c_table, crank60) == 0
        for n in range(31):
            for m in range(2 * n + 1, 3 * n + 1):
                assert d_value(m, n, c_table, crank60) == 0

    def test_identity_against_difference(self, c_table, p_table, crank60, cache):
        for n in range(41):
            for m in range(3 * n + 1):
                assert d_value(m, n, c_table, crank60) == d_value_by_difference(
                    m, n, c_table, p_table, cache
                ), (m, n)

    def test_telescoping(self, c_table, p_table, crank60, cache):
        for n in range(61):
            running = 0
            for m in range(2 * n + 1):
                running += d_value(m, n, c_table, crank60)
                assert running == pi_value(m, n, c_table, p_table, cache), (m, n)

    def test_three_regimes_match_unified_formula(self, c_table, crank60):
        # the piecewise forms for 0<=m<=n, n<=m<=2n and m>2n all reduce to
        # the single L = min(2n-m, m) convolution
        def regime(m, n):
            if m > 2 * n:
                return 0
            if m <= n:
                L = m
            else:
                L = 2 * n - m
            return sum(
                c_table.c(L - k) * crank60.value(n - L, n - L + k) for k in range(L + 1)
            )

        for n in range(31):
            for m in range(3 * n + 1):
                assert regime(m, n) == d_value(m, n, c_table, crank60)
