import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abcindex import indexmath as im
from abcindex.graph import complete, disjoint_union, empty, from_edges, from_mask, join, path, star
from abcindex.indexmath import DomainError, abc_index, big_f, big_h, bridge_value, claim_holds, f, g, gap, h, l


def test_f_of_two_is_constant():
    for x in (1, 2, 3, 17, 1000, 2.5):
        assert f(x, 2) == pytest.approx(math.sqrt(2) / 2, abs=1e-15)


def test_f_values():
    assert f(1, 1) == 0
    assert f(3, 3) == pytest.approx(2 / 3, abs=1e-15)


@given(st.floats(1, 1e4), st.floats(1, 1e4))
def test_f_symmetric(x, y):
    assert f(x, y) == pytest.approx(f(y, x), rel=1e-15)


@pytest.mark.parametrize("args", [(0, 1), (1, 0.5), (-3, 4)])
def test_f_domain(args):
    with pytest.raises(DomainError):
        f(*args)


def test_g_values():
    assert g(5, 2) == 0
    assert g(1, 1) == pytest.approx(math.sqrt(0.5), abs=1e-15)
    # sqrt(3/4) - sqrt(2/3)
    assert g(3, 1) == pytest.approx(0.0495288228567, abs=1e-12)


def test_big_f_values():
    assert big_f(1, 1) == pytest.approx(math.sqrt(0.5), abs=1e-15)
    assert big_f(2, 1) == pytest.approx(1.63299316186, abs=1e-10)
    # increasing-difference property at (x, y, m) = (3, 2, 1)
    assert big_f(4, 1) - big_f(3, 1) > big_f(2, 1) - big_f(1, 1)
    with pytest.raises(DomainError):
        big_f(0.5, 1)


def test_gap_values():
    assert gap(4, 2) == pytest.approx(math.sqrt(0.75) - math.sqrt(2) / 2, abs=1e-15)
    assert gap(4, 2) == pytest.approx(0.158918622, abs=1e-9)
    assert gap(3, 2) == pytest.approx(math.sqrt(2 / 3) - math.sqrt(2) / 2, abs=1e-15)
    assert gap(3, 2) == pytest.approx(0.1093897997, abs=1e-9)
    assert gap(10, 3) > 0
    with pytest.raises(DomainError):
        gap(2, 3)


class TestAbcIndex:
    def test_star(self):
        assert abc_index(star(5)) == pytest.approx(math.sqrt(12), abs=1e-12)

    def test_k4(self):
        assert abc_index(complete(4)) == pytest.approx(4.0, abs=1e-12)

    def test_k33(self):
        assert abc_index(join(empty(3), empty(3))) == pytest.approx(6.0, abs=1e-12)

    def test_triangle_closure(self):
        assert abc_index(path(3)) == pytest.approx(math.sqrt(2), abs=1e-15)
        assert abc_index(path(3).add_edge(0, 2)) == pytest.approx(3 * math.sqrt(2) / 2, abs=1e-15)

    @given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1),
                                                          st.permutations(range(n)))))
    def test_permutation_invariant(self, args):
        n, mask, perm = args
        gr = from_mask(n, mask)
        assert abc_index(gr) == pytest.approx(abc_index(gr.relabel(perm)), abs=1e-12)


class TestClaimHelpers:
    def test_h_values(self):
        # 8^1.5 - 3^1.5 - 7^1.5
        assert h(10, 3) == pytest.approx(8**1.5 - 3**1.5 - 7**1.5, abs=1e-12)
        assert h(10, 3) == pytest.approx(-1.08899460219, abs=1e-10)
        assert h(20, 4) > h(20, 3)
        assert h(4, 2) == pytest.approx(2**1.5 - 2 * 2**1.5) and h(4, 2) < 0

    def test_l_values(self):
        expect = math.sqrt(2) * 2 * (math.sqrt(18 / (3 * 17)) - math.sqrt(19 / (2 * 19)))
        assert l(20, 2, 3) == pytest.approx(expect, abs=1e-14)
        # margin of the claim equals (h - l)/sqrt(2) by rearrangement
        assert im.claim_margin(20, 2, 3) == pytest.approx((h(20, 3) - l(20, 2, 3)) / math.sqrt(2), abs=1e-12)
        assert l(20, 2, 4) < l(20, 2, 3)
        assert l(40, 5, 6) > l(40, 4, 5)

    def test_big_h_regrouped(self):
        # independent evaluation through the grouped form of the same polynomial
        def grouped(n, k):
            return (
                ((k**2 + k - 1) * n**5 - (8 * k**2 + 6 * k - 9) * n**4)
                + ((k**5 + 8 * k**4 + 19 * k**2 + 6 * k - 30) * n**3
                   - (24 * k**5 + 42 * k**4 + 2 * k**3 + 3 * k**2 - 20 * k - 46) * n**2)
                + ((57 * k**5 + 75 * k**4 - 10 * k**3 - 36 * k**2 - 39 * k - 33) * n
                   - (46 * k**5 + 37 * k**4 - 16 * k**3 - 27 * k**2 - 18 * k - 9))
                + (4 * k**5 * n**3 + k**6 * n**2 - (8 * k**7 + 6 * k**6) * n) + 4 * k**8 + 12 * k**7 - 3 * k**6
            )

        for n in range(1, 60):
            for k in range(1, 40):
                assert big_h(n, k) == grouped(n, k)

    def test_big_h_pins(self):
        assert big_h(20, 2) == 12667005
        assert big_h(20, 2) > 0
        assert all(big_h(23, k) > 0 for k in range(2, 11))
        assert isinstance(big_h(400, 199), int)

    def test_claim_points(self):
        # the inequality fails at n=10..13 with k=2, n1=3 (margin ~ -0.59 at n=10)
        assert not claim_holds(10, 2, 3)
        assert im.claim_margin(10, 2, 3) == pytest.approx(-0.590248705207, abs=1e-9)
        assert claim_holds(14, 2, 3)
        assert claim_holds(10, 3, 4)
        assert claim_holds(48, 23, 24)
        assert claim_holds(200, 50, 100)

    def test_claim_domain(self):
        with pytest.raises(DomainError):
            claim_holds(9, 2, 3)
        with pytest.raises(DomainError):
            claim_holds(20, 2, 11)
        with pytest.raises(DomainError):
            claim_holds(20, 1, 2)

    def test_claim_grid_agrees_with_scalar(self):
        res = im.claim_grid(10, 40)
        scalar_bad = [
            (n, k, n1)
            for n in range(10, 41)
            for k in range(2, n // 2)
            for n1 in range(k + 1, n // 2 + 1)
            if not claim_holds(n, k, n1)
        ]
        assert [v[:3] for v in res.violations] == scalar_bad


class TestBridge:
    @pytest.mark.parametrize("n", [6, 9, 12, 31])
    def test_symmetry(self, n):
        for x in range(2, n - 1):
            assert bridge_value(n, x) == pytest.approx(bridge_value(n, n - x), abs=1e-12)

    @pytest.mark.parametrize("n,x", [(6, 2), (6, 3), (8, 3), (11, 5), (12, 2)])
    def test_matches_built_graph(self, n, x):
        two = disjoint_union(complete(x), complete(n - x))
        bridged = two.add_edge(0, x)
        assert bridge_value(n, x) == pytest.approx(abc_index(bridged), abs=1e-12)

    def test_decreasing_example(self):
        assert bridge_value(10, 2) > bridge_value(10, 3) > bridge_value(10, 4) > bridge_value(10, 5)

    def test_domain(self):
        with pytest.raises(DomainError):
            bridge_value(6, 1)
        with pytest.raises(DomainError):
            bridge_value(6, 5)


class TestGridChecks:
    def test_inequality_grids_clean(self):
        for res in (im.check_f_monotonicity(), im.check_g_monotonicity(),
                    im.check_big_f_convexity(), im.check_gap_positive()):
            assert res.passed, res.violations[:5]
            assert res.checked > 10_000

    def test_grid_detects_violation(self):
        # passed is derived from the violation list, never stored separately
        res = im.GridCheckResult("x", {})
        assert res.passed
        res.violations.append((1,))
        assert not res.passed and res.to_dict()["passed"] is False

    def test_l_diagonal_and_h_l(self):
        assert im.check_l_diagonal_increasing().passed
        assert im.check_h_l_monotonicity(10, 80).passed

    def test_abc_uses_edge_weights(self):
        gr = from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
        d = gr.degrees()
        assert abc_index(gr) == pytest.approx(sum(f(d[u], d[v]) for u, v in gr.edges()), abs=1e-15)
