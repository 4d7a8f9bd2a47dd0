import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

import netreplica as nr
from netreplica.errors import NotGraphicalError
from netreplica.models import (
    SOCIAL_PRESET_INITIATOR,
    BarabasiAlbertGenerator,
    BarabasiAlbertParams,
    ChungLuGenerator,
    ChungLuParams,
    EdgeSwitchingGenerator,
    ErdosRenyiGenerator,
    ErdosRenyiParams,
    RmatGenerator,
    RmatParams,
    expected_power_law_mean,
    havel_hakimi,
)

from _oracles import bisect_power_law_exponent, random_simple_graph


class TestFitting:
    def test_er_social62(self, social62):
        params = nr.fit(social62, "er")
        assert params.n == 62
        assert params.p == pytest.approx(318 / 3782, abs=1e-15)

    def test_er_scaling(self, social62):
        params = nr.fit(social62, "er", scale=4)
        assert params.n == 248
        assert params.p == pytest.approx(2 * 159 / (4 * 62 * 61), abs=1e-15)

    def test_ba_social62(self, social62):
        params = nr.fit(social62, "ba")
        assert (params.n, params.k) == (62, 2)

    def test_rmat_social62(self, social62):
        params = nr.fit(social62, "rmat", initiator="preset")
        assert (params.s, params.e) == (6, 2)
        assert (params.a, params.b, params.c, params.d) == SOCIAL_PRESET_INITIATOR

    def test_rmat_scaled_depth(self, social62):
        params = nr.fit(social62, "rmat", scale=2, initiator="preset")
        assert params.s == 7  # ceil(log2(124))
        assert params.n == 124

    def test_cl_concatenation(self):
        g = nr.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        degrees = tuple(nr.degree_sequence(g))
        params = nr.fit(g, "cl", scale=2)
        assert params.degrees == degrees * 2

    def test_esmc_concatenation(self, social62):
        params = nr.fit(social62, "esmc", scale=3)
        assert params.degrees == tuple(nr.degree_sequence(social62)) * 3

    def test_unsupported_kind(self, social62):
        with pytest.raises(ValueError):
            nr.fit(social62, "bter")

    def test_requires_nonempty(self):
        with pytest.raises(ValueError):
            nr.fit(nr.Graph.from_edges(3, []), "er")

    def test_fit_is_pure(self, social62):
        a = nr.fit(social62, "er", scale=2)
        b = nr.fit(social62, "er", scale=2)
        assert a == b

    def test_hudg_reference_row(self, social62):
        params = nr.fit(social62, "hudg")
        assert params.avg_degree == pytest.approx(2 * 159 / 62)
        assert params.gamma >= 2.1

    def test_lfr_reference_row(self, social62):
        params = nr.fit(social62, "lfr", seed=1)
        assert params.n == 62
        assert -6.0 <= params.gamma <= -1.0
        assert params.d_min >= 1
        assert params.c_min >= 1
        assert 0.0 <= params.mu <= 1.0

    def test_random_initiator_is_stochastic_and_seeded(self, social62):
        a = nr.fit(social62, "rmat", seed=5)
        b = nr.fit(social62, "rmat", seed=5)
        c = nr.fit(social62, "rmat", seed=6)
        assert (a.a, a.b, a.c, a.d) == (b.a, b.b, b.c, b.d)
        assert (a.a, a.b, a.c, a.d) != (c.a, c.b, c.c, c.d)
        assert a.a + a.b + a.c + a.d == pytest.approx(1.0, abs=1e-12)


class TestErdosRenyi:
    def test_p_one_gives_complete(self):
        g = nr.gen_er(ErdosRenyiParams(3, 1.0), seed=0)
        assert g.m == 3

    def test_p_zero_gives_edgeless(self):
        g = nr.gen_er(ErdosRenyiParams(100, 0.0), seed=0)
        assert g.m == 0

    def test_edge_count_moments(self, social62):
        params = nr.fit(social62, "er")
        total_pairs = 62 * 61 // 2
        runs = 1000
        counts = [nr.gen_er(params, seed=s).m for s in range(runs)]
        mean = sum(counts) / runs
        expected = total_pairs * params.p
        sigma = math.sqrt(total_pairs * params.p * (1 - params.p))
        assert abs(mean - expected) < 4 * sigma / math.sqrt(runs)
        var = sum((c - mean) ** 2 for c in counts) / (runs - 1)
        assert abs(var - sigma**2) < 4 * sigma**2 * math.sqrt(2 / (runs - 1))

    def test_simple_and_deterministic(self):
        params = ErdosRenyiParams(50, 0.1)
        a = nr.gen_er(params, seed=3)
        b = nr.gen_er(params, seed=3)
        assert a == b
        a.validate()


class TestBarabasiAlbert:
    def test_tree_with_k1(self):
        g = nr.gen_ba(BarabasiAlbertParams(5, 1), seed=0)
        assert g.m == 5 - 1  # 1-clique seed is a single node; every node adds one edge

    def test_closed_form_edge_count(self):
        for n, k in [(4, 2), (10, 2), (20, 3), (62, 2)]:
            g = nr.gen_ba(BarabasiAlbertParams(n, k), seed=1)
            assert g.m == k * (k + 1) // 2 + (n - k - 1) * k
            g.validate()

    def test_seed_clique_only(self):
        g = nr.gen_ba(BarabasiAlbertParams(3, 2), seed=0)
        assert g.m == 3

    def test_too_few_nodes(self):
        with pytest.raises(ValueError):
            nr.gen_ba(BarabasiAlbertParams(2, 2), seed=0)


class TestChungLu:
    def test_zero_degrees(self):
        g = nr.gen_cl(ChungLuParams((0, 0, 0)), seed=0)
        assert g.m == 0

    def test_pair_probability_half(self):
        # d = [1, 1]: edge probability 1 * 1 / 2
        hits = sum(
            nr.gen_cl(ChungLuParams((1, 1)), seed=s).m for s in range(2000)
        )
        assert abs(hits / 2000 - 0.5) < 0.05

    def test_expected_edges_social62(self, social62):
        params = nr.fit(social62, "cl")
        runs = 100
        mean = sum(nr.gen_cl(params, seed=s).m for s in range(runs)) / runs
        # independent Bernoulli sum: E[m] ~= m with clamped probabilities
        sigma = math.sqrt(159)  # coarse upper bound on the std of the sum
        assert abs(mean - 159) < 3 * sigma

    def test_clamp_warning(self, caplog):
        import logging

        with caplog.at_level(logging.WARNING):
            nr.gen_cl(ChungLuParams((5, 1, 1, 1)), seed=0)
        assert any("clamped" in rec.message for rec in caplog.records)


class TestEdgeSwitchingChain:
    def test_unique_realizations(self):
        assert set(nr.gen_esmc([1, 1], seed=0).edges()) == {(0, 1)}
        assert nr.gen_esmc([2, 2, 2], seed=0).m == 3

    def test_non_graphical_rejected(self):
        with pytest.raises(NotGraphicalError):
            nr.gen_esmc([3, 1], seed=0)

    def test_exact_degrees_on_social62(self, social62):
        degrees = nr.degree_sequence(social62)
        g = nr.gen_esmc(degrees, seed=7)
        assert nr.degree_sequence(g) == degrees
        g.validate()

    @given(st.integers(min_value=2, max_value=11), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_exact_degrees_property(self, n, seed):
        # graphical by construction: degrees of a sampled graph
        rng = random.Random(seed)
        _, edges = random_simple_graph(rng, n, 0.4)
        degrees = [0] * n
        for u, v in edges:
            degrees[u] += 1
            degrees[v] += 1
        g = nr.gen_esmc(degrees, seed=seed)
        assert nr.degree_sequence(g) == degrees
        g.validate()


class TestHavelHakimi:
    def test_realizes_exactly(self):
        degrees = [3, 3, 2, 2, 2]
        edges = havel_hakimi(degrees)
        got = [0] * 5
        for u, v in edges:
            got[u] += 1
            got[v] += 1
        assert got == degrees

    def test_is_graphical(self):
        assert nr.is_graphical([2, 2, 2])
        assert not nr.is_graphical([3, 1])
        assert not nr.is_graphical([1])  # odd sum
        assert not nr.is_graphical([3, 3, 1, 1])
        assert nr.is_graphical([])


class TestRmat:
    def test_single_node(self):
        params = RmatParams(s=0, e=2, a=1.0, b=0.0, c=0.0, d=0.0, n=1)
        g = nr.gen_rmat(params, seed=0)
        assert (g.n, g.m) == (1, 0)

    def test_node_deletion_and_bound(self):
        a, b, c, d = SOCIAL_PRESET_INITIATOR
        params = RmatParams(s=6, e=2, a=a, b=b, c=c, d=d, n=62)
        g = nr.gen_rmat(params, seed=1)
        assert g.n == 62
        assert g.m <= 128
        g.validate()

    def test_diagonal_initiator_all_self_loops(self):
        params = RmatParams(s=1, e=3, a=0.5, b=0.0, c=0.0, d=0.5, n=2)
        g = nr.gen_rmat(params, seed=0)
        assert g.m == 0

    def test_bad_initiator_rejected(self):
        with pytest.raises(ValueError):
            RmatParams(s=3, e=1, a=0.5, b=0.5, c=0.5, d=0.5, n=8)
        with pytest.raises(ValueError):
            RmatParams(s=3, e=1, a=-0.1, b=0.5, c=0.3, d=0.3, n=8)

    def test_target_exceeding_capacity_rejected(self):
        with pytest.raises(ValueError):
            RmatParams(s=2, e=1, a=0.25, b=0.25, c=0.25, d=0.25, n=5)


class TestPowerLawFit:
    def test_degenerate_constant(self):
        fit = nr.plfit([5, 5, 5, 5])
        assert fit.degenerate
        assert (fit.d_min, fit.d_max) == (5, 5)
        assert fit.gamma == -3.0

    def test_interval_example(self):
        # mean 1.5 on [1, 3]
        fit = nr.plfit([1, 1, 1, 3])
        assert -1.43 < fit.gamma < -1.42

    def test_matches_independent_root_finder(self):
        fit = nr.plfit([1, 1, 1, 3])
        oracle = bisect_power_law_exponent(1.5, 1, 3)
        assert abs(fit.gamma - oracle) <= 1e-3

    def test_clamped_high_mean(self):
        # mean 2.0 unreachable on [1, 3]: E[-1] ~ 1.636
        fit = nr.plfit([1, 2, 3, 2])
        assert fit.gamma == -1.0
        assert not fit.degenerate

    def test_monotone_expected_mean(self):
        values = [expected_power_law_mean(g / 10.0, 1, 20) for g in range(-60, -9)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_requires_positive(self):
        with pytest.raises(ValueError):
            nr.plfit([0, 1, 2])

    @given(st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=40))
    @settings(max_examples=60, deadline=None)
    def test_fit_invariants(self, degrees):
        fit = nr.plfit(degrees)
        assert -6.0 <= fit.gamma <= -1.0
        assert 1 <= fit.d_min <= fit.d_max
        assert fit.degenerate == (fit.d_min == fit.d_max)


class TestCommunitySizeFit:
    def test_degenerate(self):
        fit = nr.plfit_star([5, 5, 5])
        assert fit.degenerate
        assert (fit.c_min, fit.c_max) == (5, 5)

    def test_minimum_raised_when_mean_unreachable(self):
        # mean 18 on [2, 50]: E[-1] ~ 14.0, so c_min must rise above 2
        fit = nr.plfit_star([2, 2, 50])
        assert fit.beta == -1.0
        assert fit.c_min > 2
        # raised minimum picks the integer whose expected mean is closest to 18
        candidates = {
            c: expected_power_law_mean(-1.0, c, 50) for c in range(2, 51)
        }
        best = min(candidates, key=lambda c: abs(candidates[c] - 18.0))
        assert fit.c_min == best

    def test_reachable_mean_keeps_minimum(self):
        oracle = bisect_power_law_exponent(3.0, 2, 4)
        assert oracle > -6.0  # mean 3 on [2, 4] is attainable
        fit = nr.plfit_star([2, 3, 4])
        assert fit.c_min == 2
        assert abs(fit.beta - oracle) <= 1e-3


class TestEstimators:
    @pytest.mark.parametrize(
        "cls",
        [
            ErdosRenyiGenerator,
            BarabasiAlbertGenerator,
            ChungLuGenerator,
            EdgeSwitchingGenerator,
            RmatGenerator,
        ],
    )
    def test_fit_generate_surface(self, cls, social62):
        gen = cls(scale=1, seed=4)
        replica = gen.fit(social62).generate()
        assert replica.n >= 1
        replica.validate()
        assert "scale" in gen.get_params()
        dup = clone(gen)
        assert dup.get_params() == gen.get_params()

    def test_unfitted_raises(self):
        with pytest.raises(NotFittedError):
            ErdosRenyiGenerator().generate()

    def test_esmc_estimator_preserves_degrees(self, social62):
        replica = EdgeSwitchingGenerator(scale=2, seed=1).fit_generate(social62)
        assert sorted(nr.degree_sequence(replica)) == sorted(
            nr.degree_sequence(social62) * 2
        )

    def test_rmat_estimator_initiator_param(self, social62):
        gen = RmatGenerator(seed=2, initiator="preset").fit(social62)
        assert gen.params_.a == SOCIAL_PRESET_INITIATOR[0]
