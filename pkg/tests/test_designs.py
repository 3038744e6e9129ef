"""Estimator-style design classes."""

import numpy as np
import pytest

from igrand import ClusterMap, MaxMahalanobis, RngSpec, SumMaxAbsSmd, ValidationError
from igrand.datasets import gen_students
from igrand.designs import (
    ClusterRandomization,
    CompleteRandomization,
    GroupFormationRandomization,
    InspectionGuidedDesign,
)
from igrand.metrics import DesiredComps, FracCtrlExposed


class TestEstimatorConventions:
    def test_get_set_params_roundtrip(self):
        d = InspectionGuidedDesign(m_pool=500, m_accept=50, seed=3)
        params = d.get_params()
        assert params["m_pool"] == 500
        clone = InspectionGuidedDesign(**params)
        assert clone.get_params() == params
        d.set_params(m_accept=20)
        assert d.m_accept == 20

    def test_set_params_rejects_unknown(self):
        with pytest.raises(ValidationError, match="invalid parameter"):
            CompleteRandomization().set_params(bogus=1)

    def test_unfitted_raises(self):
        with pytest.raises(ValidationError, match="not fitted"):
            CompleteRandomization().sample()

    def test_repr_shows_params(self):
        assert "m_pool=77" in repr(CompleteRandomization(m_pool=77))


class TestBenchmarkDesigns:
    def test_complete_fit_sample(self):
        d = CompleteRandomization(m_pool=50, seed=1).fit(n=8)
        assert d.design_.n_accepted == 50
        d.lock()
        z = d.sample()
        assert z.labels.sum() == 4

    def test_cluster_fit(self):
        cmap = ClusterMap(np.repeat(np.arange(4), 3))
        d = ClusterRandomization(m_pool=20, seed=2).fit(cmap)
        assert d.pool_.level == "cluster"
        units = d.design_.accepted_unit_matrix(cmap)
        assert units.shape == (20, 12)

    def test_group_formation_fit(self):
        from igrand import MetricContext

        x = gen_students(40, "fixed_half", RngSpec(3))
        d = GroupFormationRandomization(comps=[0.5], group_size=20, m_pool=30, seed=4).fit(x)
        assert len(d.pool_) == 30
        gate = DesiredComps().score_pool(d.pool_, MetricContext(covariates=x, comps=[0.5]))
        assert (gate == 1.0).all()


class TestInspectionGuidedDesign:
    def test_balance_design_end_to_end(self):
        x = gen_students(16, "bernoulli_07", RngSpec(5))
        d = InspectionGuidedDesign(
            metrics=[SumMaxAbsSmd(exclude_salient=False)],
            m_pool=400,
            m_accept=20,
            mirrors=True,
            seed=6,
        ).fit(x)
        design = d.design_
        assert design.n_accepted >= 20
        # mirror closure: every unit treated in exactly half the accepted set
        z = design.accepted_unit_matrix()
        assert (2 * z.sum(axis=0) == design.n_accepted).all()
        # accepted originals have the best scores
        assert design.scores[design.accept_mask].min() == design.scores.min()

    def test_accepted_better_than_rejected(self):
        x = gen_students(12, "bernoulli_07", RngSpec(7))
        d = InspectionGuidedDesign(
            metrics=[MaxMahalanobis(exclude_salient=False)],
            m_pool=200,
            m_accept=10,
            mirrors=False,
            seed=8,
        ).fit(x)
        design = d.design_
        accepted = design.scores[design.accept_mask]
        rejected = design.scores[~design.accept_mask]
        assert accepted.max() <= rejected[np.isfinite(rejected)].min()

    def test_gated_group_design(self):
        x = gen_students(40, "fixed_half", RngSpec(9))
        d = InspectionGuidedDesign(
            metrics=[SumMaxAbsSmd(), DesiredComps()],
            base="group_formation",
            comps=[0.7, 0.3],
            group_size=10,
            m_pool=300,
            m_accept=12,
            seed=10,
        ).fit(x)
        assert d.fitness_.aggregator == "gated"
        assert d.design_.n_accepted >= 12
        assert np.isfinite(d.design_.scores[d.design_.accept_mask]).all()

    def test_weighted_interference_design(self):
        gen = np.random.default_rng(11)
        n = 20
        adjacency = (gen.random((n, n)) < 0.2).astype(int)
        adjacency = np.triu(adjacency, 1)
        adjacency = adjacency + adjacency.T
        coords = gen.uniform(0, 1, size=(n, 2))
        x = gen_students(n, "bernoulli_07", RngSpec(12))
        d = InspectionGuidedDesign(
            metrics=[MaxMahalanobis(exclude_salient=False), FracCtrlExposed()],
            weights=[0.25, 0.75],
            m_pool=300,
            m_accept=10,
            mirrors=False,
            seed=13,
        ).fit(x, adjacency=adjacency, coords=coords)
        assert d.fitness_.aggregator == "weighted_sum"
        assert d.design_.n_accepted == 10
        assert d.metric_scores_.shape[1] == 2

    def test_metric_scores_cover_appended_mirrors(self):
        x = gen_students(10, "bernoulli_07", RngSpec(14))
        d = InspectionGuidedDesign(
            metrics=[SumMaxAbsSmd(exclude_salient=False)],
            m_pool=100,
            m_accept=6,
            mirrors=True,
            seed=15,
        ).fit(x)
        assert d.metric_scores_.shape[0] == len(d.pool_)

    def test_deterministic_refit(self):
        x = gen_students(12, "bernoulli_07", RngSpec(16))
        kwargs = dict(
            metrics=[SumMaxAbsSmd(exclude_salient=False)], m_pool=150, m_accept=8, seed=17
        )
        a = InspectionGuidedDesign(**kwargs).fit(x)
        b = InspectionGuidedDesign(**kwargs).fit(x)
        assert np.array_equal(a.design_.pool.labels, b.design_.pool.labels)
        assert np.array_equal(a.design_.accept_mask, b.design_.accept_mask)
        assert a.design_.compute_hash() == b.design_.compute_hash()

    def test_lock_then_sample(self):
        x = gen_students(10, "bernoulli_07", RngSpec(18))
        d = InspectionGuidedDesign(
            metrics=[SumMaxAbsSmd(exclude_salient=False)], m_pool=80, m_accept=4, seed=19
        ).fit(x)
        with pytest.raises(ValidationError):
            d.sample()
        d.lock()
        z1 = d.sample(RngSpec(20))
        z2 = d.sample(RngSpec(20))
        assert np.array_equal(z1.labels, z2.labels)

    def test_diagnose_report(self):
        x = gen_students(12, "bernoulli_07", RngSpec(21))
        d = InspectionGuidedDesign(
            metrics=[SumMaxAbsSmd(exclude_salient=False), MaxMahalanobis(exclude_salient=False)],
            weights=[0.5, 0.5],
            m_pool=150,
            m_accept=10,
            mirrors=False,
            seed=22,
        ).fit(x)
        report = d.diagnose()
        assert report.n_accepted == 10
        assert report.tradeoffs
