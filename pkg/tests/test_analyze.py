import numpy as np
import pytest

from bibnet import (
    IncidenceMatrix,
    ProjectionConfig,
    PublicationRecord,
    SynthConfig,
    UnitKind,
    contributions,
    count_link_pairs,
    derive_authorship,
    derive_citations_given,
    generate,
    project,
    rank_related,
    registry_from_corpus,
    sweep,
)
from bibnet.core import CountingScheme, IncidenceKind

from helpers import (
    WORKED_AUTHORSHIP_CORPUS,
    random_authorship_dense,
    worked_citation_matrix,
)


def authorship_from_dense(dense):
    n, m = dense.shape
    return IncidenceMatrix(dense, [f"u{i:02d}" for i in range(n)],
                           [f"p{k:02d}" for k in range(m)],
                           IncidenceKind.AUTHORSHIP)


def single_column_matrix(n_units):
    return authorship_from_dense(np.ones((n_units, 1), dtype=np.int64))


# Corpus for the micro decomposition example: two heavily cited items where
# unit A's citation counts dominate, a third unit absorbing the rest of the
# margins (30,798 and 4,930 total citations).
MICRO_COUNTS = [
    ("A", "k1", 8659),
    ("B", "k1", 2),
    ("D", "k1", 22137),
    ("A", "k2", 2687),
    ("B", "k2", 2),
    ("D", "k2", 2241),
]


def micro_corpus():
    records = []
    serial = 0
    for unit, item, count in MICRO_COUNTS:
        for _ in range(count):
            serial += 1
            records.append(
                PublicationRecord(f"r{serial:05d}", (unit,), references=(item,))
            )
    return records


def micro_matrix():
    corpus = micro_corpus()
    reg = registry_from_corpus(corpus, UnitKind.AUTHOR)
    return derive_citations_given(corpus, reg)


class TestCountLinkPairs:
    def test_151_unit_record(self):
        pubs, pairs = count_link_pairs(single_column_matrix(151))
        assert (pubs, pairs) == (1, 11_325)

    def test_single_unit_column_has_no_pairs(self):
        pubs, pairs = count_link_pairs(single_column_matrix(1))
        assert (pubs, pairs) == (0, 0)

    def test_matches_per_column_enumeration(self):
        rng = np.random.default_rng(51)
        dense = random_authorship_dense(rng, 14, 40)
        m = authorship_from_dense(dense)
        margins = dense.sum(axis=0)
        for threshold in [None, 2, 3, 5, 8]:
            expected_pubs = 0
            expected_pairs = 0
            for k in range(dense.shape[1]):
                n = int(margins[k])
                if n < 2 or (threshold is not None and n > threshold):
                    continue
                expected_pubs += 1
                expected_pairs += len(
                    [(i, j) for i in range(14) for j in range(i + 1, 14)
                     if dense[i, k] and dense[j, k]]
                )
            assert count_link_pairs(m, threshold) == (expected_pubs, expected_pairs)

    def test_requires_authorship(self):
        with pytest.raises(ValueError, match="authorship"):
            count_link_pairs(worked_citation_matrix())


class TestSweep:
    def test_desk_scale_hyperauthorship(self):
        # 99 two-author records plus one 46-author record
        dense = np.zeros((46, 100), dtype=np.int64)
        for k in range(99):
            dense[(2 * k) % 46, k] = 1
            dense[(2 * k + 1) % 46, k] = 1
        dense[:, 99] = 1
        m = authorship_from_dense(dense)
        row20, unbounded = sweep(m, [20])
        assert row20.publications_kept == 99
        assert row20.publications_pct == pytest.approx(99.0)
        assert row20.link_pairs_kept == 99
        total_pairs = 99 + 46 * 45 // 2
        assert unbounded.link_pairs_kept == total_pairs == 1134
        assert row20.link_pairs_pct == pytest.approx(100 * 99 / 1134, abs=1e-9)
        assert round(row20.link_pairs_pct, 1) == 8.7
        # fractional: each two-author record weighs 2, the big one 46
        assert row20.fractional_weight_kept == pytest.approx(198, abs=1e-9)
        assert unbounded.fractional_weight_kept == pytest.approx(244, abs=1e-9)

    def test_threshold_at_max_margin_equals_unbounded(self):
        rng = np.random.default_rng(52)
        dense = random_authorship_dense(rng, 10, 25)
        m = authorship_from_dense(dense)
        max_units = int(dense.sum(axis=0).max())
        row, unbounded = sweep(m, [max_units])
        assert row.publications_kept == unbounded.publications_kept
        assert row.link_pairs_kept == unbounded.link_pairs_kept
        assert row.fractional_weight_kept == pytest.approx(
            unbounded.fractional_weight_kept, abs=1e-9
        )
        assert (row.publications_pct, row.link_pairs_pct) == (100.0, 100.0)

    def test_synthetic_corpus_matches_dense_recomputation(self):
        corpus = generate(
            SynthConfig(seed=42, n_units=60, n_records=400, p_single=0.6,
                        geometric_mean_small=3.0, hyper_fraction=0.01,
                        hyper_size_range=(20, 30))
        )
        reg = registry_from_corpus(corpus, UnitKind.AUTHOR)
        m = derive_authorship(corpus, reg)
        dense = m.toarray()
        margins = dense.sum(axis=0)
        rows = sweep(m, [5, 10, 25])
        for row in rows:
            t = row.threshold if row.threshold is not None else margins.max()
            kept = margins <= t
            assert row.publications_kept == int(kept.sum())
            linkable = kept & (margins >= 2)
            assert row.link_pairs_kept == int(
                (margins[linkable] * (margins[linkable] - 1) // 2).sum()
            )
            assert row.fractional_weight_kept == pytest.approx(
                float(margins[linkable].sum()), abs=1e-9
            )

    def test_percentages_monotone(self):
        rng = np.random.default_rng(53)
        dense = random_authorship_dense(rng, 12, 30)
        rows = sweep(authorship_from_dense(dense), [2, 3, 4, 6, 12])
        for a, b in zip(rows, rows[1:]):
            assert a.publications_pct <= b.publications_pct
            assert a.link_pairs_pct <= b.link_pairs_pct
            assert a.fractional_weight_pct <= b.fractional_weight_pct
        assert rows[-1].publications_pct == 100.0

    def test_removing_a_column_removes_its_pairs_and_weight(self):
        dense = np.zeros((8, 3), dtype=np.int64)
        dense[:5, 0] = 1
        dense[:2, 1] = 1
        dense[2:8, 2] = 1
        m = authorship_from_dense(dense)
        row5, unbounded = sweep(m, [5])  # drops only the 6-unit column
        assert unbounded.link_pairs_kept - row5.link_pairs_kept == 6 * 5 // 2
        assert unbounded.fractional_weight_kept - row5.fractional_weight_kept == (
            pytest.approx(6, abs=1e-9)
        )

    def test_rejects_nonincreasing_thresholds(self):
        m = single_column_matrix(3)
        with pytest.raises(ValueError, match="strictly increasing"):
            sweep(m, [5, 5])
        with pytest.raises(ValueError, match="positive"):
            sweep(m, [0, 3])


class TestRankRelated:
    def test_worked_full_coauthorship(self):
        reg = registry_from_corpus(WORKED_AUTHORSHIP_CORPUS, UnitKind.AUTHOR)
        m = derive_authorship(WORKED_AUTHORSHIP_CORPUS, reg)
        net = project(m, ProjectionConfig(CountingScheme.FULL))
        assert rank_related(net, "R1", 3) == [("R3", 2.0, 1), ("R2", 1.0, 2)]

    def test_worked_fractional_coupling(self):
        net = project(
            worked_citation_matrix(), ProjectionConfig(CountingScheme.FRACTIONAL)
        )
        ranked = rank_related(net, "R5", 5)
        assert [(uid, rank) for uid, _, rank in ranked] == [
            ("R4", 1), ("R3", 2), ("R1", 3)
        ]
        assert ranked[0][1] == pytest.approx(1.0, abs=1e-12)
        assert ranked[1][1] == pytest.approx(2 / 3, abs=1e-12)
        assert ranked[2][1] == pytest.approx(1 / 3, abs=1e-12)

    def test_single_link_network(self):
        m = single_column_matrix(2)
        net = project(m, ProjectionConfig(CountingScheme.FULL))
        assert rank_related(net, "u00", 10) == [("u01", 1.0, 1)]

    def test_top_k_truncates(self):
        net = project(
            worked_citation_matrix(), ProjectionConfig(CountingScheme.FULL)
        )
        assert len(rank_related(net, "R1", 2)) == 2

    def test_ties_break_lexicographically(self):
        dense = np.ones((4, 1), dtype=np.int64)
        m = IncidenceMatrix(dense, ["z", "m", "a", "q"], ["p"],
                            IncidenceKind.AUTHORSHIP)
        net = project(m, ProjectionConfig(CountingScheme.FULL))
        assert [uid for uid, _, _ in rank_related(net, "m", 5)] == ["a", "q", "z"]

    def test_errors(self):
        net = project(worked_citation_matrix(), ProjectionConfig(CountingScheme.FULL))
        with pytest.raises(ValueError, match="unknown focal"):
            rank_related(net, "nobody", 3)
        with pytest.raises(ValueError, match="positive"):
            rank_related(net, "R1", 0)


class TestContributions:
    def test_micro_decomposition(self):
        m = micro_matrix()
        report = contributions(m, "A", "B")
        assert m.column_margin.tolist() == [30_798, 4_930]
        assert [row.item_id for row in report.rows] == ["k1", "k2"]
        first, second = report.rows
        assert (first.citations_from_a, first.citations_from_b) == (8659, 2)
        assert first.full_links == 17_318
        assert first.fractional_weight == pytest.approx(17_318 / 30_797, abs=1e-9)
        assert first.fractional_weight == pytest.approx(0.56, abs=0.005)
        assert second.full_links == 5_374
        assert second.fractional_weight == pytest.approx(5_374 / 4_929, abs=1e-9)
        assert second.fractional_weight == pytest.approx(1.09, abs=0.005)
        assert report.total_full_links == 17_318 + 5_374
        assert report.total_fractional_weight == pytest.approx(
            17_318 / 30_797 + 5_374 / 4_929, abs=1e-9
        )

    def test_lone_coupled_pair(self):
        dense = np.array([[1], [1]])
        m = IncidenceMatrix(dense, ["A", "B"], ["k"], IncidenceKind.CITATIONS_GIVEN)
        report = contributions(m, "A", "B")
        (row,) = report.rows
        assert row.full_links == 1
        assert row.fractional_weight == 1.0

    def test_totals_match_projected_weights(self):
        rng = np.random.default_rng(61)
        dense = rng.integers(0, 4, size=(6, 10)).astype(np.int64)
        ids = [f"u{i}" for i in range(6)]
        m = IncidenceMatrix(dense, ids, [f"p{k}" for k in range(10)],
                            IncidenceKind.CITATIONS_GIVEN)
        full = project(m, ProjectionConfig(CountingScheme.FULL))
        frac = project(m, ProjectionConfig(CountingScheme.FRACTIONAL))
        for a, b in [("u0", "u1"), ("u2", "u5"), ("u3", "u4")]:
            report = contributions(m, a, b)
            assert report.total_full_links == full.weight(a, b)
            assert report.total_fractional_weight == pytest.approx(
                frac.weight(a, b), abs=1e-9
            )

    def test_rows_sorted_by_full_links(self):
        dense = np.array([[1, 2, 3], [3, 2, 1]])
        m = IncidenceMatrix(dense, ["A", "B"], ["k1", "k2", "k3"],
                            IncidenceKind.CITATIONS_GIVEN)
        report = contributions(m, "A", "B")
        assert [row.full_links for row in report.rows] == [4, 3, 3]
        # ties broken by item id
        assert [row.item_id for row in report.rows] == ["k2", "k1", "k3"]

    def test_errors(self):
        m = micro_matrix()
        with pytest.raises(ValueError, match="unknown unit"):
            contributions(m, "A", "nobody")
        reg = registry_from_corpus(WORKED_AUTHORSHIP_CORPUS, UnitKind.AUTHOR)
        auth = derive_authorship(WORKED_AUTHORSHIP_CORPUS, reg)
        with pytest.raises(ValueError, match="citation"):
            contributions(auth, "R1", "R2")
