from __future__ import annotations

import pytest

from kextend import (
    CorpusSpec,
    GraphParseError,
    cycle_graph,
    from_edges,
    generate_corpus,
    path_graph,
    run_corpus,
    to_graph6,
)
from kextend.verifier import (
    HOLDS,
    INAPPLICABLE,
    PROPERTY_IDS,
    VIOLATED,
    PropertyOutcome,
    _fold,
    report_json,
    verify_bipartite_characterization,
    verify_connectivity_bound,
    verify_extendibility_profile,
    verify_koenig_ore,
    verify_monotonicity,
    verify_one_ext_two_conn,
    verify_peeling,
)


class TestGenerateCorpus:
    def test_exhaustive_counts(self):
        assert sum(1 for _ in generate_corpus(
            CorpusSpec(mode="exhaustive", n=3))) == 8
        assert sum(1 for _ in generate_corpus(
            CorpusSpec(mode="exhaustive", n=4))) == 64

    def test_exhaustive_bound(self):
        with pytest.raises(ValueError):
            list(generate_corpus(CorpusSpec(mode="exhaustive", n=8)))

    def test_random_reproducible(self):
        spec = CorpusSpec(mode="random", n=10, count=50, seed=1)
        first = [to_graph6(g) for g in generate_corpus(spec)]
        second = [to_graph6(g) for g in generate_corpus(spec)]
        assert first == second and len(first) == 50

    def test_random_needs_count(self):
        with pytest.raises(ValueError):
            list(generate_corpus(CorpusSpec(mode="random", n=5, count=0)))

    def test_external_round_trip(self, tmp_path):
        lines = [to_graph6(cycle_graph(n)) for n in (3, 4, 5)]
        path = tmp_path / "corpus.g6"
        path.write_text("\n".join(lines) + "\n")
        spec = CorpusSpec(mode="external", source=str(path))
        assert [to_graph6(g) for g in generate_corpus(spec)] == lines

    def test_external_strict_aborts_with_line(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("A_\n~~~bogus\nA?\n")
        with pytest.raises(GraphParseError) as exc:
            list(generate_corpus(CorpusSpec(mode="external",
                                            source=str(path))))
        assert exc.value.line == 2

    def test_external_lenient_skips(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("A_\n~~~bogus\nA?\n")
        spec = CorpusSpec(mode="external", source=str(path), strict=False)
        assert len(list(generate_corpus(spec))) == 2


class TestPropertyChecks:
    def test_monotonicity(self, c4, k33, k13):
        assert verify_monotonicity(c4, 2).status == HOLDS
        assert verify_monotonicity(k13, 2).status == INAPPLICABLE
        assert verify_monotonicity(k33, 3).status == HOLDS

    def test_one_ext_two_conn(self, c4, c6, p4):
        assert verify_one_ext_two_conn(c6).status == HOLDS
        assert verify_one_ext_two_conn(p4).status == INAPPLICABLE
        assert verify_one_ext_two_conn(c4).status == HOLDS

    def test_peeling(self, k33, k44, c8):
        assert verify_peeling(k33, 2).status == HOLDS
        assert verify_peeling(c8, 2).status == INAPPLICABLE
        assert verify_peeling(k44, 2).status == HOLDS
        with pytest.raises(ValueError):
            verify_peeling(k33, 1)

    def test_connectivity_bound(self, k33, c6, p4):
        assert verify_connectivity_bound(k33, 2).status == HOLDS
        assert verify_connectivity_bound(c6, 1).status == HOLDS
        assert verify_connectivity_bound(p4, 3).status == INAPPLICABLE

    def test_bipartite_characterization(self, c8, k44):
        assert verify_bipartite_characterization(c8, 2).status == HOLDS
        assert verify_bipartite_characterization(k44, 3).status == HOLDS
        split = from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
                               (5, 0), (6, 7)])
        out = verify_bipartite_characterization(split, 2)
        assert out.status == INAPPLICABLE
        assert out.detail == {"reason": "not connected"}

    def test_koenig_ore(self, k13, c6):
        assert verify_koenig_ore(k13).status == HOLDS
        assert verify_koenig_ore(c6).status == HOLDS
        assert verify_koenig_ore(cycle_graph(3)).status == INAPPLICABLE

    def test_extendibility_profile(self, c4, p4):
        assert verify_extendibility_profile(c4).status == HOLDS
        assert verify_extendibility_profile(p4).status == HOLDS
        assert verify_extendibility_profile(
            path_graph(3)).status == INAPPLICABLE


class TestRunCorpus:
    def test_exhaustive_n4_zero_violations(self):
        report = run_corpus(CorpusSpec(mode="exhaustive", n=4),
                            PROPERTY_IDS, kmax=2)
        assert report.graphs_processed == 64
        assert report.violations == ()
        for tally in report.properties.values():
            assert sum(tally.values()) == 64

    def test_random_small_zero_violations(self):
        report = run_corpus(CorpusSpec(mode="random", n=8, count=40, seed=3),
                            PROPERTY_IDS, kmax=3)
        assert report.graphs_processed == 40
        assert report.violations == ()

    def test_empty_property_set_rejected(self):
        with pytest.raises(ValueError):
            run_corpus(CorpusSpec(mode="exhaustive", n=3), ())

    def test_unknown_property_rejected(self):
        with pytest.raises(ValueError):
            run_corpus(CorpusSpec(mode="exhaustive", n=3), ("P99",))

    def test_worker_count_does_not_change_report(self):
        spec = CorpusSpec(mode="random", n=9, count=30, seed=12)
        serial = run_corpus(spec, PROPERTY_IDS, kmax=2, workers=1)
        parallel = run_corpus(spec, PROPERTY_IDS, kmax=2, workers=2)
        assert report_json(serial) == report_json(parallel)

    def test_note_flags_level_zero_convention(self):
        spec = CorpusSpec(mode="exhaustive", n=3)
        with_note = run_corpus(spec, ("P21",), kmax=1)
        without = run_corpus(spec, ("KO",), kmax=1)
        assert with_note.notes and not without.notes

    def test_report_json_shape(self):
        report = run_corpus(CorpusSpec(mode="exhaustive", n=3),
                            ("KO", "P22"), kmax=1)
        doc = report_json(report)
        assert doc["tool"] == "kextend"
        assert doc["corpus"] == {"mode": "exhaustive", "n": 3}
        assert set(doc["properties"]) == {"KO", "P22"}
        assert doc["wall_time_ms"] is None
        timed = report_json(report, include_timing=True)
        assert timed["wall_time_ms"] > 0


class TestViolationPlumbing:
    def test_fold_collects_payloads(self):
        outcomes = [
            (0, [PropertyOutcome("P21", 0, "Cl", HOLDS)]),
            (1, [PropertyOutcome("P21", 1, "Ch", VIOLATED,
                                 {"k": 1, "certificate": {}})]),
        ]
        tallies = {"P21": {HOLDS: 0, VIOLATED: 0, INAPPLICABLE: 0}}
        violations: list = []
        assert _fold(iter(outcomes), tallies, violations) == 2
        assert tallies["P21"] == {HOLDS: 1, VIOLATED: 1, INAPPLICABLE: 0}
        assert violations == [{
            "property": "P21",
            "graph_index": 1,
            "graph6": "Ch",
            "payload": {"k": 1, "certificate": {}},
        }]
