from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import (
    exhaustive_graphs,
    graphs,
    seeded_random_bipartite,
    seeded_random_graph,
)
from kextend import (
    AlternatingPath,
    Bipartition,
    Matching,
    augment,
    bipartition,
    cycle_graph,
    delete_vertices,
    enumerate_matchings,
    extends_to_perfect,
    find_augmenting_path,
    from_edges,
    has_perfect_matching,
    koenig_ore_deficiency,
    matching_number,
    maximum_matching,
    path_graph,
)
from kextend.matching import validate_matching
from kextend.oracles import (
    brute_force_deficiency,
    brute_force_matching_number,
    brute_force_maximum_matching,
    count_matchings_brute_force,
)
from kextend.rng import SplitMix64


class TestMatchingType:
    def test_canonicalizes(self):
        m = Matching.of([(3, 2), (0, 1)])
        assert m.edges == ((0, 1), (2, 3))
        assert m.vertices() == (0, 1, 2, 3)

    def test_rejects_shared_vertex(self):
        with pytest.raises(ValueError):
            Matching.of([(0, 1), (1, 2)])

    def test_rejects_non_edge_against_graph(self, c4):
        with pytest.raises(ValueError):
            validate_matching(c4, Matching.of([(0, 2)]))


class TestOracle:
    def test_known_sizes(self, c4, p4, k13):
        assert brute_force_matching_number(c4) == 2
        assert brute_force_matching_number(p4) == 2
        assert brute_force_matching_number(k13) == 1
        assert brute_force_matching_number(cycle_graph(7)) == 3

    def test_witness_is_a_maximum_matching(self):
        rng = SplitMix64(31)
        for _ in range(100):
            g = seeded_random_graph(9, rng)
            edges = brute_force_maximum_matching(g)
            m = Matching.of(edges)
            validate_matching(g, m)
            assert m.size == brute_force_matching_number(g)


class TestMaximumMatching:
    def test_examples(self, c4, k13):
        assert maximum_matching(c4).size == 2
        assert maximum_matching(k13).size == 1

    def test_deterministic(self, c6):
        assert maximum_matching(c6) == maximum_matching(cycle_graph(6))

    def test_exhaustive_oracle_agreement_small(self):
        for n in range(7):
            for g in exhaustive_graphs(n):
                m = maximum_matching(g)
                validate_matching(g, m)
                assert m.size == brute_force_matching_number(g)

    def test_random_oracle_agreement_n12(self):
        rng = SplitMix64(1729)
        for _ in range(200):
            g = seeded_random_graph(12, rng)
            assert maximum_matching(g).size == brute_force_matching_number(g)

    def test_odd_cycles_need_blossoms(self):
        # odd cycles and joined odd cycles exercise contraction
        for n in (3, 5, 7, 9):
            g = cycle_graph(n)
            assert maximum_matching(g).size == n // 2
        bowtie = from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4),
                                (2, 4)])
        assert maximum_matching(bowtie).size == brute_force_matching_number(
            bowtie) == 2


class TestAugmentingPath:
    def test_p4_unique_augmentation(self, p4):
        path = find_augmenting_path(p4, Matching.of([(1, 2)]))
        assert path == AlternatingPath((0, 1, 2, 3))

    def test_perfect_matching_has_none(self, c4):
        assert find_augmenting_path(c4, Matching.of([(0, 1), (2, 3)])) is None

    def test_invalid_matching_rejected(self, c4):
        with pytest.raises(ValueError):
            find_augmenting_path(c4, Matching.of([(0, 2)]))

    @given(graphs(max_n=10))
    @settings(max_examples=120)
    def test_berge_absent_iff_maximum(self, g):
        target = brute_force_matching_number(g)
        # walk a deterministic chain of matchings up from empty
        m = Matching.of([])
        while True:
            path = find_augmenting_path(g, m)
            if m.size == target:
                assert path is None
                break
            assert path is not None
            m = augment(g, m, path)

    def test_berge_on_seeded_submaximum_matchings(self):
        rng = SplitMix64(271828)
        for trial in range(400):
            g = seeded_random_graph(2 + trial % 9, rng)
            target = brute_force_matching_number(g)
            m = _random_matching(g, rng)
            path = find_augmenting_path(g, m)
            assert (path is None) == (m.size == target)


def _random_matching(g, rng) -> Matching:
    edges = list(g.edges())
    picked = []
    used = 0
    while edges:
        e = edges.pop(rng.next_below(len(edges)))
        pair = 1 << e[0] | 1 << e[1]
        if not used & pair and rng.next_float() < 0.7:
            picked.append(e)
            used |= pair
    return Matching.of(picked)


class TestAugment:
    def test_p4_example(self, p4):
        out = augment(p4, Matching.of([(1, 2)]), AlternatingPath((0, 1, 2, 3)))
        assert out == Matching.of([(0, 1), (2, 3)])

    def test_rejects_non_augmenting_path(self, p4):
        with pytest.raises(ValueError):
            augment(p4, Matching.of([(0, 1)]), AlternatingPath((0, 1, 2, 3)))
        with pytest.raises(ValueError):
            augment(p4, Matching.of([]), AlternatingPath((0, 1, 2)))

    def test_covered_set_identity_on_seeded_instances(self):
        # size grows by one and the covered set gains exactly the endpoints
        rng = SplitMix64(42)
        done = 0
        while done < 1000:
            g = seeded_random_graph(4 + done % 9, rng)
            m = _random_matching(g, rng)
            path = find_augmenting_path(g, m)
            if path is None:
                continue
            out = augment(g, m, path)
            validate_matching(g, out)
            assert out.size == m.size + 1
            endpoints = {path.vertices[0], path.vertices[-1]}
            assert set(out.vertices()) == set(m.vertices()) | endpoints
            done += 1


class TestEnumerateMatchings:
    def test_c4_counts(self, c4):
        assert sum(1 for _ in enumerate_matchings(c4, 1)) == 4
        assert [m.edges for m in enumerate_matchings(c4, 2)] == [
            ((0, 1), (2, 3)), ((0, 3), (1, 2))]

    def test_k33_size_two_count(self, k33):
        assert sum(1 for _ in enumerate_matchings(k33, 2)) == 18

    def test_size_zero_is_single_empty(self, c4):
        assert list(enumerate_matchings(c4, 0)) == [Matching.of([])]

    def test_above_maximum_is_empty(self, c4):
        assert list(enumerate_matchings(c4, 3)) == []

    @given(graphs(max_n=8))
    @settings(max_examples=60)
    def test_count_and_order_against_oracle(self, g):
        for k in range(4):
            out = list(enumerate_matchings(g, k))
            assert len(out) == count_matchings_brute_force(g, k)
            assert len(set(out)) == len(out)
            assert out == sorted(out, key=lambda m: m.edges)


class TestPerfectMatching:
    def test_examples(self, c6):
        assert has_perfect_matching(from_edges(2, [(0, 1)]))
        assert not has_perfect_matching(path_graph(3))
        assert has_perfect_matching(c6)

    def test_extends_c4(self, c4):
        assert extends_to_perfect(c4, Matching.of([(0, 1)])) == Matching.of(
            [(0, 1), (2, 3)])

    def test_extends_p4_middle_blocked(self, p4):
        assert extends_to_perfect(p4, Matching.of([(1, 2)])) is None

    def test_extends_empty_reduces_to_existence(self, c6):
        out = extends_to_perfect(c6, Matching.of([]))
        assert out is not None and out.size == 3

    @given(graphs(max_n=10))
    @settings(max_examples=80)
    def test_definitional_equivalence(self, g):
        for m in list(enumerate_matchings(g, 1))[:6]:
            ext = extends_to_perfect(g, m)
            sub, _ = delete_vertices(g, m.vertices())
            assert (ext is not None) == has_perfect_matching(sub)
            if ext is not None:
                assert set(m.edges) <= set(ext.edges)
                assert ext.size * 2 == g.n
                validate_matching(g, ext)


class TestMatchingNumber:
    def test_examples(self, c4, k13):
        assert matching_number(c4) == 2
        assert matching_number(k13) == 1

    def test_oracle_agreement(self):
        rng = SplitMix64(7)
        for trial in range(150):
            g = seeded_random_graph(3 + trial % 10, rng)
            assert matching_number(g) == brute_force_matching_number(g)


class TestKoenigOreDeficiency:
    def test_star_center_side(self, k13):
        out = koenig_ore_deficiency(k13, Bipartition((0,), (1, 2, 3)))
        assert out.value == 0 and out.witness == ()

    def test_star_leaves_side(self, k13):
        out = koenig_ore_deficiency(k13, Bipartition((1, 2, 3), (0,)))
        assert out.value == 2 and out.witness == (1, 2, 3)

    def test_rejects_invalid_bipartition(self, c4):
        with pytest.raises(ValueError):
            koenig_ore_deficiency(c4, Bipartition((0, 1), (2, 3)))

    def test_exhaustive_bipartite_agreement(self):
        for n in range(6):
            for g in exhaustive_graphs(n):
                bp = bipartition(g)
                if not isinstance(bp, Bipartition):
                    continue
                out = koenig_ore_deficiency(g, bp)
                assert out.value == brute_force_deficiency(g, bp)
                assert out.value == len(bp.x) - matching_number(g)
                assert _deficiency_of(g, out.witness) == out.value

    def test_random_bipartite_agreement(self):
        rng = SplitMix64(99)
        for _ in range(150):
            g = seeded_random_bipartite(5, rng)
            bp = Bipartition(tuple(range(5)), tuple(range(5, 10)))
            out = koenig_ore_deficiency(g, bp)
            assert out.value == brute_force_deficiency(g, bp)
            assert out.value + matching_number(g) == 5
            assert _deficiency_of(g, out.witness) == out.value


def _deficiency_of(g, subset) -> int:
    nbhd = 0
    for v in subset:
        nbhd |= g.adj[v]
    return len(subset) - nbhd.bit_count()
