import random

import pytest

from cohesion.decay import DecaySpec
from cohesion.dynamics import ExcitationConfig
from cohesion.fixtures import FixtureSpec, export, generate
from cohesion.graph import induce, ingest, load_edge_list, to_simple_undirected
from cohesion.measures import ei
from cohesion.structural import INF, diameter

SMALL = FixtureSpec(n_communities=3, community_size=6, time_span=1000)


class TestSpecValidation:
    def test_defaults_valid(self):
        FixtureSpec()

    @pytest.mark.parametrize("kwargs", [
        {"n_communities": 0},
        {"community_size": 0},
        {"intra_event_rate": -1.0},
        {"community_size": 1},  # intra rate > 0 needs two members
        {"n_communities": 1},  # inter rate > 0 needs two communities
        {"sentiment_mix": (0.5, 0.5, 0.5)},
        {"time_span": 0},
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            FixtureSpec(**kwargs)

    def test_single_community_ok_without_inter_events(self):
        spec = FixtureSpec(n_communities=1, inter_event_rate=0.0)
        g, blocks = generate(spec)
        assert set(blocks) == {0}
        assert g.n_users == spec.community_size


class TestGenerate:
    def test_dense_ids_and_planted_map(self):
        g, blocks = generate(SMALL)
        assert g.n_users == 18
        assert g.original_ids == tuple(range(18))
        assert sorted(u for members in blocks.values() for u in members) == list(range(18))

    def test_deterministic_for_seed(self):
        g1, b1 = generate(SMALL)
        g2, b2 = generate(SMALL)
        assert g1.events == g2.events
        assert b1 == b2
        g3, _ = generate(FixtureSpec(n_communities=3, community_size=6, time_span=1000, rng_seed=7))
        assert g3.events != g1.events

    def test_event_budget(self):
        g, _ = generate(SMALL)
        n = 18
        expected = (
            round(SMALL.intra_event_rate * 6) * 3
            + round(SMALL.inter_event_rate * n)
            + round(SMALL.self_loop_rate * n)
        )
        assert g.n_events == expected

    def test_blocks_connected(self):
        g, blocks = generate(SMALL)
        for members in blocks.values():
            assert diameter(induce(g, members)) < INF

    def test_zero_inter_rate_separates_blocks(self):
        spec = FixtureSpec(
            n_communities=2, community_size=5, inter_event_rate=0.0, time_span=1000
        )
        g, blocks = generate(spec)
        und = to_simple_undirected(g)
        for u, v in und.edges():
            same = any(u in m and v in m for m in blocks.values())
            assert same

    def test_all_positive_mix_yields_nonnegative_ei(self):
        spec = FixtureSpec(
            n_communities=2,
            community_size=6,
            sentiment_mix=(1.0, 0.0, 0.0),
            time_span=1000,
        )
        g, blocks = generate(spec)
        cfg = ExcitationConfig(decay=DecaySpec("exponential", 0.001))
        for members in blocks.values():
            assert ei(induce(g, members), g.t_max, cfg) >= 0.0

    def test_intra_denser_than_inter(self):
        g, blocks = generate(FixtureSpec(time_span=1000))
        und = to_simple_undirected(g)
        intra = inter = 0
        owner = {u: c for c, members in blocks.items() for u in members}
        for u, v in und.edges():
            if owner[u] == owner[v]:
                intra += 1
            else:
                inter += 1
        assert intra > inter


class TestExport:
    @pytest.mark.parametrize("fmt", ["csv", "jsonl"])
    def test_round_trip(self, tmp_path, fmt):
        g, _ = generate(SMALL)
        path = tmp_path / f"fixture.{fmt}"
        export(g, str(path), fmt)
        back = load_edge_list(str(path))
        assert back.events == g.events
        assert back.original_ids == g.original_ids

    def test_unknown_format_rejected(self, tmp_path):
        g, _ = generate(SMALL)
        with pytest.raises(ValueError, match="unknown export format"):
            export(g, str(tmp_path / "x.bin"), "parquet")

    def test_original_ids_preserved(self, tmp_path):
        g = ingest([(10, 20, 1, 1), (20, 10, 2, -1)])
        path = tmp_path / "sparse.csv"
        export(g, str(path), "csv")
        text = path.read_text()
        assert "10,20,1,1" in text and "20,10,2,-1" in text


def test_random_specs_round_trip(tmp_path):
    rng = random.Random(3)
    for i in range(5):
        spec = FixtureSpec(
            n_communities=rng.randrange(2, 5),
            community_size=rng.randrange(2, 8),
            intra_event_rate=rng.uniform(1, 6),
            inter_event_rate=rng.uniform(0, 1),
            self_loop_rate=rng.uniform(0, 1),
            time_span=rng.randrange(100, 5000),
            rng_seed=i,
        )
        g, _ = generate(spec)
        path = tmp_path / f"f{i}.csv"
        export(g, str(path))
        assert load_edge_list(str(path)).events == g.events
