import json

import pytest
from click.testing import CliRunner

from cohesion.cli import cli, main
from cohesion.fixtures import FixtureSpec, export, generate
from cohesion.graph import ingest
from cohesion.report import CSV_COLUMNS, SCHEMA_COMMENT, dict_to_csv, report_to_dict
from cohesion.harness import EvalPlan, run


@pytest.fixture(scope="module")
def dataset(tmp_path_factory):
    g, _ = generate(FixtureSpec(n_communities=3, community_size=8, time_span=5000))
    path = tmp_path_factory.mktemp("cli") / "planted.csv"
    export(g, str(path))
    return str(path)


@pytest.fixture()
def plan_file(tmp_path, dataset):
    plan = {
        "dataset": dataset,
        "algorithm": "max-core",
        "n_queries": 10,
        "rng_seed": 1,
        "decay": {"kind": "exponential", "rate": 0.001},
    }
    path = tmp_path / "plan.json"
    path.write_text(json.dumps(plan))
    return str(path)


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


class TestStats:
    def test_prints_counts(self, dataset):
        result = invoke("stats", dataset)
        assert result.exit_code == 0
        assert "n_users      24" in result.output
        assert "n_events" in result.output and "density" in result.output

    def test_missing_file_usage_error(self):
        assert main(["stats", "no_such_file.csv"]) == 2


class TestGenQueries:
    def test_emits_n_lines(self, dataset):
        result = invoke("gen-queries", dataset, "--n", "5", "--seed", "3")
        assert result.exit_code == 0
        ids = [int(line) for line in result.output.split()]
        assert len(ids) == 5

    def test_seed_repeatable(self, dataset):
        a = invoke("gen-queries", dataset, "--n", "5", "--seed", "3").output
        b = invoke("gen-queries", dataset, "--n", "5", "--seed", "3").output
        assert a == b


class TestGenFixture:
    def test_writes_dataset_and_membership(self, tmp_path):
        spec = tmp_path / "spec.json"
        spec.write_text(json.dumps({"n_communities": 2, "community_size": 4, "time_span": 100}))
        out = tmp_path / "data.csv"
        members = tmp_path / "members.json"
        result = invoke(
            "gen-fixture", "--spec", str(spec), "--out", str(out),
            "--membership", str(members),
        )
        assert result.exit_code == 0
        assert out.exists()
        mapping = json.loads(members.read_text())
        assert mapping == {"0": [0, 1, 2, 3], "1": [4, 5, 6, 7]}

    def test_bad_spec_is_runtime_error(self, tmp_path):
        spec = tmp_path / "spec.json"
        spec.write_text(json.dumps({"n_communities": 0}))
        code = main(["gen-fixture", "--spec", str(spec), "--out", str(tmp_path / "x.csv")])
        assert code == 1


class TestRun:
    def test_writes_both_reports(self, tmp_path, plan_file):
        out_dir = tmp_path / "out"
        result = invoke("run", "--plan", plan_file, "--out-dir", str(out_dir))
        assert result.exit_code == 0
        assert "q_hit = 100.0" in result.output
        data = json.loads((out_dir / "report.json").read_text())
        assert data["q_hit"] == 100.0
        csv_text = (out_dir / "report.csv").read_text()
        assert csv_text.startswith(SCHEMA_COMMENT)
        assert ",".join(CSV_COLUMNS) in csv_text

    def test_repeat_runs_byte_identical(self, tmp_path, plan_file):
        dirs = [tmp_path / "a", tmp_path / "b"]
        for d in dirs:
            assert invoke("run", "--plan", plan_file, "--out-dir", str(d)).exit_code == 0
        for name in ("report.json", "report.csv"):
            assert (dirs[0] / name).read_bytes() == (dirs[1] / name).read_bytes()

    def test_missing_plan_is_runtime_error(self, tmp_path):
        assert main(["run", "--plan", str(tmp_path / "absent.json")]) == 1

    def test_unknown_option_is_usage_error(self):
        assert main(["run", "--bogus"]) == 2


class TestSweepDecay:
    def test_one_report_per_rate(self, tmp_path, plan_file):
        out_dir = tmp_path / "sweep"
        result = invoke(
            "sweep-decay", "--plan", plan_file, "--rates", "0.0001,0.01",
            "--out-dir", str(out_dir),
        )
        assert result.exit_code == 0
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == [
            "report_exponential_0.0001.csv",
            "report_exponential_0.0001.json",
            "report_exponential_0.01.csv",
            "report_exponential_0.01.json",
        ]


class TestReport:
    def test_reemit_round_trip(self, tmp_path, plan_file):
        out_dir = tmp_path / "out"
        invoke("run", "--plan", plan_file, "--out-dir", str(out_dir))
        again = tmp_path / "again.csv"
        result = invoke(
            "report", str(out_dir / "report.json"), "--format", "csv", "--out", str(again)
        )
        assert result.exit_code == 0
        assert again.read_bytes() == (out_dir / "report.csv").read_bytes()

    def test_json_reemit_identical(self, tmp_path, plan_file):
        out_dir = tmp_path / "out"
        invoke("run", "--plan", plan_file, "--out-dir", str(out_dir))
        again = tmp_path / "again.json"
        invoke("report", str(out_dir / "report.json"), "--format", "json", "--out", str(again))
        assert again.read_bytes() == (out_dir / "report.json").read_bytes()


class TestInfSerialization:
    def test_inf_literal_in_csv_and_json(self, tmp_path):
        # two disconnected dyads: the searched community is connected, so
        # force INF by scoring the full graph as one community
        g = ingest([(0, 1, 1, 1), (1, 0, 2, 1), (2, 3, 3, 1), (3, 2, 4, 1)])
        path = tmp_path / "dyads.csv"
        export(g, str(path))
        plan = EvalPlan(
            dataset=str(path),
            algorithm="kl-core",
            param_grid=({"k": 1, "l": 1},),
            n_queries=2,
            rng_seed=0,
            largest_component_only=False,
        )
        report = run(plan)
        data = report_to_dict(report)
        # no INF expected here (communities are connected); check the
        # serializer directly on a doctored aggregate instead
        data["aggregates"]["d"] = float("inf")
        data["records"][0]["combos"][0]["scores"]["d"] = float("inf")
        text = dict_to_csv(data)
        agg_line = [l for l in text.splitlines() if l.startswith("AGGREGATE")][0]
        assert "INF" in agg_line
        assert json.dumps(data, default=str)  # still serializable via str fallback
