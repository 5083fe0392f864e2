import json
import subprocess
import sys

import pytest

HEADER = (
    "query,combo,params,found,reason,n_members,n_events,"
    "d,size,deg_min,core,truss,ei,sit,ced,gip,gid"
)

SAMPLE = """\
# cohesion-report v1 columns: {header}
{header}
3,0,k=2,true,,4,20,1.0,4.0,3.0,3.0,4.0,0.52,0.31,0.48,0.8,0.4
3,1,k=3,true,,3,12,1.0,3.0,2.0,2.0,3.0,0.61,0.29,0.55,0.9,0.5
7,0,k=2,true,,5,25,2.0,5.0,2.0,2.0,3.0,0.33,0.2,0.3,0.7,0.3
7,1,k=3,false,no surviving edge at query,,,,,,,,,,,,
9,0,k=2,true,,2,6,INF,2.0,1.0,1.0,2.0,0.1,0.05,0.1,0.5,
9,1,k=3,false,no surviving edge at query,,,,,,,,,,,,
AGGREGATE,,mean,,,,,INF,3.5,2.0,2.0,3.0,0.39,0.21,0.36,0.72,0.4
# q_hit = 100.0
""".format(header=HEADER)


@pytest.fixture
def sample_csv(tmp_path):
    path = tmp_path / "sample.csv"
    path.write_text(SAMPLE)
    return str(path)


@pytest.fixture
def empty_csv(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text(
        f"# cohesion-report v1 columns: {HEADER}\n{HEADER}\n"
        "AGGREGATE,,mean,,,,,,,,,,,,,,\n# q_hit = 0.0\n"
    )
    return str(path)


def run_primary_cli(*args):
    """Invoke the evaluation pipeline through its public CLI."""
    return subprocess.run(
        [sys.executable, "-m", "cohesion.cli", *args],
        capture_output=True, text=True, check=True,
    )


@pytest.fixture(scope="session")
def fixture_report(tmp_path_factory):
    """A real report.csv produced end to end from a generated dataset."""
    root = tmp_path_factory.mktemp("pipeline")
    dataset = root / "planted.csv"
    run_primary_cli("gen-fixture", "--out", str(dataset))
    plan = {
        "dataset": str(dataset),
        "algorithm": "max-core",
        "n_queries": 10,
        "rng_seed": 1,
    }
    plan_path = root / "plan.json"
    plan_path.write_text(json.dumps(plan))
    run_primary_cli("run", "--plan", str(plan_path), "--out-dir", str(root))
    return str(root / "report.csv")
