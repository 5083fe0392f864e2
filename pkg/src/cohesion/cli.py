"""Command-line entry point.

Exit codes: 0 success, 1 runtime failure, 2 usage error. Verbosity is
controlled by the COHESION_LOG environment variable (DEBUG/INFO/...).
"""

from __future__ import annotations

import json
import logging
import os
import sys
from pathlib import Path

import click

from . import fixtures, harness, report as report_mod
from .graph import IngestError, largest_weak_component, load_edge_list, stats

log = logging.getLogger("cohesion")


@click.group()
def cli():
    logging.basicConfig(level=os.environ.get("COHESION_LOG", "WARNING").upper())


@cli.command("stats")
@click.argument("dataset", type=click.Path(exists=True))
@click.option("--largest-component", is_flag=True, help="Restrict to the largest weak component first.")
def stats_cmd(dataset: str, largest_component: bool):
    """Print dataset statistics for an edge-list file."""
    g = load_edge_list(dataset)
    if largest_component:
        g = largest_weak_component(g)
    s = stats(g)
    click.echo(f"n_users      {s.n_users}")
    click.echo(f"n_events     {s.n_events}")
    click.echo(f"n_timestamps {s.n_timestamps}")
    click.echo(f"density      {s.density:.6g}")
    click.echo(f"deg_avg      {s.deg_avg:.6g}")


@cli.command("gen-queries")
@click.argument("dataset", type=click.Path(exists=True))
@click.option("--n", default=100, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--full-graph", is_flag=True, help="Sample from the whole graph, not the largest component.")
def gen_queries_cmd(dataset: str, n: int, seed: int, full_graph: bool):
    """Sample query nodes from the top half of users by degree."""
    g = load_edge_list(dataset)
    if not full_graph:
        g = largest_weak_component(g)
    queries, with_replacement = harness.generate_queries(g, n, seed)
    if with_replacement:
        log.warning("query pool smaller than n; sampled with replacement")
    for q in queries:
        click.echo(q)


@cli.command("gen-fixture")
@click.option("--spec", "spec_path", type=click.Path(exists=True), help="JSON file of fixture parameters.")
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--format", "fmt", default="csv", type=click.Choice(["csv", "jsonl"]), show_default=True)
@click.option("--membership", "membership_path", type=click.Path(), help="Also write the planted membership map (JSON).")
def gen_fixture_cmd(spec_path, out_path, fmt, membership_path):
    """Generate a planted-community dataset."""
    params = {}
    if spec_path:
        with open(spec_path, encoding="utf-8") as fh:
            params = json.load(fh)
    if "sentiment_mix" in params:
        params["sentiment_mix"] = tuple(params["sentiment_mix"])
    spec = fixtures.FixtureSpec(**params)
    g, membership = fixtures.generate(spec)
    fixtures.export(g, out_path, fmt)
    if membership_path:
        with open(membership_path, "w", encoding="utf-8") as fh:
            json.dump({str(c): m for c, m in membership.items()}, fh, sort_keys=True, indent=2)
    click.echo(f"wrote {g.n_events} events over {g.n_users} users to {out_path}")


@cli.command("run")
@click.option("--plan", "plan_path", required=True, type=click.Path())
@click.option("--out-dir", default=".", show_default=True, type=click.Path())
def run_cmd(plan_path: str, out_dir: str):
    """Execute one evaluation plan; writes report.json and report.csv."""
    plan = harness.load_plan(plan_path)
    result = harness.run(plan)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report_mod.emit_report(result, "json", str(out / "report.json"))
    report_mod.emit_report(result, "csv", str(out / "report.csv"))
    click.echo(f"q_hit = {result.q_hit}")
    click.echo(f"reports written to {out}")


@cli.command("sweep-decay")
@click.option("--plan", "plan_path", required=True, type=click.Path())
@click.option("--rates", required=True, help="Comma-separated decay rates.")
@click.option("--kind", default=None, type=click.Choice(["exponential", "polynomial"]))
@click.option("--out-dir", default=".", show_default=True, type=click.Path())
def sweep_decay_cmd(plan_path: str, rates: str, kind: str | None, out_dir: str):
    """Re-evaluate one plan across decay rates, sharing search results."""
    plan = harness.load_plan(plan_path)
    rate_values = [float(r) for r in rates.split(",") if r.strip()]
    reports = harness.sweep_decay(plan, rate_values, kind)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for rate, rep in zip(rate_values, reports):
        stem = f"report_{rep.plan['decay']['kind']}_{rate:g}"
        report_mod.emit_report(rep, "json", str(out / f"{stem}.json"))
        report_mod.emit_report(rep, "csv", str(out / f"{stem}.csv"))
    click.echo(f"{len(reports)} reports written to {out}")


@cli.command("report")
@click.argument("report_json", type=click.Path(exists=True))
@click.option("--format", "fmt", default="csv", type=click.Choice(["csv", "json"]), show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
def report_cmd(report_json: str, fmt: str, out_path: str):
    """Re-emit a stored JSON report as csv or json."""
    with open(report_json, encoding="utf-8") as fh:
        data = json.load(fh)
    report_mod.emit_report(data, fmt, out_path)
    click.echo(f"wrote {out_path}")


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except (IngestError, OSError, ValueError, KeyError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
