"""Thin command-line client for the check service.

By default the client talks to an in-process instance of the FastAPI app
over an ASGI transport, so no server needs to be running; ``--url`` points
it at a remote instance instead.  Randomness is generated server-side from
the seed with NumPy's default PCG64 generator, so identical seeds and flags
produce byte-identical JSON output.
"""

from __future__ import annotations

import json
import sys
import warnings

import click
import httpx

from .suites import SUITE_NAMES

_SUBCOMMANDS = SUITE_NAMES + ("all",)
_DEMOS = ("obstruction",)


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url, timeout=300.0)
    with warnings.catch_warnings():
        # starlette's test client warns about the httpx major version here
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _print_table(reports: list[dict]) -> None:
    header = f"{'suite':<12} {'cases':>6} {'max_residual':>14} {'status':>7} {'seed':>6} {'ms':>7}"
    click.echo(header)
    click.echo("-" * len(header))
    for r in reports:
        click.echo(
            f"{r['suite']:<12} {r['cases']:>6} {r['max_residual']:>14.3e} "
            f"{r['status']:>7} {r['seed']:>6} {r['elapsed_ms']:>7}"
        )


def _print_ndjson(reports: list[dict]) -> None:
    for r in reports:
        click.echo(
            json.dumps(
                {
                    "suite": r["suite"],
                    "cases": r["cases"],
                    "max_residual": r["max_residual"],
                    "status": r["status"],
                    "seed": r["seed"],
                }
            )
        )


@click.group()
def main() -> None:
    """Verification suites for the complex-quaternion Dirac formulation."""


@main.command()
@click.argument("subcommand", type=click.Choice(_SUBCOMMANDS))
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="PRNG seed (PCG64).")
@click.option("--cases", type=click.IntRange(min=1), default=1000, show_default=True, help="Randomized cases per check.")
@click.option("--tol", type=float, default=None, help="Override the per-suite tolerance.")
@click.option("--json", "as_json", is_flag=True, help="Emit one NDJSON report object per suite.")
@click.option(
    "--demo",
    type=click.Choice(_DEMOS),
    default=None,
    help="Run a named demo instead of the invariant suite (spin: obstruction; "
    "grids are fixed at 10000 directions and a 32x32x32x64 gauge lattice).",
)
@click.option("--url", default=None, help="Base URL of a running service (default: in-process).")
def run(subcommand: str, seed: int, cases: int, tol: float | None, as_json: bool, demo: str | None, url: str | None) -> None:
    """Run a named check suite (or ``all``) and report pass/fail."""
    with _client(url) as client:
        if demo is not None:
            if subcommand != "spin":
                raise click.UsageError(f"demo {demo!r} belongs to the spin suite")
            response = client.post("/demos/obstruction", json={"seed": seed})
            response.raise_for_status()
            payload = response.json()
            if as_json:
                click.echo(json.dumps(payload))
            else:
                click.echo(f"local gauge obstruction demo (seed {payload['seed']})")
                click.echo(f"{'pair':<24} {'mismatch':>12}")
                for row in payload["rows"]:
                    click.echo(f"{row['label']:<24} {row['mismatch']:>12.3e}")
                click.echo(f"generic floor: {payload['generic_floor']:.3e}")
            return

        body = {"seed": seed, "cases": cases}
        if tol is not None:
            body["tol"] = tol
        if subcommand == "all":
            response = client.post("/suites", json=body)
        else:
            response = client.post(f"/suites/{subcommand}", json=body)
        response.raise_for_status()
        payload = response.json()
        reports = payload if isinstance(payload, list) else [payload]
    if as_json:
        _print_ndjson(reports)
    else:
        _print_table(reports)
    if any(r["status"] != "pass" for r in reports):
        for r in reports:
            if r["status"] != "pass":
                click.echo(f"suite {r['suite']} failed (max residual {r['max_residual']:.3e})", err=True)
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Serve the check API over HTTP."""
    import uvicorn

    uvicorn.run("cqdirac.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
