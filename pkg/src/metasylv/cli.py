"""Command-line client for the metasylv service.

All policy lives in the service; the CLI builds requests, relays JSON
payloads from stdin, and maps error kinds to exit codes: 0 ok, 1 property
failure, 2 size limit, 3 bad payload, 4 bad flags.
"""

from __future__ import annotations

import asyncio
import json
import sys
from typing import Any, Optional

import click
import httpx

from .service import DIAGRAM_CAP, ENUM_CAP, app, default_cap

EXIT_PROPERTY_FAILURE = 1
EXIT_SIZE_LIMIT = 2
EXIT_BAD_PAYLOAD = 3
EXIT_BAD_FLAGS = 4

click.UsageError.exit_code = EXIT_BAD_FLAGS


async def _request(path: str, body: dict) -> httpx.Response:
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport,
                                 base_url="http://metasylv") as client:
        return await client.post(path, json=body, timeout=None)


def _post(path: str, body: dict) -> Any:
    resp = asyncio.run(_request(path, body))
    data = resp.json()
    if resp.status_code == 200:
        return data
    kind = data.get("error")
    message = data.get("message") or json.dumps(data.get("detail"))
    click.echo(f"error: {message}", err=True)
    if kind == "size_limit":
        sys.exit(EXIT_SIZE_LIMIT)
    if kind == "bad_payload":
        sys.exit(EXIT_BAD_PAYLOAD)
    if kind == "property_failure":
        sys.exit(EXIT_PROPERTY_FAILURE)
    sys.exit(EXIT_BAD_FLAGS)


def _warn_cap(max_nm: Optional[int], fallback: int) -> None:
    if max_nm is not None and max_nm > default_cap(fallback):
        click.echo(f"warning: raising the size cap to {max_nm}; "
                   "expect factorial growth", err=True)


@click.group()
def main() -> None:
    """Counting, conversion, diagrams and verification for m-permutations."""


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--max-nm", type=int, default=None)
@click.argument("object", type=click.Choice(
    ["mperms", "classes", "trees", "chains", "ballot-paths"]))
def count(n: int, m: int, max_nm: Optional[int], object: str) -> None:
    """Count objects of the given kind at shape (n, m)."""
    _warn_cap(max_nm, ENUM_CAP)
    data = _post("/count", {"n": n, "m": m, "object": object,
                            "max_nm": max_nm})
    click.echo(data["count"])


@main.command()
@click.option("--from", "from_rep", required=True, type=click.Choice(
    ["mperm", "maxclass", "tree", "inversions", "code", "chain", "dyck-chain"]))
@click.option("--to", "to_rep", required=True, type=click.Choice(
    ["mperm", "maxclass", "tree", "inversions", "code", "chain", "dyck-chain"]))
@click.option("--n", "n", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
def convert(from_rep: str, to_rep: str, n: Optional[int],
            m: Optional[int]) -> None:
    """Convert a JSON payload on stdin between representations."""
    raw = sys.stdin.read()
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        click.echo(f"error: payload is not JSON: {exc}", err=True)
        sys.exit(EXIT_BAD_PAYLOAD)
    data = _post("/convert", {"from": from_rep, "to": to_rep,
                              "payload": payload, "n": n, "m": m})
    click.echo(json.dumps(data["payload"]))


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--lattice", required=True,
              type=click.Choice(["weak", "metasylvester", "mtamari"]))
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]),
              default="json")
@click.option("--max-nm", type=int, default=None)
@click.option("--verify", is_flag=True, default=False,
              help="check the diagram is a lattice before printing")
def hasse(n: int, m: int, lattice: str, fmt: str,
          max_nm: Optional[int], verify: bool) -> None:
    """Print the Hasse diagram of a lattice, as DOT or JSON."""
    _warn_cap(max_nm, DIAGRAM_CAP)
    data = _post("/hasse", {"n": n, "m": m, "lattice": lattice,
                            "format": fmt, "max_nm": max_nm,
                            "verify": verify})
    if fmt == "dot":
        click.echo(data["diagram"], nl=False)
    else:
        click.echo(json.dumps(data["diagram"]))


@main.command()
@click.argument("suite", type=click.Choice(
    ["weak-lattice", "intervals", "semi-quotient", "bijections",
     "tamari", "all"]))
@click.option("--max-nm", type=int, default=4, show_default=True)
def verify(suite: str, max_nm: int) -> None:
    """Run a verification suite exhaustively up to n*m = MAX_NM."""
    data = _post("/verify", {"suite": suite, "max_nm": max_nm})
    for res in data["results"]:
        status = "PASS" if res["passed"] else "FAIL"
        detail = f": {res['detail']}" if res["detail"] else ""
        click.echo(f"{status} {res['name']}{detail}")
    click.echo(f"{'PASS' if data['passed'] else 'FAIL'} suite={data['suite']} "
               f"max_nm={data['max_nm']} ({len(data['results'])} checks)")
    if not data["passed"]:
        sys.exit(EXIT_PROPERTY_FAILURE)


if __name__ == "__main__":
    main()
