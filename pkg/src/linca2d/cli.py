"""Command-line client for the linca2d service.

Every subcommand is a thin wrapper over one service endpoint.  By default
the service runs in-process, so no server is needed; pass --server (or set
LINCA2D_SERVER) to talk to a running instance instead.

Exit status: 0 on success, 1 when a verification suite reports failures,
2 on usage or input errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import httpx

from . import __version__

_inprocess = None


def _client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=httpx.Timeout(600.0))
    global _inprocess
    if _inprocess is None:
        from .service.client import InProcessClient
        _inprocess = InProcessClient()
    return _inprocess


def _call(server: str | None, method: str, path: str, **kwargs) -> dict:
    try:
        resp = _client(server).request(method, path, **kwargs)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(2)
    if resp.status_code >= 400:
        click.echo(f"error: {_detail(resp)}", err=True)
        sys.exit(2)
    return resp.json()


def _detail(resp: httpx.Response) -> str:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        return resp.text.strip() or f"HTTP {resp.status_code}"
    if isinstance(detail, str):
        return detail
    if isinstance(detail, list):
        parts = []
        for err in detail:
            loc = ".".join(str(x) for x in err.get("loc", ()) if x != "body")
            parts.append(f"{loc}: {err.get('msg')}" if loc else str(err.get("msg")))
        return "; ".join(parts)
    return f"HTTP {resp.status_code}"


def _emit(text: str, out_file: str | None) -> None:
    if out_file:
        Path(out_file).write_text(text)
    else:
        click.echo(text, nl=False)


@click.group()
@click.version_option(__version__, prog_name="linca2d")
@click.option("--server", metavar="URL", default=None, envvar="LINCA2D_SERVER",
              help="Base URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Linear rules of two-dimensional nine-neighborhood cellular automata."""
    ctx.obj = server


@main.command()
@click.argument("rule", type=int)
@click.pass_obj
def info(server: str | None, rule: int) -> None:
    """Describe RULE: decomposition, neighbor offsets, transpose partner."""
    data = _call(server, "GET", f"/rules/{rule}")
    click.echo(data["text"], nl=False)


@main.command()
@click.option("--rule", type=int, required=True, help="Rule number, 0..511.")
@click.option("--in", "in_file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Grid file (plain rows of 0/1, or PBM P1).")
@click.option("--out", "out_file", type=click.Path(dir_okay=False), default=None,
              help="Write the next generation here instead of stdout.")
@click.pass_obj
def step(server: str | None, rule: int, in_file: str, out_file: str | None) -> None:
    """Advance a grid one generation."""
    data = _call(server, "POST", "/step",
                 json={"rule": rule, "grid": Path(in_file).read_text()})
    _emit(data["grid"], out_file)


@main.command()
@click.option("--rule", type=int, required=True, help="Rule number, 0..511.")
@click.option("--in", "in_file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Grid file (plain rows of 0/1, or PBM P1).")
@click.option("--steps", type=int, required=True, help="Number of generations.")
@click.option("--all", "show_all", is_flag=True,
              help="Print every generation, blank-line separated.")
@click.pass_obj
def evolve(server: str | None, rule: int, in_file: str, steps: int,
           show_all: bool) -> None:
    """Evolve a grid for a number of generations."""
    data = _call(server, "POST", "/evolve",
                 json={"rule": rule, "grid": Path(in_file).read_text(),
                       "steps": steps})
    generations = data["generations"]
    click.echo("\n".join(generations) if show_all else generations[-1], nl=False)


@main.command()
@click.option("--rule", type=int, required=True, help="Rule number, 0..511.")
@click.option("--rows", type=int, required=True, help="Grid rows m.")
@click.option("--cols", type=int, required=True, help="Grid columns n.")
@click.option("--format", "fmt", type=click.Choice(["dense", "coords"]),
              default="dense", show_default=True)
@click.option("--out", "out_file", type=click.Path(dir_okay=False), default=None,
              help="Write the matrix here instead of stdout.")
@click.pass_obj
def matrix(server: str | None, rule: int, rows: int, cols: int, fmt: str,
           out_file: str | None) -> None:
    """Print the (mn x mn) GF(2) rule matrix."""
    data = _call(server, "POST", "/matrix",
                 json={"rule": rule, "rows": rows, "cols": cols, "format": fmt})
    _emit(data["text"], out_file)


@main.command()
@click.option("--rule", type=int, required=True, help="Rule number, 0..511.")
@click.option("--rows", type=int, required=True, help="Grid rows m.")
@click.option("--cols", type=int, required=True, help="Grid columns n.")
@click.option("--dot", "dot_file", type=click.Path(dir_okay=False), default=None,
              help="Write DOT here instead of stdout.")
@click.option("--uncolored", is_flag=True,
              help="Derive the graph from the adjacency matrix without colors.")
@click.pass_obj
def graph(server: str | None, rule: int, rows: int, cols: int,
          dot_file: str | None, uncolored: bool) -> None:
    """Print the rule graph as DOT, edges colored by fundamental rule."""
    data = _call(server, "POST", "/graph",
                 json={"rule": rule, "rows": rows, "cols": cols,
                       "colored": not uncolored})
    _emit(data["dot"], dot_file)


@main.command()
@click.option("--rule", type=int, required=True, help="Rule number, 0..511.")
@click.option("--rows", type=int, required=True, help="Grid rows m.")
@click.option("--cols", type=int, required=True, help="Grid columns n.")
@click.pass_obj
def analyze(server: str | None, rule: int, rows: int, cols: int) -> None:
    """Graph statistics plus matrix popcount, rank and invertibility."""
    data = _call(server, "POST", "/analyze",
                 json={"rule": rule, "rows": rows, "cols": cols})
    click.echo(data["text"], nl=False)


@main.command()
@click.option("--rows", type=int, required=True, help="Grid rows m.")
@click.option("--cols", type=int, required=True, help="Grid columns n.")
@click.option("--suite", type=click.Choice(["equivalence", "theorems", "join",
                                            "golden", "all"]),
              default="all", show_default=True)
@click.option("--trials", type=int, default=16, show_default=True,
              help="Random grids per rule in the equivalence suite.")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Base seed for the pinned generator.")
@click.pass_obj
def verify(server: str | None, rows: int, cols: int, suite: str, trials: int,
           seed: int) -> None:
    """Run verification suites; exit 0 only if every case passes."""
    data = _call(server, "POST", "/verify",
                 json={"rows": rows, "cols": cols, "suite": suite,
                       "trials": trials, "seed": seed})
    click.echo(data["text"], nl=False)
    if not data["passed"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
