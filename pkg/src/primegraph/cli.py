"""Command-line client for the classification service.

Every subcommand issues a request against the HTTP API: by default an
in-process instance of the service, or a remote one via --server. Exit
codes: 0 accept/success, 1 reject (witness printed), 2 usage or data error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Optional

import click
import httpx


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    from starlette.testclient import TestClient

    from .service import create_app

    return TestClient(create_app(), raise_server_exceptions=False)


def _load_graph(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise click.ClickException(f"cannot read graph file {path}: {exc}")
    if not isinstance(data, dict) or "vertices" not in data:
        raise click.ClickException(f"{path} is not a graph JSON file")
    return {"vertices": data["vertices"], "edges": data.get("edges", [])}


def _fail_from_response(resp: httpx.Response):
    try:
        detail = resp.json().get("detail", resp.text)
    except json.JSONDecodeError:
        detail = resp.text
    click.echo(f"error ({resp.status_code}): {detail}", err=True)
    sys.exit(2)


def _edges_str(graph: dict) -> str:
    edges = ", ".join("-".join(e) for e in graph["edges"]) or "(none)"
    return f"vertices {{{', '.join(graph['vertices'])}}}, edges {edges}"


@click.group()
@click.option("--server", default=None, help="URL of a running service (default: in-process)")
@click.pass_context
def main(ctx, server):
    """Prime graphs of finite groups: classify, construct, verify."""
    ctx.obj = {"server": server}


@main.command()
@click.option("--family", required=True, help="family name or 'auto' for all nine")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--complement", is_flag=True, help="the file encodes the complement")
@click.option("--json", "as_json", is_flag=True, help="print raw JSON")
@click.pass_context
def classify(ctx, family, graph_path, complement, as_json):
    """Decide whether the graph is a prime graph of the family."""
    with _client(ctx.obj["server"]) as client:
        resp = client.post(
            "/classify",
            json={"graph": _load_graph(graph_path), "family": family, "complement": complement},
        )
        if resp.status_code >= 400:
            _fail_from_response(resp)
        verdicts = resp.json()["verdicts"]
    if as_json:
        click.echo(json.dumps(verdicts, indent=2))
    else:
        for v in verdicts:
            line = f"{v['family']}: {v['decision']}"
            if v["witness"]:
                line += f"  [{v['witness']['kind']}]"
            click.echo(line)
    if len(verdicts) == 1 and verdicts[0]["decision"] == "reject":
        if not as_json:
            click.echo(f"witness: {json.dumps(verdicts[0]['witness'])}")
        sys.exit(1)


@main.command()
@click.option("--family", required=True)
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--complement", is_flag=True, help="the file encodes the complement")
@click.option("--realize", "do_realize", is_flag=True, help="also realize and cross-check")
@click.option("--max-order", default=10**7, show_default=True)
@click.option("--out", "out_path", default=None, type=click.Path(), help="write recipe JSON here")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def construct(ctx, family, graph_path, complement, do_realize, max_order, out_path, as_json):
    """Build a witness group recipe for an admissible graph."""
    with _client(ctx.obj["server"]) as client:
        resp = client.post(
            "/construct",
            json={
                "graph": _load_graph(graph_path),
                "family": family,
                "complement": complement,
                "realize": do_realize,
                "max_order": max_order,
            },
        )
        if resp.status_code >= 400:
            _fail_from_response(resp)
        data = resp.json()
    if not data["accepted"]:
        click.echo(f"reject: {json.dumps(data['verdict']['witness'])}")
        sys.exit(1)
    if out_path:
        Path(out_path).write_text(
            json.dumps({"recipe": data["recipe"], "assignment": data["assignment"]}, indent=2)
            + "\n"
        )
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(f"accepted: recipe with primes {data['assignment']['assignment']}")
        for c in data["assignment"]["congruences"]:
            click.echo(f"  {c['prime']} = 1 mod {c['modulus']}")
        ob = data["obligations"]
        click.echo(f"obligations: {'all discharged' if ob['ok'] else 'FAILED'}")
        if data.get("realization"):
            r = data["realization"]
            match = "matches" if r["matches_recipe"] else "MISMATCH"
            click.echo(f"realized group of order {r['order']}: prime graph {match}")
        if out_path:
            click.echo(f"recipe written to {out_path}")
        if not data.get("realization") and do_realize:
            click.echo("realization skipped")


@main.command("prime-graph")
@click.option("--group", "group_ref", required=True, help="builtin name, group JSON file, or recipe JSON file")
@click.option("--dot", is_flag=True, help="also print DOT output")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def prime_graph_cmd(ctx, group_ref, dot, as_json):
    """Print the prime graph and its complement for a group or recipe."""
    payload = {"dot": dot}
    path = Path(group_ref)
    if path.exists() and path.is_file():
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise click.ClickException(f"cannot parse {group_ref}: {exc}")
        if "generators" in data:
            payload["group"] = data
        elif "kind" in data:
            payload["recipe"] = data
        elif "recipe" in data:
            payload["recipe"] = data["recipe"]
        else:
            raise click.ClickException(f"{group_ref} is neither group nor recipe JSON")
    else:
        payload["builtin"] = group_ref
    with _client(ctx.obj["server"]) as client:
        resp = client.post("/prime-graph", json=payload)
        if resp.status_code >= 400:
            _fail_from_response(resp)
        data = resp.json()
    if as_json:
        click.echo(json.dumps(data, indent=2))
        return
    if data["name"]:
        order = f" of order {data['order']}" if data["order"] else ""
        click.echo(f"group: {data['name']}{order}")
    if data["spectrum"]:
        click.echo(f"element orders: {data['spectrum']}")
    click.echo(f"prime graph: {_edges_str(data['graph'])}")
    click.echo(f"complement:  {_edges_str(data['complement'])}")
    if dot:
        click.echo(data["graph_dot"])
        click.echo(data["complement_dot"])


@main.command("verify-tables")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify_tables(ctx, as_json):
    """Validate the embedded character tables and fixed-point claims."""
    with _client(ctx.obj["server"]) as client:
        resp = client.post("/verify-tables")
        if resp.status_code >= 400:
            _fail_from_response(resp)
        data = resp.json()
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        for report in [data["claims"]] + data["tables"]:
            for check in report["checks"]:
                mark = "ok" if check["passed"] else "FAIL"
                detail = f" ({check['detail']})" if check["detail"] and not check["passed"] else ""
                click.echo(f"[{mark}] {report['subject']}: {check['label']}{detail}")
    if not data["ok"]:
        sys.exit(1)


@main.command()
@click.option("--name", required=True, help="figure2 | figure4 | figure5 | whisker:n | groetzsch")
@click.option("--out", "out_path", default=None, type=click.Path())
@click.option("--dot", is_flag=True)
@click.pass_context
def fixtures(ctx, name, out_path, dot):
    """Emit a named fixture graph (these are complements, as drawn)."""
    with _client(ctx.obj["server"]) as client:
        resp = client.get(f"/fixtures/{name}")
        if resp.status_code >= 400:
            _fail_from_response(resp)
        data = resp.json()
    text = json.dumps(data["graph"], indent=2)
    if out_path:
        Path(out_path).write_text(text + "\n")
        click.echo(f"fixture {name} written to {out_path}")
    else:
        click.echo(data["dot"] if dot else text)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--complement", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def oracle(ctx, graph_path, complement, as_json):
    """Brute-force chromatic number and triangle list (testing aid)."""
    with _client(ctx.obj["server"]) as client:
        resp = client.post(
            "/oracle",
            json={"graph": _load_graph(graph_path), "complement": complement},
        )
        if resp.status_code >= 400:
            _fail_from_response(resp)
        data = resp.json()
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(f"chromatic number: {data['chromatic_number']}")
        tris = ["{" + ", ".join(t) + "}" for t in data["triangles"]]
        click.echo(f"triangles: {', '.join(tris) if tris else '(none)'}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
