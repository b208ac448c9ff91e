"""Command-line client for the derivation service.

By default each command talks to an in-process instance of the FastAPI app;
pass --server URL to query a running deployment instead.
"""

from __future__ import annotations

import asyncio
import json
import sys
from typing import Optional

import click
import httpx


def _request(server: Optional[str], method: str, path: str, payload=None) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=120.0) as client:
            return client.request(method, path, json=payload)

    from .service import create_app

    async def go():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://obstructor.internal"
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _fail(response: httpx.Response) -> None:
    try:
        body = response.json()
    except ValueError:
        body = {"message": response.text}
    message = body.get("message") or body.get("detail") or response.text
    if isinstance(message, list):  # pydantic validation detail
        message = "; ".join(str(item.get("msg", item)) for item in message)
    position = body.get("position")
    where = " (at position %s)" % position if position is not None else ""
    click.echo("error: %s%s" % (message, where), err=True)
    sys.exit(1)


def _emit_json(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True))


@click.group()
@click.option("--server", default=None, help="base URL of a running service")
@click.pass_context
def main(ctx, server):
    """Pre-quantization levels of compact simple Lie groups."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.argument("spec")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@click.option("--trace", is_flag=True, help="show the stepwise derivation")
@click.option("--max-degree", default=8, show_default=True, help="degree cutoff")
@click.pass_context
def derive(ctx, spec, as_json, trace, max_degree):
    """Derive l0 for a group, e.g. derive "PSU(3)"."""
    resp = _request(
        ctx.obj["server"],
        "POST",
        "/derive",
        {"spec": spec, "include_trace": trace, "max_degree": max_degree},
    )
    if resp.status_code != 200:
        _fail(resp)
    body = resp.json()
    if as_json:
        _emit_json(body)
        return
    click.echo("%s" % body["spec"])
    click.echo("  l0 = %d" % body["l0"])
    click.echo("  provenance: %s" % body["provenance"])
    for res in body["per_prime"]:
        line = "  p=%d: %s, local order %d" % (
            res["prime"],
            res["strategy"],
            res["local_order"],
        )
        if res.get("obstruction") not in (None, "0"):
            line += "  [obstruction %s" % res["obstruction"]
            if res.get("witness"):
                line += ", Bockstein witness %s (order %d)" % (
                    res["witness"],
                    res["bockstein_order"],
                )
            line += "]"
        click.echo(line)
    if trace:
        click.echo("  trace:")
        for step in body.get("trace", []):
            click.echo("    [%s] %s" % (step["stage"], step["detail"]))
            if step.get("citation"):
                click.echo("        -- %s" % step["citation"])


@main.command()
@click.option("--family", required=True, help="SU, PSp, SO, PSO, Ss, or exceptional")
@click.option("--max", "maximum", default=None, type=int, help="sweep bound")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def table(ctx, family, maximum, as_json):
    """Sweep a family and compare the engine against the closed form."""
    resp = _request(
        ctx.obj["server"], "POST", "/table", {"family": family, "max": maximum}
    )
    if resp.status_code != 200:
        _fail(resp)
    body = resp.json()
    if as_json:
        _emit_json(body)
    else:
        width = max((len(r["spec"]) for r in body["rows"]), default=4)
        click.echo(
            "%-*s  %6s  %11s  %s" % (width, "group", "engine", "closed-form", "status")
        )
        for r in body["rows"]:
            click.echo(
                "%-*s  %6s  %11d  %s"
                % (
                    width,
                    r["spec"],
                    "-" if r["engine_l0"] is None else r["engine_l0"],
                    r["closed_form_l0"],
                    "ok" if r["match"] else "MISMATCH %s" % (r.get("error") or ""),
                )
            )
    if not body["all_match"]:
        sys.exit(1)


@main.command()
@click.argument("spec")
@click.option("--level", required=True, type=int, help="candidate level")
@click.option("--genus", default=1, show_default=True, type=int)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def check(ctx, spec, level, genus, as_json):
    """Decide whether a (group, level) pair is pre-quantizable."""
    resp = _request(
        ctx.obj["server"],
        "POST",
        "/check",
        {"spec": spec, "level": level, "genus": genus},
    )
    if resp.status_code != 200:
        _fail(resp)
    body = resp.json()
    if as_json:
        _emit_json(body)
        return
    if body["prequantizable"]:
        click.echo(
            "%s at level %d: prequantizable (l0 = %d divides %d)"
            % (body["spec"], body["level"], body["l0"], body["level"])
        )
    else:
        click.echo(
            "%s at level %d: not prequantizable (l0 = %d, smallest admissible level %d)"
            % (body["spec"], body["level"], body["l0"], body["smallest_level"])
        )
    click.echo(
        "  genus %d noted; the verdict is genus-independent" % body["genus"]
    )


@main.command("verify-catalog")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify_catalog(ctx, as_json):
    """Run the Hopf-axiom checker over every catalog presentation."""
    resp = _request(ctx.obj["server"], "POST", "/verify-catalog")
    if resp.status_code != 200:
        _fail(resp)
    body = resp.json()
    if as_json:
        _emit_json(body)
    else:
        for entry in body["presentations"]:
            click.echo(
                "%-40s %s" % (entry["presentation"], "ok" if entry["ok"] else "FAIL")
            )
            if not entry["ok"]:
                for c in entry["checks"]:
                    if not c["ok"]:
                        click.echo("    %s: witness %s" % (c["name"], c["witness"]))
    if not body["all_ok"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
