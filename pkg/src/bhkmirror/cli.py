"""Command-line client.

Thin layer over the service handlers: files are parsed into the same
request models the HTTP endpoints take, and reports render either as text
or as the canonical JSON.  With --server the request is sent to a running
instance instead of being computed in process.

Exit codes: 0 success, 1 malformed input, 2 mathematical precondition
violation, 3 comparison mismatch, 4 resource bound.
"""

from __future__ import annotations

import json
import sys

import click
from pydantic import ValidationError

from .service import handlers
from .service.models import (CompareRequest, HodgeRequest, ModelRequest,
                             OrbifoldInput, Report)

PARSE_ERROR = 1


def _fail_parse(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(PARSE_ERROR)


def _load_document(path: str) -> OrbifoldInput:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as err:
        _fail_parse(f"cannot read {path}: {err}")
    except json.JSONDecodeError as err:
        _fail_parse(f"{path} is not valid JSON: {err}")
    try:
        return OrbifoldInput.model_validate(raw)
    except ValidationError as err:
        _fail_parse(f"{path} does not match the input schema: {err}")


def _post(server: str, endpoint: str, payload: dict) -> Report:
    import httpx

    response = httpx.post(f"{server.rstrip('/')}/{endpoint}", json=payload,
                          timeout=600.0)
    if response.status_code == 422:
        _fail_parse(f"server rejected the request: {response.text}")
    response.raise_for_status()
    return Report.model_validate(response.json())


def _run(ctx, endpoint: str, request) -> Report:
    server = ctx.obj["server"]
    if server:
        return _post(server, endpoint, json.loads(request.model_dump_json()))
    local = {
        "validate": lambda r: handlers.validate(r),
        "mirror": lambda r: handlers.mirror(r),
        "model": lambda r: handlers.model(r),
        "compare": lambda r: handlers.compare(r),
        "hodge": lambda r: handlers.hodge(r),
    }
    return local[endpoint](request)


def _render_text(report: Report) -> str:
    lines = [f"[{report.command}] status: {report.status}"]
    if report.message:
        lines.append(report.message)
    if report.potential:
        p = report.potential
        lines.append(f"weights: {tuple(p.weights)}  degree: {p.degree}"
                     f"  calabi_yau: {p.calabi_yau}  gorenstein: {p.gorenstein}")
        lines.append("space: WP(" + ", ".join(map(str, p.reduced_weights))
                     + f")  reduced degree: {p.reduced_degree}")
        pieces = ", ".join(
            f"{piece.kind}{tuple(piece.exponents)} on {tuple(piece.variables)}"
            for piece in p.pieces)
        lines.append(f"atomic pieces: {pieces}")
        lines.append(f"|Aut| = {p.aut_order}")
    if report.transpose:
        t = report.transpose
        lines.append("transpose: weights "
                     f"{tuple(t.weights)} in WP{tuple(t.reduced_weights)}")
    for group in report.groups:
        gens = " ".join(f"{tuple(g.num)}/{g.den}" for g in group.generators)
        lines.append(f"group {group.name}: order {group.order}  generators: {gens}")
    for check in report.checks:
        lines.append(f"check: {check}")
    for m in report.models:
        gens = " ".join(f"{tuple(g.num)}/{g.den}" for g in m.group.generators)
        lines.append(f"model [{m.side}]: Fermat degree {m.fermat_degree}, "
                     f"quotient order {m.quotient_order}, group: {gens}")
    if report.sectors:
        lines.append("sectors (element | fixed coordinates | age | locus):")
        for s in report.sectors:
            lines.append(f"  {tuple(s.element.num)}/{s.element.den} | "
                         f"{tuple(s.fixed_indices)} | {s.age} | {s.locus}")
    for diamond in report.diamonds:
        lines.append(f"diamond [{diamond.name}], dimension {diamond.dimension}:")
        for entry in diamond.entries:
            lines.append(f"  h^({entry.p},{entry.q}) = {entry.h}")
    return "\n".join(lines) + "\n"


def _emit(ctx, report: Report):
    if ctx.obj["json"]:
        click.echo(report.to_json(), nl=False)
    else:
        click.echo(_render_text(report), nl=False)
    sys.exit(report.exit_code)


@click.group()
@click.option("--json", "as_json", is_flag=True,
              help="emit the canonical JSON report instead of text")
@click.option("--server", default=None, metavar="URL",
              help="send requests to a running service instead of computing locally")
@click.pass_context
def main(ctx, as_json, server):
    """Exact mirror constructions for invertible quasihomogeneous potentials."""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    ctx.obj["server"] = server


@main.command()
@click.argument("file", type=click.Path())
@click.pass_context
def validate(ctx, file):
    """Check admissibility and print weights, flags, and group chain."""
    _emit(ctx, _run(ctx, "validate", _load_document(file)))


@main.command()
@click.argument("file", type=click.Path())
@click.option("-o", "--output", type=click.Path(), default=None,
              help="write the mirror orbifold as an input document")
@click.pass_context
def mirror(ctx, file, output):
    """Construct the dual orbifold (transposed potential, dual group)."""
    report = _run(ctx, "mirror", _load_document(file))
    if output and report.mirror_input is not None:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(report.mirror_input.model_dump_json(indent=2,
                                                         exclude_none=True))
            fh.write("\n")
    _emit(ctx, report)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--side", type=click.Choice(["direct", "mirror"]),
              default="direct", show_default=True)
@click.option("--scale", type=int, default=1, show_default=True,
              help="compute on the degree scale*d Fermat cover")
@click.pass_context
def model(ctx, file, side, scale):
    """Fermat quotient model of the orbifold or of its mirror."""
    req = ModelRequest(orbifold=_load_document(file), side=side, scale=scale)
    _emit(ctx, _run(ctx, "model", req))


@main.command()
@click.argument("file_a", type=click.Path())
@click.argument("file_b", type=click.Path())
@click.pass_context
def compare(ctx, file_a, file_b):
    """Compare the mirrors of two orbifolds on a common Fermat cover."""
    req = CompareRequest(first=_load_document(file_a),
                         second=_load_document(file_b))
    _emit(ctx, _run(ctx, "compare", req))


@main.command()
@click.argument("file", type=click.Path())
@click.option("--cr", is_flag=True, help="compute the Chen-Ruan diamond")
@click.option("--invariant", is_flag=True,
              help="compute the invariant diamond of the untwisted sector")
@click.option("--check-mirror", is_flag=True,
              help="compute both sides and verify mirror symmetry")
@click.option("--limit", type=int, default=100_000, show_default=True,
              help="group enumeration bound")
@click.pass_context
def hodge(ctx, file, cr, invariant, check_mirror, limit):
    """Sector table and Hodge diamonds."""
    req = HodgeRequest(orbifold=_load_document(file), cr=cr,
                       invariant=invariant, check_mirror=check_mirror,
                       limit=limit)
    _emit(ctx, _run(ctx, "hodge", req))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
