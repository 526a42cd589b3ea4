"""Command line interface.

Every subcommand runs in process on the core modules; nothing here talks
to the network except `serve`, which launches the HTTP service. Exit
codes: 0 on success, 1 on invalid input, 2 on a broken internal
invariant.
"""

from __future__ import annotations

import functools
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import documents
from .errors import InputError
from .feasibility import (
    VerticalSectionProblem,
    fiber_case_table,
    vertical_feasibility,
)
from .kodaira import ALL_KINDS, euler_number, fiber_model
from .lattice import QDivisor, zariski_decompose
from .symdiff import HyperellipticModel, invariant_dim, sakai_check
from .verdict import evaluate

FORMAT = click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
    help="human-readable lines or stable JSON",
)


def guarded(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except click.ClickException:
            raise
        except InputError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(1)
        except Exception as e:
            click.echo(f"internal error: {e}", err=True)
            sys.exit(2)

    return wrapper


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError("no such file", path=path) from None
    except json.JSONDecodeError as e:
        raise InputError(f"not valid JSON ({e})", path=path) from None


def _machine(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


@click.group()
def main():
    """Positivity diagnostics for elliptic surfaces."""


def _human_invariants(inv: dict) -> str:
    return (
        f"e = {inv['e']}  chi = {inv['chi']}  lambda = {inv['lambda']}  "
        f"delta = {inv['delta']}  kappa = {inv['kappa']}"
    )


def _human_verdict(payload: dict) -> str:
    lines = [
        _human_invariants(payload["invariants"]),
        f"cotangent bundle pseudoeffective  {payload['omega_pseff']}",
        f"refined irregularity positive     {payload['qtilde_positive']}",
        f"symmetric differentials nonzero   {payload['nonvanishing']}",
        f"fundamental group finite          {payload['pi1_finite']}",
        "case trace: " + ", ".join(payload["case_trace"]),
    ]
    for note in payload["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines)


@main.command()
@click.argument("files", nargs=-1, type=click.Path())
@click.option(
    "--batch",
    type=click.Path(file_okay=False),
    default=None,
    help="evaluate every .json document in a directory",
)
@FORMAT
@guarded
def verdict(files, batch, fmt):
    """Decide the three positivity questions for surface documents."""
    paths = [Path(p) for p in files]
    if batch is not None:
        folder = Path(batch)
        if not folder.is_dir():
            raise InputError("no such directory", path=batch)
        paths.extend(sorted(folder.glob("*.json")))
    if not paths:
        raise InputError("no input files given")

    def run_one(path: Path):
        try:
            report = evaluate(documents.parse_surface(_load_json(str(path))))
            return {"file": str(path), "report": documents.report_payload(report)}
        except InputError as e:
            return {"file": str(path), "error": str(e), "path": e.path}

    if len(paths) == 1:
        results = [run_one(paths[0])]
    else:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(run_one, paths))

    failed = [r for r in results if "error" in r]
    if fmt == "machine":
        if len(results) == 1 and not failed:
            click.echo(_machine(results[0]["report"]))
        else:
            click.echo(_machine({"results": results}))
    else:
        for r in results:
            if len(results) > 1:
                click.echo(f"== {r['file']}")
            if "error" in r:
                click.echo(f"error: {r['error']}")
            else:
                click.echo(_human_verdict(r["report"]))
    if failed:
        if len(paths) == 1:
            click.echo(f"error: {failed[0]['error']}", err=True)
        sys.exit(1)


@main.command()
@click.argument("file", type=click.Path())
@FORMAT
@guarded
def invariants(file, fmt):
    """Numerical invariants e, chi, lambda, delta, kappa of a document."""
    desc = documents.parse_surface(_load_json(file))
    payload = documents.invariants_payload(desc.config)
    if fmt == "machine":
        click.echo(_machine(payload))
    else:
        click.echo(_human_invariants(payload))
        twist = "yes" if payload["base_twist_pseff"] else "no"
        click.echo(f"twisted base differentials pseudoeffective  {twist}")


@main.command()
@click.argument("file", type=click.Path())
@click.option(
    "--divisor",
    required=True,
    help="comma-separated rational coefficients, e.g. 1,3/2,0",
)
@FORMAT
@guarded
def zariski(file, divisor, fmt):
    """Zariski decomposition of an effective divisor on a lattice."""
    config = documents.parse_lattice(_load_json(file))
    d = documents.parse_divisor(config, divisor)
    payload = documents.zariski_payload(zariski_decompose(d))
    if fmt == "machine":
        click.echo(_machine(payload))
        return
    for part in ("positive", "negative"):
        terms = [
            f"{c} {label}"
            for c, label in zip(payload[part], payload["labels"])
            if c != "0"
        ]
        click.echo(f"{part}: " + (" + ".join(terms) if terms else "0"))


@main.command()
@click.option("--genus", default=2, show_default=True)
@click.option("--i", "i", type=int, required=True)
@click.option("--j", "j", type=int, default=0, show_default=True)
@FORMAT
@guarded
def symdiff(genus, i, j, fmt):
    """Dimension of invariant twisted symmetric differentials."""
    dim = invariant_dim(HyperellipticModel.default(genus), i, j)
    payload = {"genus": genus, "i": i, "j": j, "dimension": dim}
    if fmt == "machine":
        click.echo(_machine(payload))
    else:
        click.echo(
            f"invariant sections (genus {genus}, power {i}, twist {j}): {dim}"
        )


@main.command()
@click.option("--genus", default=2, show_default=True)
@click.option("--imax", default=8, show_default=True)
@FORMAT
@guarded
def sakai(genus, imax, fmt):
    """Symmetric-differential dimensions for powers up to imax."""
    rows = [
        {"i": i, "dimension": sakai_check(genus, i)}
        for i in range(1, imax + 1)
    ]
    if fmt == "machine":
        click.echo(_machine({"genus": genus, "rows": rows}))
        return
    for row in rows:
        click.echo(f"i = {row['i']}  dimension = {row['dimension']}")
    if all(row["dimension"] == 0 for row in rows):
        click.echo("no symmetric differentials in the tested range")


@main.command()
@click.argument("file", required=False, type=click.Path())
@click.option("--kmax", type=int, default=None, help="single-fiber table up to k")
@click.option("--k", "k", type=int, default=1, show_default=True)
@click.option("--a", "a", default=None, help="budget override as p/q")
@FORMAT
@guarded
def feasibility(file, kmax, k, a, fmt):
    """Vertical-divisor feasibility: the kind table or one document."""
    if kmax is not None:
        rows = [
            {"kind": r.kind, "k": r.k, "status": r.verdict.status}
            for r in fiber_case_table(kmax)
        ]
        if fmt == "machine":
            click.echo(_machine({"rows": rows}))
            return
        for row in rows:
            click.echo(f"{row['kind']:4}  k = {row['k']:2}  {row['status']}")
        return
    if file is None:
        raise InputError("give a surface document or --kmax")
    desc = documents.parse_surface(_load_json(file))
    budget = documents.parse_rational(a, "a") if a is not None else None
    v = vertical_feasibility(VerticalSectionProblem(desc.config, k, a=budget))
    payload = {"status": v.status, "k": v.k}
    if v.witness is not None:
        payload["witness"] = {
            "general_fiber": documents.format_rational(v.witness.general_fiber),
            "parts": [
                {
                    "fiber": p.label,
                    "coefficients": [
                        documents.format_rational(c) for c in p.coefficients
                    ],
                }
                for p in v.witness.parts
            ],
        }
        payload["note"] = v.note
    if fmt == "machine":
        click.echo(_machine(payload))
    else:
        click.echo(f"k = {k}: {v.status}")
        if v.witness is not None:
            click.echo(
                f"witness: {documents.format_rational(v.witness.general_fiber)}"
                " general fibers plus component parts"
            )


@main.command()
@FORMAT
@guarded
def catalog(fmt):
    """The singular fiber catalog with Euler numbers and lattices."""
    rows = []
    for t in ALL_KINDS:
        model = fiber_model(t)
        rows.append(
            {
                "kind": t.label,
                "euler": euler_number(t),
                "components": model.config.rank,
                "multiplicities": list(model.mult_vector),
                "singular_points": len(model.znodes),
            }
        )
    if fmt == "machine":
        click.echo(_machine({"rows": rows}))
        return
    click.echo("kind  euler  components  singular points")
    for r in rows:
        click.echo(
            f"{r['kind']:5} {r['euler']:5}  {r['components']:10}  "
            f"{r['singular_points']:15}"
        )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("ellsurf.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
