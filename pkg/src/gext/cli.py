"""Command-line entry point: run a script file and print result records.

``gext run FILE`` prints the text rendering of every compute statement;
``--json`` emits a single JSON document instead.  Exit codes: 0 on
success, 1 on a parse error, 2 on a computation error.
"""

from __future__ import annotations

import json
import sys

import click

from .gmod import GradedModule, hilbert_function
from .script import (DEFAULT_PRIME, ComputationError, ResultRecord,
                     parse_script, run_script)
from .ring import ParseError

HILBERT_WINDOW = 8  # degrees reported in JSON module payloads


def render_module_text(module: GradedModule) -> str:
    if module.is_zero():
        return "0"
    degs = module.generator_degrees
    pres = module.presentation
    if pres.source.rank == 0:
        return "free {" + ", ".join(str(d) for d in degs) + "}"
    lines = []
    for i, d in enumerate(degs):
        row = " ".join(str(pres.entry(i, j)) for j in range(pres.source.rank))
        lines.append(f"cokernel {{{d}}} | {row} |")
    return "\n".join(lines)


def module_payload(module: GradedModule) -> dict:
    degs = list(module.generator_degrees)
    pres = module.presentation
    relations = [[str(pres.entry(i, j)) for j in range(pres.source.rank)]
                 for i in range(len(degs))]
    hilbert = {}
    if degs:
        lo = min(degs)
        for d in range(lo, lo + HILBERT_WINDOW):
            hilbert[str(d)] = hilbert_function(module, d)
    return {"generators": degs, "relations": relations, "hilbert": hilbert}


def render_record_text(rec: ResultRecord) -> str:
    head = f"-- {rec.provenance}"
    if rec.kind == "module":
        return head + "\n" + render_module_text(rec.payload)
    if rec.kind == "dimension":
        d = rec.payload
        return head + "\n" + (f"kk^{d}" if d else "0")
    if rec.kind == "scalar":
        return head + "\n" + str(rec.payload)
    if rec.kind == "betti":
        return head + "\n" + rec.payload.grid()
    if rec.kind == "extension":
        result = rec.payload
        body = render_module_text(result.module)
        status = "verified" if result.verified == (True, True, True) else \
            f"verification {result.verified}"
        return f"{head}\n{body}\n{status}"
    raise ValueError(f"unknown record kind {rec.kind!r}")


def record_payload(rec: ResultRecord) -> dict:
    out = {"kind": rec.kind, "command": rec.provenance}
    if rec.kind == "module":
        out["module"] = module_payload(rec.payload)
    elif rec.kind in ("dimension", "scalar"):
        out["value"] = rec.payload
    elif rec.kind == "betti":
        table = rec.payload
        out["betti"] = {f"{i},{a}": b for (i, a), b in
                        sorted(table.entries.items())}
        out["pd"] = table.pd if table.entries else None
    elif rec.kind == "extension":
        result = rec.payload
        out["module"] = module_payload(result.module)
        out["verified"] = list(result.verified)
        out["truncated"] = module_payload(result.truncated)
    return out


@click.group()
def main():
    """Graded Ext and sheaf cohomology over projective schemes."""


@main.command("run")
@click.argument("script_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="emit a JSON document")
@click.option("--prime", type=int, default=DEFAULT_PRIME, show_default=True,
              help="coefficient prime for rings declared with 'kk'")
def run(script_file, as_json, prime):
    """Execute SCRIPT_FILE and print its compute results."""
    with open(script_file) as fh:
        text = fh.read()
    try:
        script = parse_script(text)
    except ParseError as err:
        click.echo(f"parse error: {err}", err=True)
        sys.exit(1)
    try:
        records = run_script(script, default_prime=prime)
    except ComputationError as err:
        click.echo(f"computation error: {err}", err=True)
        sys.exit(2)
    if as_json:
        doc = {"prime": prime,
               "results": [record_payload(r) for r in records]}
        click.echo(json.dumps(doc, indent=2, sort_keys=True))
    else:
        click.echo("\n\n".join(render_record_text(r) for r in records))


if __name__ == "__main__":
    main()
