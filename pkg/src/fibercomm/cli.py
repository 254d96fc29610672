"""Command-line front end.

Subcommands operate on the canonical JSON documents of the serialize
module and print either a human-readable text summary or the same
machine-readable document format.  Exit codes: 0 on success, 1 when
``corpus verify`` finds a mismatch, 2 on malformed input.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import serialize as ser
from .comparator import COMBINED, FULL, TOPOLOGICAL, InvariantReport, compare
from .cover import normalize_unit_twists, verify_cover_laws, lift_cover
from .decomposition import power as power_map
from .spectrum import delta_from_branch_data, pa_obstruction, spectrum_min, spectrum_values
from .staircase import refiber
from .torus import classify_torus, torus_commensurable

CORPUS_ROOT = Path(__file__).resolve().parent / "corpus"


def _print(doc, fmt):
    if fmt == "machine":
        click.echo(ser.canonical_dumps(doc), nl=False)
        return
    for line in _text_lines(doc, ""):
        click.echo(line)


def _text_lines(doc, prefix):
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)):
                yield "%s%s:" % (prefix, k)
                yield from _text_lines(v, prefix + "  ")
            else:
                yield "%s%s: %s" % (prefix, k, v)
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                yield "%s-" % prefix
                yield from _text_lines(v, prefix + "  ")
            else:
                yield "%s- %s" % (prefix, v)
    else:
        yield "%s%s" % (prefix, doc)


def _load(path):
    try:
        return ser.load(path)
    except (OSError, json.JSONDecodeError) as e:
        raise click.ClickException(str(e))


def _fail_malformed(e):
    click.echo("malformed input: %s" % e, err=True)
    sys.exit(2)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "machine"]), default="text"
)


@click.group()
def main():
    """Exact commensurability invariants of surface automorphisms."""


@main.command()
@click.argument("input_file", type=click.Path(exists=True))
@format_option
def classify(input_file, fmt):
    """Nielsen-Thurston class of a torus automorphism."""
    try:
        phi = ser.torus_from_doc(_load(input_file))
        nt = classify_torus(phi)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    doc = {
        "kind": nt.kind,
        "period": nt.period,
        "dilatation": None if nt.dilatation is None else ser.quadratic_doc(nt.dilatation),
    }
    _print(doc, fmt)


@main.command()
@click.argument("input_file", type=click.Path(exists=True))
@format_option
def invariants(input_file, fmt):
    """A, Pi, P, and stretch-factor set of a decomposition graph."""
    try:
        phi = ser.reducible_from_doc(_load(input_file))
        report = InvariantReport.of(phi)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    _print(ser.report_doc(report), fmt)


@main.command(name="compare")
@click.argument("input1", type=click.Path(exists=True))
@click.argument("input2", type=click.Path(exists=True))
@click.option("--mode", type=click.Choice([FULL, TOPOLOGICAL, COMBINED]), default=FULL)
@format_option
def compare_cmd(input1, input2, mode, fmt):
    """Obstruction verdict between two decomposition graphs."""
    try:
        phi1 = ser.reducible_from_doc(_load(input1))
        phi2 = ser.reducible_from_doc(_load(input2))
        verdict = compare(phi1, phi2, mode)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    _print(ser.verdict_doc(verdict), fmt)


@main.command(name="power")
@click.argument("input_file", type=click.Path(exists=True))
@click.argument("k", type=int)
@format_option
def power_cmd(input_file, k, fmt):
    """The decomposition graph of the k-th power."""
    try:
        phi = ser.reducible_from_doc(_load(input_file))
        result = power_map(phi, k)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    _print(ser.reducible_doc(result), fmt)


@main.command()
@click.argument("input_file", type=click.Path(exists=True))
@click.argument("cover_file", type=click.Path(exists=True))
@format_option
def cover(input_file, cover_file, fmt):
    """Lift a decomposition graph through covering data."""
    try:
        phi = ser.reducible_from_doc(_load(input_file))
        c = ser.covering_from_doc(_load(cover_file))
        lifted = lift_cover(phi, c)
        checks = verify_cover_laws(phi, c)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    doc = {
        "lifted": ser.reducible_doc(lifted),
        "laws": [
            {
                "piece": ch.piece,
                "law": ch.law,
                "lhs": ser.pair(ch.lhs),
                "rhs": ser.pair(ch.rhs),
                "ok": ch.ok,
            }
            for ch in checks
        ],
    }
    _print(doc, fmt)


@main.command()
@click.argument("input_file", type=click.Path(exists=True))
@format_option
def normalize(input_file, fmt):
    """Reduce a D-type graph to unit twists, with certificate."""
    try:
        phi = ser.reducible_from_doc(_load(input_file))
        normalized, cert = normalize_unit_twists(phi)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    doc = {
        "normalized": ser.reducible_doc(normalized),
        "certificate": {"power": cert.power, "cover": ser.covering_doc(cert.cover)},
    }
    _print(doc, fmt)


@main.command()
@click.argument("manifold_file", type=click.Path(exists=True))
@click.argument("plan_file", type=click.Path(exists=True))
@format_option
def staircase(manifold_file, plan_file, fmt):
    """Refiber a graph manifold along a staircase plan."""
    try:
        manifold = ser.manifold_from_doc(_load(manifold_file))
        plan = ser.plan_from_doc(_load(plan_file))
        result = refiber(manifold, plan)
        report = InvariantReport.of(result.map)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    doc = {
        "fiber": None if result.fiber is None else ser.surface_doc(result.fiber),
        "connected": result.connected,
        "monodromy_order": result.monodromy_order,
        "uncalibrated": list(result.uncalibrated),
        "map": ser.reducible_doc(result.map),
        "invariants": ser.report_doc(report),
    }
    _print(doc, fmt)


@main.command()
@click.argument("query_file", type=click.Path(exists=True))
@click.option("--radius", type=int, default=None, help="override the query radius")
@format_option
def spectrum(query_file, radius, fmt):
    """Enumerated spectrum values and minimum of an Anosov model."""
    try:
        q = ser.query_from_doc(_load(query_file))
        if radius is not None:
            q = ser.query_from_doc({**ser.query_doc(q), "radius": radius})
        values = spectrum_values(q)
        m = spectrum_min(q)
    except (ValueError, KeyError) as e:
        _fail_malformed(e)
    doc = {
        "values": [ser.quadratic_doc(v) for v in values],
        "min": {"value": ser.quadratic_doc(m.value), "translate": ser.pair(m.translate)},
    }
    _print(doc, fmt)


# ---------------------------------------------------------------------------
# corpus

def run_operation(op, inputs, args):
    """Execute one corpus check; returns the actual result document."""
    if op == "classify":
        nt = classify_torus(ser.torus_from_doc(inputs[0]))
        return {
            "kind": nt.kind,
            "period": nt.period,
            "dilatation": None if nt.dilatation is None else ser.quadratic_doc(nt.dilatation),
        }
    if op == "torus_compare":
        v = torus_commensurable(ser.torus_from_doc(inputs[0]), ser.torus_from_doc(inputs[1]))
        return {"kind": v.kind, "scale": None if v.scale is None else ser.rat(v.scale)}
    if op == "invariants":
        return ser.report_doc(InvariantReport.of(ser.reducible_from_doc(inputs[0])))
    if op == "compare":
        verdict = compare(
            ser.reducible_from_doc(inputs[0]),
            ser.reducible_from_doc(inputs[1]),
            args.get("mode", FULL),
        )
        return ser.verdict_doc(verdict)
    if op == "staircase":
        result = refiber(ser.manifold_from_doc(inputs[0]), ser.plan_from_doc(inputs[1]))
        report = InvariantReport.of(result.map)
        return {
            "fiber": None if result.fiber is None else ser.surface_doc(result.fiber),
            "connected": result.connected,
            "monodromy_order": result.monodromy_order,
            "uncalibrated": list(result.uncalibrated),
            "twists": [ser.rat(t) for t in sorted(c.twist for c in result.map.curves)],
            "pi": [ser.pair(p) for p in sorted(report.pi)],
        }
    if op == "branch_delta":
        surface, delta = delta_from_branch_data(ser.branch_from_doc(inputs[0]))
        return {"surface": ser.surface_doc(surface), "delta": ser.delta_doc(delta)}
    if op == "pa_obstruction":
        lam1, d1 = ser.pa_data_from_doc(inputs[0])
        lam2, d2 = ser.pa_data_from_doc(inputs[1])
        v = pa_obstruction(lam1, d1, lam2, d2)
        return {
            "ok": v.ok,
            "s": None if v.s is None else ser.rat(v.s),
            "s_prime": None if v.s_prime is None else ser.rat(v.s_prime),
        }
    if op == "spectrum_min":
        m = spectrum_min(ser.query_from_doc(inputs[0]))
        return {"value": ser.quadratic_doc(m.value), "translate": ser.pair(m.translate)}
    if op == "spectrum_count_below":
        q = ser.query_from_doc(inputs[0])
        bound = Fraction(args["bound"])
        values = spectrum_values(q)
        return {"count": sum(1 for v in values if v < bound)}
    raise ValueError("unknown corpus operation %r" % (op,))


def verify_entry(entry_dir):
    """Run every check of one corpus entry; returns mismatch strings."""
    input_doc = ser.load(entry_dir / "input.json")
    expected_doc = ser.load(entry_dir / "expected.json")
    documents = input_doc["documents"]
    failures = []
    for check in expected_doc["checks"]:
        inputs = [documents[name] for name in check["inputs"]]
        try:
            actual = run_operation(check["operation"], inputs, check.get("args", {}))
        except (ValueError, KeyError) as e:
            failures.append("%s: raised %s" % (check["name"], e))
            continue
        if actual != check["expected"]:
            failures.append(
                "%s: expected %s, got %s"
                % (
                    check["name"],
                    json.dumps(check["expected"], sort_keys=True),
                    json.dumps(actual, sort_keys=True),
                )
            )
    return failures


@main.group()
def corpus():
    """Operations on the bundled example corpus."""


@corpus.command()
@click.option("--root", type=click.Path(exists=True), default=None)
def verify(root):
    """Recompute every corpus entry and diff against the expectations."""
    root = Path(root) if root else CORPUS_ROOT
    entries = sorted(p for p in root.iterdir() if (p / "expected.json").exists())
    if not entries:
        click.echo("no corpus entries under %s" % root, err=True)
        sys.exit(2)
    any_failed = False
    for entry in entries:
        try:
            failures = verify_entry(entry)
        except (OSError, json.JSONDecodeError, KeyError) as e:
            click.echo("%s: malformed entry (%s)" % (entry.name, e), err=True)
            sys.exit(2)
        if failures:
            any_failed = True
            click.echo("%s: FAIL" % entry.name)
            for f in failures:
                click.echo("  %s" % f)
        else:
            click.echo("%s: ok" % entry.name)
    sys.exit(1 if any_failed else 0)


if __name__ == "__main__":
    main()
