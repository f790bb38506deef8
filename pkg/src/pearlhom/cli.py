"""Command-line front end.

    pearlhom --example clifford check
    pearlhom --example chekanov --specialize novikov --coefficients Z homology
    pearlhom --example clifford --field Q spectral --pages 2
    pearlhom --example rp1-canonical homology

Reports are deterministic: identical inputs and flags produce byte-identical
output.  The JSON report is the machine contract; the text format renders the
same dictionary.  Exit codes: 0 success, 1 failed mathematical check, 2
input or usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys

from . import __version__
from .rings import RingError, QQ, ring_from_token
from .model import (GradingError, ModelError, SchemaError, builtin_datum,
                    check_d_squared, complex_of, load_datum, save_datum, unit)
from .specialize import (CharacterError, LocalSystem, ObstructionError,
                         change_coefficients, novikov_specialize,
                         parse_holonomy_value, parse_specialization_json,
                         quotient_by_subsystem, twist_local_system)
from .homology import (EngineError, cohomology_window, dual_complex,
                       homology_window, principal_coker)
from .spectral import (FiltrationError, compute_pages, convergence_check,
                       maslov_filtration)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pearlhom",
        description="canonical pearl complexes: checks, specializations, "
                    "homology, spectral sequences, duality")
    p.add_argument("--example", metavar="NAME",
                   help="built-in fixture (clifford, chekanov, exotic-s2s2, "
                        "rp1-canonical, rp<n>-window)")
    p.add_argument("--input", metavar="PATH", help="datum JSON file")
    p.add_argument("--coefficients", metavar="RING",
                   help="Z | Q | Fp:<p> | Zmod:<m>")
    p.add_argument("--specialize", choices=["novikov"],
                   help="apply the Novikov specialization")
    p.add_argument("--quotient", metavar="PATH",
                   help="JSON file with subsystem generators and character")
    p.add_argument("--holonomy", metavar="LIST",
                   help="comma-separated unit values, integers or a/b")
    p.add_argument("--degrees", metavar="A..B", help="degree window")
    p.add_argument("--pages", type=int, default=2, metavar="R",
                   help="last spectral page to compute (default 2)")
    p.add_argument("--field", metavar="RING", help="Q | Fp:<p> (spectral)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("command", choices=["check", "homology", "spectral", "dual"])
    return p


def _parse_degrees(text):
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not m:
        raise UsageError(f"--degrees expects a..b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    return (min(a, b), max(a, b))


def _parse_holonomy(text):
    values = []
    for i, tok in enumerate(text.split(",")):
        tok = tok.strip()
        m = re.fullmatch(r"(-?\d+)/(-?\d+)", tok)
        if m:
            values.append(parse_holonomy_value(
                {"num": int(m.group(1)), "den": int(m.group(2))},
                f"holonomy[{i}]"))
        elif re.fullmatch(r"-?\d+", tok):
            values.append(parse_holonomy_value(int(tok), f"holonomy[{i}]"))
        else:
            raise UsageError(f"--holonomy: cannot parse {tok!r}")
    return LocalSystem(tuple(values))


def _load(args, pipeline):
    if bool(args.example) == bool(args.input):
        raise UsageError("exactly one of --example and --input is required")
    if args.example:
        datum = builtin_datum(args.example)
        source = f"example:{args.example}"
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            datum = load_datum(fh.read())
        source = f"file:{args.input}"
    digest = hashlib.sha256(save_datum(datum).encode()).hexdigest()
    pipeline.append("load")
    return datum, source, digest


def _specialized_complex(args, datum, pipeline):
    from .model import builtin_fixture
    if args.example:
        cx = builtin_fixture(args.example)
    else:
        cx = complex_of(datum)
    pipeline.append("assemble" if datum.model == "torus2" else "explicit")
    if args.quotient:
        with open(args.quotient, "r", encoding="utf-8") as fh:
            subsystem, character, _ = parse_specialization_json(fh.read())
        if subsystem is None:
            raise UsageError(f"{args.quotient}: no subsystem generators")
        cx = quotient_by_subsystem(cx, subsystem, character)
        pipeline.append("quotient")
    if args.coefficients:
        cx = change_coefficients(cx, ring_from_token(args.coefficients))
        pipeline.append(f"coefficients:{args.coefficients}")
    if args.holonomy:
        cx = twist_local_system(cx, _parse_holonomy(args.holonomy))
        pipeline.append("twist")
    if args.specialize == "novikov":
        cx = novikov_specialize(cx)
        pipeline.append("novikov")
    return cx


def _rows_json(result):
    rows = []
    for r in result.rows:
        rows.append({"degree": r.degree, "free_rank": r.free_rank,
                     "torsion": [t if isinstance(t, int) else repr(t)
                                 for t in r.torsion]})
    out = {"ring": result.ring_name, "rows": rows}
    if result.period:
        out["period"] = {"shift": result.period.shift,
                         "degree_drop": result.period.drop}
    if result.degree_modulus:
        out["degree_modulus"] = result.degree_modulus
    return out


def cmd_check(args, report):
    datum, source, digest = _load(args, report["pipeline"])
    report["input"] = {"source": source, "digest": digest}
    cx = _specialized_complex(args, datum, report["pipeline"])
    report["pipeline"].append("check")
    results = {}
    try:
        cx.validate_grading()
        results["grading"] = "pass"
    except GradingError as e:
        results["grading"] = {"fail": str(e)}
    ds = check_d_squared(cx)
    if ds.ok:
        results["d_squared"] = "pass"
    else:
        src, tgt, elem = ds.witness
        results["d_squared"] = {"fail": {"from": src, "to": tgt,
                                         "element": repr(elem)}}
    try:
        u = unit(cx)
        image = cx.apply_boundary(u)
        results["unit_cycle"] = "pass" if not image else {
            "fail": {k: repr(v) for k, v in sorted(image.items())}}
    except ModelError as e:
        results["unit_cycle"] = {"skipped": str(e)}
    report["results"] = results
    failed = any(isinstance(v, dict) and "fail" in v for v in results.values())
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_homology(args, report):
    datum, source, digest = _load(args, report["pipeline"])
    report["input"] = {"source": source, "digest": digest}
    cx = _specialized_complex(args, datum, report["pipeline"])
    degrees = _parse_degrees(args.degrees) if args.degrees else None
    try:
        result = homology_window(cx, degrees)
        report["pipeline"].append("homology_window")
        report["results"] = {"homology": _rows_json(result)}
        if degrees:
            report["results"]["window"] = [
                {"degree": d,
                 "group": result.at_degree(d).describe()}
                for d in range(degrees[1], degrees[0] - 1, -1)]
    except EngineError:
        source_degree = min(g.degree for g in cx.generators)
        res = principal_coker(cx, source_degree)
        report["pipeline"].append("principal_coker")
        report["results"] = {"principal": {
            "element": repr(res.element),
            "source_degree": res.source_degree,
            "target_degree": res.target_degree,
            "kernel_free_rank": res.kernel_free_rank,
            "recognized_integer": res.recognized_integer,
            "presentation": res.presentation,
            "period": res.period,
            "summary": res.describe(),
        }}
    return EXIT_OK


def cmd_spectral(args, report):
    datum, source, digest = _load(args, report["pipeline"])
    report["input"] = {"source": source, "digest": digest}
    if args.field:
        if args.coefficients:
            raise UsageError("--field and --coefficients are exclusive")
        args.coefficients = args.field
    elif not args.coefficients:
        args.coefficients = "Q"
    ring = ring_from_token(args.coefficients)
    if not ring.is_field:
        raise UsageError(f"spectral sequence needs a field, got {ring.name}")
    if args.specialize != "novikov":
        args.specialize = "novikov"
    cx = _specialized_complex(args, datum, report["pipeline"])
    fc = maslov_filtration(cx)
    report["pipeline"].append("maslov_filtration")
    pages = compute_pages(fc, args.pages)
    report["pipeline"].append(f"pages:0..{args.pages}")
    h = homology_window(cx)
    conv = convergence_check(pages, h, fc)
    report["results"] = {
        "pages": [p.to_json_dict() for p in pages],
        "homology": _rows_json(h),
        "convergence": {
            "ok": conv.ok,
            "by_degree": [{"degree": d, "page_total": t, "homology_dim": hd}
                          for d, (t, hd) in sorted(conv.by_degree.items())],
        },
    }
    return EXIT_OK if conv.ok else EXIT_CHECK_FAILED


def cmd_dual(args, report):
    datum, source, digest = _load(args, report["pipeline"])
    report["input"] = {"source": source, "digest": digest}
    cx = _specialized_complex(args, datum, report["pipeline"])
    dual = dual_complex(cx)
    report["pipeline"].append("dual")
    results = {"delta_squared": "pass" if dual.d_squared_ok else "fail"}
    degrees = _parse_degrees(args.degrees) if args.degrees else None
    try:
        coh = cohomology_window(dual, degrees)
        results["cohomology"] = _rows_json(coh)
        report["pipeline"].append("cohomology_window")
    except EngineError as e:
        results["cohomology"] = {"skipped": str(e)}
    report["results"] = results
    return EXIT_OK if dual.d_squared_ok else EXIT_CHECK_FAILED


def render_text(report) -> str:
    lines = [f"pearlhom {report['tool_version']}"]
    inp = report["input"]
    lines.append(f"input: {inp['source']} (sha256 {inp['digest'][:12]})")
    lines.append("pipeline: " + " -> ".join(report["pipeline"]))
    for key, value in sorted(report["results"].items()):
        lines.append(f"[{key}]")
        lines.extend(_render_value(value, "  "))
    return "\n".join(lines) + "\n"


def _render_value(value, indent):
    lines = []
    if isinstance(value, dict):
        for k, v in sorted(value.items()):
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}{k}:")
                lines.extend(_render_value(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.extend(_render_value(v, indent))
            else:
                lines.append(f"{indent}- {v}")
    else:
        lines.append(f"{indent}{value}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = {"tool_version": __version__, "pipeline": [], "command": args.command}
    handlers = {"check": cmd_check, "homology": cmd_homology,
                "spectral": cmd_spectral, "dual": cmd_dual}
    try:
        code = handlers[args.command](args, report)
    except (UsageError, SchemaError, ModelError, GradingError,
            ObstructionError, CharacterError, RingError, EngineError,
            FiltrationError, KeyError, OSError) as e:
        msg = e.args[0] if e.args else str(e)
        sys.stderr.write(f"pearlhom: error: {msg}\n")
        return EXIT_USAGE
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
