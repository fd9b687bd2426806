"""Command-line driver: ``trias <command> ...``.

Every command writes one JSON report (``enumerate`` writes JSON lines).
Exit status: 0 clean, 1 findings, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from pathlib import Path

from . import __version__
from .algebra import AlgebraFormatError, DimensionError, describe, dumps_algebra, load_algebra
from .catalog import (
    CatalogError,
    assoc_entries,
    get_assoc,
    get_entry,
    instantiate,
    list_entries,
    validate_catalog,
)
from .fields import FieldDescriptor, ScalarParseError, parse_scalar_literal
from .identities import (
    IdentityParseError,
    AxiomPack,
    check_pack,
    load_identity_file,
    pack_by_name,
    parse_identity,
)
from .isomorphism import audit_pairwise, catalog_instances, iso_decide, iso_exhaustive
from . import solver

EXIT_CLEAN, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad input that should exit with status 2."""


def _field(text: str) -> FieldDescriptor:
    try:
        return FieldDescriptor.from_label(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _finite(args) -> FieldDescriptor:
    if not args.field.is_finite:
        raise UsageError(f"{args.command} needs a finite field (--field Fp:<p>)")
    return args.field


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------------


def cmd_check(args):
    A = load_algebra(args.file)
    if args.identities:
        pack = AxiomPack(Path(args.identities).name, tuple(load_identity_file(args.identities)))
    else:
        try:
            pack = pack_by_name(args.pack)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    rep = check_pack(A, pack)
    findings = [
        {"kind": "axiom-violation", "identity": name, "violations": len(v)}
        for name, v in rep.rows if v
    ]
    return {"algebra": describe(A), **rep.to_json(A.field)}, findings


def cmd_catalog_list(args):
    dims = [args.dim] if args.dim else [1, 2]
    payload = {
        "associative": [e.id for e in assoc_entries() if e.dim in dims],
        "trialgebras": [
            {"id": e.id, "group": e.group, "params": e.param_names} for d in dims for e in list_entries(d)
        ],
    }
    return payload, []


def cmd_catalog_show(args):
    if args.id.startswith("As_"):
        e = get_assoc(args.id)
        A = e.as_algebra()
        return {"id": e.id, "dim": e.dim, "products": describe(A)}, []
    return get_entry(args.id).to_json(), []


def cmd_catalog_instantiate(args):
    entry = get_entry(args.id)
    values = {}
    for item in args.param or []:
        name, sep, text = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects name=value, got {item!r}")
        if name not in entry.param_names:
            raise UsageError(f"{entry.id} has no parameter {name!r}")
        values[name] = parse_scalar_literal(text, args.field)
    A = instantiate(entry.id, values, args.field)
    _emit(args, dumps_algebra(A) + "\n")
    return None, []


def cmd_catalog_validate(args):
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    dims = (args.dim,) if args.dim else (1, 2)
    rep = validate_catalog(args.field, args.samples, dims=dims, jobs=args.jobs)
    findings = [
        {"kind": "catalog-entry-fails", "id": r["id"],
         "failed": sorted({i for f in r["failures"] for i in f["failed"]})}
        for r in rep["entries"] if not r["ok"]
    ]
    findings += [
        {"kind": "associative-entry-fails", "id": r["id"]}
        for r in rep["associative"]["entries"] if not r["ok"]
    ]
    return rep, findings


def cmd_solve(args):
    res = solver.solve(args.vdash, args.field, args.max_splits)
    payload = {"vdash": args.vdash, **res.to_json()}
    for row, fam in zip(payload["families"], res.families):
        m = solver.match_family(res, fam)
        if m:
            row["catalog"] = m
    findings = [
        {"kind": "unresolved-family", "family": i, "note": f.note, "residual": len(f.residual)}
        for i, f in enumerate(res.families) if not f.resolved
    ]
    return payload, findings


def cmd_enumerate(args):
    field = _finite(args)
    vdash = get_assoc(args.vdash)
    lines = [dumps_algebra(A, compact=True) + "\n" for A in solver.enumerate_fp(vdash, field.p)]
    _emit(args, "".join(lines))
    print(f"{len(lines)} algebras", file=sys.stderr)
    return None, []


def cmd_iso(args):
    A, B = load_algebra(args.a), load_algebra(args.b)
    if A.field != B.field or A.dim != B.dim:
        raise UsageError("algebras must share field and dimension")
    if args.exhaustive:
        if not A.field.is_finite:
            raise UsageError("--exhaustive needs algebras over F_p")
        res = iso_exhaustive(A, B)
    else:
        res = iso_decide(A, B)
    findings = [{"kind": "undecided", "detail": res.detail}] if res.kind == "unknown" else []
    return res.to_json(), findings


def cmd_audit(args):
    try:
        insts = catalog_instances(args.dim, args.field, args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = audit_pairwise(insts, args.field, jobs=args.jobs)
    findings = [{"kind": "iso-collision", "a": c["a"], "b": c["b"]} for c in rep["collisions"]]
    findings += [{"kind": "undecided", "a": u["a"], "b": u["b"]} for u in rep["unknown"]]
    return rep, findings


def cmd_cross_check(args):
    field = _finite(args)
    if field.p not in solver.SUPPORTED_PRIMES:
        raise UsageError(f"cross-check supports p in {solver.SUPPORTED_PRIMES}")
    rep = solver.cross_check(args.vdash, field.p)
    findings = [{"kind": "completeness-gap", "products": u["products"]} for u in rep["unmatched"]]
    findings += [{"kind": "instance-not-triassociative", "instance": l} for l in rep["instances_never_hit"]]
    findings += [{"kind": "class-overlap", "classes": k, "tables": v} for k, v in rep["class_overlaps"].items()]
    return rep, findings


def cmd_dsl_parse(args):
    if args.file:
        ids = load_identity_file(args.file)
    else:
        ids = [parse_identity(t) for t in args.text]
    return {
        "identities": [
            {"name": i.name, "text": i.render(), "arity": i.arity, "ops": sorted(o.key for o in i.ops)}
            for i in ids
        ]
    }, []


# -- parser -------------------------------------------------------------------------


def _globals(top: bool) -> argparse.ArgumentParser:
    """Global flags; accepted before or after the command name."""
    g = argparse.ArgumentParser(add_help=False)

    def default(value):
        return value if top else argparse.SUPPRESS

    g.add_argument("--field", type=_field, default=default(FieldDescriptor("Qi")),
                   help="coefficient field: Qi or Fp:<p> (default Qi)")
    g.add_argument("-o", "--output", default=default(None), help="write the report here instead of stdout")
    g.add_argument("--jobs", type=int, default=default(1), help="worker processes (output is identical)")
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _globals(False)
    parser = argparse.ArgumentParser(
        prog="trias",
        description="Exact tools for triassociative algebras of dimension 1 and 2.",
        parents=[_globals(True)],
    )
    parser.add_argument("--version", action="version", version=f"trias {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help, func, **kw):
        p = sub.add_parser(name, help=help, description=help, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    p = add("check", "Check an algebra file against the triassociative axioms (definition of a triassociative algebra).", cmd_check)
    p.add_argument("file")
    p.add_argument("--pack", default="trias", help="trias, dias, assoc-<op> or a single axiom label")
    p.add_argument("--identities", help="file of identities in the DSL, one per line")

    cat = sub.add_parser("catalog", help="Browse and verify the classification catalog.")
    csub = cat.add_subparsers(dest="catalog_command", required=True, metavar="action")

    def cadd(name, help, func):
        q = csub.add_parser(name, help=help, description=help, parents=[common])
        q.set_defaults(func=func)
        return q

    q = cadd("list", "List catalog classes (classification of 1- and 2-dimensional triassociative algebras).", cmd_catalog_list)
    q.add_argument("--dim", type=int, choices=(1, 2))
    q = cadd("show", "Show one class: products, parameters, constraints.", cmd_catalog_show)
    q.add_argument("id")
    q = cadd("instantiate", "Instantiate a parametrized class as an algebra file.", cmd_catalog_instantiate)
    q.add_argument("id")
    q.add_argument("--param", action="append", metavar="NAME=VALUE")
    q = cadd("validate", "Check all eleven axioms on sampled instances of every class "
             "(classification theorems in dimensions 1 and 2; associative classification).", cmd_catalog_validate)
    q.add_argument("--samples", type=int, default=3)
    q.add_argument("--dim", type=int, choices=(1, 2))

    p = add("solve", "Replay the case analysis for a fixed |- structure "
            "(proof of the 1- and 2-dimensional classification theorems).", cmd_solve)
    p.add_argument("--vdash", required=True, help="associative class id, e.g. As_2^2")
    p.add_argument("--max-splits", type=int, default=16)

    p = add("enumerate", "List every triassociative table over F_p with the given |- "
            "(brute-force check of the 2-dimensional classification).", cmd_enumerate)
    p.add_argument("--vdash", required=True)

    p = add("iso", "Decide whether two algebras are isomorphic (non-isomorphism part of the classification).", cmd_iso)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--exhaustive", action="store_true", help="search all of GL_n(F_p)")

    p = add("audit", "Pairwise isomorphism audit of catalog instances "
            "(pairwise non-isomorphism claim of the 2-dimensional classification).", cmd_audit)
    p.add_argument("--dim", type=int, default=2, choices=(1, 2))
    p.add_argument("--params", default="sample:2", help="all or sample:k")

    p = add("cross-check", "Match enumerated F_p tables to catalog instances "
            "(completeness of the 2-dimensional classification).", cmd_cross_check)
    p.add_argument("--vdash", required=True)

    dsl = sub.add_parser("dsl", help="Identity language utilities.")
    dsub = dsl.add_subparsers(dest="dsl_command", required=True, metavar="action")
    q = dsub.add_parser("parse", help="Parse identities and print their canonical form.",
                        description="Parse identities and print their canonical form.", parents=[common])
    q.set_defaults(func=cmd_dsl_parse)
    q.add_argument("text", nargs="*")
    q.add_argument("--file")
    return parser


def _command_echo(argv: list[str]) -> str:
    return " ".join(["trias", *argv])


def execute(argv: list[str]):
    """Run a command; returns ``(exit code, report or None)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), None
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE, None
    try:
        payload, findings = args.func(args)
    except (UsageError, AlgebraFormatError, DimensionError, IdentityParseError, ScalarParseError,
            CatalogError, KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE, None
    if payload is None:  # raw algebra output, already written
        return EXIT_CLEAN, None
    code = EXIT_FINDINGS if findings else EXIT_CLEAN
    report = {
        "tool": "trias",
        "version": __version__,
        "command": _command_echo(argv),
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        "status": "findings" if findings else "clean",
        "findings": findings,
        "payload": payload,
    }
    _emit(args, json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    return code, report


def run(argv: list[str] | None = None) -> int:
    return execute(sys.argv[1:] if argv is None else list(argv))[0]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
