"""Command line interface.

Exit status is 0 on success, 1 when a comparison is not obstructed or a corpus
line fails, and 2 on usage or parse errors.  With ``--json`` every command
prints one JSON document; rationals are written as ``"a/b"`` strings.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction

from .corpus import run_corpus
from .engine import (
    ConditionalOnAssertion,
    Distinguished,
    compare_profiles,
    family,
    profile,
    signature_check,
)
from .errors import ZeroconcError
from .invariants import Unknown, d_lens, spin_label
from .manifolds import conjugate_label, lens_spin_labels
from .parser import knot_text, parse, parse_knot, to_text
from .plumbing import (
    SurgeryPresentation,
    characteristic_sublinks,
    d_lattice_oracle,
    mu as mu_presentation,
)
from .selftest import run_selftest

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def jsonable(x):
    """Convert invariant values to JSON-safe data without floats."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, int):
        return x
    if isinstance(x, Unknown):
        return {"unknown": x.reason}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    return str(x)


def _text(x) -> str:
    if isinstance(x, tuple):
        return "{" + ", ".join(_text(v) for v in x) + "}"
    return str(x)


def _profile_dict(prof) -> dict:
    return {
        "mu": jsonable(prof.mu),
        "d_bar": jsonable(prof.d_bar),
        "h1": jsonable(prof.h1_order),
        "conditional": prof.conditional,
        "notes": list(prof.notes),
    }


def _verdict_dict(v) -> dict:
    conditional = isinstance(v, ConditionalOnAssertion)
    inner = v.inner if conditional else v
    out = {"conditional": conditional}
    if isinstance(inner, Distinguished):
        out.update(verdict="Distinguished", witnesses=sorted(inner.witnesses))
    else:
        out.update(verdict="NotObstructed", witnesses=[], unknowns=list(inner.unknowns))
    return out


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load_presentation(arg: str) -> SurgeryPresentation:
    text = arg
    if not arg.lstrip().startswith(("{", "[")) and os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return SurgeryPresentation.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise ZeroconcError(f"bad presentation: {exc}") from exc


def _pick(items: list, spin, what: str) -> list:
    if spin is None:
        return list(enumerate(items))
    if not 0 <= spin < len(items):
        raise ZeroconcError(f"--spin {spin} out of range: {len(items)} {what}")
    return [(spin, items[spin])]


def cmd_invariants(args) -> int:
    expr = parse(" ".join(args.expr))
    prof = profile(expr)
    if args.spin is not None:
        (_, cand), = _pick(list(prof.candidates), args.spin, "candidate spin structures")
        prof = replace(prof, candidates=(cand,))
    data = {"expr": to_text(expr), **_profile_dict(prof)}
    lines = [
        f"expr        {to_text(expr)}",
        f"mu          {_text(prof.mu)}",
        f"d_bar       {_text(prof.d_bar)}",
        f"|H1|        {prof.h1_order}",
    ]
    if prof.conditional:
        lines.append("conditional on asserted Seifert hypersurface")
    lines += [f"note        {n}" for n in prof.notes]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_compare(args) -> int:
    text = " ".join(args.exprs)
    if text.count("::") != 1:
        raise ZeroconcError('compare expects "EXPR :: EXPR"')
    left, right = (parse(t) for t in text.split("::"))
    p1, p2 = profile(left), profile(right)
    v = compare_profiles(p1, p2)
    data = _verdict_dict(v)
    data.update(left={"expr": to_text(left), **_profile_dict(p1)}, right={"expr": to_text(right), **_profile_dict(p2)})
    if data["verdict"] == "Distinguished":
        head = f"Distinguished by {', '.join(data['witnesses'])}"
    else:
        head = "NotObstructed" + (f" (unknown: {', '.join(data['unknowns'])})" if data["unknowns"] else "")
    if data["conditional"]:
        head += " [conditional on assertion]"
    lines = [
        head,
        f"  K1 {to_text(left)}: mu={_text(p1.mu)} d_bar={_text(p1.d_bar)}",
        f"  K2 {to_text(right)}: mu={_text(p2.mu)} d_bar={_text(p2.d_bar)}",
    ]
    _emit(args, data, lines)
    return EXIT_OK if data["verdict"] == "Distinguished" else EXIT_NEGATIVE


def cmd_family(args) -> int:
    members = family(args.kind, args.size)
    data = {"kind": args.kind.removesuffix("-family"), "members": []}
    lines = []
    for m in members:
        data["members"].append({"expr": to_text(m.expr), **_profile_dict(m.profile)})
        flag = " (conditional)" if m.profile.conditional else ""
        lines.append(f"mu={_text(m.profile.mu):>3} d_bar={_text(m.profile.d_bar):>6}  {to_text(m.expr)}{flag}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_theorem2(args) -> int:
    k = parse_knot(" ".join(args.knot))
    r = signature_check(k)
    data = {
        "knot": knot_text(k),
        "signature": r.signature,
        "d": jsonable(r.d),
        "c": jsonable(r.factor),
        "relation_holds": r.relation_holds,
        "obstructed": r.obstructed,
        "notes": list(r.notes),
    }
    lines = [
        f"knot            {knot_text(k)}",
        f"signature       {r.signature}",
        f"d(Sigma_2)      {r.d}",
        f"c               {r.factor}",
        f"sigma = c*d     {r.relation_holds}",
        f"2-twist spin is {'NOT 0-slice (d != 0)' if r.obstructed else 'not obstructed'}",
    ]
    lines += [f"note            {n}" for n in r.notes]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_dlens(args) -> int:
    p, q = args.p, args.q
    if args.label is None:
        labels = list(range(p))
    elif args.label == "spin":
        labels = [spin_label(p, q)] if p % 2 else lens_spin_labels(p, q)
    else:
        try:
            labels = [int(args.label)]
        except ValueError as exc:
            raise ZeroconcError(f"label must be an integer or 'spin', got {args.label!r}") from exc
    values = [(i, d_lens(p, q, i)) for i in labels]
    data = {
        "p": p,
        "q": q,
        "values": [{"label": i, "d": jsonable(v), "spin": conjugate_label(p, q, i) == i} for i, v in values],
    }
    _emit(args, data, [f"d(L({p},{q}), {i}) = {v}" for i, v in values])
    return EXIT_OK


def cmd_mu(args) -> int:
    pres = _load_presentation(args.presentation)
    subs = _pick(characteristic_sublinks(pres), args.spin, "spin structures")
    rows = [(i, s, mu_presentation(pres, s)) for i, s in subs]
    data = {"structures": [{"spin": i, "sublink": list(s.components), "mu": m} for i, s, m in rows]}
    _emit(args, data, [f"spin {i}: sublink {list(s.components)}  mu = {m}" for i, s, m in rows])
    return EXIT_OK


def cmd_d_oracle(args) -> int:
    pres = _load_presentation(args.presentation)
    if args.covector is not None:
        try:
            cov = tuple(int(x) for x in args.covector.split(","))
        except ValueError as exc:
            raise ZeroconcError("--covector takes comma-separated integers") from exc
        d = d_lattice_oracle(pres, cov)
        data = {"covector": list(cov), "d": jsonable(d)}
        _emit(args, data, [f"d = {d}"])
        return EXIT_OK
    subs = _pick(characteristic_sublinks(pres), args.spin, "spin structures")
    rows = [(i, s, d_lattice_oracle(pres, s)) for i, s in subs]
    data = {"structures": [{"spin": i, "sublink": list(s.components), "d": jsonable(d)} for i, s, d in rows]}
    _emit(args, data, [f"spin {i}: sublink {list(s.components)}  d = {d}" for i, s, d in rows])
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        report = run_corpus(args.path, jobs=args.jobs)
    except OSError as exc:
        raise ZeroconcError(f"cannot read corpus: {exc}") from exc
    data = {
        "passed": report.passed,
        "failed": report.failed,
        "results": [{"line": r.line, "expr": r.expr, "ok": r.ok, "messages": r.messages} for r in report.results],
    }
    lines = []
    for r in report.results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} line {r.line}: {r.expr}")
        lines += [f"     {m}" for m in r.messages]
    lines.append(f"{report.passed} passed, {report.failed} failed")
    _emit(args, data, lines)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_selftest(args) -> int:
    lines: list[str] = []
    ok = run_selftest(lines.append)
    _emit(args, {"ok": ok, "log": lines}, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's defaults from clobbering flags given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--spin", type=int, default=argparse.SUPPRESS, metavar="I", help="restrict to spin structure I")

    ap = argparse.ArgumentParser(prog="zeroconc", description="0-concordance obstructions for 2-knots", parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="mu and d_bar of a 2-knot")
    p.add_argument("expr", nargs="+")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("compare", parents=[common], help='compare "EXPR :: EXPR"')
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("family", parents=[common], help="pairwise non-0-concordant families")
    p.add_argument("kind", choices=["d", "mu", "d-family", "mu-family"])
    p.add_argument("--size", type=int, default=8)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("theorem2", parents=[common], help="signature versus double-cover d")
    p.add_argument("knot", nargs="+")
    p.set_defaults(func=cmd_theorem2)

    p = sub.add_parser("dlens", parents=[common], help="d-invariants of lens spaces")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("label", nargs="?", help="spin^c label or 'spin' (default: all)")
    p.set_defaults(func=cmd_dlens)

    p = sub.add_parser("mu", parents=[common], help="Rochlin invariants of a plumbing (JSON or file)")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("d-oracle", parents=[common], help="lattice d-invariants of a definite plumbing")
    p.add_argument("presentation")
    p.add_argument("--covector", default=None, help="comma-separated characteristic covector")
    p.set_defaults(func=cmd_d_oracle)

    p = sub.add_parser("corpus", parents=[common], help="check a JSON-lines corpus")
    p.add_argument("path")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("selftest", parents=[common], help="run quick consistency checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.spin = getattr(args, "spin", None)
    try:
        return args.func(args)
    except (ZeroconcError, ValueError) as exc:
        if args.json:
            print(json.dumps({"error": str(exc), "type": type(exc).__name__}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
