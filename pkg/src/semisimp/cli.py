"""Command line: ``python -m semisimp COMMAND --in FILE ...``.

Exit status is 0 on success, 1 when a check fails and 2 on usage or parse
errors.  Complexes are read and written in the SSX format; ``-`` (or no
``--in``) means standard input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import freefunctor as FF
from . import invariants as INV
from . import lifting as LIFT
from . import monoidal as MON
from . import sset as S
from . import subdiv as SD
from .ssx import ParseError, export_dot, parse_ssx, write_ssx

COMMANDS = ("validate", "fvector", "tensor", "cartesian", "join", "mjoin", "sd", "cospan",
            "tau0", "tau1", "ul", "eta-check", "verify-h", "complete", "scan-horns", "lift",
            "cert-left", "cert-verify", "saturate", "dot")


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _read(path, stdin):
    if path in (None, "-"):
        return stdin.read()
    with open(path) as fh:
        return fh.read()


def _inputs(args, k, stdin, parse=True):
    paths = args.inputs or [None]
    if len(paths) != k:
        raise UsageError(f"{args.command} needs --in exactly {k} time(s)")
    texts = [_read(p, stdin) for p in paths]
    return [parse_ssx(t) for t in texts] if parse else texts


def _dim(args, default):
    return default if args.dim is None else args.dim


def _fmt_paths(P, p):
    start, steps = p
    if not steps:
        return f"id{start}"
    return " ".join(f"e{g}" if sign > 0 else f"e{g}^-1" for g, sign in steps)


def _run(args, stdin) -> str:
    c = args.command
    mk = args.marked
    if c == "validate":
        (text,) = _inputs(args, 1, stdin, parse=False)
        try:
            parse_ssx(text)
        except S.SSetError as exc:
            raise CheckFailed(f"invalid: {exc}")
        return "OK\n"
    if c == "fvector":
        (X,) = _inputs(args, 1, stdin)
        return " ".join(map(str, S.f_vector(X))) + "\n"
    if c in ("tensor", "cartesian", "join", "mjoin"):
        A, B = _inputs(args, 2, stdin)
        if not mk:
            A, B = A.minimal(), B.minimal()
        if c == "tensor":
            return write_ssx(MON.tensor(A, B))
        if c == "cartesian":
            return write_ssx(MON.cartesian(A, B))
        mode = "marking" if c == "mjoin" else "plain"
        return write_ssx(MON.join(A, B, mode).result)
    if c == "sd":
        (X,) = _inputs(args, 1, stdin)
        return write_ssx(SD.sd(X, mk).complex)
    if c == "cospan":
        (X,) = _inputs(args, 1, stdin)
        return write_ssx(SD.cospan(X, mk).summit)
    if c == "tau0":
        (X,) = _inputs(args, 1, stdin)
        return "".join(" ".join(map(str, cls)) + "\n" for cls in INV.tau0(X))
    if c == "tau1":
        (X,) = _inputs(args, 1, stdin)
        P = INV.tau1_presentation(X if mk else X.minimal())
        out = [f"objects {P.n_objects}"]
        out += [f"e{i}: {s} -> {t}" + (" invertible" if i in P.invertible else "")
                for i, (s, t) in enumerate(P.gens)]
        out += [f"{_fmt_paths(P, l)} = {_fmt_paths(P, r)}" for l, r in P.relations]
        return "\n".join(out) + "\n"
    if c == "ul":
        (X,) = _inputs(args, 1, stdin)
        return write_ssx(FF.ul_truncated(X if mk else X.minimal(), _dim(args, 2)))
    if c == "eta-check":
        (X,) = _inputs(args, 1, stdin)
        X = X if mk else X.minimal()
        d = _dim(args, 2)
        ul = FF.ul_truncated(X, d)
        ulul = FF.ul_truncated(ul, d)
        m = FF.mu(X, d, ul, ulul)
        ident = S.identity_map(ul).levels
        for name, e in (("mu.eta_UL", FF.eta_ul(X, d, ul, ulul)), ("mu.UL(eta)", FF.ul_eta(X, d, ul, ulul))):
            if S.compose_maps(m, e).levels != ident:
                raise CheckFailed(f"{name} is not the identity")
        return "OK: unit laws hold\n"
    if c == "verify-h":
        rep = FF.verify_H(_dim(args, 3))
        if rep.failures:
            raise CheckFailed(f"FAIL: {rep.failures} failures; first: {rep.first_failure}")
        return "OK: 0 failures\n"
    if c == "complete":
        (X,) = _inputs(args, 1, stdin)
        r = LIFT.horn_completion_stage(X, kinds=args.kinds, marked=mk)
        return write_ssx(r.complex)
    if c == "scan-horns":
        (X,) = _inputs(args, 1, stdin)
        rows = LIFT.horn_filler_scan(X, _dim(args, 2), kinds=args.kinds, marked=mk)
        return "".join(f"horn {e.n} {e.k} {list(map(list, e.levels))} "
                       f"{'filled' if e.filled else 'unfilled'}\n" for e in rows)
    if c == "lift":
        A, X = _inputs(args, 2, stdin)
        h = S.first_extension(A, X)
        if h is None:
            raise CheckFailed("no map")
        return json.dumps([list(lv) for lv in h.levels]) + "\n"
    if c == "cert-left":
        (A,) = _inputs(args, 1, stdin)
        try:
            cert, f = LIFT.cospan_left_certificate(A, marked=mk)
        except S.RangeError as exc:
            raise UsageError(str(exc))
        doc = {"certificate": cert.to_json(),
               "target": {"faces": [list(map(list, lv)) for lv in f.target.faces],
                          "marked": sorted(f.target.marked)},
               "levels": [list(lv) for lv in f.levels]}
        return json.dumps(doc, sort_keys=True) + "\n"
    if c == "cert-verify":
        (text,) = _inputs(args, 1, stdin, parse=False)
        try:
            doc = json.loads(text)
            cert = LIFT.CellCertificate.from_json(doc["certificate"])
            T = S.SSet(tuple(tuple(tuple(s) for s in lv) for lv in doc["target"]["faces"]),
                       frozenset(doc["target"]["marked"]))
            f = S.SSetMap(cert.source, T, tuple(tuple(lv) for lv in doc["levels"]))
            f.validate()
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad certificate document: {exc}")
        try:
            ok = LIFT.verify_certificate(cert, f)
        except LIFT.ReplayError as exc:
            raise CheckFailed(f"replay failed: {exc}")
        if not ok:
            raise CheckFailed("certificate does not present the map")
        horns = "yes" if cert.all_horns() else "no"
        return f"OK: {len(cert.attachments)} cells, horn cells only: {horns}\n"
    if c == "saturate":
        (X,) = _inputs(args, 1, stdin)
        return write_ssx(INV.saturate_marking(X, args.mode))
    if c == "dot":
        (X,) = _inputs(args, 1, stdin)
        return export_dot(X)
    raise UsageError(f"unknown command {c!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semisimp", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--in", dest="inputs", action="append", help="input file (repeat for binary commands)")
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--dim", type=int, help="truncation dimension")
    p.add_argument("--marked", action="store_true", help="use marked semantics")
    p.add_argument("--kinds", choices=("all", "inner", "outer"), default="all", help="horns to consider")
    p.add_argument("--mode", choices=("two_of_three", "two_of_six"), default="two_of_six")
    return p


def run_command(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        text = _run(args, stdin)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except S.SSetError as exc:
        # validation problems in the input
        print(f"error: {exc}", file=stderr)
        return 2
    except CheckFailed as exc:
        print(str(exc), file=stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
