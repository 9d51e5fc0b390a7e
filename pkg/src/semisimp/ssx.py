"""Plain-text complex format.

    ssx 1
    dim 0: a b c
    dim 1: f(b,a) g(c,b)
    marked: f

Face ``i`` of a simplex names its ``d_i`` face.  ``#`` starts a comment.
"""
from __future__ import annotations

import re

from .sset import SSet, validate

NAME = re.compile(r"[A-Za-z0-9_]+$")
ENTRY = re.compile(r"([A-Za-z0-9_]+)(?:\(([^()]*)\))?$")


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def parse_ssx(text: str, check: bool = True) -> SSet:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body))
    if not lines or lines[0][1].split() != ["ssx", "1"]:
        raise ParseError(lines[0][0] if lines else 1, "expected header 'ssx 1'")
    names: list[dict] = []
    faces: list[list] = []
    marked = set()
    seen_marked = False
    for no, body in lines[1:]:
        if seen_marked:
            raise ParseError(no, "nothing may follow the marked line")
        head, sep, rest = body.partition(":")
        if not sep:
            raise ParseError(no, "expected 'dim N:' or 'marked:'")
        head = head.split()
        if head == ["marked"]:
            seen_marked = True
            if len(names) < 2:
                raise ParseError(no, "marked edges but no edges declared")
            for tok in rest.split():
                if tok not in names[1]:
                    raise ParseError(no, f"unknown edge {tok!r}")
                marked.add(names[1][tok])
            continue
        if len(head) != 2 or head[0] != "dim" or not head[1].isdigit():
            raise ParseError(no, "expected 'dim N:'")
        n = int(head[1])
        if n != len(faces):
            raise ParseError(no, f"expected dimension {len(faces)}, got {n}")
        level, table = [], {}
        for tok in rest.split():
            m = ENTRY.match(tok)
            if not m:
                raise ParseError(no, f"bad entry {tok!r}")
            name, args = m.group(1), m.group(2)
            if name in table:
                raise ParseError(no, f"duplicate name {name!r}")
            if n == 0:
                if args is not None:
                    raise ParseError(no, "vertices take no faces")
                fs = ()
            else:
                parts = [p.strip() for p in (args or "").split(",")] if args is not None else []
                if len(parts) != n + 1:
                    raise ParseError(no, f"{name} needs {n + 1} faces")
                for p in parts:
                    if p not in names[n - 1]:
                        raise ParseError(no, f"undeclared face {p!r}")
                fs = tuple(names[n - 1][p] for p in parts)
            table[name] = len(level)
            level.append(fs)
        names.append(table)
        faces.append(level)
    while faces and not faces[-1]:
        faces.pop()
    X = SSet(tuple(tuple(lv) for lv in faces), frozenset(marked))
    if check:
        validate(X)
    return X


def _name(n: int, x: int) -> str:
    return f"v{x}" if n == 0 else f"s{n}_{x}"


def write_ssx(X: SSet) -> str:
    out = ["ssx 1"]
    for n, level in enumerate(X.faces):
        items = []
        for x, fs in enumerate(level):
            if n == 0:
                items.append(_name(0, x))
            else:
                items.append(_name(n, x) + "(" + ",".join(_name(n - 1, f) for f in fs) + ")")
        out.append(f"dim {n}:" + "".join(" " + s for s in items))
    if X.marked:
        out.append("marked:" + "".join(" " + _name(1, e) for e in sorted(X.marked)))
    return "\n".join(out) + "\n"


def export_dot(X: SSet) -> str:
    out = ["digraph X {"]
    for v in range(X.count(0)):
        out.append(f"  {v};")
    for e in range(X.count(1)):
        d0, d1 = X.faces[1][e]
        style = " [style=bold]" if e in X.marked else ""
        out.append(f"  {d1} -> {d0}{style};")
    out.append("}")
    return "\n".join(out) + "\n"
