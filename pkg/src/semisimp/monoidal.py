"""Geometric product, cartesian product, joins and the Leibniz corner map.

Every construction returns a complex whose ``labels`` describe its simplices:

* tensor: ``(p, q, x, y)`` with ``p, q`` the value tuples of a jointly monic
  pair of epis ``[n] ->> [a], [n] ->> [b]`` and ``x in A_a, y in B_b``;
* cartesian: ``(x, y)``;
* join: ``("A", x)``, ``("B", y)`` or ``("J", a, x, y)`` (plus a token for
  the indexed join).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Optional, Sequence

from . import ordcalc
from .sset import SSet, SSetMap, SSetError, IdentityViolation, identity_map, pushout, validate


class FunctorialityViolation(SSetError):
    pass


def label_index(X: SSet) -> list[dict]:
    return [{lab: i for i, lab in enumerate(level)} for level in X.labels]


# geometric product

@lru_cache(maxsize=None)
def grid_paths(a: int, b: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Jointly monic epi pairs onto ``[a], [b]``, as strictly increasing grid chains
    from ``(0, 0)`` to ``(a, b)`` with steps ``(1,0), (0,1), (1,1)``."""
    out = []

    def rec(i, j, ps, qs):
        if (i, j) == (a, b):
            out.append((tuple(ps), tuple(qs)))
            return
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            if i + di <= a and j + dj <= b:
                rec(i + di, j + dj, ps + [i + di], qs + [j + dj])

    rec(0, 0, [0], [0])
    return tuple(sorted(out, key=lambda pq: (len(pq[0]), pq)))


def _restrict_epi(vals: tuple[int, ...], i: int):
    # Reedy factor (values o d_i) into epi and mono; returns (epi values, mono values)
    f = ordcalc.make_map(len(vals) - 1, vals[-1] + 1, vals[:i] + vals[i + 1:])
    e, m = ordcalc.reedy_factorize(f)
    return e.values, m.values


def tensor(A: SSet, B: SSet) -> SSet:
    labels: list[list] = []
    top = A.dim + B.dim if A.faces and B.faces else -1
    for n in range(top + 1):
        level = []
        for a in range(min(n, A.dim) + 1):
            for b in range(min(n, B.dim) + 1):
                if max(a, b) > n or a + b < n:
                    continue
                for p, q in grid_paths(a, b):
                    if len(p) != n + 1:
                        continue
                    for x in range(A.count(a)):
                        for y in range(B.count(b)):
                            level.append((p, q, x, y))
        labels.append(level)
    index = [{lab: i for i, lab in enumerate(level)} for level in labels]
    faces = []
    for n, level in enumerate(labels):
        if n == 0:
            faces.append(tuple(() for _ in level))
            continue
        row = []
        for p, q, x, y in level:
            fs = []
            for i in range(n + 1):
                p2, mp = _restrict_epi(p, i)
                q2, mq = _restrict_epi(q, i)
                x2 = A.restrict(p[-1], x, mp)
                y2 = B.restrict(q[-1], y, mq)
                fs.append(index[n - 1][(p2, q2, x2, y2)])
            row.append(tuple(fs))
        faces.append(tuple(row))
    marked = set()
    if labels and len(labels) > 1:
        for e, (p, q, x, y) in enumerate(labels[1]):
            if (p[-1] == 1 and x in A.marked) or (q[-1] == 1 and y in B.marked):
                marked.add(e)
    return SSet(tuple(faces), frozenset(marked), tuple(tuple(level) for level in labels))


def tensor_map(f: SSetMap, g: SSetMap, src: Optional[SSet] = None, tgt: Optional[SSet] = None) -> SSetMap:
    src = src or tensor(f.source, g.source)
    tgt = tgt or tensor(f.target, g.target)
    idx = label_index(tgt)
    levels = []
    for n, level in enumerate(src.labels):
        levels.append(tuple(idx[n][(p, q, f.levels[p[-1]][x], g.levels[q[-1]][y])]
                            for p, q, x, y in level))
    return SSetMap(src, tgt, tuple(levels))


def tensor_count_oracle(A: SSet, B: SSet, n: int) -> int:
    """Count n-simplices of ``A (x) B`` by summing, over dimension pairs, the
    number of grid chains counted by dynamic programming."""
    from math import comb

    total = 0
    for a in range(A.dim + 1):
        for b in range(B.dim + 1):
            # chains with k diagonal steps: n = a + b - k, choose positions
            k = a + b - n
            if k < 0 or k > min(a, b):
                continue
            chains = comb(n, k) * comb(n - k, a - k)
            total += chains * A.count(a) * B.count(b)
    return total


# cartesian product

def cartesian(A: SSet, B: SSet) -> SSet:
    top = min(A.dim, B.dim)
    labels = [[(x, y) for x in range(A.count(n)) for y in range(B.count(n))] for n in range(top + 1)]
    nb = [B.count(n) for n in range(top + 1)]
    faces = []
    for n, level in enumerate(labels):
        if n == 0:
            faces.append(tuple(() for _ in level))
        else:
            faces.append(tuple(tuple(A.faces[n][x][i] * nb[n - 1] + B.faces[n][y][i] for i in range(n + 1))
                               for x, y in level))
    marked = frozenset(e for e, (x, y) in enumerate(labels[1]) if x in A.marked and y in B.marked) \
        if top >= 1 else frozenset()
    return SSet(tuple(faces), marked, tuple(tuple(level) for level in labels))


def comparison(A: SSet, B: SSet, prod: Optional[SSet] = None, tens: Optional[SSet] = None) -> SSetMap:
    """``A x B -> A (x) B`` sending ``(x, y)`` to ``(id, id, x, y)``."""
    prod = prod or cartesian(A, B)
    tens = tens or tensor(A, B)
    idx = label_index(tens)
    levels = []
    for n, level in enumerate(prod.labels):
        ident = tuple(range(n + 1))
        levels.append(tuple(idx[n][(ident, ident, x, y)] for x, y in level))
    return SSetMap(prod, tens, tuple(levels))


def cartesian_map(f: SSetMap, g: SSetMap, src=None, tgt=None) -> SSetMap:
    src = src or cartesian(f.source, g.source)
    tgt = tgt or cartesian(f.target, g.target)
    idx = label_index(tgt)
    return SSetMap(src, tgt, tuple(tuple(idx[n][(f.levels[n][x], g.levels[n][y])] for x, y in level)
                                   for n, level in enumerate(src.labels)))


# joins

@dataclass(frozen=True)
class JoinResult:
    result: SSet
    left: SSetMap
    right: SSetMap

    def index(self):
        return label_index(self.result)

    def edge_to(self, a: int, b: int, token=None) -> int:
        lab = ("J", 0, a, b) if token is None else ("J", 0, a, b, token)
        return self.result.labels[1].index(lab)


@dataclass
class IndexedJoinTable:
    """Tokens for every pair ``(x in A_a, y in B_b)`` with restrictions along faces.

    ``tokens(a, x, b, y)`` lists the tokens; ``restrict_a(a, x, b, y, i, t)``
    gives the token over ``(d_i x, y)`` and ``restrict_b`` the one over
    ``(x, d_j y)``.  ``marked(x, y, t)`` decides marking of join edges.
    """
    tokens: Callable[[int, int, int, int], Sequence[Hashable]]
    restrict_a: Callable
    restrict_b: Callable
    marked: Optional[Callable] = None


def terminal_table() -> IndexedJoinTable:
    return IndexedJoinTable(lambda a, x, b, y: (None,), lambda *args: None, lambda *args: None)


def _join(A: SSet, B: SSet, table: Optional[IndexedJoinTable], mode: str) -> JoinResult:
    top = max(A.dim, B.dim, A.dim + B.dim + 1 if A.faces and B.faces else -1)
    labels = []
    for n in range(top + 1):
        level = [("A", x) for x in range(A.count(n))] + [("B", y) for y in range(B.count(n))]
        for a in range(n):
            b = n - 1 - a
            for x in range(A.count(a)):
                for y in range(B.count(b)):
                    if table is None:
                        level.append(("J", a, x, y))
                    else:
                        for t in table.tokens(a, x, b, y):
                            level.append(("J", a, x, y, t))
        labels.append(level)
    index = [{lab: i for i, lab in enumerate(level)} for level in labels]
    faces = []
    for n, level in enumerate(labels):
        if n == 0:
            faces.append(tuple(() for _ in level))
            continue
        row = []
        for lab in level:
            if lab[0] == "A":
                row.append(tuple(index[n - 1][("A", f)] for f in A.faces[n][lab[1]]))
                continue
            if lab[0] == "B":
                row.append(tuple(index[n - 1][("B", f)] for f in B.faces[n][lab[1]]))
                continue
            a, x, y = lab[1], lab[2], lab[3]
            b = n - 1 - a
            fs = []
            for i in range(n + 1):
                if i <= a:
                    if a == 0:
                        key = ("B", y)
                    else:
                        key = ("J", a - 1, A.faces[a][x][i], y)
                        if table is not None:
                            key += (table.restrict_a(a, x, b, y, i, lab[4]),)
                else:
                    j = i - a - 1
                    if b == 0:
                        key = ("A", x)
                    else:
                        key = ("J", a, x, B.faces[b][y][j])
                        if table is not None:
                            key += (table.restrict_b(a, x, b, y, j, lab[4]),)
                try:
                    fs.append(index[n - 1][key])
                except KeyError as exc:
                    raise FunctorialityViolation(f"restricted token {key} does not exist") from exc
            row.append(tuple(fs))
        faces.append(tuple(row))
    marked = set()
    if len(labels) > 1:
        for e, lab in enumerate(labels[1]):
            if lab[0] == "A" and lab[1] in A.marked:
                marked.add(e)
            elif lab[0] == "B" and lab[1] in B.marked:
                marked.add(e)
            elif lab[0] == "J":
                if mode == "marking":
                    marked.add(e)
                elif table is not None and table.marked is not None and table.marked(lab[2], lab[3], lab[4]):
                    marked.add(e)
    J = SSet(tuple(faces), frozenset(marked), tuple(tuple(level) for level in labels))
    if table is not None:
        try:
            validate(J)
        except IdentityViolation as exc:
            raise FunctorialityViolation(str(exc)) from exc
    left = SSetMap(A, J, tuple(tuple(index[n][("A", x)] for x in range(A.count(n))) for n in range(len(A.faces))))
    right = SSetMap(B, J, tuple(tuple(index[n][("B", y)] for y in range(B.count(n))) for n in range(len(B.faces))))
    return JoinResult(J, left, right)


def join(A: SSet, B: SSet, mode: str = "plain") -> JoinResult:
    if mode not in ("plain", "marking"):
        raise ValueError(f"unknown join mode {mode!r}")
    return _join(A, B, None, mode)


def indexed_join(A: SSet, B: SSet, F: IndexedJoinTable) -> JoinResult:
    return _join(A, B, F, "plain")


def join_map(src: JoinResult, tgt: JoinResult, f: SSetMap, g: SSetMap) -> SSetMap:
    idx = tgt.index()
    levels = []
    for n, level in enumerate(src.result.labels):
        row = []
        for lab in level:
            if lab[0] == "A":
                row.append(idx[n][("A", f.levels[n][lab[1]])])
            elif lab[0] == "B":
                row.append(idx[n][("B", g.levels[n][lab[1]])])
            else:
                a = lab[1]
                row.append(idx[n][("J", a, f.levels[a][lab[2]], g.levels[n - 1 - a][lab[3]])])
        levels.append(tuple(row))
    return SSetMap(src.result, tgt.result, tuple(levels))


# Leibniz construction

def _apply(kind: str, X: SSet, Y: SSet):
    if kind == "tensor":
        return tensor(X, Y)
    if kind == "join":
        return join(X, Y)
    if kind == "marking_join":
        return join(X, Y, "marking")
    raise ValueError(f"unknown bifunctor {kind!r}")


def _obj(v) -> SSet:
    return v.result if isinstance(v, JoinResult) else v


def _apply_map(kind: str, f: SSetMap, g: SSetMap, src, tgt) -> SSetMap:
    if kind == "tensor":
        return tensor_map(f, g, src, tgt)
    return join_map(src, tgt, f, g)


@dataclass(frozen=True)
class LeibnizResult:
    corner: SSetMap
    pushout: SSet
    from_ad: SSetMap
    from_bc: SSetMap


def leibniz_full(f: SSetMap, g: SSetMap, kind: str) -> LeibnizResult:
    A, B, C, D = f.source, f.target, g.source, g.target
    AC, AD, BC, BD = (_apply(kind, *xy) for xy in ((A, C), (A, D), (B, C), (B, D)))
    idA, idC, idB, idD = (identity_map(Z) for Z in (A, C, B, D))
    u = _apply_map(kind, idA, g, AC, AD)
    v = _apply_map(kind, f, idC, AC, BC)
    P, i_ad, i_bc = pushout(u, v)
    w_ad = _apply_map(kind, f, idD, AD, BD)
    w_bc = _apply_map(kind, idB, g, BC, BD)
    levels = [[None] * P.count(n) for n in range(len(P.faces))]
    for inc, w in ((i_ad, w_ad), (i_bc, w_bc)):
        for n, level in enumerate(inc.levels):
            for s, t in enumerate(level):
                levels[n][t] = w.levels[n][s]
    corner = SSetMap(P, _obj(BD), tuple(tuple(level) for level in levels))
    return LeibnizResult(corner, P, i_ad, i_bc)


def leibniz(f: SSetMap, g: SSetMap, kind: str) -> SSetMap:
    return leibniz_full(f, g, kind).corner
