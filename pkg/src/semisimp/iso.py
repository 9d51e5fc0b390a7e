"""Isomorphism search between finite (marked) complexes.

Colours are refined jointly on both complexes (faces in order, cofaces as a
multiset) and then a backtracking search assigns vertices in a connected
order, each followed by every simplex whose vertices are already placed.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .sset import SSet, SSetMap, f_vector


def _cofaces(X: SSet):
    co = [[[] for _ in range(X.count(n))] for n in range(len(X.faces))]
    for n in range(1, len(X.faces)):
        for x, fs in enumerate(X.faces[n]):
            for i, f in enumerate(fs):
                co[n - 1][f].append((i, x))
    return co


def refine_colors(complexes: Sequence[SSet], extra: Sequence[Optional[dict]] = ()):
    """Stable colouring shared across ``complexes``.

    ``extra[k]`` optionally maps ``(n, x)`` to an initial tag for complex ``k``.
    """
    extra = list(extra) + [None] * (len(complexes) - len(extra))
    cofs = [_cofaces(X) for X in complexes]
    colors = []
    for X, ex in zip(complexes, extra):
        colors.append([[(n, n == 1 and x in X.marked, (ex or {}).get((n, x)))
                        for x in range(X.count(n))] for n in range(len(X.faces))])
    table: dict = {}

    def canon(cols):
        out = []
        for level in cols:
            out.append([table.setdefault(c, len(table)) for c in level])
        return out

    colors = [canon(c) for c in colors]
    n_classes = None
    while True:
        new = []
        for X, cols, co in zip(complexes, colors, cofs):
            nc = []
            for n in range(len(X.faces)):
                row = []
                for x in range(X.count(n)):
                    fsig = tuple(cols[n - 1][f] for f in X.faces[n][x]) if n else ()
                    csig = tuple(sorted((i, cols[n + 1][y]) for i, y in co[n][x]))
                    row.append((cols[n][x], fsig, csig))
                nc.append(row)
            new.append(nc)
        table = {}
        colors = [canon(c) for c in new]
        count = len(table)
        if count == n_classes:
            return colors
        n_classes = count


def _histogram(cols):
    from collections import Counter
    return [Counter(level) for level in cols]


def _search_order(X: SSet, cols):
    nv = X.count(0)
    verts = [X.vertices_of(n, x) for n, x in X.all_simplices()]
    vsets = {}
    for (n, x), vs in zip(X.all_simplices(), verts):
        vsets[(n, x)] = set(vs)
    adj = [set() for _ in range(nv)]
    for n, x in X.all_simplices():
        if n == 1:
            a, b = X.faces[1][x]
            adj[a].add(b)
            adj[b].add(a)
    from collections import Counter
    freq = Counter(cols[0])
    placed: list[int] = []
    remaining = set(range(nv))
    while remaining:
        if placed:
            score = lambda v: (-len(adj[v] & set(placed)), freq[cols[0][v]], v)
        else:
            score = lambda v: (freq[cols[0][v]], v)
        v = min(remaining, key=score)
        placed.append(v)
        remaining.discard(v)
    pos = {v: i for i, v in enumerate(placed)}
    order = []
    for n, x in X.all_simplices():
        last = max((pos[v] for v in vsets[(n, x)]), default=-1)
        order.append((last, n, x))
    order.sort()
    return [(n, x) for _, n, x in order]


def find_iso(X: SSet, Y: SSet, extra_x: Optional[dict] = None, extra_y: Optional[dict] = None) -> Optional[SSetMap]:
    """An isomorphism ``X -> Y`` respecting markings and the extra tags, if any."""
    if f_vector(X) != f_vector(Y) or len(X.marked) != len(Y.marked):
        return None
    cx, cy = refine_colors([X, Y], [extra_x, extra_y])
    if _histogram(cx) != _histogram(cy):
        return None
    order = _search_order(X, cx)
    by_color_v: dict = {}
    for v in range(Y.count(0)):
        by_color_v.setdefault(cy[0][v], []).append(v)
    idx = [Y.face_index(n) for n in range(len(Y.faces))]
    levels = [[None] * X.count(n) for n in range(len(X.faces))]
    used = [set() for _ in range(len(X.faces))]

    def rec(k):
        if k == len(order):
            return True
        n, x = order[k]
        if n == 0:
            opts = by_color_v.get(cx[0][x], ())
        else:
            key = tuple(levels[n - 1][f] for f in X.faces[n][x])
            opts = idx[n].get(key, ())
        for y in opts:
            if y in used[n] or cy[n][y] != cx[n][x]:
                continue
            levels[n][x] = y
            used[n].add(y)
            if rec(k + 1):
                return True
            used[n].discard(y)
        levels[n][x] = None
        return False

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(order) + 100))
    try:
        ok = rec(0)
    finally:
        sys.setrecursionlimit(old)
    if not ok:
        return None
    return SSetMap(X, Y, tuple(tuple(level) for level in levels))


def is_isomorphic(X: SSet, Y: SSet) -> bool:
    return find_iso(X, Y) is not None


def _image_tags(f: SSetMap) -> dict:
    tags = {}
    for n, level in enumerate(f.levels):
        for x, y in enumerate(level):
            tags[(n, y)] = ("im", n == 1 and x in f.source.marked)
    return tags


def arrows_isomorphic(f: SSetMap, g: SSetMap) -> Optional[SSetMap]:
    """For monomorphisms: an isomorphism of targets carrying the image of ``f``
    onto the image of ``g`` and matching source markings; the induced map of
    sources is then an isomorphism as well."""
    if f_vector(f.source) != f_vector(g.source):
        return None
    return find_iso(f.target, g.target, _image_tags(f), _image_tags(g))
