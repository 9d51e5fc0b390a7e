"""Subdivision through the semicategory of elements, and the finite cospan
``A -> A *' Sd A <- Sd A`` built with an indexed join.

Marking convention: an elements morphism ``f : ([m], x) -> ([n], y)`` is
marked when ``f(m) = n`` or the edge of ``y`` from ``f(m)`` to ``n`` is marked
(the last vertex is where markings are read off).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .invariants import FinSemicat, nerve_truncated
from .monoidal import IndexedJoinTable, JoinResult, indexed_join
from .sset import SSet, SSetMap


@lru_cache(maxsize=None)
def _monos(a: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Injective monotone maps ``[a] -> [n]`` as value tuples."""
    return tuple(itertools.combinations(range(n + 1), a + 1))


def _edge_to_last(y_dim: int, y: int, X: SSet, v: int) -> bool:
    if v == y_dim:
        return True
    return X.restrict(y_dim, y, (v, y_dim)) in X.marked


@dataclass(frozen=True)
class Elements:
    cat: FinSemicat
    objects: tuple[tuple[int, int], ...]  # (dim, simplex)
    monos: tuple[tuple[int, ...], ...]  # per morphism: values of [m] -> [n]


def _should_mark(X: SSet, marked: Optional[bool]) -> bool:
    return bool(X.marked) if marked is None else marked


def elements(X: SSet, marked: Optional[bool] = None) -> Elements:
    """Objects are all simplices; morphisms are the non-identity face
    inclusions ``f`` with the target restricted along ``f`` equal to the source."""
    objects = tuple(X.all_simplices())
    obj_index = {o: i for i, o in enumerate(objects)}
    src, tgt, monos = [], [], []
    for j, (n, y) in enumerate(objects):
        for m in range(n):
            for f in _monos(m, n):
                x = X.restrict(n, y, f)
                src.append(obj_index[(m, x)])
                tgt.append(j)
                monos.append(f)
    mor_index = {(s, t, f): i for i, (s, t, f) in enumerate(zip(src, tgt, monos))}
    comp = {}
    for f_i in range(len(src)):
        for g_i in range(len(src)):
            if tgt[f_i] == src[g_i]:
                gf = tuple(monos[g_i][v] for v in monos[f_i])
                comp[(g_i, f_i)] = mor_index[(src[f_i], tgt[g_i], gf)]
    mk = set()
    if _should_mark(X, marked):
        for i, f in enumerate(monos):
            n, y = objects[tgt[i]]
            if _edge_to_last(n, y, X, f[-1]):
                mk.add(i)
    cat = FinSemicat(len(objects), tuple(src), tuple(tgt), comp, frozenset(mk))
    return Elements(cat, objects, tuple(monos))


@dataclass(frozen=True)
class Subdivision:
    """``complex`` is the nerve of the elements; its labels are chains of
    elements morphisms (``(object,)`` in dimension 0)."""
    complex: SSet
    elements: Elements

    def first(self, n: int, s: int) -> tuple[int, int]:
        ch = self.complex.labels[n][s]
        obj = ch[0] if n == 0 else self.elements.cat.src[ch[0]]
        return self.elements.objects[obj]

    def last(self, n: int, s: int) -> tuple[int, int]:
        ch = self.complex.labels[n][s]
        obj = ch[0] if n == 0 else self.elements.cat.tgt[ch[-1]]
        return self.elements.objects[obj]

    def chain(self, n: int, s: int) -> list[tuple[int, int]]:
        """The simplices ``x_0, ..., x_n`` of the flag."""
        ch = self.complex.labels[n][s]
        if n == 0:
            return [self.elements.objects[ch[0]]]
        cat = self.elements.cat
        return [self.elements.objects[cat.src[ch[0]]]] + [self.elements.objects[cat.tgt[f]] for f in ch]

    def link(self, n: int, s: int, i: int, j: int) -> tuple[int, ...]:
        """Face inclusion of ``x_i`` into ``x_j`` for ``i <= j``."""
        ch = self.complex.labels[n][s]
        dims = [d for d, _ in self.chain(n, s)]
        g = tuple(range(dims[i] + 1))
        for k in range(i, j):
            f = self.elements.monos[ch[k]]
            g = tuple(f[v] for v in g)
        return g


def sd(X: SSet, marked: Optional[bool] = None) -> Subdivision:
    E = elements(X, marked)
    d = max(X.dim, 0)
    S = nerve_truncated(E.cat, d, check=False)
    return Subdivision(S, E)


def flag_endpoints(S: Subdivision, n: int, s: int):
    return S.first(n, s), S.last(n, s)


def last_vertex_action(S: Subdivision, n: int, s: int, alpha: tuple[int, ...]) -> tuple[int, ...]:
    """For the face of the flag ``s`` spanned by positions ``alpha``, the
    inclusion of its last simplex into the last simplex of ``s``."""
    return S.link(n, s, alpha[-1], n)


def first_vertex_action(S: Subdivision, n: int, s: int, alpha: tuple[int, ...]) -> tuple[int, ...]:
    """The inclusion of the first simplex of ``s`` into the first simplex of
    its face spanned by ``alpha`` (contravariant)."""
    return S.link(n, s, 0, alpha[0])


def F_table(A: SSet, S: Subdivision, marked: Optional[bool] = None) -> IndexedJoinTable:
    """Tokens over ``(x, sigma)`` are the face inclusions ``g`` of ``x`` into
    the first simplex of the flag ``sigma``."""
    mark = _should_mark(A, marked)
    cache: dict = {}

    def faces_of(k, z, a):
        key = (k, z, a)
        if key not in cache:
            out: dict = {}
            for g in _monos(a, k):
                out.setdefault(A.restrict(k, z, g), []).append(g)
            cache[key] = out
        return cache[key]

    def tokens(a, x, b, sig):
        k, z = S.first(b, sig)
        if a > k:
            return ()
        return tuple(faces_of(k, z, a).get(x, ()))

    def restrict_a(a, x, b, sig, i, g):
        return g[:i] + g[i + 1:]

    def restrict_b(a, x, b, sig, j, g):
        if j != 0:
            return g
        f = S.link(b, sig, 0, 1)
        return tuple(f[v] for v in g)

    def is_marked(x, sig, g):
        if not mark:
            return False
        k, z = S.first(0, sig)
        return _edge_to_last(k, z, A, g[0])

    return IndexedJoinTable(tokens, restrict_a, restrict_b, is_marked)


@dataclass(frozen=True)
class CospanResult:
    summit: SSet
    left: SSetMap
    right: SSetMap
    sd: Subdivision
    join: JoinResult


def cospan(A: SSet, marked: Optional[bool] = None) -> CospanResult:
    mark = _should_mark(A, marked)
    S = sd(A, mark)
    J = indexed_join(A, S.complex, F_table(A, S, mark))
    return CospanResult(J.result, J.left, J.right, S, J)

