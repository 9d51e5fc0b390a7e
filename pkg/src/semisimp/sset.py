"""Finite (marked) semisimplicial sets and maps between them.

A complex stores, for every dimension ``n``, a tuple of simplices; each
simplex is the tuple of indices of its ``n + 1`` faces in dimension ``n - 1``
(position ``i`` holds ``d_i``).  Vertices are empty tuples.  The marking is a
frozenset of edge indices; an unmarked complex is the same thing as a
minimally marked one.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Optional, Sequence

from . import ordcalc


class SSetError(ValueError):
    pass


class IdentityViolation(SSetError):
    def __init__(self, dim, simplex, i, j):
        super().__init__(f"d_{i} d_{j} != d_{j - 1} d_{i} on simplex {simplex} of dimension {dim}")
        self.dim, self.simplex, self.i, self.j = dim, simplex, i, j


class RangeError(SSetError):
    pass


class MarkingRangeError(SSetError):
    pass


class MapMismatch(SSetError):
    pass


class BadParams(SSetError):
    pass


class NotParallel(SSetError):
    pass


Faces = tuple[tuple[tuple[int, ...], ...], ...]


def _trim(faces):
    faces = [tuple(tuple(s) for s in level) for level in faces]
    while faces and not faces[-1]:
        faces.pop()
    return tuple(faces)


@dataclass(frozen=True)
class SSet:
    faces: Faces
    marked: frozenset = frozenset()
    labels: Any = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "faces", _trim(self.faces))
        object.__setattr__(self, "marked", frozenset(self.marked))

    # basic queries
    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    def count(self, n: int) -> int:
        return len(self.faces[n]) if 0 <= n < len(self.faces) else 0

    def simplices(self, n: int) -> range:
        return range(self.count(n))

    def all_simplices(self) -> Iterator[tuple[int, int]]:
        for n in range(len(self.faces)):
            for x in range(len(self.faces[n])):
                yield n, x

    def total(self) -> int:
        return sum(len(level) for level in self.faces)

    def face(self, n: int, x: int, i: int) -> int:
        return self.faces[n][x][i]

    def restrict(self, n: int, x: int, mono: Sequence[int]) -> int:
        """Face of the ``n``-simplex ``x`` spanned by the vertex positions in ``mono``."""
        keep = set(mono)
        if len(keep) != len(mono) or not keep or max(keep) > n:
            raise RangeError(f"bad face {mono} of a {n}-simplex")
        m = n
        for i in range(n, -1, -1):
            if i not in keep:
                x = self.faces[m][x][i]
                m -= 1
        return x

    def vertices_of(self, n: int, x: int) -> tuple[int, ...]:
        return tuple(self.restrict(n, x, (j,)) for j in range(n + 1))

    def is_marked(self, e: int) -> bool:
        return e in self.marked

    def label(self, n: int, x: int):
        if self.labels is None:
            return (n, x)
        return self.labels[n][x]

    # marking helpers
    def with_marking(self, marked: Iterable[int]) -> "SSet":
        return SSet(self.faces, frozenset(marked), self.labels)

    def minimal(self) -> "SSet":
        return self.with_marking(())

    def maximal(self) -> "SSet":
        return self.with_marking(range(self.count(1)))

    def face_index(self, n: int) -> dict:
        """Map from face tuples to the ``n``-simplices having them."""
        out: dict = {}
        for x, fs in enumerate(self.faces[n] if n < len(self.faces) else ()):
            out.setdefault(fs, []).append(x)
        return out


def validate(X: SSet) -> None:
    for n, level in enumerate(X.faces):
        for x, fs in enumerate(level):
            if len(fs) != (n + 1 if n > 0 else 0):
                raise RangeError(f"simplex {x} of dimension {n} has {len(fs)} faces")
            for f in fs:
                if not 0 <= f < len(X.faces[n - 1]):
                    raise RangeError(f"face {f} of simplex {x} in dimension {n} out of range")
    for n in range(2, len(X.faces)):
        for x, fs in enumerate(X.faces[n]):
            for j in range(n + 1):
                for i in range(j):
                    if X.faces[n - 1][fs[j]][i] != X.faces[n - 1][fs[i]][j - 1]:
                        raise IdentityViolation(n, x, i, j)
    for e in X.marked:
        if not isinstance(e, int) or not 0 <= e < X.count(1):
            raise MarkingRangeError(f"marked edge {e} does not exist")


def f_vector(X: SSet) -> tuple[int, ...]:
    return tuple(len(level) for level in X.faces)


def empty() -> SSet:
    return SSet(())


# maps

@dataclass(frozen=True)
class SSetMap:
    source: SSet
    target: SSet
    levels: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        lv = [tuple(level) for level in self.levels]
        lv = lv[: len(self.source.faces)]
        while len(lv) < len(self.source.faces):
            lv.append(())
        object.__setattr__(self, "levels", tuple(lv))

    def __call__(self, n: int, x: int) -> int:
        return self.levels[n][x]

    def validate(self) -> None:
        A, X = self.source, self.target
        for n in range(len(A.faces)):
            if len(self.levels[n]) != A.count(n):
                raise MapMismatch(f"level {n} has wrong length")
            for x, y in enumerate(self.levels[n]):
                if not 0 <= y < X.count(n):
                    raise MapMismatch(f"image of ({n},{x}) out of range")
                if n > 0:
                    for i in range(n + 1):
                        if self.levels[n - 1][A.faces[n][x][i]] != X.faces[n][y][i]:
                            raise MapMismatch(f"map does not commute with d_{i} at ({n},{x})")
        for e in A.marked:
            if self.levels[1][e] not in X.marked:
                raise MapMismatch(f"marked edge {e} sent to unmarked edge")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except SSetError:
            return False
        return True


def compose_maps(g: SSetMap, f: SSetMap) -> SSetMap:
    """``g o f``."""
    if f.target.faces != g.source.faces:
        raise MapMismatch("maps are not composable")
    return SSetMap(f.source, g.target,
                   tuple(tuple(g.levels[n][y] for y in f.levels[n]) for n in range(len(f.levels))))


def identity_map(X: SSet) -> SSetMap:
    return SSetMap(X, X, tuple(tuple(range(X.count(n))) for n in range(len(X.faces))))


def is_cofibration(f: SSetMap) -> bool:
    for level in f.levels:
        if len(set(level)) != len(level):
            return False
    if not f.is_valid():
        return False
    return True


def is_iso_map(f: SSetMap) -> bool:
    if not is_cofibration(f) or f_vector(f.source) != f_vector(f.target):
        return False
    return {f.levels[1][e] for e in f.source.marked} == set(f.target.marked) if f.source.count(1) else True


# ordered simplicial complexes

def from_vertex_sets(sets: Iterable[Sequence[int]], marked_pairs: Iterable[tuple[int, int]] = ()) -> SSet:
    """Complex whose simplices are the given vertex sets and all their faces.

    Simplices are ordered by dimension and then lexicographically; labels are
    the sorted vertex tuples.
    """
    closure: set = set()
    for s in sets:
        s = tuple(sorted(set(s)))
        for k in range(1, len(s) + 1):
            closure.update(itertools.combinations(s, k))
    by_dim: list[list[tuple]] = []
    for s in sorted(closure, key=lambda t: (len(t), t)):
        while len(by_dim) < len(s):
            by_dim.append([])
        by_dim[len(s) - 1].append(s)
    index = [{s: i for i, s in enumerate(level)} for level in by_dim]
    faces = []
    for n, level in enumerate(by_dim):
        if n == 0:
            faces.append(tuple(() for _ in level))
        else:
            faces.append(tuple(tuple(index[n - 1][s[:i] + s[i + 1:]] for i in range(n + 1))
                               for s in level))
    marked = set()
    if by_dim and len(by_dim) > 1:
        for p in marked_pairs:
            marked.add(index[1][tuple(sorted(p))])
    return SSet(tuple(faces), frozenset(marked), tuple(tuple(level) for level in by_dim))


def subcomplex_inclusion(X: SSet, keep: Iterable[tuple[int, int]], marked: Optional[Iterable[int]] = None) -> SSetMap:
    """Inclusion of the subcomplex generated by ``keep`` (closed under faces).

    The marking of the subcomplex is the restriction of the marking of ``X``
    unless ``marked`` (edge indices of ``X``) is given.
    """
    chosen = [set() for _ in range(len(X.faces))]
    stack = list(keep)
    while stack:
        n, x = stack.pop()
        if x in chosen[n]:
            continue
        chosen[n].add(x)
        if n > 0:
            stack.extend((n - 1, f) for f in X.faces[n][x])
    order = [sorted(c) for c in chosen]
    pos = [{x: i for i, x in enumerate(o)} for o in order]
    faces = tuple(tuple(tuple(pos[n - 1][f] for f in X.faces[n][x]) if n else () for x in order[n])
                  for n in range(len(order)))
    src_marked = X.marked if marked is None else set(marked)
    mk = frozenset(pos[1][e] for e in src_marked if len(pos) > 1 and e in pos[1])
    labels = None
    if X.labels is not None:
        labels = tuple(tuple(X.labels[n][x] for x in order[n]) for n in range(len(order)))
    S = SSet(faces, mk, labels)
    return SSetMap(S, X, tuple(tuple(o) for o in order))


# generators

def simplex(n: int) -> SSet:
    if n < 0:
        return empty()
    return from_vertex_sets([range(n + 1)])


def _edge_of(X: SSet, a: int, b: int) -> int:
    return X.labels[1].index((a, b))


def boundary(n: int) -> SSetMap:
    if n < 0:
        raise BadParams("boundary needs n >= 0")
    D = simplex(n)
    keep = [(n - 1, x) for x in range(D.count(n - 1))] if n > 0 else []
    return subcomplex_inclusion(D, keep)


def critical_edge(n: int, k: int) -> Optional[tuple[int, int]]:
    if k == 0:
        return (0, 1)
    if k == n:
        return (n - 1, n)
    return None


def horn(n: int, k: int) -> SSetMap:
    if n < 1 or not 0 <= k <= n:
        raise BadParams(f"no horn Lambda^{n}_{k}")
    D = simplex(n)
    # the d_i face of the top simplex, label drops vertex i
    keep = [(n - 1, D.faces[n][0][i]) for i in range(n + 1) if i != k]
    return subcomplex_inclusion(D, keep)


def marked_horn(n: int, k: int) -> SSetMap:
    if n < 1 or not 0 <= k <= n:
        raise BadParams(f"no horn Lambda^{n}_{k}")
    crit = critical_edge(n, k)
    D = simplex(n)
    if crit is not None:
        D = D.with_marking([_edge_of(D, *crit)])
    keep = [(n - 1, D.faces[n][0][i]) for i in range(n + 1) if i != k]
    return subcomplex_inclusion(D, keep)


def edge_marking() -> SSetMap:
    D = simplex(1)
    return SSetMap(D, D.maximal(), identity_map(D).levels)


def marking_saturation() -> SSetMap:
    D = simplex(3)
    src = D.with_marking([_edge_of(D, 0, 2), _edge_of(D, 1, 3)])
    return SSetMap(src, D.maximal(), identity_map(D).levels)


def sk1(n: int) -> SSet:
    """One simplex in each dimension up to ``n``, all faces equal."""
    if n < 0:
        raise BadParams("sk1 needs n >= 0")
    return SSet(tuple(((0,) * (d + 1),) if d else ((),) for d in range(n + 1)))


def dunce_hat() -> SSet:
    return SSet((((),), ((0, 0),), ((0, 0, 0),)))


def loop() -> SSet:
    return SSet((((),), ((0, 0),)))


def parallel_pair() -> SSet:
    """Two vertices ``0, 1`` and two edges from ``0`` to ``1``."""
    return SSet((((), ()), ((1, 0), (1, 0))))


_GENERATORS = {
    "simplex": simplex, "boundary": boundary, "horn": horn, "marked_horn": marked_horn,
    "edge_marking": edge_marking, "marking_saturation": marking_saturation, "sk1": sk1,
    "dunce_hat": dunce_hat, "loop": loop, "parallel_pair": parallel_pair,
}


def generator(name: str, *params: int):
    if name not in _GENERATORS:
        raise BadParams(f"unknown generator {name!r}")
    try:
        return _GENERATORS[name](*params)
    except TypeError as exc:
        raise BadParams(str(exc)) from exc


# colimits

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _quotient(parts: Sequence[SSet], glue: Sequence[tuple[tuple[int, int, int], tuple[int, int, int]]],
              glue_all=None):
    """Disjoint union of ``parts`` modulo identifications.

    ``glue`` pairs ``(part, n, x)`` triples; ``glue_all`` is an iterable of such
    pairs too (kept separate so large generators need not be materialized).
    Returns the quotient and one coprojection per part.
    """
    top = max((len(P.faces) for P in parts), default=0)
    offsets = []
    sizes = [0] * top
    for P in parts:
        off = []
        for n in range(top):
            off.append(sizes[n])
            sizes[n] += P.count(n)
        offsets.append(off)
    ufs = [_UnionFind(sizes[n]) for n in range(top)]
    for (p, n, x), (q, m, y) in itertools.chain(glue, glue_all or ()):
        if n != m:
            raise MapMismatch("cannot identify simplices of different dimension")
        ufs[n].union(offsets[p][n] + x, offsets[q][n] + y)
    classes = []
    for n in range(top):
        roots = sorted({ufs[n].find(i) for i in range(sizes[n])})
        classes.append({r: i for i, r in enumerate(roots)})
    cls = lambda n, g: classes[n][ufs[n].find(g)]
    faces = [[None] * len(classes[n]) for n in range(top)]
    owners = []
    for p, P in enumerate(parts):
        for n in range(len(P.faces)):
            for x, fs in enumerate(P.faces[n]):
                c = cls(n, offsets[p][n] + x)
                if faces[n][c] is None:
                    faces[n][c] = tuple(cls(n - 1, offsets[p][n - 1] + f) for f in fs) if n else ()
    marked = set()
    for p, P in enumerate(parts):
        for e in P.marked:
            marked.add(cls(1, offsets[p][1] + e))
    Q = SSet(tuple(tuple(level) for level in faces), frozenset(marked))
    coprojs = []
    for p, P in enumerate(parts):
        coprojs.append(SSetMap(P, Q, tuple(tuple(cls(n, offsets[p][n] + x) for x in range(P.count(n)))
                                           for n in range(len(P.faces)))))
    return Q, coprojs


def coproduct(parts: Sequence[SSet]) -> tuple[SSet, list[SSetMap]]:
    return _quotient(parts, ())


def pushout(f: SSetMap, g: SSetMap) -> tuple[SSet, SSetMap, SSetMap]:
    """Pushout of ``B <-f- C -g-> D``; returns ``(P, B -> P, D -> P)``."""
    if f.source.faces != g.source.faces:
        raise MapMismatch("span legs have different domains")
    C = f.source
    glue = [((0, n, f.levels[n][c]), (1, n, g.levels[n][c])) for n, c in C.all_simplices()]
    P, (i, j) = _quotient([f.target, g.target], glue)
    return P, i, j


def coequalizer(f: SSetMap, g: SSetMap) -> tuple[SSet, SSetMap]:
    if f.source.faces != g.source.faces or f.target.faces != g.target.faces:
        raise MapMismatch("parallel pair does not typecheck")
    glue = [((0, n, f.levels[n][c]), (0, n, g.levels[n][c])) for n, c in f.source.all_simplices()]
    Q, (q,) = _quotient([f.target], glue)
    return Q, q


def colimit(shape: str, *data):
    if shape == "coproduct":
        return coproduct(data[0] if len(data) == 1 and not isinstance(data[0], SSet) else data)
    if shape == "pushout":
        return pushout(*data)
    if shape == "coequalizer":
        return coequalizer(*data)
    raise BadParams(f"unknown colimit shape {shape!r}")


# opposite

def opposite(X: SSet) -> SSet:
    faces = tuple(tuple(tuple(fs[n - i] for i in range(n + 1)) if n else () for fs in level)
                  for n, level in enumerate(X.faces))
    return SSet(faces, X.marked)


# search for maps

def _candidates_by_faces(X: SSet):
    return [X.face_index(n) for n in range(len(X.faces))]


def extensions(A: SSet, X: SSet, partial: Optional[dict] = None, respect_marking: bool = True,
               injective: bool = False, index=None, filter_fn=None) -> Iterator[SSetMap]:
    """All maps ``A -> X`` agreeing with ``partial`` (a dict ``(n, x) -> y``).

    Simplices are assigned in increasing dimension; in positive dimension the
    candidates are read off an index of ``X`` by face tuples.
    """
    partial = dict(partial or {})
    idx = index or _candidates_by_faces(X)
    order = [(n, x) for n, x in A.all_simplices()]
    levels = [[None] * A.count(n) for n in range(len(A.faces))]
    used = [set() for _ in range(len(A.faces))]
    if A.dim > X.dim:
        # a simplex of A has nowhere to go
        return

    def options(n, x):
        if n == 0:
            opts = range(X.count(0))
        else:
            key = tuple(levels[n - 1][f] for f in A.faces[n][x])
            opts = idx[n].get(key, ())
        if (n, x) in partial:
            want = partial[(n, x)]
            opts = [want] if want in opts else []
        if respect_marking and n == 1 and x in A.marked:
            opts = [y for y in opts if y in X.marked]
        if injective:
            opts = [y for y in opts if y not in used[n]]
        if filter_fn is not None:
            opts = [y for y in opts if filter_fn(n, x, y)]
        return opts

    def rec(k):
        if k == len(order):
            yield SSetMap(A, X, tuple(tuple(level) for level in levels))
            return
        n, x = order[k]
        for y in options(n, x):
            levels[n][x] = y
            if injective:
                used[n].add(y)
            yield from rec(k + 1)
            if injective:
                used[n].discard(y)
        levels[n][x] = None

    yield from rec(0)


def first_extension(A: SSet, X: SSet, partial=None, respect_marking=True) -> Optional[SSetMap]:
    return next(extensions(A, X, partial, respect_marking), None)


def simplex_map(X: SSet, n: int, x: int) -> SSetMap:
    """The map ``Delta^n -> X`` classifying the ``n``-simplex ``x``."""
    D = simplex(n)
    levels = []
    for m, level in enumerate(D.labels):
        levels.append(tuple(X.restrict(n, x, s) for s in level))
    return SSetMap(D, X, tuple(levels))


# slices and witnesses

def slice(X: SSet, p: SSetMap, mode: str = "plain") -> SSet:
    """The slice ``X_{/p}``; labels hold the classifying maps ``Delta^n * A -> X``."""
    from .monoidal import join

    if mode not in ("plain", "marked_cone"):
        raise BadParams(f"unknown slice mode {mode!r}")
    A = p.source
    maps_by_dim = []
    faces = []
    top = X.dim - A.dim - 1
    for n in range(top + 1):
        Dn = simplex(n)
        J = join(Dn, A, "marking" if mode == "marked_cone" else "plain")
        partial = {(m, J.right.levels[m][a]): p.levels[m][a] for m, a in A.all_simplices()}
        found = list(extensions(J.result, X, partial, respect_marking=(mode == "marked_cone")))
        if not found:
            break
        maps_by_dim.append((J, found))
    for n, (J, found) in enumerate(maps_by_dim):
        if n == 0:
            faces.append(tuple(() for _ in found))
            continue
        prevJ, prev = maps_by_dim[n - 1]
        lookup = {m.levels: i for i, m in enumerate(prev)}
        row = []
        for mp in found:
            fs = []
            for i in range(n + 1):
                restr = _restrict_join_map(J, prevJ, mp, i, n)
                fs.append(lookup[restr])
            row.append(tuple(fs))
        faces.append(tuple(row))
    labels = tuple(tuple(found) for _, found in maps_by_dim)
    return SSet(tuple(faces), frozenset(), labels)


def _restrict_join_map(J, prevJ, mp: SSetMap, i: int, n: int):
    # precompose Delta^{n-1} * A -> Delta^n * A (d_i on the left factor) with mp
    from .monoidal import join_map

    di = face_inclusion(n, i)
    jm = join_map(prevJ, J, di, identity_map(J.right.source))
    return compose_maps(mp, jm).levels


def face_inclusion(n: int, i: int) -> SSetMap:
    """``Delta^{n-1} -> Delta^n`` skipping vertex ``i``."""
    return mono_inclusion(ordcalc.face(n, i))


def mono_inclusion(m: ordcalc.MonotoneMap, marked_src: bool = False) -> SSetMap:
    """The map ``Delta^a -> Delta^b`` induced by an injective monotone map."""
    if not m.is_mono():
        raise MapMismatch(f"{m} is not injective")
    A, B = simplex(m.dom - 1), simplex(m.cod - 1)
    pos = [{s: i for i, s in enumerate(level)} for level in B.labels]
    levels = tuple(tuple(pos[n][tuple(m.values[v] for v in s)] for s in A.labels[n])
                   for n in range(len(A.faces)))
    return SSetMap(A, B, levels)


@dataclass(frozen=True)
class Witness:
    extension: SSetMap
    restriction: SSetMap


def _cone_search(X: SSet, P: SSet, data: SSetMap, cone_marked: Iterable[int], all_marked: bool) -> Optional[Witness]:
    from .monoidal import join

    J = join(simplex(0), P)
    src = J.result
    if all_marked:
        src = src.maximal()
    else:
        cone_edges = {J.edge_to(0, v) for v in cone_marked}
        src = src.with_marking(cone_edges | {J.right.levels[1][e] for e in P.marked})
    partial = {(m, J.right.levels[m][a]): data.levels[m][a] for m, a in P.all_simplices()}
    ext = first_extension(src, X, partial, respect_marking=True)
    if ext is None:
        return None
    return Witness(ext, data)


def relatedness_witness(X: SSet, f: int, g: int, marked: Optional[bool] = None) -> Optional[Witness]:
    """Search for ``Delta^0 * P -> X`` restricting to ``[f, g]`` on the parallel pair.

    In the marked setting the cone edge over the source vertex must land on a
    marked edge.  The relation witnessed this way is not closed transitively.
    """
    if marked is None:
        marked = bool(X.marked)
    if X.faces[1][f] != X.faces[1][g]:
        raise NotParallel(f"edges {f} and {g} are not parallel")
    P = parallel_pair()
    src, tgt = X.faces[1][f][1], X.faces[1][f][0]
    data = SSetMap(P, X, ((src, tgt), (f, g)))
    return _cone_search(X, P, data, [0] if marked else [], all_marked=False)


def constant_loop_witness(X: SSet, l: SSetMap, marked: Optional[bool] = None) -> Optional[Witness]:
    """Search for ``Delta^0 * L -> X`` extending the loop ``l``.

    In the marked setting the extension must land in the core, i.e. all of
    its edges must be marked.
    """
    if marked is None:
        marked = bool(X.marked)
    L = loop()
    if l.source.faces != L.faces:
        raise MapMismatch("loop witness needs a map out of L")
    return _cone_search(X, L, SSetMap(L, X, l.levels), [], all_marked=marked)


# random complexes for experiments and tests

def random_sset(rng: random.Random, n_vertices: int = 4, max_dim: int = 2, density: float = 0.5,
                mark_prob: float = 0.0, glue_prob: float = 0.0, duplicate_prob: float = 0.0) -> SSet:
    """Random complex: an ordered simplicial complex on ``n_vertices`` vertices,
    optionally with duplicated top simplices and a random vertex identification."""
    sets = [(v,) for v in range(n_vertices)]
    for d in range(1, max_dim + 1):
        for s in itertools.combinations(range(n_vertices), d + 1):
            if rng.random() < density:
                sets.append(s)
    X = from_vertex_sets(sets)
    if duplicate_prob and X.dim >= 1:
        extra = [(X.dim, x) for x in X.simplices(X.dim) if rng.random() < duplicate_prob]
        if extra:
            parts = [X] + [simplex(X.dim) for _ in extra]
            glue = []
            for k, (n, x) in enumerate(extra, start=1):
                bd = simplex_map(X, n, x)
                for m, s in parts[k].all_simplices():
                    if m < n:
                        glue.append(((0, m, bd.levels[m][s]), (k, m, s)))
            X, _ = _quotient(parts, glue)
    if glue_prob and X.count(0) >= 2 and rng.random() < glue_prob:
        a, b = rng.sample(range(X.count(0)), 2)
        X, _ = _quotient([X], [((0, 0, a), (0, 0, b))])
    if mark_prob:
        X = X.with_marking(e for e in X.simplices(1) if rng.random() < mark_prob)
    return X
