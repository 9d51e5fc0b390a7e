"""Lifting problems, horn completion stages and cell certificates.

A certificate lists cell attachments.  Each attachment names a generating
inclusion ``K -> L`` and gives an attaching map ``K -> stage`` into the
current stage; replaying it forms the pushout, which appends the simplices of
``L`` outside ``K`` (old indices are kept) and adds the marks of ``L``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import sset as S
from .iso import find_iso
from .monoidal import join, join_map, label_index, leibniz
from .sset import RangeError, SSet, SSetMap, SSetError, extensions, identity_map
from .subdiv import cospan


class NotCommuting(SSetError):
    pass


class ReplayError(SSetError):
    pass


HORN_KINDS = ("horn", "marked_horn")


@lru_cache(maxsize=None)
def generator_map(kind: str, params: tuple) -> SSetMap:
    if kind == "boundary":
        return S.boundary(*params)
    if kind == "horn":
        return S.horn(*params)
    if kind == "marked_horn":
        return S.marked_horn(*params)
    if kind == "edge_marking":
        return S.edge_marking()
    if kind == "marking_saturation":
        return S.marking_saturation()
    if kind == "two_of_three":
        (i,) = params
        D = S.simplex(2)
        pairs = {0: [(0, 1), (0, 2)], 1: [(0, 1), (1, 2)], 2: [(0, 2), (1, 2)]}[i]
        src = D.with_marking(D.labels[1].index(p) for p in pairs)
        return SSetMap(src, D.maximal(), identity_map(D).levels)
    raise ReplayError(f"unknown generator {kind!r}")


@dataclass(frozen=True)
class Attachment:
    kind: str
    params: tuple
    levels: tuple  # attaching map from the generator's domain into the stage


@dataclass
class CellCertificate:
    source: SSet
    attachments: list = field(default_factory=list)

    def kinds(self) -> list[str]:
        return [a.kind for a in self.attachments]

    def all_horns(self) -> bool:
        return all(a.kind in HORN_KINDS for a in self.attachments)

    def to_json(self) -> dict:
        return {
            "source": {"faces": [list(map(list, lv)) for lv in self.source.faces],
                       "marked": sorted(self.source.marked)},
            "attachments": [{"kind": a.kind, "params": list(a.params),
                             "levels": [list(lv) for lv in a.levels]} for a in self.attachments],
        }

    @staticmethod
    def from_json(d: dict) -> "CellCertificate":
        src = SSet(tuple(tuple(tuple(s) for s in lv) for lv in d["source"]["faces"]),
                   frozenset(d["source"]["marked"]))
        atts = [Attachment(a["kind"], tuple(a["params"]), tuple(tuple(lv) for lv in a["levels"]))
                for a in d["attachments"]]
        return CellCertificate(src, atts)


class Stage:
    """Mutable complex that cells are attached to."""

    def __init__(self, X: SSet):
        self.faces = [list(lv) for lv in X.faces]
        self.marked = set(X.marked)

    def count(self, n):
        return len(self.faces[n]) if n < len(self.faces) else 0

    def snapshot(self) -> SSet:
        return SSet(tuple(tuple(lv) for lv in self.faces), frozenset(self.marked))

    def attach(self, att: Attachment) -> list[tuple[int, int]]:
        """Form the pushout; returns the new simplices in the order created."""
        j = generator_map(att.kind, att.params)
        K, L = j.source, j.target
        lv = [tuple(x) for x in att.levels]
        while len(lv) < len(K.faces):
            lv.append(())
        # check the attaching map
        for n in range(len(K.faces)):
            if len(lv[n]) != K.count(n):
                raise ReplayError(f"{att.kind}: level {n} has the wrong size")
            for x, y in enumerate(lv[n]):
                if not 0 <= y < self.count(n):
                    raise ReplayError(f"{att.kind}: simplex ({n},{y}) not in stage")
                if n:
                    for i, f in enumerate(K.faces[n][x]):
                        if self.faces[n][y][i] != lv[n - 1][f]:
                            raise ReplayError(f"{att.kind}: attaching map does not commute with d_{i}")
        for e in K.marked:
            if lv[1][e] not in self.marked:
                raise ReplayError(f"{att.kind}: marked edge sent to an unmarked edge")
        image = [dict() for _ in range(len(L.faces))]
        for n in range(len(K.faces)):
            for x in range(K.count(n)):
                image[n][j.levels[n][x]] = lv[n][x]
        created = []
        for n in range(len(L.faces)):
            while len(self.faces) <= n:
                self.faces.append([])
            for x in range(L.count(n)):
                if x in image[n]:
                    continue
                fs = tuple(image[n - 1][f] for f in L.faces[n][x]) if n else ()
                image[n][x] = len(self.faces[n])
                self.faces[n].append(fs)
                created.append((n, image[n][x]))
        for e in L.marked:
            self.marked.add(image[1][e])
        return created


def replay(c: CellCertificate) -> tuple[SSet, SSetMap]:
    st = Stage(c.source)
    for att in c.attachments:
        st.attach(att)
    X = st.snapshot()
    inc = SSetMap(c.source, X, identity_map(c.source).levels)
    return X, inc


def verify_certificate(c: CellCertificate, f: SSetMap) -> bool:
    """Replay ``c`` and look for an isomorphism onto ``f.target`` under the source."""
    if c.source.faces != f.source.faces or c.source.marked != f.source.marked:
        return False
    if not S.is_cofibration(f):
        return False
    X, inc = replay(c)
    tags_x = {(n, inc.levels[n][x]): ("src", n, x) for n, x in c.source.all_simplices()}
    tags_y = {(n, f.levels[n][x]): ("src", n, x) for n, x in c.source.all_simplices()}
    return find_iso(X, f.target, tags_x, tags_y) is not None


class CertificateBuilder:
    """Builds a certificate for a cofibration ``f : A -> T`` by creating
    simplices of ``T``; ``present`` maps target simplices to stage indices."""

    def __init__(self, f: SSetMap):
        self.f = f
        self.T = f.target
        self.stage = Stage(f.source)
        self.cert = CellCertificate(f.source)
        self.present = [dict() for _ in range(len(self.T.faces))]
        for n, x in f.source.all_simplices():
            self.present[n][f.levels[n][x]] = x

    def _levels(self, K_labels, n, t):
        return tuple(tuple(self.present[len(s) - 1][self.T.restrict(n, t, s)] for s in level)
                     for level in K_labels)

    def _emit(self, kind, params, levels, created_targets):
        att = Attachment(kind, params, levels)
        created = self.stage.attach(att)
        self.cert.attachments.append(att)
        if len(created) != len(created_targets):
            raise ReplayError("attachment created an unexpected number of simplices")
        for (n, s), (m, t) in zip(created, created_targets):
            self.present[m][t] = s

    def boundary(self, n, t):
        K = S.boundary(n).source
        labels = K.labels if K.labels is not None else ()
        self._emit("boundary", (n,), self._levels(labels, n, t), [(n, t)])

    def horn(self, n, t, k, marked=False):
        kind = "marked_horn" if marked else "horn"
        K = generator_map(kind, (n, k)).source
        missing_face = self.T.faces[n][t][k]
        self._emit(kind, (n, k), self._levels(K.labels, n, t), [(n - 1, missing_face), (n, t)])

    def mark(self, kind, params, n, t):
        self._emit(kind, params, self._levels(S.simplex(n).labels, n, t), [])

    def is_present(self, n, t):
        return t in self.present[n]

    def stage_marked(self, e) -> bool:
        return self.present[1][e] in self.stage.marked


# lifting problems

@dataclass(frozen=True)
class LiftingProblem:
    top: SSetMap  # A -> X
    left: SSetMap  # A -> B
    bottom: SSetMap  # B -> Y
    right: SSetMap  # X -> Y


def solve_lifting(p: LiftingProblem) -> Optional[SSetMap]:
    A, B, X = p.left.source, p.left.target, p.top.target
    if S.compose_maps(p.right, p.top).levels != S.compose_maps(p.bottom, p.left).levels:
        raise NotCommuting("the square does not commute")
    partial = {}
    for n, a in A.all_simplices():
        key = (n, p.left.levels[n][a])
        if partial.get(key, p.top.levels[n][a]) != p.top.levels[n][a]:
            return None
        partial[key] = p.top.levels[n][a]
    rl, bl = p.right.levels, p.bottom.levels
    for h in extensions(B, X, partial, filter_fn=lambda n, b, x: rl[n][x] == bl[n][b]):
        if S.compose_maps(p.right, h).levels == p.bottom.levels and \
                S.compose_maps(h, p.left).levels == p.top.levels:
            return h
    return None


# horns

def _horn_kinds(n, kinds):
    for k in range(n + 1):
        inner = 0 < k < n
        if kinds == "all" or (kinds == "inner" and inner) or (kinds == "outer" and not inner):
            yield k


@dataclass(frozen=True)
class HornEntry:
    n: int
    k: int
    levels: tuple
    filled: bool


def horn_filler_scan(X: SSet, d: int, kinds: str = "all", marked: Optional[bool] = None) -> list[HornEntry]:
    """Every horn of dimension at most ``d`` into ``X`` and whether it has a filler."""
    if marked is None:
        marked = bool(X.marked)
    out = []
    kind = "marked_horn" if marked else "horn"
    for n in range(1, d + 1):
        if n - 1 > X.dim:
            break
        for k in _horn_kinds(n, kinds):
            j = generator_map(kind, (n, k))
            found = sorted(h.levels for h in extensions(j.source, X))
            for levels in found:
                partial = {(m, j.levels[m][x]): levels[m][x] for m, x in j.source.all_simplices()}
                filled = next(extensions(j.target, X, partial), None) is not None
                out.append(HornEntry(n, k, levels, filled))
    return out


@dataclass
class StageResult:
    complex: SSet
    inclusion: SSetMap
    certificate: CellCertificate


def horn_completion_stage(X: SSet, kinds: str = "all", marked: Optional[bool] = None,
                          max_dim: Optional[int] = None) -> StageResult:
    """Freely fill, all at once, every horn into ``X`` that has no filler."""
    if marked is None:
        marked = bool(X.marked)
    kind = "marked_horn" if marked else "horn"
    d = (X.dim + 1) if max_dim is None else max_dim
    entries = [e for e in horn_filler_scan(X, d, kinds, marked) if not e.filled]
    st = Stage(X)
    cert = CellCertificate(X)
    for e in entries:
        att = Attachment(kind, (e.n, e.k), e.levels)
        st.attach(att)
        cert.attachments.append(att)
    Y = st.snapshot()
    return StageResult(Y, SSetMap(X, Y, identity_map(X).levels), cert)


# certificates for specific inclusions

def leibniz_boundary_certificate(a: int, b: int) -> tuple[CellCertificate, SSetMap]:
    """Boundary cells presenting the Leibniz geometric product of two boundary
    inclusions: every simplex whose components are both top-dimensional."""
    f = leibniz(S.boundary(a), S.boundary(b), "tensor")
    T = f.target
    builder = CertificateBuilder(f)
    for n in range(len(T.faces)):
        for t, (p, q, x, y) in enumerate(T.labels[n]):
            if p[-1] == a and q[-1] == b and not builder.is_present(n, t):
                builder.boundary(n, t)
    return builder.cert, f


def point_join_map(k: int, m: int) -> SSetMap:
    Dk = S.simplex(k)
    src = join(Dk, S.boundary(m).source)
    tgt = join(Dk, S.simplex(m))
    return join_map(src, tgt, identity_map(Dk), S.boundary(m))


def _pairing_cells(k: int):
    """Subsets ``S`` of ``[k-1]`` by size; the cell for ``S`` is
    ``(S + {k}) * top`` filled along the horn at position ``|S|``."""
    for size in range(k + 1):
        for Sset in itertools.combinations(range(k), size):
            yield Sset


def point_join_horn_certificate(k: int, m: int) -> tuple[CellCertificate, SSetMap]:
    f = point_join_map(k, m)
    T = f.target
    idx = label_index(T)
    Dk, Dm = S.simplex(k), S.simplex(m)
    top_m = Dm.count(m) - 1
    builder = CertificateBuilder(f)
    for Sset in _pairing_cells(k):
        U = Sset + (k,)
        x = Dk.labels[len(U) - 1].index(U)
        n = len(U) + m
        t = idx[n][("J", len(U) - 1, x, top_m)]
        builder.horn(n, t, len(Sset))
    return builder.cert, f


def cospan_left_certificate(A: SSet, marked: bool = False, max_n: int = 3):
    """Horn cells presenting the left leg ``A -> A *' Sd A`` for a standard
    simplex ``A``.  In marked mode the subdivision edges that must be marked
    are marked with a two-out-of-three cell right after they are created."""
    n_dim = A.dim
    if S.f_vector(A) != S.f_vector(S.simplex(n_dim)) or n_dim > max_n:
        raise RangeError("certificates are generated for standard simplices up to dimension 3")
    if not marked:
        A = A.minimal()
    C = cospan(A, marked=marked)
    T = C.summit
    idx = label_index(T)
    Sd = C.sd
    builder = CertificateBuilder(C.left)
    for m in range(len(Sd.complex.faces)):
        for sig in range(Sd.complex.count(m)):
            k, z = Sd.first(m, sig)
            for Sset in _pairing_cells(k):
                U = Sset + (k,)
                a = len(U) - 1
                x = A.restrict(k, z, U)
                n = a + m + 1
                t = idx[n][("J", a, x, sig, U)]
                crit_marked = marked and len(Sset) == 0
                builder.horn(n, t, len(Sset), marked=crit_marked)
                if marked:
                    _mark_created_edges(builder, n, t, len(Sset))
    return builder.cert, C.left


def _mark_created_edges(builder: CertificateBuilder, n: int, t: int, k: int):
    T = builder.T
    created = [(n - 1, T.faces[n][t][k]), (n, t)]
    for dim, s in created:
        if dim != 1 or s not in T.marked or builder.stage_marked(s):
            continue
        # a triangle whose other two edges are marked already
        done = False
        for tri in range(T.count(2)):
            fs = T.faces[2][tri]
            if s not in fs or not builder.is_present(2, tri):
                continue
            i = fs.index(s)
            others = [e for e in fs if e != s]
            if len(others) == 2 and all(builder.stage_marked(e) for e in others):
                builder.mark("two_of_three", (i,), 2, tri)
                done = True
                break
        if not done:
            builder.mark("edge_marking", (), 1, s)
