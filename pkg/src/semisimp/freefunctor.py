"""The free simplicial set monad UL on semisimplicial sets, truncated at a
chosen dimension, and the cellwise homotopy between its two whiskered units.

A simplex of ``UL X`` in dimension ``n`` is a pair ``(s, x)`` with
``s : [n] ->> [k]`` an epimorphism and ``x`` a ``k``-simplex of ``X``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import ordcalc
from .ordcalc import MonotoneMap, compose, identity, make_map, reedy_factorize
from .sset import SSet, SSetMap, SSetError


class NotCommuting(SSetError):
    pass


class BadInput(SSetError):
    pass


def truncate(X: SSet, d: int) -> SSet:
    labels = X.labels[: d + 1] if X.labels is not None else None
    return SSet(X.faces[: d + 1], X.marked if d >= 1 else frozenset(), labels)


@lru_cache(maxsize=None)
def _epis(size: int) -> tuple[MonotoneMap, ...]:
    return tuple(ordcalc.epis_from(size))


def ul_truncated(X: SSet, d: int) -> SSet:
    """Labels are ``(s.values, x)``."""
    labels = []
    for n in range(d + 1):
        level = []
        for s in _epis(n + 1):
            k = s.cod - 1
            if k <= X.dim:
                level.extend((s.values, x) for x in range(X.count(k)))
        labels.append(level)
    index = [{lab: i for i, lab in enumerate(level)} for level in labels]
    faces = []
    for n, level in enumerate(labels):
        if n == 0:
            faces.append(tuple(() for _ in level))
            continue
        row = []
        for sv, x in level:
            k = sv[-1]
            fs = []
            for i in range(n + 1):
                e, m = reedy_factorize(make_map(n, k + 1, sv[:i] + sv[i + 1:]))
                fs.append(index[n - 1][(e.values, X.restrict(k, x, m.values))])
            row.append(tuple(fs))
        faces.append(tuple(row))
    marked = set()
    if d >= 1:
        for e, (sv, x) in enumerate(labels[1]):
            if sv == (0, 0) or x in X.marked:
                marked.add(e)
    return SSet(tuple(faces), frozenset(marked), tuple(tuple(level) for level in labels))


def ul_count(X: SSet, n: int) -> int:
    from math import comb
    return sum(comb(n, k) * X.count(k) for k in range(n + 1))


def _index(Y: SSet):
    return [{lab: i for i, lab in enumerate(level)} for level in Y.labels]


def eta(X: SSet, d: int, ul: Optional[SSet] = None) -> SSetMap:
    ul = ul or ul_truncated(X, d)
    idx = _index(ul)
    T = truncate(X, d)
    return SSetMap(T, ul, tuple(tuple(idx[n][(tuple(range(n + 1)), x)] for x in range(T.count(n)))
                                for n in range(len(T.faces))))


def mu(X: SSet, d: int, ul: Optional[SSet] = None, ulul: Optional[SSet] = None) -> SSetMap:
    ul = ul or ul_truncated(X, d)
    ulul = ulul or ul_truncated(ul, d)
    idx = _index(ul)
    levels = []
    for n, level in enumerate(ulul.labels):
        row = []
        for sv, y in level:
            tv, x = ul.labels[sv[-1]][y]
            row.append(idx[n][(tuple(tv[v] for v in sv), x)])
        levels.append(tuple(row))
    return SSetMap(ulul, ul, tuple(levels))


def ul_map(f: SSetMap, d: int, src: Optional[SSet] = None, tgt: Optional[SSet] = None) -> SSetMap:
    """Functorial action of ``UL`` on a map."""
    src = src or ul_truncated(f.source, d)
    tgt = tgt or ul_truncated(f.target, d)
    idx = _index(tgt)
    return SSetMap(src, tgt, tuple(tuple(idx[n][(sv, f.levels[sv[-1]][x])] for sv, x in level)
                                   for n, level in enumerate(src.labels)))


def eta_ul(X: SSet, d: int, ul=None, ulul=None) -> SSetMap:
    """``eta`` at ``UL X``: ``(s, x) -> (id, (s, x))``."""
    ul = ul or ul_truncated(X, d)
    return eta(ul, d, ulul)


def ul_eta(X: SSet, d: int, ul=None, ulul=None) -> SSetMap:
    """``UL`` applied to ``eta``: ``(s, x) -> (s, (id, x))``."""
    ul = ul or ul_truncated(X, d)
    ulul = ulul or ul_truncated(ul, d)
    return ul_map(eta(X, d, ul), d, ul, ulul)


# the homotopy

@dataclass(frozen=True)
class HOutput:
    e1: MonotoneMap
    e2: MonotoneMap
    n1: MonotoneMap = field(compare=False)  # the final segment [n1] -> [n]
    k1: MonotoneMap = field(compare=False)  # its image [k1] -> [k]
    k1_m: MonotoneMap = field(compare=False)  # [k1] -> [m]


def _check_input(phi: MonotoneMap, s: MonotoneMap):
    if phi.cod != 2 or phi.dom != s.dom or not s.is_epi():
        raise BadInput(f"need phi : [n] -> [1] and an epi out of [n], got {phi}, {s}")


@lru_cache(maxsize=None)
def homotopy_H(phi: MonotoneMap, s: MonotoneMap) -> HOutput:
    """Factor ``s`` as ``[n] ->> [m] ->> [k]`` by collapsing the part of
    ``[n]`` lying over ``1`` the way ``s`` does and keeping the rest apart."""
    _check_input(phi, s)
    n1, _ = ordcalc.pullback_along_mono(phi, make_map(1, 2, [1]))
    q, k1 = reedy_factorize(compose(s, n1))
    e1, k1_m = ordcalc.pushout_along_mono(n1, q)
    # e2 is induced by s on [n] and by the inclusion on [k1]
    vals = [None] * e1.cod
    for i, v in enumerate(e1.values):
        vals[v] = s.values[i]
    for j, v in enumerate(k1_m.values):
        if vals[v] is not None and vals[v] != k1.values[j]:
            raise NotCommuting("pushout cocone does not agree")
        vals[v] = k1.values[j]
    e2 = make_map(e1.cod, s.cod, vals)
    return HOutput(e1, e2, n1, k1, k1_m)


def homotopy_H_morphism(phi: MonotoneMap, s: MonotoneMap, alpha: MonotoneMap):
    """Restrict the input along the mono ``alpha : [n'] -> [n]``.

    Returns ``(gamma, beta)`` where ``beta : [k'] -> [k]`` is the mono part of
    ``s o alpha`` and ``gamma : [m'] -> [m]`` is the induced map of middle
    objects; raises ``NotCommuting`` if either square fails.
    """
    if not alpha.is_mono() or alpha.cod != phi.dom:
        raise BadInput(f"{alpha} is not a mono into the input")
    s2, beta = reedy_factorize(compose(s, alpha))
    phi2 = compose(phi, alpha)
    big, small = homotopy_H(phi, s), homotopy_H(phi2, s2)
    vals = [None] * small.e1.cod
    for i, v in enumerate(small.e1.values):
        w = big.e1.values[alpha.values[i]]
        if vals[v] is not None and vals[v] != w:
            raise NotCommuting("induced middle map is not well defined")
        vals[v] = w
    try:
        gamma = make_map(small.e1.cod, big.e1.cod, vals)
    except ordcalc.OrdinalError as exc:
        raise NotCommuting(str(exc)) from exc
    if compose(gamma, small.e1) != compose(big.e1, alpha):
        raise NotCommuting("left square fails")
    if compose(big.e2, gamma) != compose(beta, small.e2):
        raise NotCommuting("right square fails")
    return gamma, beta


# marked variant: objects of the marked simplex category are (size, flag)

@dataclass(frozen=True)
class MarkedHOutput:
    e1: MonotoneMap
    e2: MonotoneMap
    middle: tuple[int, bool]
    target: tuple[int, bool]


def homotopy_H_marked(phi: str, k: int) -> MarkedHOutput:
    """Value on the marked edge ``[1]_m <- [1]_m ->> [k]``.

    ``phi`` is one of ``"id", "const0", "const1"``; ``k`` is ``0`` or ``1``
    (meaning ``[1]_m``).  The underlying edge is restricted along
    ``[1] -> [1]_m``, sent through ``homotopy_H``, and the middle object is
    the pushout of ``[1] -> [1]_m`` along ``[1] ->> [m']``: marked exactly when
    ``[m'] = [1]``.
    """
    phis = {"id": (0, 1), "const0": (0, 0), "const1": (1, 1)}
    if phi not in phis or k not in (0, 1):
        raise BadInput(f"no marked edge input ({phi}, {k})")
    s = make_map(2, k + 1, (0, 0) if k == 0 else (0, 1))
    out = homotopy_H(make_map(2, 2, phis[phi]), s)
    middle = (out.e1.cod, out.e1.cod == 2)
    return MarkedHOutput(out.e1, out.e2, middle, (k + 1, k == 1))


@dataclass
class HReport:
    inputs: int = 0
    morphisms: int = 0
    composites: int = 0
    failures: int = 0
    first_failure: Optional[str] = None

    def fail(self, msg):
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = msg


def _monos_into(size):
    return [f for k in range(1, size + 1) for f in ordcalc.enumerate_maps(k, size, "mono")]


def verify_H(d: int) -> HReport:
    rep = HReport()
    for n in range(d + 1):
        size = n + 1
        monos = _monos_into(size)
        for phi in ordcalc.enumerate_maps(size, 2):
            for s in _epis(size):
                rep.inputs += 1
                where = f"phi={phi.values} s={s.values}"
                try:
                    out = homotopy_H(phi, s)
                except SSetError as exc:
                    rep.fail(f"{where}: {exc}")
                    continue
                if compose(out.e2, out.e1) != s:
                    rep.fail(f"{where}: e2 e1 != s")
                if set(phi.values) == {0} and out.e1 != identity(size):
                    rep.fail(f"{where}: phi = 0 but e1 not identity")
                if set(phi.values) == {1} and out.e2 != identity(s.cod):
                    rep.fail(f"{where}: phi = 1 but e2 not identity")
                gammas = {}
                for alpha in monos:
                    rep.morphisms += 1
                    try:
                        gamma, _ = homotopy_H_morphism(phi, s, alpha)
                    except SSetError as exc:
                        rep.fail(f"{where} alpha={alpha.values}: {exc}")
                        continue
                    if not gamma.is_mono():
                        rep.fail(f"{where} alpha={alpha.values}: middle map not mono")
                    gammas[alpha] = gamma
                    if alpha == identity(size) and gamma != identity(out.e1.cod):
                        rep.fail(f"{where}: identity not preserved")
                # functoriality along composable monos
                for a2, g2 in gammas.items():
                    phi2 = compose(phi, a2)
                    s2, _ = reedy_factorize(compose(s, a2))
                    for a1 in _monos_into(a2.dom):
                        rep.composites += 1
                        try:
                            g1, _ = homotopy_H_morphism(phi2, s2, a1)
                        except SSetError as exc:
                            rep.fail(f"{where}: {exc}")
                            continue
                        if compose(g2, g1) != gammas.get(compose(a2, a1)):
                            rep.fail(f"{where} alpha={a2.values} then {a1.values}: not functorial")
    # marked inputs
    for phi in ("id", "const0", "const1"):
        for k in (0, 1):
            out = homotopy_H_marked(phi, k)
            if compose(out.e2, out.e1).values != ((0, 0) if k == 0 else (0, 1)):
                rep.fail(f"marked ({phi}, {k}): e2 e1 != s")
            if phi == "const0" and out.middle != (2, True):
                rep.fail(f"marked ({phi}, {k}): left factor not an iso of [1]_m")
            if phi == "const1" and out.middle != out.target:
                rep.fail(f"marked ({phi}, {k}): right factor not an iso")
    return rep


def homotopy_on_complex(X: SSet, d: int, phi: MonotoneMap, n: int, y: int,
                        ul: Optional[SSet] = None, ulul: Optional[SSet] = None) -> int:
    """Apply the homotopy to the ``n``-simplex ``y = (s, x)`` of ``UL X`` over
    ``phi``: the result is the simplex ``(e1, (e2, x))`` of ``UL UL X``."""
    ul = ul or ul_truncated(X, d)
    ulul = ulul or ul_truncated(ul, d)
    sv, x = ul.labels[n][y]
    out = homotopy_H(phi, make_map(n + 1, sv[-1] + 1, sv))
    inner = _index(ul)[out.e1.cod - 1][(out.e2.values, x)]
    return _index(ulul)[n][(out.e1.values, inner)]
