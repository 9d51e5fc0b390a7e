"""Exact calculus of the augmented simplex category.

Ordinals are represented by their cardinality: size ``n + 1`` stands for
``[n]`` and size ``0`` for the empty ordinal ``[-1]``.  A :class:`MonotoneMap`
is a weakly increasing function between two such ordinals.

Pushouts and pullbacks are only offered in the shapes the constructions of
this package need (along monomorphisms).  Pushouts are computed on the level
of finite sets and then ordered; if the induced order is not a total order the
computation aborts with :class:`InternalOrderViolation`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


class OrdinalError(ValueError):
    pass


class NotMonotone(OrdinalError):
    pass


class OutOfRange(OrdinalError):
    pass


class NotMono(OrdinalError):
    pass


class InternalOrderViolation(OrdinalError):
    pass


class HypothesisViolated(OrdinalError):
    pass


@dataclass(frozen=True)
class MonotoneMap:
    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise OutOfRange("ordinal sizes must be non-negative")
        if len(self.values) != self.dom:
            raise OutOfRange(f"expected {self.dom} values, got {len(self.values)}")
        for v in self.values:
            if not 0 <= v < self.cod:
                raise OutOfRange(f"value {v} outside [0, {self.cod})")
        for a, b in zip(self.values, self.values[1:]):
            if b < a:
                raise NotMonotone(f"values decrease: {self.values}")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __repr__(self):
        return f"MonotoneMap({self.dom}->{self.cod}: {self.values})"

    def is_mono(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_epi(self) -> bool:
        return set(self.values) == set(range(self.cod))

    def is_iso(self) -> bool:
        return self.dom == self.cod and self.is_mono()

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))


def make_map(dom: int, cod: int, values: Sequence[int]) -> MonotoneMap:
    return MonotoneMap(dom, cod, tuple(values))


def identity(size: int) -> MonotoneMap:
    return MonotoneMap(size, size, tuple(range(size)))


def face(n: int, i: int) -> MonotoneMap:
    """The coface d_i : [n-1] -> [n] skipping ``i``."""
    if not 0 <= i <= n:
        raise OutOfRange(f"face index {i} out of range for [{n}]")
    return MonotoneMap(n, n + 1, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy(n: int, i: int) -> MonotoneMap:
    """The codegeneracy s_i : [n+1] -> [n] hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise OutOfRange(f"degeneracy index {i} out of range for [{n}]")
    return MonotoneMap(n + 2, n + 1, tuple(j if j <= i else j - 1 for j in range(n + 2)))


def const(dom: int, cod: int, value: int) -> MonotoneMap:
    return MonotoneMap(dom, cod, (value,) * dom)


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """``g o f``."""
    if f.cod != g.dom:
        raise OutOfRange(f"cannot compose {g} after {f}")
    return MonotoneMap(f.dom, g.cod, tuple(g.values[v] for v in f.values))


def classify(f: MonotoneMap) -> str:
    mono, epi = f.is_mono(), f.is_epi()
    if mono and epi:
        return "iso"
    if mono:
        return "mono"
    if epi:
        return "epi"
    return "neither"


def reedy_factorize(f: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Unique factorization ``f = mono o epi``; returns ``(epi, mono)``."""
    img = f.image()
    pos = {v: i for i, v in enumerate(img)}
    epi = MonotoneMap(f.dom, len(img), tuple(pos[v] for v in f.values))
    mono = MonotoneMap(len(img), f.cod, img)
    return epi, mono


def mono_from_subset(subset: Sequence[int], cod: int) -> MonotoneMap:
    s = tuple(sorted(subset))
    return MonotoneMap(len(s), cod, s)


def enumerate_maps(dom: int, cod: int, kind: str = "all") -> list[MonotoneMap]:
    """All monotone maps of the given class, lexicographic on value lists."""
    if kind not in ("all", "mono", "epi"):
        raise ValueError(f"unknown class {kind!r}")
    if dom == 0:
        out = [MonotoneMap(0, cod, ())]
    elif cod == 0:
        out = []
    elif kind == "mono":
        out = [MonotoneMap(dom, cod, c) for c in itertools.combinations(range(cod), dom)]
    else:
        out = [MonotoneMap(dom, cod, c)
               for c in itertools.combinations_with_replacement(range(cod), dom)]
    if kind == "mono":
        return [f for f in out if f.is_mono()]
    if kind == "epi":
        return [f for f in out if f.is_epi()]
    return out


def epis_from(dom: int) -> Iterator[MonotoneMap]:
    """Every epimorphism out of an ordinal of size ``dom``."""
    for cod in range(dom + 1):
        yield from enumerate_maps(dom, cod, "epi")


def monos_into(cod: int) -> Iterator[MonotoneMap]:
    for dom in range(cod + 1):
        yield from enumerate_maps(dom, cod, "mono")


def ordinal_join(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """``f * g`` acting blockwise on ``[a] * [a']``."""
    shift = f.cod
    return MonotoneMap(f.dom + g.dom, f.cod + g.cod,
                       f.values + tuple(v + shift for v in g.values))


def pullback_along_mono(f: MonotoneMap, m: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Pull the mono ``m`` back along ``f``.

    Returns ``(m', f')`` with ``m'`` the inclusion of the preimage
    ``f^-1(im m)`` into ``f.dom`` and ``f o m' = m o f'``.
    """
    if not m.is_mono():
        raise NotMono(f"{m} is not a monomorphism")
    if m.cod != f.cod:
        raise OutOfRange("cospan codomains differ")
    inv = {v: i for i, v in enumerate(m.values)}
    pre = [i for i, v in enumerate(f.values) if v in inv]
    m_prime = MonotoneMap(len(pre), f.dom, tuple(pre))
    f_prime = MonotoneMap(len(pre), m.dom, tuple(inv[f.values[i]] for i in pre))
    return m_prime, f_prime


def _linear_quotient(n_elems, relations):
    # reflexive-transitive closure of the generated preorder
    le = [[i == j for j in range(n_elems)] for i in range(n_elems)]
    for a, b in relations:
        le[a][b] = True
    for k in range(n_elems):
        for i in range(n_elems):
            if le[i][k]:
                row_k = le[k]
                row_i = le[i]
                for j in range(n_elems):
                    if row_k[j]:
                        row_i[j] = True
    return le


def _set_pushout(m: MonotoneMap, e: MonotoneMap):
    """Set-level pushout of ``m`` (mono) and ``e``, with its generated preorder.

    Elements ``0 .. e.cod-1`` come from ``e.cod``; the rest are the elements of
    ``m.cod`` outside the image of ``m``, in order.
    """
    inv = {v: i for i, v in enumerate(m.values)}
    rest = [d for d in range(m.cod) if d not in inv]
    rest_pos = {d: e.cod + k for k, d in enumerate(rest)}
    d_to_p = [e.values[inv[d]] if d in inv else rest_pos[d] for d in range(m.cod)]
    rel = [(d_to_p[d], d_to_p[d + 1]) for d in range(m.cod - 1)]
    rel += [(j, j + 1) for j in range(e.cod - 1)]
    size = e.cod + len(rest)
    return size, d_to_p, _linear_quotient(size, rel)


def pushout_along_mono(m: MonotoneMap, e: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Pushout of the mono ``m`` along ``e``.

    Returns ``(e', m'')`` where ``e' : m.cod -> P`` and ``m'' : e.cod -> P``.
    """
    if not m.is_mono():
        raise NotMono(f"{m} is not a monomorphism")
    if m.dom != e.dom:
        raise OutOfRange("span domains differ")
    size, d_to_p, le = _set_pushout(m, e)
    for i in range(size):
        for j in range(i + 1, size):
            if le[i][j] and le[j][i]:
                raise InternalOrderViolation(f"pushout of {m} along {e} is not antisymmetric")
            if not (le[i][j] or le[j][i]):
                raise InternalOrderViolation(f"pushout of {m} along {e} is not total")
    # rank of each element in the total order
    rank = [sum(1 for j in range(size) if le[j][i] and j != i) for i in range(size)]
    e_prime = MonotoneMap(m.cod, size, tuple(rank[p] for p in d_to_p))
    m_dd = MonotoneMap(e.cod, size, tuple(rank[j] for j in range(e.cod)))
    return e_prime, m_dd


def is_pushout_square(m: MonotoneMap, e: MonotoneMap,
                      right: MonotoneMap, bottom: MonotoneMap) -> bool:
    """Is the commuting square ``right o m = bottom o e`` a pushout in the
    augmented simplex category?  ``m`` must be mono.

    The pushout exists exactly when the preorder generated on the set-level
    pushout collapses to a total order; the square is a pushout when the
    comparison map is an order isomorphism onto that collapse.
    """
    if compose(right, m) != compose(bottom, e):
        return False
    size, d_to_p, le = _set_pushout(m, e)
    if right.cod != bottom.cod:
        return False
    to_y = [None] * size
    for d, p in enumerate(d_to_p):
        to_y[p] = right.values[d]
    for j in range(e.cod):
        to_y[j] = bottom.values[j]
    for i in range(size):
        for j in range(size):
            if not (le[i][j] or le[j][i]):
                return False
            same_class = le[i][j] and le[j][i]
            if same_class != (to_y[i] == to_y[j]):
                return False
    return set(to_y) == set(range(right.cod))


def is_pullback_square(top: MonotoneMap, left: MonotoneMap,
                       right: MonotoneMap, bottom: MonotoneMap) -> bool:
    """Square ``P --top--> B', P --left--> A, B' --right--> B, A --bottom--> B``.

    Checks commutativity and that ``P`` maps bijectively onto the set-level
    fibre product (which is ordered as a sub-order of the product order).
    """
    if compose(right, top) != compose(bottom, left):
        return False
    fib = [(a, b) for a in range(left.cod) for b in range(top.cod)
           if bottom.values[a] == right.values[b]]
    got = [(left.values[p], top.values[p]) for p in range(top.dom)]
    return len(set(got)) == len(got) and sorted(got) == sorted(fib)


@dataclass(frozen=True)
class Cube:
    """A cube in the augmented simplex category.

    Back face ``A' -> B', A' ->> X', B' ->> Y', X' -> Y'``; front face
    ``A -> B, A ->> X, B ->> Y, X -> Y``; connecting maps from back to front.
    """
    a_b_back: MonotoneMap
    a_x_back: MonotoneMap
    b_y_back: MonotoneMap
    x_y_back: MonotoneMap
    a_b: MonotoneMap
    a_x: MonotoneMap
    b_y: MonotoneMap
    x_y: MonotoneMap
    a_conn: MonotoneMap
    b_conn: MonotoneMap
    x_conn: MonotoneMap
    y_conn: MonotoneMap


def _check_cube(c: Cube):
    def comm(name, p, q):
        if compose(*p) != compose(*q):
            raise HypothesisViolated(f"{name} square does not commute")
    comm("back", (c.x_y_back, c.a_x_back), (c.b_y_back, c.a_b_back))
    comm("front", (c.x_y, c.a_x), (c.b_y, c.a_b))
    comm("top", (c.b_conn, c.a_b_back), (c.a_b, c.a_conn))
    comm("bottom", (c.y_conn, c.x_y_back), (c.x_y, c.x_conn))
    comm("left", (c.x_conn, c.a_x_back), (c.a_x, c.a_conn))
    comm("right", (c.y_conn, c.b_y_back), (c.b_y, c.b_conn))
    for name in ("a_x_back", "b_y_back", "a_x", "b_y"):
        if not getattr(c, name).is_epi():
            raise HypothesisViolated(f"vertical map {name} is not epi")
    for name in ("a_b_back", "x_y_back", "a_b", "x_y", "a_conn", "b_conn", "x_conn"):
        if not getattr(c, name).is_mono():
            raise HypothesisViolated(f"horizontal map {name} is not mono")
    if not is_pushout_square(c.a_b, c.a_x, c.b_y, c.x_y):
        raise HypothesisViolated("front square is not a pushout")
    if not is_pullback_square(c.a_b_back, c.a_conn, c.b_conn, c.a_b):
        raise HypothesisViolated("top square is not a pullback")


def adhesivity_check(c: Cube, strict: bool = True) -> tuple[bool, bool]:
    """Returns ``(back square is a pushout, Y' -> Y is mono)``.

    With ``strict=False`` the hypotheses are not checked, which allows
    evaluating deliberately broken cubes.
    """
    if strict:
        _check_cube(c)
    back = is_pushout_square(c.a_b_back, c.a_x_back, c.b_y_back, c.x_y_back)
    return back, c.y_conn.is_mono()


def generate_cubes(max_size: int = 4) -> Iterator[Cube]:
    """Every cube satisfying the adhesivity hypotheses with ordinal sizes
    at most ``max_size``; the back-right corner ranges over all candidates."""
    for nb in range(max_size + 1):
        for a_b in monos_into(nb):
            for a_x in epis_from(a_b.dom):
                try:
                    b_y, x_y = pushout_along_mono(a_b, a_x)
                except InternalOrderViolation:
                    continue
                for b_conn in monos_into(nb):
                    a_conn, a_b_back = pullback_along_mono(a_b, b_conn)
                    a_x_back, x_conn = reedy_factorize(compose(a_x, a_conn))
                    yield from _complete_back(a_b_back, a_x_back, a_b, a_x, b_y, x_y,
                                              a_conn, b_conn, x_conn, max_size)


def _complete_back(a_b_back, a_x_back, a_b, a_x, b_y, x_y, a_conn, b_conn, x_conn, max_size):
    target_right = compose(b_y, b_conn)
    target_bottom = compose(x_y, x_conn)
    top_path = None
    for ny in range(max_size + 1):
        for b_y_back in enumerate_maps(b_conn.dom, ny, "epi"):
            for x_y_back in enumerate_maps(x_conn.dom, ny, "mono"):
                if compose(x_y_back, a_x_back) != compose(b_y_back, a_b_back):
                    continue
                for y_conn in enumerate_maps(ny, x_y.cod, "all"):
                    if compose(y_conn, b_y_back) != target_right:
                        continue
                    if compose(y_conn, x_y_back) != target_bottom:
                        continue
                    yield Cube(a_b_back, a_x_back, b_y_back, x_y_back,
                               a_b, a_x, b_y, x_y, a_conn, b_conn, x_conn, y_conn)
    del top_path
