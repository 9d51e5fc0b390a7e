"""Nerves of finite semicategories, components, fundamental category
presentations and marking saturation."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .sset import SSet, SSetError, _UnionFind


class NotAssociative(SSetError):
    pass


class EndpointMismatch(SSetError):
    pass


@dataclass(frozen=True)
class FinSemicat:
    """Finite semicategory; ``comp[(g, f)]`` is ``g o f`` for composable pairs.

    If ``identities`` is given (one morphism per object) it is a category.
    """
    n_objects: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    comp: dict = field(hash=False)
    marked: frozenset = frozenset()
    identities: Optional[tuple[int, ...]] = None
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    def hom(self, a: int, b: int) -> list[int]:
        return [f for f in range(self.n_morphisms) if self.src[f] == a and self.tgt[f] == b]

    def validate(self) -> None:
        m = self.n_morphisms
        for f in range(m):
            for g in range(m):
                if self.tgt[f] == self.src[g]:
                    h = self.comp.get((g, f))
                    if h is None:
                        raise NotAssociative(f"composite of {f} then {g} missing")
                    if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                        raise NotAssociative(f"composite of {f} then {g} has wrong endpoints")
        for f, g, h in itertools.product(range(m), repeat=3):
            if self.tgt[f] == self.src[g] and self.tgt[g] == self.src[h]:
                if self.comp[(h, self.comp[(g, f)])] != self.comp[(self.comp[(h, g)], f)]:
                    raise NotAssociative(f"({h} {g}) {f} != {h} ({g} {f})")
        if self.identities is not None:
            for c, u in enumerate(self.identities):
                if self.src[u] != c or self.tgt[u] != c:
                    raise NotAssociative(f"identity of {c} has wrong endpoints")
                for f in range(m):
                    if self.src[f] == c and self.comp[(f, u)] != f:
                        raise NotAssociative(f"identity of {c} is not a right unit")
                    if self.tgt[f] == c and self.comp[(u, f)] != f:
                        raise NotAssociative(f"identity of {c} is not a left unit")

    def isomorphisms(self) -> frozenset:
        if self.identities is None:
            return frozenset()
        out = set()
        for f in range(self.n_morphisms):
            for g in self.hom(self.tgt[f], self.src[f]):
                if self.comp[(g, f)] == self.identities[self.src[f]] and \
                        self.comp[(f, g)] == self.identities[self.tgt[f]]:
                    out.add(f)
        return frozenset(out)

    def inverse(self, f: int) -> Optional[int]:
        for g in self.hom(self.tgt[f], self.src[f]):
            if self.comp[(g, f)] == self.identities[self.src[f]] and \
                    self.comp[(f, g)] == self.identities[self.tgt[f]]:
                return g
        return None


def poset_category(n_objects: int, le: Sequence[tuple[int, int]] = None, marked=()) -> FinSemicat:
    """Category of a finite poset given by (a subset of) its order relation;
    the reflexive-transitive closure is taken.  Default: the chain."""
    rel = {(a, a) for a in range(n_objects)}
    if le is None:
        le = [(a, b) for a in range(n_objects) for b in range(a, n_objects)]
    rel |= set(le)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    arrows = sorted(rel)
    index = {p: i for i, p in enumerate(arrows)}
    comp = {}
    for (a, b), (c, d) in itertools.product(arrows, repeat=2):
        if b == c:
            comp[(index[(c, d)], index[(a, b)])] = index[(a, d)]
    marked_idx = frozenset(index[p] for p in marked)
    return FinSemicat(n_objects, tuple(a for a, _ in arrows), tuple(b for _, b in arrows), comp,
                      marked_idx, tuple(index[(a, a)] for a in range(n_objects)))


def group_category(table: Sequence[Sequence[int]]) -> FinSemicat:
    """One-object category of a finite group with ``table[g][h] = g h`` and unit 0."""
    n = len(table)
    comp = {(g, h): table[g][h] for g in range(n) for h in range(n)}
    return FinSemicat(1, (0,) * n, (0,) * n, comp, frozenset(), (0,))


def free_marked_arrow() -> FinSemicat:
    """Semicategory with two objects and a single marked morphism between them."""
    return FinSemicat(2, (0,), (1,), {}, frozenset({0}))


def nerve_truncated(C: FinSemicat, d: int = 3, mark_isos: bool = False, check: bool = True) -> SSet:
    """Nerve up to dimension ``d``; labels are the chains of morphisms.

    Identities of a category are ordinary morphisms in the nerve.
    """
    if check:
        C.validate()
    chains = [[(c,) for c in range(C.n_objects)]]
    if d >= 1:
        chains.append([(f,) for f in range(C.n_morphisms)])
    for n in range(2, d + 1):
        level = []
        for ch in chains[-1]:
            for f in range(C.n_morphisms):
                if C.src[f] == C.tgt[ch[-1]]:
                    level.append(ch + (f,))
        chains.append(level)
    index = [{ch: i for i, ch in enumerate(level)} for level in chains]
    faces = [tuple(() for _ in chains[0])]
    for n in range(1, len(chains)):
        row = []
        for ch in chains[n]:
            if n == 1:
                f = ch[0]
                row.append((C.tgt[f], C.src[f]))
                continue
            fs = []
            for i in range(n + 1):
                if i == 0:
                    sub = ch[1:]
                elif i == n:
                    sub = ch[:-1]
                else:
                    sub = ch[:i - 1] + (C.comp[(ch[i], ch[i - 1])],) + ch[i + 1:]
                fs.append(index[n - 1][sub])
            row.append(tuple(fs))
        faces.append(tuple(row))
    marked = set(C.marked)
    if mark_isos:
        marked |= C.isomorphisms()
    if d < 1:
        marked = set()
    return SSet(tuple(faces), frozenset(marked), tuple(tuple(level) for level in chains))


def tau0(X: SSet) -> list[list[int]]:
    """Connected components of the vertices, each sorted, ordered by least vertex."""
    uf = _UnionFind(X.count(0))
    for a, b in (X.faces[1] if X.dim >= 1 else ()):
        uf.union(a, b)
    classes: dict = {}
    for v in range(X.count(0)):
        classes.setdefault(uf.find(v), []).append(v)
    return sorted(classes.values())


def component_map(X: SSet) -> list[int]:
    comps = tau0(X)
    out = [0] * X.count(0)
    for i, cls in enumerate(comps):
        for v in cls:
            out[v] = i
    return out


# fundamental category

Path = tuple[int, tuple[tuple[int, int], ...]]  # (start object, ((generator, +1 or -1), ...))


@dataclass(frozen=True)
class CatPresentation:
    n_objects: int
    gens: tuple[tuple[int, int], ...]  # (source, target)
    relations: tuple[tuple[Path, Path], ...]
    invertible: frozenset = frozenset()
    groupoid: bool = False

    def path_end(self, p: Path) -> int:
        obj = p[0]
        for g, sign in p[1]:
            s, t = self.gens[g]
            if sign > 0:
                if s != obj:
                    raise EndpointMismatch(f"generator {g} does not start at {obj}")
                obj = t
            else:
                if g not in self.invertible:
                    raise EndpointMismatch(f"generator {g} has no inverse")
                if t != obj:
                    raise EndpointMismatch(f"inverse of {g} does not start at {obj}")
                obj = s
        return obj

    def validate(self) -> None:
        for lhs, rhs in self.relations:
            if lhs[0] != rhs[0] or self.path_end(lhs) != self.path_end(rhs):
                raise EndpointMismatch(f"relation {lhs} = {rhs} has mismatched endpoints")


def tau1_presentation(X: SSet, groupoid: bool = False) -> CatPresentation:
    """Generators are edges ``d1 e -> d0 e``; every triangle gives
    ``d2 then d0 = d1``; marked edges get formal inverses.  The groupoid
    variant inverts every generator (free groupoid, inverse laws implicit)."""
    gens = tuple((fs[1], fs[0]) for fs in X.faces[1]) if X.dim >= 1 else ()
    rels = []
    if X.dim >= 2:
        for d0, d1, d2 in X.faces[2]:
            start = gens[d2][0]
            rels.append(((start, ((d2, 1), (d0, 1))), (start, ((d1, 1),))))
    if groupoid:
        inv = frozenset(range(len(gens)))
    else:
        inv = frozenset(X.marked)
        for e in sorted(inv):
            s, t = gens[e]
            rels.append(((s, ((e, 1), (e, -1))), (s, ())))
            rels.append(((t, ((e, -1), (e, 1))), (t, ())))
    P = CatPresentation(X.count(0), gens, tuple(rels), inv, groupoid)
    P.validate()
    return P


@dataclass(frozen=True)
class Functor:
    objects: tuple[int, ...]
    gens: tuple[int, ...]


def evaluate_path(P: CatPresentation, C: FinSemicat, F: Functor, p: Path) -> Optional[int]:
    """The morphism of ``C`` a path maps to (``None`` for a non-invertible inverse)."""
    obj = F.objects[p[0]]
    acc = C.identities[obj]
    for g, sign in p[1]:
        m = F.gens[g]
        if sign < 0:
            m = C.inverse(m)
            if m is None:
                return None
        if C.src[m] != C.tgt[acc]:
            raise EndpointMismatch("path does not compose in the target")
        acc = C.comp[(m, acc)]
    return acc


def presentation_evaluate(P: CatPresentation, C: FinSemicat, objects: Sequence[int],
                          gens: Sequence[int]) -> Optional[Functor]:
    if C.identities is None:
        raise EndpointMismatch("target must have identities")
    if len(objects) != P.n_objects or len(gens) != len(P.gens):
        raise EndpointMismatch("assignment has the wrong size")
    for g, (s, t) in enumerate(P.gens):
        m = gens[g]
        if C.src[m] != objects[s] or C.tgt[m] != objects[t]:
            raise EndpointMismatch(f"generator {g} sent to morphism with wrong endpoints")
    F = Functor(tuple(objects), tuple(gens))
    isos = C.isomorphisms()
    for g in P.invertible:
        if gens[g] not in isos:
            return None
    for lhs, rhs in P.relations:
        if evaluate_path(P, C, F, lhs) != evaluate_path(P, C, F, rhs):
            return None
    return F


def tau1_iso_check(P: CatPresentation, C: FinSemicat, F: Functor) -> bool:
    """Decide whether the evaluated functor exhibits the presented category as ``C``.

    Sufficient syntactic conditions, all checked: ``F`` is bijective on objects
    and generators and surjective onto morphisms; every composable pair of
    generators has a relation merging it into one generator; every object
    has an invertible idempotent generator (which is then an identity); every
    inverse equals a generator.  Under these every word reduces to a single
    generator or the empty path, so ``F`` is bijective on morphisms.
    """
    if sorted(F.objects) != list(range(C.n_objects)) or sorted(F.gens) != list(range(C.n_morphisms)):
        return False
    if P.groupoid:
        return False
    merges = {}
    for lhs, rhs in P.relations:
        if len(lhs[1]) == 2 and len(rhs[1]) == 1 and all(s > 0 for _, s in lhs[1] + rhs[1]):
            merges[(lhs[1][0][0], lhs[1][1][0])] = rhs[1][0][0]
    for f, (s, t) in enumerate(P.gens):
        for g, (s2, _) in enumerate(P.gens):
            if s2 == t and (f, g) not in merges:
                return False
    for c in range(P.n_objects):
        if not any(P.gens[u] == (c, c) and u in P.invertible and merges.get((u, u)) == u
                   for u in range(len(P.gens))):
            return False
    for e in P.invertible:
        s, t = P.gens[e]
        units = {u for u in range(len(P.gens)) if P.gens[u] == (s, s) and u in P.invertible
                 and merges.get((u, u)) == u}
        if not any(merges.get((e, g)) in units for g in range(len(P.gens)) if P.gens[g][0] == t):
            return False
    return True


def tau1_round_trip(C: FinSemicat, d: int = 3) -> bool:
    """``tau1`` of the marked nerve (isomorphisms marked) recovers ``C``."""
    X = nerve_truncated(C, d, mark_isos=True)
    P = tau1_presentation(X)
    F = presentation_evaluate(P, C, list(range(C.n_objects)), [ch[0] for ch in X.labels[1]])
    return F is not None and tau1_iso_check(P, C, F)


# marking saturation

def saturate_marking(X: SSet, mode: str = "two_of_three") -> SSet:
    if mode not in ("two_of_three", "two_of_six"):
        raise ValueError(f"unknown saturation mode {mode!r}")
    marked = set(X.marked)
    tetra_edges = []
    if mode == "two_of_six" and X.dim >= 3:
        for t in range(X.count(3)):
            edges = {p: X.restrict(3, t, p) for p in itertools.combinations(range(4), 2)}
            tetra_edges.append(edges)
    changed = True
    while changed:
        changed = False
        if X.dim >= 2:
            for fs in X.faces[2]:
                inside = [e in marked for e in fs]
                if sum(inside) == 2:
                    marked.update(fs)
                    changed = True
        for edges in tetra_edges:
            if edges[(0, 2)] in marked and edges[(1, 3)] in marked:
                new = set(edges.values()) - marked
                if new:
                    marked |= new
                    changed = True
    return X.with_marking(marked)
