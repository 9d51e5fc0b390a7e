"""Brute-force reference computations used by the tests.

Nothing here calls into the construction being checked; everything is
recomputed from face tables, vertex subsets or plain function spaces.
"""
import itertools
import random
from math import comb

from hypothesis import strategies as st

from semisimp.sset import SSet, random_sset


def all_maps(A: SSet, X: SSet, respect_marking=True):
    """Every level function ``A -> X`` commuting with faces (full product search)."""
    out = []
    ranges = [[range(X.count(n)) if n < len(X.faces) else range(0) for _ in range(A.count(n))]
              for n in range(len(A.faces))]
    flat = [(n, x) for n in range(len(A.faces)) for x in range(A.count(n))]
    choices = [ranges[n][x] for n, x in flat]
    for combo in itertools.product(*choices):
        lv = [[None] * A.count(n) for n in range(len(A.faces))]
        for (n, x), y in zip(flat, combo):
            lv[n][x] = y
        ok = all(X.faces[n][lv[n][x]][i] == lv[n - 1][f]
                 for n in range(1, len(A.faces)) for x in range(A.count(n))
                 for i, f in enumerate(A.faces[n][x]))
        if ok and respect_marking:
            ok = all(lv[1][e] in X.marked for e in A.marked)
        if ok:
            out.append(tuple(tuple(level) for level in lv))
    return out


def restrict_by_faces(X: SSet, n: int, x: int, keep):
    """Face spanned by ``keep`` computed by deleting vertices from the top."""
    drop = sorted(set(range(n + 1)) - set(keep), reverse=True)
    for i in drop:
        x = X.faces[n][x][i]
        n -= 1
    return x


def elements_morphisms(X: SSet):
    """Non-identity face inclusions ``(m, x) -> (n, y)`` as triples."""
    out = []
    for n in range(len(X.faces)):
        for y in range(X.count(n)):
            for m in range(n):
                for f in itertools.combinations(range(n + 1), m + 1):
                    out.append(((m, restrict_by_faces(X, n, y, f)), (n, y), f))
    return out


def sd_chain_counts(X: SSet):
    """Number of composable chains of non-identity face inclusions by length."""
    objs = [(n, x) for n in range(len(X.faces)) for x in range(X.count(n))]
    mors = elements_morphisms(X)
    out_of = {}
    for s, t, f in mors:
        out_of.setdefault(s, []).append(t)
    counts = [len(objs)]
    # chains ending at each object, by length
    cur = {o: 1 for o in objs}
    while True:
        nxt = {}
        for s, c in cur.items():
            for t in out_of.get(s, []):
                nxt[t] = nxt.get(t, 0) + c
        total = sum(nxt.values())
        if not total:
            break
        counts.append(total)
        cur = nxt
    return tuple(counts)


def subset_flags(n: int):
    """Strict chains of nonempty subsets of ``[n]``, grouped by length."""
    subsets = [frozenset(s) for k in range(1, n + 2) for s in itertools.combinations(range(n + 1), k)]
    by_len = [[(s,) for s in subsets]]
    while True:
        nxt = [ch + (t,) for ch in by_len[-1] for t in subsets if ch[-1] < t]
        if not nxt:
            return by_len
        by_len.append(nxt)


def monotone(dom, cod):
    # non-decreasing sequences are exactly the sorted multisets
    return list(itertools.combinations_with_replacement(range(cod), dom))


def surjective(v, cod):
    return set(v) == set(range(cod))


def tensor_count(A: SSet, B: SSet, n: int) -> int:
    """``|(A x B)_n|`` for the geometric product: jointly monic pairs of
    surjections out of ``[n]`` times simplices of the factors."""
    total = 0
    for p in range(min(n, A.dim) + 1):
        for q in range(min(n, B.dim) + 1):
            ss = [s for s in monotone(n + 1, p + 1) if surjective(s, p + 1)]
            ts = [t for t in monotone(n + 1, q + 1) if surjective(t, q + 1)]
            pairs = sum(len(set(zip(s, t))) == n + 1 for s in ss for t in ts)
            total += pairs * A.count(p) * B.count(q)
    return total


def join_count(A: SSet, B: SSet, n: int) -> int:
    return A.count(n) + B.count(n) + sum(A.count(a) * B.count(n - 1 - a) for a in range(n))


def cospan_summit_counts(n: int):
    """Blockwise count for the summit over ``Delta^n``: simplices of the
    simplex, flags, and cross simplices ``(U, flag)`` with ``U`` a nonempty
    subset of the vertices of the first simplex of the flag."""
    flags = subset_flags(n)
    top = n + len(flags)
    counts = [0] * (top + 1)
    for k in range(n + 1):
        counts[k] += comb(n + 1, k + 1)
    for b, fl in enumerate(flags):
        counts[b] += len(fl)
        for ch in fl:
            k = len(ch[0]) - 1
            for a in range(k + 1):
                counts[a + b + 1] += comb(k + 1, a + 1)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def ul_count(X: SSet, n: int) -> int:
    return sum(comb(n, k) * X.count(k) for k in range(n + 1))


def components(X: SSet):
    """Vertex classes under the edge relation by breadth-first search."""
    nv = X.count(0)
    adj = [set() for _ in range(nv)]
    for a, b in (X.faces[1] if X.dim >= 1 else ()):
        adj[a].add(b)
        adj[b].add(a)
    seen, out = set(), []
    for v in range(nv):
        if v in seen:
            continue
        comp, todo = set(), [v]
        while todo:
            u = todo.pop()
            if u in comp:
                continue
            comp.add(u)
            todo.extend(adj[u] - comp)
        seen |= comp
        out.append(sorted(comp))
    return sorted(out)


@st.composite
def complexes(draw, max_vertices=4, max_dim=2, marked=False):
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    return random_sset(rng, n_vertices=draw(st.integers(1, max_vertices)), max_dim=max_dim,
                       density=draw(st.floats(0.2, 0.9)), mark_prob=0.4 if marked else 0.0,
                       glue_prob=draw(st.sampled_from([0.0, 0.5])),
                       duplicate_prob=draw(st.sampled_from([0.0, 0.3])))
