import itertools

import pytest
from hypothesis import given, settings, strategies as st

from semisimp import sset as S
from semisimp.invariants import (
    CatPresentation, EndpointMismatch, FinSemicat, NotAssociative, component_map, free_marked_arrow,
    group_category, nerve_truncated, poset_category, presentation_evaluate, saturate_marking, tau0,
    tau1_iso_check, tau1_presentation, tau1_round_trip,
)
from semisimp.monoidal import tensor

from oracles import complexes, components

Z2 = group_category([[0, 1], [1, 0]])
SQUARE = poset_category(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def chain_functions(n, k):
    # monotone maps [n] -> [k], i.e. chains of n composable arrows in the poset [k]
    return [v for v in itertools.product(range(k + 1), repeat=n + 1)
            if all(a <= b for a, b in zip(v, v[1:]))]


def test_nerve_of_arrow_category():
    X = nerve_truncated(poset_category(2), 3)
    assert S.f_vector(X) == (2, 3, 4, 5)
    for n in range(4):
        assert X.count(n) == len(chain_functions(n, 1))
    S.validate(X)


@pytest.mark.parametrize("k", range(4))
def test_nerve_of_chain_counts(k):
    X = nerve_truncated(poset_category(k + 1), 3)
    for n in range(4):
        assert X.count(n) == len(chain_functions(n, k))


def test_nerve_small_cases():
    empty_hom = FinSemicat(1, (), (), {})
    assert S.f_vector(nerve_truncated(empty_hom, 2)) == (1,)
    X = nerve_truncated(free_marked_arrow(), 1)
    assert S.f_vector(X) == (2, 1) and X.marked == frozenset({0})


def test_nerve_rejects_non_associative():
    # one object, two morphisms, composition a.a = b, everything else a
    comp = {(0, 0): 1, (0, 1): 0, (1, 0): 0, (1, 1): 0}
    C = FinSemicat(1, (0, 0), (0, 0), comp)
    with pytest.raises(NotAssociative):
        nerve_truncated(C, 2)


def test_nerve_marks_isomorphisms_on_request():
    X = nerve_truncated(Z2, 2, mark_isos=True)
    assert X.marked == frozenset(range(X.count(1)))
    assert nerve_truncated(Z2, 2).marked == frozenset()


def test_tau0_examples():
    assert len(tau0(S.boundary(1).source)) == 2
    assert len(tau0(S.simplex(2))) == 1


@given(complexes(max_vertices=5, marked=True))
@settings(max_examples=40, deadline=None)
def test_tau0_matches_bfs_and_opposite(X):
    assert sorted(map(sorted, tau0(X))) == components(X)
    assert len(tau0(S.opposite(X))) == len(tau0(X))
    assert len(tau0(saturate_marking(X, "two_of_six"))) == len(tau0(X))


@given(complexes(max_vertices=3, marked=True), complexes(max_vertices=3, marked=True))
@settings(max_examples=20, deadline=None)
def test_tau0_of_tensor_is_product(A, B):
    T = tensor(A, B)
    cA, cB, cT = component_map(A), component_map(B), component_map(T)
    pair_of = {}
    for v, (p, q, x, y) in enumerate(T.labels[0]):
        pair_of.setdefault(cT[v], set()).add((cA[x], cB[y]))
    # each component of the product maps to one pair, and the map is a bijection
    assert all(len(s) == 1 for s in pair_of.values())
    images = [next(iter(s)) for s in pair_of.values()]
    assert len(set(images)) == len(images) == len(tau0(A)) * len(tau0(B))


def test_tau1_presentation_examples():
    P = tau1_presentation(S.simplex(1))
    assert (P.n_objects, len(P.gens), len(P.relations)) == (2, 1, 0)
    L = tau1_presentation(S.loop(), groupoid=True)
    assert (L.n_objects, len(L.gens), len(L.relations)) == (1, 1, 0)
    assert L.invertible == frozenset({0})
    M = tau1_presentation(S.simplex(1).maximal())
    assert M.invertible == frozenset({0}) and len(M.relations) == 2


@pytest.mark.parametrize("C", [
    poset_category(1), poset_category(2), poset_category(3), SQUARE, Z2,
], ids=["chain0", "chain1", "chain2", "square", "z2"])
def test_tau1_round_trip(C):
    assert tau1_round_trip(C, 3)


def test_tau1_round_trip_needs_triangles():
    # without triangles the paths do not compose to generators
    C = poset_category(3)
    X = nerve_truncated(C, 1, mark_isos=True)
    P = tau1_presentation(X)
    F = presentation_evaluate(P, C, [0, 1, 2], [ch[0] for ch in X.labels[1]])
    assert F is not None and not tau1_iso_check(P, C, F)


def test_presentation_evaluate_failures():
    C = poset_category(3)
    X = nerve_truncated(C, 3, mark_isos=True)
    P = tau1_presentation(X)
    gens = [ch[0] for ch in X.labels[1]]
    with pytest.raises(EndpointMismatch):
        presentation_evaluate(P, C, [0, 1, 2], gens[::-1])
    # swap two parallel generators in Z2: identity to the flip and back breaks relations
    Xz = nerve_truncated(Z2, 3, mark_isos=True)
    Pz = tau1_presentation(Xz)
    good = [ch[0] for ch in Xz.labels[1]]
    assert presentation_evaluate(Pz, Z2, [0], good) is not None
    assert presentation_evaluate(Pz, Z2, [0], [1 - g for g in good]) is None
    empty = CatPresentation(0, (), ())
    assert presentation_evaluate(empty, C, [], []) is not None


def test_saturation_examples():
    D2 = S.from_vertex_sets([(0, 1, 2)], marked_pairs=[(0, 1), (1, 2)])
    assert len(saturate_marking(D2, "two_of_three").marked) == 3
    P = S.parallel_pair().with_marking([0])
    assert saturate_marking(P, "two_of_three") == P
    D3 = S.from_vertex_sets([(0, 1, 2, 3)], marked_pairs=[(0, 2), (1, 3)])
    assert len(saturate_marking(D3, "two_of_six").marked) == 6
    assert len(saturate_marking(D3, "two_of_three").marked) == 2


@given(complexes(max_vertices=4, max_dim=3, marked=True), st.sampled_from(["two_of_three", "two_of_six"]))
@settings(max_examples=40, deadline=None)
def test_saturation_is_closure(X, mode):
    Y = saturate_marking(X, mode)
    assert X.marked <= Y.marked
    assert saturate_marking(Y, mode) == Y
    # monotone: adding marks to the input can only add marks to the output
    bigger = X.with_marking(set(X.marked) | {0}) if X.count(1) else X
    assert Y.marked <= saturate_marking(bigger, mode).marked
    # closed under two out of three
    if Y.dim >= 2:
        for fs in Y.faces[2]:
            assert sum(e in Y.marked for e in fs) != 2
