import json

import pytest
from hypothesis import given, settings

from semisimp import sset as S
from semisimp.lifting import (
    Attachment, CellCertificate, LiftingProblem, NotCommuting, ReplayError,
    cospan_left_certificate, generator_map, horn_completion_stage, horn_filler_scan,
    leibniz_boundary_certificate, point_join_horn_certificate, replay, solve_lifting,
    verify_certificate,
)
from semisimp.sset import SSetMap

from oracles import all_maps, complexes, subset_flags


def to_point(X):
    return SSetMap(X, S.simplex(0), tuple((0,) * X.count(n) for n in range(len(X.faces))))


def brute_horns(X, d, kinds="all"):
    # (n, k, levels, filled) by full function-space search
    out = []
    for n in range(1, d + 1):
        for k in range(n + 1):
            inner = 0 < k < n
            if kinds == "inner" and not inner:
                continue
            j = S.horn(n, k)
            fills = [m for m in all_maps(j.target, X)]
            for h in all_maps(j.source, X):
                filled = any(all(m[q][j.levels[q][x]] == h[q][x] for q, x in j.source.all_simplices())
                             for m in fills)
                out.append((n, k, h, filled))
    return sorted(out)


# lifting problems

def test_lift_against_identity_left():
    X = S.simplex(2)
    i = S.identity_map(X)
    p = LiftingProblem(top=i, left=i, bottom=i, right=i)
    assert solve_lifting(p).levels == i.levels


def test_lift_horn_into_dunce_hat():
    D = S.dunce_hat()
    j = S.horn(2, 1)
    top = SSetMap(j.source, D, ((0, 0, 0), (0, 0)))
    h = solve_lifting(LiftingProblem(top, j, to_point(j.target), to_point(D)))
    assert h is not None
    assert S.compose_maps(h, j).levels == top.levels


def test_lift_boundary_against_two_points():
    D0 = S.simplex(0)
    C, _ = S.coproduct([D0, D0])
    j = S.boundary(1)
    distinct = SSetMap(j.source, C, ((0, 1),))
    assert solve_lifting(LiftingProblem(distinct, j, to_point(j.target), to_point(C))) is None


def test_lift_rejects_non_commuting_square():
    D1 = S.simplex(1)
    j = S.boundary(1)
    top = SSetMap(j.source, D1, ((0, 1),))
    bottom = S.identity_map(D1)
    right = S.identity_map(D1)
    swapped = SSetMap(j.source, D1, ((1, 0),))
    with pytest.raises(NotCommuting):
        solve_lifting(LiftingProblem(swapped, j, bottom, right))
    assert solve_lifting(LiftingProblem(top, j, bottom, right)).levels == bottom.levels


@given(complexes(max_vertices=3))
@settings(max_examples=20, deadline=None)
def test_lift_results_commute(X):
    for n, k in [(1, 0), (2, 1), (2, 0)]:
        j = S.horn(n, k)
        for top in S.extensions(j.source, X):
            h = solve_lifting(LiftingProblem(top, j, to_point(j.target), to_point(X)))
            brute = [m for m in all_maps(j.target, X)
                     if all(m[q][j.levels[q][x]] == top.levels[q][x] for q, x in j.source.all_simplices())]
            assert (h is None) == (not brute)
            if h is not None:
                assert S.compose_maps(h, j).levels == top.levels


# horn scans and completion

@pytest.mark.parametrize("X", [S.simplex(2), S.dunce_hat(), S.horn(2, 1).source, S.empty()],
                         ids=["simplex2", "dunce", "horn21", "empty"])
def test_horn_scan_matches_brute_force(X):
    got = sorted((e.n, e.k, e.levels, e.filled) for e in horn_filler_scan(X, 2))
    assert got == brute_horns(X, 2)


def test_horn_scan_examples():
    D2 = horn_filler_scan(S.simplex(2), 2)
    assert any(not e.filled and e.n == 1 for e in D2)
    assert all(e.filled for e in D2 if e.n == 2 and e.levels[0] == (0, 1, 2))
    assert any(not e.filled for e in D2 if e.n == 2 and e.levels[0] == (0, 2, 1))
    dunce = horn_filler_scan(S.dunce_hat(), 2)
    assert all(e.filled for e in dunce if e.n == 1)
    assert horn_filler_scan(S.empty(), 3) == []


def test_completion_of_inner_horn():
    r = horn_completion_stage(S.horn(2, 1).source, kinds="inner")
    assert S.f_vector(r.complex) == (3, 3, 1)
    assert verify_certificate(r.certificate, r.inclusion)
    assert [a.kind for a in r.certificate.attachments] == ["horn"]
    scan = horn_filler_scan(r.complex, 2, kinds="inner")
    assert len(scan) == 1 and scan[0].filled


def test_completion_counts_match_scan():
    X = S.simplex(2)
    r = horn_completion_stage(X)
    unfilled = [e for e in brute_horns(X, 3) if not e[3]]
    assert len(r.certificate.attachments) == len(unfilled)
    assert verify_certificate(r.certificate, r.inclusion)


def test_completion_on_discrete_set_adds_edges_only():
    D0 = S.simplex(0)
    C, _ = S.coproduct([D0, D0])
    r = horn_completion_stage(C, kinds="inner")
    assert r.complex == C and r.certificate.attachments == []


@given(complexes(max_vertices=3))
@settings(max_examples=15, deadline=None)
def test_completion_is_inflationary_and_verifies(X):
    r = horn_completion_stage(X, max_dim=2)
    assert S.is_cofibration(r.inclusion)
    assert all(a >= b for a, b in zip(S.f_vector(r.complex), S.f_vector(X)))
    assert verify_certificate(r.certificate, r.inclusion)


def test_marked_completion_uses_marked_horns():
    X = S.from_vertex_sets([(0, 1), (1, 2)], marked_pairs=[(0, 1)])
    r = horn_completion_stage(X)
    assert set(r.certificate.kinds()) == {"marked_horn"}
    assert verify_certificate(r.certificate, r.inclusion)


# certificates

def test_single_boundary_cell():
    j = S.boundary(2)
    c = CellCertificate(j.source, [Attachment("boundary", (2,), S.identity_map(j.source).levels)])
    assert verify_certificate(c, j)
    assert not verify_certificate(CellCertificate(j.source, []), j)


def test_permuted_independent_cells_verify():
    r = horn_completion_stage(S.simplex(2))
    c = r.certificate
    rev = CellCertificate(c.source, list(reversed(c.attachments)))
    assert len(c.attachments) > 1
    assert verify_certificate(rev, r.inclusion)


def test_replay_type_errors():
    j = S.boundary(2)
    with pytest.raises(ReplayError):
        replay(CellCertificate(j.source, [Attachment("boundary", (2,), ((0, 1, 2), (0, 1, 9)))]))
    with pytest.raises(ReplayError):
        replay(CellCertificate(j.source, [Attachment("boundary", (2,), ((0, 1, 2), (0, 2, 1)))]))
    with pytest.raises(ReplayError):
        replay(CellCertificate(j.source, [Attachment("marked_horn", (2, 0), ((0, 1, 2), (0, 1)))]))
    with pytest.raises(ReplayError):
        generator_map("sphere", ())


def test_certificate_json_round_trip():
    c, f = point_join_horn_certificate(1, 1)
    d = json.loads(json.dumps(c.to_json()))
    c2 = CellCertificate.from_json(d)
    assert c2.attachments == c.attachments and c2.source == c.source
    assert verify_certificate(c2, f)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (1, 1), (1, 2), (2, 2), (3, 1)])
def test_leibniz_boundary_certificate(a, b):
    c, f = leibniz_boundary_certificate(a, b)
    assert set(c.kinds()) == {"boundary"}
    assert verify_certificate(c, f)


def test_leibniz_boundary_small_counts():
    assert len(leibniz_boundary_certificate(0, 0)[0].attachments) == 1
    assert len(leibniz_boundary_certificate(1, 0)[0].attachments) == 1
    # two triangles and the diagonal edge
    c, _ = leibniz_boundary_certificate(1, 1)
    assert sorted(p[0] for p in (a.params for a in c.attachments)) == [1, 2, 2]


@pytest.mark.parametrize("k", range(4))
@pytest.mark.parametrize("m", range(3))
def test_point_join_certificate(k, m):
    c, f = point_join_horn_certificate(k, m)
    assert c.all_horns()
    assert len(c.attachments) == 2 ** k
    assert verify_certificate(c, f)


def test_point_join_base_cases():
    c, _ = point_join_horn_certificate(0, 0)
    assert [(a.kind, a.params) for a in c.attachments] == [("horn", (1, 0))]
    c, _ = point_join_horn_certificate(0, 1)
    assert [(a.kind, a.params) for a in c.attachments] == [("horn", (2, 0))]
    c, _ = point_join_horn_certificate(1, 1)
    assert [a.params for a in c.attachments] == [(2, 0), (3, 1)]


def flag_cell_count(n):
    # one point-join cell per subset of the first simplex minus its last vertex
    return sum(2 ** (len(ch[0]) - 1) for level in subset_flags(n) for ch in level)


@pytest.mark.parametrize("n", range(4))
def test_cospan_left_certificate_unmarked(n):
    c, f = cospan_left_certificate(S.simplex(n))
    assert c.all_horns()
    assert len(c.attachments) == flag_cell_count(n)
    assert verify_certificate(c, f)


@pytest.mark.parametrize("n", range(3))
def test_cospan_left_certificate_marked(n):
    c, f = cospan_left_certificate(S.simplex(n), marked=True)
    assert verify_certificate(c, f)
    horns = [a for a in c.attachments if a.kind in ("horn", "marked_horn")]
    assert len(horns) == flag_cell_count(n)
    # the marked subdivision edges are not produced by horn cells
    assert c.all_horns() == (n == 0)


def test_cospan_left_certificate_range():
    with pytest.raises(S.RangeError):
        cospan_left_certificate(S.simplex(4))
    with pytest.raises(S.RangeError):
        cospan_left_certificate(S.horn(2, 1).source)
