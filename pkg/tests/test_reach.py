import itertools

import dipair as dp
from dipair import precubical as pc
from dipair import reach


def test_skeleton_branching(branching):
    sk = reach.skeleton(branching)
    assert sk.n_arcs == 2
    o = branching.names["O"].index
    assert all(t == o for t in sk.tails)


def test_skeleton_circle_self_loop():
    sk = reach.skeleton(dp.builtin("circle"))
    assert sk.n_arcs == 1
    assert sk.tails[0] == sk.heads[0]


def test_skeleton_letter_m(letter_m):
    sk = reach.skeleton(letter_m)
    names = {i: n for n, c in letter_m.names.items() if c.dim == 0 for i in [c.index]}
    arcs = {(names[int(t)], names[int(h)]) for t, h in zip(sk.tails, sk.heads)}
    assert arcs == {("a", "p"), ("m", "p"), ("m", "q"), ("b", "q")}


def test_directed_loops():
    assert dp.has_directed_loop(dp.builtin("circle"))
    assert dp.has_directed_loop(dp.builtin("torus", 2))
    assert not dp.has_directed_loop(dp.builtin("boundary_cube", 3))
    assert not dp.has_directed_loop(dp.builtin("dubut"))


def test_reachable(bd2, branching):
    assert dp.reachable(bd2, bd2.named("00"), bd2.named("11"))
    assert not dp.reachable(branching, branching.named("A"), branching.named("B"))
    for v in range(branching.n_cells(0)):
        assert dp.reachable(branching, pc.CellId(0, v), pc.CellId(0, v))


def test_past_and_future_sets(letter_m, branching):
    p = letter_m.names["p"]
    got = dp.past_set(letter_m, {p})
    assert got == {letter_m.names["a"], letter_m.names["m"], p}
    everything = frozenset(pc.CellId(0, i) for i in range(letter_m.n_cells(0)))
    assert dp.past_set(letter_m, everything) == everything
    assert dp.future_set(branching, {branching.names["O"]}) == frozenset(
        pc.CellId(0, i) for i in range(3)
    )


def test_past_set_idempotent(letter_m, swiss):
    for pcs in (letter_m, swiss):
        for i in range(pcs.n_cells(0)):
            s = dp.past_set(pcs, {pc.CellId(0, i)})
            assert dp.past_set(pcs, s) == s


def test_reachable_reflexive_transitive(swiss):
    n = swiss.n_cells(0)
    vs = [pc.CellId(0, i) for i in range(n)]
    for u, v, w in itertools.product(vs, repeat=3):
        if dp.reachable(swiss, u, v) and dp.reachable(swiss, v, w):
            assert dp.reachable(swiss, u, w)


def test_branch_cubes_letter_m(letter_m):
    assert dp.branch_cubes(letter_m, "future") == [letter_m.names["m"]]
    assert dp.branch_cubes(letter_m, "past") == sorted(
        [letter_m.names["p"], letter_m.names["q"]]
    )


def test_branch_cubes_boundary_square(bd2):
    assert dp.branch_cubes(bd2, "future") == [bd2.names["00"]]
    assert dp.branch_cubes(bd2, "past") == [bd2.names["11"]]


def test_branch_cubes_dubut_has_no_future_branch_vertex(dubut):
    # aplus is an upper corner of A, so it is not an iterated lower face of
    # any maximal square; no cell of the complex qualifies
    assert dp.branch_cubes(dubut, "future") == []


def test_graph_branch_cubes_match_out_degree():
    for name in ("letterM", "branching", "edge"):
        g = dp.builtin(name)
        sk = reach.skeleton(g)
        outdeg = [0] * sk.n_vertices
        indeg = [0] * sk.n_vertices
        for t, h in zip(sk.tails.tolist(), sk.heads.tolist()):
            outdeg[t] += 1
            indeg[h] += 1
        want_fut = sorted(pc.CellId(0, i) for i, d in enumerate(outdeg) if d > 1)
        want_past = sorted(pc.CellId(0, i) for i, d in enumerate(indeg) if d > 1)
        assert dp.branch_cubes(g, "future") == want_fut
        assert dp.branch_cubes(g, "past") == want_past


def test_e_region_branching_origin(branching):
    o = branching.names["O"]
    assert dp.e_region(branching, o, "future") == {o}


def test_e_region_no_branch_points_is_everything():
    e = dp.builtin("edge")
    everything = frozenset(pc.CellId(0, i) for i in range(2))
    for v in everything:
        assert dp.e_region(e, v, "future") == everything
        assert dp.e_region(e, v, "past") == everything


def test_e_region_subdivided_branching():
    sub, smap = pc.subdivide(dp.builtin("branching"), 2)
    br = dp.builtin("branching")
    mid_a = smap.point_to_vertex(pc.GridPoint(br.names["a"], 2, (1,)))
    origin = smap.point_to_vertex(pc.GridPoint(br.names["O"], 1, ()))
    # the only future branch vertex is the origin, which lies outside the
    # future of mid_a, so the formula removes exactly the origin's past
    region = dp.e_region(sub, mid_a, "future")
    everything = frozenset(pc.CellId(0, i) for i in range(sub.n_cells(0)))
    assert region == everything - {origin}


def test_e_region_within_past_of_branch_vertex(letter_m, branching):
    for g in (letter_m, branching):
        for b in dp.branch_cubes(g, "future"):
            if b.dim == 0:
                assert dp.e_region(g, b, "future") <= dp.past_set(g, {b})
