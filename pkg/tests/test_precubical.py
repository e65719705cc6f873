import json

import numpy as np
import pytest

import dipair as dp
from dipair import precubical as pc
from dipair.errors import InputError

ALL_BUILTINS = ["dubut", "letterM", "branching", "edge", "circle", "swiss_retract"]


def square():
    return pc.product(dp.builtin("edge"), dp.builtin("edge"))


# -- validate ----------------------------------------------------------------

def test_validate_boundary_cube_ok(bd2):
    assert bd2.validate().ok


def test_validate_broken_square_reports_cell_and_indices():
    # square with the lower faces deliberately mismatched: d1- of the bottom
    # edge and of the left edge no longer agree at the corner
    minus = {1: [[0], [0], [1], [2]], 2: [[1], [3]]}  # left edge, top edge
    plus = {1: [[1], [2], [3], [3]], 2: [[2], [3]]}
    broken = pc.PreCubicalSet([4, 4, 1], minus, plus)
    report = broken.validate()
    assert not report.ok
    assert any("2:0" in line and "d1^- d2^-" in line for line in report.violations)


def test_validate_reports_missing_face_reference():
    broken = pc.PreCubicalSet([1, 1], {1: [[0]]}, {1: [[5]]})
    report = broken.validate()
    assert not report.ok
    assert any("missing cell" in line for line in report.violations)


def test_validate_dubut(dubut):
    assert dubut.validate().ok
    # hand-checked gluing of the four squares: the two bold identifications
    # around C merge three corners into one vertex, leaving 8 in total
    assert list(dubut.cells) == [8, 12, 4]


# -- subdivision ---------------------------------------------------------------

def test_subdivide_edge_counts():
    sub, _ = pc.subdivide(dp.builtin("edge"), 3)
    assert list(sub.cells) == [4, 3]


def test_subdivide_square_counts():
    sub, _ = pc.subdivide(square(), 2)
    assert list(sub.cells) == [9, 12, 4]


def test_subdivide_boundary_square_counts(bd2):
    sub, _ = pc.subdivide(bd2, 2)
    assert list(sub.cells) == [8, 8]


def test_subdivide_rejects_zero():
    with pytest.raises(InputError):
        pc.subdivide(dp.builtin("edge"), 0)


@pytest.mark.parametrize("name", ALL_BUILTINS + ["bd2", "bd3", "torus2"])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_subdivision_stays_valid(name, k):
    pcs = {
        "bd2": dp.builtin("boundary_cube", 2),
        "bd3": dp.builtin("boundary_cube", 3),
        "torus2": dp.builtin("torus", 2),
    }.get(name) or dp.builtin(name)
    sub, _ = pc.subdivide(pcs, k)
    assert sub.validate().ok


@pytest.mark.parametrize("name", ALL_BUILTINS)
def test_subdivide_by_one_is_isomorphic(name):
    pcs = dp.builtin(name)
    sub, smap = pc.subdivide(pcs, 1)
    assert list(sub.cells) == list(pcs.cells)
    # the forward map on full-dimensional subcells is the isomorphism;
    # check it commutes with every face map
    fwd = {c: smap.forward[(c, (0,) * c.dim)] for c in pcs.all_cells()}
    for c in pcs.all_cells():
        for axis in range(1, c.dim + 1):
            for sign in (-1, +1):
                assert fwd[pcs.face(c, axis, sign)] == sub.face(fwd[c], axis, sign)


def test_point_to_vertex_identifies_glued_descriptions(dubut):
    sub, smap = pc.subdivide(dubut, 2)
    # the same realization point written from A and from B1
    on_a = pc.grid_point(dubut, dubut.names["A"], 2, (2, 1))
    on_b1 = pc.grid_point(dubut, dubut.names["B1"], 2, (0, 1))
    assert on_a == on_b1
    assert smap.point_to_vertex(on_a) == smap.point_to_vertex(on_b1)


def test_point_to_vertex_wrong_denominator(bd2):
    _, smap = pc.subdivide(bd2, 3)
    edge = bd2.names["*0"]
    with pytest.raises(InputError):
        smap.point_to_vertex(pc.GridPoint(edge, 2, (1,)))


# -- products ------------------------------------------------------------------

def test_product_edge_edge():
    sq = square()
    assert list(sq.cells) == [4, 4, 1]
    assert sq.validate().ok


def test_product_with_point_is_identity():
    point = pc.PreCubicalSet([1], {}, {})
    for name in ("letterM", "dubut"):
        x = dp.builtin(name)
        prod = pc.product(x, point)
        assert list(prod.cells) == list(x.cells)
        for d in range(1, x.dims + 1):
            assert np.array_equal(prod._minus[d], x._minus[d])
            assert np.array_equal(prod._plus[d], x._plus[d])


def test_product_circle_circle_is_torus():
    t = pc.product(dp.builtin("circle"), dp.builtin("circle"))
    assert list(t.cells) == [1, 2, 1]
    assert t.validate().ok


@pytest.mark.parametrize("a,b", [("edge", "letterM"), ("branching", "edge"), ("circle", "letterM")])
def test_product_cell_counts(a, b):
    xa, xb = dp.builtin(a), dp.builtin(b)
    prod = pc.product(xa, xb)
    for n in range(prod.dims + 1):
        want = sum(
            xa.n_cells(p) * xb.n_cells(n - p) for p in range(n + 1)
        )
        assert prod.n_cells(n) == want


# -- Euclidean complexes ---------------------------------------------------------

def test_from_euclidean_unit_square():
    pcs, coords = pc.from_euclidean(pc.unit_squares([(0, 0)]))
    assert list(pcs.cells) == [4, 4, 1]
    assert pcs.validate().ok
    assert len(coords) == 9


def test_from_euclidean_square_boundary(bd2):
    edges = pc.EuclideanComplex(2, (
        ((0, 0), (1, 0)), ((0, 1), (1, 0)),
        ((0, 0), (0, 1)), ((1, 0), (0, 1)),
    ))
    pcs, _ = pc.from_euclidean(edges)
    assert list(pcs.cells) == list(bd2.cells)
    assert pcs.validate().ok


def test_from_euclidean_l_shape():
    pcs, _ = pc.from_euclidean(pc.unit_squares([(0, 0), (1, 0), (0, 1)]))
    # enumerated by hand: 8 lattice vertices, 5 horizontal + 5 vertical edges
    assert list(pcs.cells) == [8, 10, 3]
    assert pcs.validate().ok


def test_from_euclidean_always_loop_free():
    rng = np.random.default_rng(7)
    for _ in range(20):
        cells = {(int(i), int(j)) for i, j in rng.integers(0, 4, size=(6, 2))}
        pcs, _ = pc.from_euclidean(pc.unit_squares(sorted(cells)))
        assert pcs.validate().ok
        assert not dp.has_directed_loop(pcs)


def test_euclidean_rejects_duplicates():
    with pytest.raises(InputError):
        pc.EuclideanComplex(2, (((0, 0), (1, 1)), ((0, 0), (1, 1))))


# -- builtins -------------------------------------------------------------------

def test_builtin_branching_shape(branching):
    assert list(branching.cells) == [3, 2]
    sk = dp.skeleton(branching)
    o = branching.names["O"].index
    assert list(sk.tails) == [o, o]


def test_builtin_boundary_cube3(bd3):
    assert list(bd3.cells) == [8, 12, 6]


def test_builtin_dubut_valid(dubut):
    assert dubut.n_cells(2) == 4
    assert dubut.validate().ok


def test_builtin_unknown_name():
    with pytest.raises(InputError):
        dp.builtin("klein_bottle")
    with pytest.raises(InputError):
        pc.parse_builtin("boundary_cube(x)")


# -- grid points and parsing -----------------------------------------------------

def test_grid_point_pushes_boundary_to_faces():
    sq = square()
    top_cell = pc.CellId(2, 0)
    mid_bottom = pc.grid_point(sq, top_cell, 2, (1, 0))
    assert mid_bottom.carrier.dim == 1
    assert mid_bottom.coords == (1,)
    corner = pc.grid_point(sq, top_cell, 2, (2, 2))
    assert corner.carrier.dim == 0
    assert corner.denom == 1 and corner.coords == ()


def test_grid_point_rejects_raw_boundary():
    with pytest.raises(InputError):
        pc.GridPoint(pc.CellId(1, 0), 3, (3,))
    with pytest.raises(InputError):
        pc.GridPoint(pc.CellId(1, 0), 3, (0,))


def test_parse_point_roundtrip(dubut):
    p = pc.parse_point(dubut, "A@1/3,2/3")
    assert p.carrier == dubut.names["A"]
    assert p.coords == (1, 2) and p.denom == 3
    assert pc.parse_point(dubut, p.text(dubut)) == p
    vertex = pc.parse_point(dubut, "aplus")
    assert vertex.carrier == dubut.names["aplus"]


def test_parse_point_errors(dubut):
    with pytest.raises(InputError):
        pc.parse_point(dubut, "nosuch@1/3,1/3")
    with pytest.raises(InputError):
        pc.parse_point(dubut, "A@1/3,1/2")
    with pytest.raises(InputError):
        pc.parse_point(dubut, "A@1/3")


# -- JSON -------------------------------------------------------------------------

@pytest.mark.parametrize("name", ALL_BUILTINS + ["bd3"])
def test_json_roundtrip(name):
    pcs = dp.builtin("boundary_cube", 3) if name == "bd3" else dp.builtin(name)
    data = json.loads(json.dumps(pcs.to_json()))
    back = pc.PreCubicalSet.from_json(data)
    assert back.to_json() == pcs.to_json()
    assert back.validate().ok


def test_json_rejects_bad_face_reference():
    data = {"dims": 1, "cells": [1, 1], "faces": {"1:0": {"minus": ["0:5"], "plus": ["0:0"]}}}
    with pytest.raises(InputError):
        pc.PreCubicalSet.from_json(data)


def test_euclidean_json_roundtrip():
    e = pc.unit_squares([(0, 0), (1, 0)])
    back = pc.EuclideanComplex.from_json(json.loads(json.dumps(e.to_json())))
    assert back == e
