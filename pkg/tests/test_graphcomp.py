import pytest

import dipair as dp
from dipair import graphcomp as gc
from dipair import ordercomp as oc
from dipair import precubical as pc
from dipair import reach
from dipair.errors import NotAGraph, UniquePathViolated


def graph_of_skeleton(pcs):
    """The 1-skeleton of a complex as a standalone graph."""
    sk = reach.skeleton(pcs)
    return pc.PreCubicalSet(
        [sk.n_vertices, sk.n_arcs],
        {1: sk.tails.reshape(-1, 1)},
        {1: sk.heads.reshape(-1, 1)},
    )


def test_check_unique_path(letter_m, bd2):
    assert gc.check_unique_path(letter_m)
    assert gc.check_unique_path(dp.builtin("edge"))
    assert not gc.check_unique_path(graph_of_skeleton(bd2))
    assert not gc.check_unique_path(dp.builtin("circle"))


def test_not_a_graph():
    solid = pc.product(dp.builtin("edge"), dp.builtin("edge"))
    with pytest.raises(NotAGraph):
        gc.graph_components(solid, "future")


def test_unique_path_violated(bd2):
    with pytest.raises(UniquePathViolated):
        gc.graph_components(graph_of_skeleton(bd2), "future")


@pytest.mark.parametrize("flavor,want", [("future", 5), ("past", 9), ("total", 15)])
def test_letter_m_counts(letter_m, flavor, want):
    cat = gc.graph_components(letter_m, flavor)
    assert cat.n_objects == want
    assert cat.check_axioms() == (0, 0)


def test_letter_m_future_objects(letter_m):
    cat = gc.graph_components(letter_m, "future")
    labels = set(cat.objects)
    assert labels == {
        ("G(m)", "G(m)"), ("G(m)", "top0"), ("G(m)", "top1"),
        ("top0", "top0"), ("top1", "top1"),
    }


def test_branching_future_matches_displayed_diagram(branching):
    cat = gc.graph_components(branching, "future")
    labels = set(cat.objects)
    assert labels == {
        ("G(O)", "G(O)"), ("G(O)", "top0"), ("G(O)", "top1"),
        ("top0", "top0"), ("top1", "top1"),
    }
    arrows = {
        (cat.objects[cat.src(f)], cat.objects[cat.dst(f)])
        for f in range(cat.n_morphisms) if not cat.is_identity(f)
    }
    assert arrows == {
        (("G(O)", "G(O)"), ("G(O)", "top0")),
        (("G(O)", "G(O)"), ("G(O)", "top1")),
        (("top0", "top0"), ("G(O)", "top0")),
        (("top1", "top1"), ("G(O)", "top1")),
    }


def test_branching_past_trivial(branching):
    cat = gc.graph_components(branching, "past")
    assert cat.n_objects == 1 and cat.n_morphisms == 1


def test_decomposition_pieces_partition(letter_m):
    for flavor in ("future", "past", "total"):
        dec = gc.decomposition(letter_m, flavor)
        atoms = [a for _, piece in dec.pieces for a in piece]
        assert len(atoms) == len(set(atoms))
        assert set(atoms) == gc._all_atoms(letter_m)


def test_pieces_are_path_connected(letter_m, branching, swiss):
    for g in (letter_m, branching):
        for flavor in ("future", "past", "total"):
            for _, piece in gc.decomposition(g, flavor).pieces:
                assert len(gc._components(g, set(piece))) == 1


def test_future_objects_are_piece_images_of_order_objects(letter_m, branching):
    for g in (letter_m, branching):
        dec = gc.decomposition(g, "future")
        piece_of = {}
        for name, piece in dec.pieces:
            for atom in piece:
                piece_of[atom] = name
        images = set()
        for obj in oc.order_objects(g):
            atom = lambda c: ("v", c.index) if c.dim == 0 else ("e", c.index)
            images.add((piece_of[atom(obj.src_cell)], piece_of[atom(obj.dst_cell)]))
        cat = gc.graph_components(g, "future")
        assert images == set(cat.objects)
