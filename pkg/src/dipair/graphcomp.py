"""Pair component categories of directed graphs with unique directed paths.

Pieces are sets of atoms (vertices and open edges): for the future flavor,
one region per future branch vertex b (everything that reaches b but no
strictly earlier branch vertex) plus the path components of what is left
above all branch vertices; the past flavor mirrors this, and the total
flavor uses branch vertices of both kinds as singleton pieces together with
the components of their complement.  Objects are reachable piece pairs;
unique paths force at most one morphism per ordered pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import reach
from .category import ThinCategory
from .errors import NotAGraph, UniquePathViolated
from .precubical import CellId, PreCubicalSet

Atom = tuple[str, int]  # ("v", vertex index) or ("e", edge index)


def _require_graph(g: PreCubicalSet):
    if g.dims > 1:
        raise NotAGraph(f"expected a 1-dimensional complex, got dimension {g.dims}")


def check_unique_path(g: PreCubicalSet) -> bool:
    """True iff every ordered vertex pair has at most one directed path."""
    _require_graph(g)
    if reach.has_directed_loop(g):
        return False
    sk = reach.skeleton(g)
    n = sk.n_vertices
    succ = [[] for _ in range(n)]
    for t, h in zip(sk.tails.tolist(), sk.heads.tolist()):
        succ[t].append(h)
    order = reach._topo_order(n, succ)
    # count paths u -> v for all v at once, capped at 2
    for u in range(n):
        counts = [0] * n
        counts[u] = 1
        for w in order:
            if counts[w]:
                for h in succ[w]:
                    counts[h] = min(counts[h] + counts[w], 2)
        if any(c > 1 for c in counts):
            return False
    return True


@dataclass(frozen=True)
class GraphDecomposition:
    """Branch vertices with their reachability order, and named atom pieces."""

    branch: tuple[CellId, ...]
    branch_order: frozenset  # pairs (b, b') with b strictly before b'
    pieces: tuple  # (name, frozenset[Atom]) in deterministic order


def _all_atoms(g) -> set[Atom]:
    atoms = {("v", i) for i in range(g.n_cells(0))}
    atoms |= {("e", j) for j in range(g.n_cells(1))}
    return atoms


def _atom_reach(g, a: Atom, b: Atom) -> bool:
    """A point of atom a can reach a point of atom b."""
    sk = reach.skeleton(g)
    tail = lambda j: int(sk.tails[j])
    head = lambda j: int(sk.heads[j])
    r = lambda x, y: reach.reachable_idx(g, x, y)
    if a[0] == "v" and b[0] == "v":
        return r(a[1], b[1])
    if a[0] == "v":
        return r(a[1], tail(b[1]))
    if b[0] == "v":
        return r(head(a[1]), b[1])
    return a == b or r(head(a[1]), tail(b[1]))


def _region_atoms(g, b: int, flavor: str) -> frozenset[Atom]:
    """Atoms whose points reach b (future flavor) / are reached from b (past)."""
    sk = reach.skeleton(g)
    atoms = set()
    for i in range(g.n_cells(0)):
        hit = reach.reachable_idx(g, i, b) if flavor == "future" else reach.reachable_idx(g, b, i)
        if hit:
            atoms.add(("v", i))
    for j in range(g.n_cells(1)):
        if flavor == "future":
            hit = reach.reachable_idx(g, int(sk.heads[j]), b)
        else:
            hit = reach.reachable_idx(g, b, int(sk.tails[j]))
        if hit:
            atoms.add(("e", j))
    return frozenset(atoms)


def _components(g, atoms: set[Atom]) -> list[frozenset[Atom]]:
    """Path components of an atom set (edges connect to contained endpoints)."""
    sk = reach.skeleton(g)
    parent = {a: a for a in atoms}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for a in atoms:
        if a[0] == "e":
            for end in (int(sk.tails[a[1]]), int(sk.heads[a[1]])):
                if ("v", end) in atoms:
                    union(a, ("v", end))
    comps: dict[Atom, set[Atom]] = {}
    for a in atoms:
        comps.setdefault(find(a), set()).add(a)
    return sorted((frozenset(c) for c in comps.values()), key=lambda c: min(c))


def decomposition(g: PreCubicalSet, flavor: str) -> GraphDecomposition:
    """Named piece decomposition for one flavor (future, past or total)."""
    _require_graph(g)
    if flavor not in ("future", "past", "total"):
        raise ValueError(f"unknown flavor {flavor!r}")
    atoms = _all_atoms(g)
    if flavor == "total":
        fut = [b for b in reach.branch_cubes(g, "future") if b.dim == 0]
        pst = [b for b in reach.branch_cubes(g, "past") if b.dim == 0]
        branch = sorted(set(fut) | set(pst))
        pieces = [(g.cell_name(b), frozenset({("v", b.index)})) for b in branch]
        rest = atoms - {("v", b.index) for b in branch}
        pieces += [(f"reg{k}", c) for k, c in enumerate(_components(g, rest))]
        order = frozenset(
            (a, b) for a in branch for b in branch
            if a != b and reach.reachable(g, a, b)
        )
        return GraphDecomposition(tuple(branch), order, tuple(pieces))

    branch = [b for b in reach.branch_cubes(g, flavor) if b.dim == 0]
    regions = {b: _region_atoms(g, b.index, flavor) for b in branch}
    pieces = []
    for b in branch:
        inner = regions[b]
        for b2 in branch:
            if b2 != b and ("v", b2.index) in regions[b]:
                inner = inner - regions[b2]
        pieces.append((f"G({g.cell_name(b)})", frozenset(inner)))
    rest = atoms
    for region in regions.values():
        rest = rest - region
    tag = "top" if flavor == "future" else "bot"
    pieces += [(f"{tag}{k}", c) for k, c in enumerate(_components(g, set(rest)))]
    order = frozenset(
        (a, b) for a in branch for b in branch
        if a != b and reach.reachable(g, a, b)
    )
    return GraphDecomposition(tuple(branch), order, tuple(pieces))


def _piece_reach(g, src: frozenset[Atom], dst: frozenset[Atom]) -> bool:
    return any(_atom_reach(g, a, b) for a in src for b in dst)


def graph_components(g: PreCubicalSet, flavor: str) -> ThinCategory:
    """The pair component category of a unique-path graph, one flavor.

    Objects are reachable piece pairs; a morphism o -> o' exists iff a
    representative extension does: o' reaches back into o's source piece and
    o's target piece reaches on into o'.
    """
    _require_graph(g)
    if not check_unique_path(g):
        raise UniquePathViolated(
            "graph has several directed paths between some vertices; "
            "use the order pair category instead"
        )
    dec = decomposition(g, flavor)
    names = [name for name, _ in dec.pieces]
    sets = [atoms for _, atoms in dec.pieces]
    k = len(sets)
    preach = np.zeros((k, k), dtype=bool)
    for a in range(k):
        for b in range(k):
            preach[a, b] = _piece_reach(g, sets[a], sets[b])
    objs = [(a, b) for a in range(k) for b in range(k) if preach[a, b]]
    labels = [(names[a], names[b]) for a, b in objs]
    n = len(objs)
    exists = np.zeros((n, n), dtype=bool)
    for i, (p, q) in enumerate(objs):
        for j, (p2, q2) in enumerate(objs):
            exists[i, j] = preach[p2, p] and preach[q, q2]

    def object_json(i):
        return {"src_piece": labels[i][0], "dst_piece": labels[i][1]}

    def label_fn(i):
        return f"{labels[i][0]}|{labels[i][1]}"

    return ThinCategory(labels, exists, object_json=object_json, label_fn=label_fn)
