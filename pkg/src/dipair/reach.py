"""Directed 1-skeleton reachability, branch cubes and fixed regions.

Vertex-level reachability stands in for point-level reachability in the
realization: a directed path between vertices exists iff a directed edge
path exists in the 1-skeleton (interior points are made vertices by
subdividing first).  Loop-freeness is likewise decided on the 1-skeleton.
"""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass

import numpy as np

from .precubical import CellId, PreCubicalSet

_lock = threading.Lock()
_closure_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class DirectedSkeleton:
    """One arc per 1-cell, from its lower to its upper endpoint."""

    n_vertices: int
    tails: np.ndarray
    heads: np.ndarray

    @property
    def n_arcs(self) -> int:
        return len(self.tails)


def skeleton(pcs: PreCubicalSet) -> DirectedSkeleton:
    n1 = pcs.n_cells(1)
    if n1:
        tails = pcs._minus[1][:, 0].astype(np.int64)
        heads = pcs._plus[1][:, 0].astype(np.int64)
    else:
        tails = np.zeros(0, dtype=np.int64)
        heads = np.zeros(0, dtype=np.int64)
    return DirectedSkeleton(pcs.n_cells(0), tails, heads)


def _closure(pcs: PreCubicalSet) -> list[int]:
    """Bitset per vertex u: bit v set iff v is reachable from u."""
    with _lock:
        clo = _closure_cache.get(pcs)
    if clo is not None:
        return clo
    sk = skeleton(pcs)
    n = sk.n_vertices
    succ = [[] for _ in range(n)]
    for t, h in zip(sk.tails.tolist(), sk.heads.tolist()):
        succ[t].append(h)
    clo = [1 << u for u in range(n)]
    # Sweep to a fixed point; one pass suffices on a reverse topological
    # order, loops need at most n passes (loop examples here are tiny).
    order = list(_topo_order(n, succ) or range(n))
    order.reverse()
    changed = True
    while changed:
        changed = False
        for u in order:
            bits = clo[u]
            for v in succ[u]:
                bits |= clo[v]
            if bits != clo[u]:
                clo[u] = bits
                changed = True
    with _lock:
        _closure_cache[pcs] = clo
    return clo


def _topo_order(n, succ):
    indeg = [0] * n
    for u in range(n):
        for v in succ[u]:
            indeg[v] += 1
    stack = [u for u in range(n) if indeg[u] == 0]
    order = []
    while stack:
        u = stack.pop()
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return order if len(order) == n else None


def _topo_order_subset(vertices, succ):
    """Topological order of a vertex subset; succ maps into the subset."""
    indeg = {w: 0 for w in vertices}
    for u in vertices:
        for v in succ[u]:
            indeg[v] += 1
    stack = [w for w in vertices if indeg[w] == 0]
    order = []
    while stack:
        u = stack.pop()
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    if len(order) != len(vertices):
        raise ValueError("subgraph has a directed cycle")
    return order


def has_directed_loop(pcs: PreCubicalSet) -> bool:
    """True iff the skeleton has a directed cycle (self-loops included)."""
    sk = skeleton(pcs)
    succ = [[] for _ in range(sk.n_vertices)]
    for t, h in zip(sk.tails.tolist(), sk.heads.tolist()):
        if t == h:
            return True
        succ[t].append(h)
    return _topo_order(sk.n_vertices, succ) is None


def reachable(pcs: PreCubicalSet, u: CellId, v: CellId) -> bool:
    """True iff a directed arc path runs from u to v (u = v counts)."""
    _check_vertex(pcs, u)
    _check_vertex(pcs, v)
    return bool(_closure(pcs)[u.index] >> v.index & 1)


def reachable_idx(pcs: PreCubicalSet, u: int, v: int) -> bool:
    return bool(_closure(pcs)[u] >> v & 1)


def closure_matrix(pcs: PreCubicalSet) -> np.ndarray:
    """Dense boolean matrix R with R[u, v] = v reachable from u."""
    clo = _closure(pcs)
    n = pcs.n_cells(0)
    out = np.zeros((n, n), dtype=bool)
    for u, bits in enumerate(clo):
        while bits:
            low = bits & -bits
            out[u, low.bit_length() - 1] = True
            bits ^= low
    return out


def _check_vertex(pcs, v):
    if v.dim != 0 or not 0 <= v.index < pcs.n_cells(0):
        raise ValueError(f"{v} is not a vertex of the complex")


def past_set(pcs: PreCubicalSet, s: frozenset[CellId] | set) -> frozenset[CellId]:
    """All vertices with a directed path into S; contains S."""
    for v in s:
        _check_vertex(pcs, v)
    clo = _closure(pcs)
    mask = 0
    for v in s:
        mask |= 1 << v.index
    return frozenset(
        CellId(0, u) for u in range(pcs.n_cells(0)) if clo[u] & mask
    )


def future_set(pcs: PreCubicalSet, s: frozenset[CellId] | set) -> frozenset[CellId]:
    """All vertices with a directed path out of S; contains S."""
    for v in s:
        _check_vertex(pcs, v)
    clo = _closure(pcs)
    bits = 0
    for v in s:
        bits |= clo[v.index]
    return frozenset(
        CellId(0, u) for u in range(pcs.n_cells(0)) if bits >> u & 1
    )


def maximal_cells(pcs: PreCubicalSet) -> list[CellId]:
    """Cells that are not a face of any other cell."""
    is_face = {d: np.zeros(pcs.n_cells(d), dtype=bool) for d in range(pcs.dims + 1)}
    for d in range(1, pcs.dims + 1):
        for arr in (pcs._minus[d], pcs._plus[d]):
            if arr.size:
                is_face[d - 1][np.unique(arr)] = True
    return [c for c in pcs.all_cells() if not is_face[c.dim][c.index]]


def _iterated_face_closure(pcs, cell: CellId, sign: int) -> set[CellId]:
    out = set()
    stack = [cell]
    while stack:
        c = stack.pop()
        if c in out:
            continue
        out.add(c)
        for axis in range(1, c.dim + 1):
            stack.append(pcs.face(c, axis, sign))
    return out


def branch_cubes(pcs: PreCubicalSet, flavor: str) -> list[CellId]:
    """Cells that are an iterated lower (future) / upper (past) face of more
    than one maximal cell.  The empty composite counts, so a maximal cell is
    a bottom boundary of itself."""
    sign = {"future": -1, "past": +1}[flavor]
    count: dict[CellId, int] = {}
    for m in maximal_cells(pcs):
        for c in _iterated_face_closure(pcs, m, sign):
            count[c] = count.get(c, 0) + 1
    return sorted(c for c, k in count.items() if k > 1)


def e_region(pcs: PreCubicalSet, x: CellId, flavor: str) -> frozenset[CellId]:
    """Vertices a homotopy flow fixing the branch structure can move x into.

    With B the future branch vertices, B1 = B intersected with the future of
    x and B2 the rest, this is the intersection of the pasts of B1 with the
    complements of the pasts of B2 (mirrored for the past flavor).  Empty
    intersections mean the whole vertex set.
    """
    _check_vertex(pcs, x)
    branch0 = [b for b in branch_cubes(pcs, flavor) if b.dim == 0]
    all_v = frozenset(CellId(0, i) for i in range(pcs.n_cells(0)))
    result = all_v
    for b in branch0:
        if flavor == "future":
            near = reachable(pcs, x, b)
            region = past_set(pcs, {b})
        else:
            near = reachable(pcs, b, x)
            region = future_set(pcs, {b})
        result = result & region if near else result - region
    return result
