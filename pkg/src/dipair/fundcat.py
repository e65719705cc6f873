"""Directed edge-path enumeration and dihomotopy classes via square moves.

Two edge paths are elementarily related when, for some 2-cell s, the two-arc
subpath d1-(s) . d2+(s) is replaced by d2-(s) . d1+(s) or vice versa; the
reflexive-transitive closure partitions path sets into classes whose count
is the pi0 of the trace space.  Enumeration refuses complexes with directed
loops and enforces an explicit path budget; exceeding it is an error, never
silent truncation.
"""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import reach
from ._backend import kernels
from .errors import BudgetExceeded, LoopsPresent
from .precubical import CellId, GridPoint, PreCubicalSet, subdivide

DEFAULT_BUDGET = 1_000_000

_lock = threading.Lock()
_sub_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()
_class_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()
_move_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()
_loop_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


@dataclass(frozen=True, order=True)
class EdgePath:
    """A directed edge path: consecutive arc heads and tails match."""

    arcs: tuple[int, ...]
    source: CellId
    target: CellId

    def __len__(self):
        return len(self.arcs)


@dataclass(frozen=True)
class DipathClass:
    """A dihomotopy class, named by its lexicographically least member."""

    canonical: EdgePath
    size: int


class TraceResult(NamedTuple):
    count: int
    classes: list


def _loop_free(pcs) -> bool:
    with _lock:
        val = _loop_cache.get(pcs)
    if val is None:
        val = not reach.has_directed_loop(pcs)
        with _lock:
            _loop_cache[pcs] = val
    return val


def subdivision(pcs: PreCubicalSet, k: int):
    """Cached `precubical.subdivide`."""
    with _lock:
        per = _sub_cache.setdefault(pcs, {})
        hit = per.get(k)
    if hit is None:
        hit = subdivide(pcs, k)
        with _lock:
            per[k] = hit
    return hit


def _move_table(pcs: PreCubicalSet):
    """Swap table of the square moves, keyed by arc pair a * nE + b."""
    with _lock:
        hit = _move_cache.get(pcs)
    if hit is not None:
        return hit
    n_e = pcs.n_cells(1)
    keys, sa, sb = [], [], []
    if pcs.dims >= 2:
        for s in range(pcs.n_cells(2)):
            l, b = (int(x) for x in pcs._minus[2][s])
            r, t = (int(x) for x in pcs._plus[2][s])
            for (a1, b1), (a2, b2) in (((l, t), (b, r)), ((b, r), (l, t))):
                keys.append(a1 * n_e + b1)
                sa.append(a2)
                sb.append(b2)
    keys = np.asarray(keys, dtype=np.int64)
    order = np.argsort(keys, kind="stable")
    table = (keys[order],
             np.asarray(sa, dtype=np.int32)[order],
             np.asarray(sb, dtype=np.int32)[order],
             n_e)
    with _lock:
        _move_cache[pcs] = table
    return table


class ClassSet:
    """All directed edge paths u -> v with their square-move partition.

    Paths are held as a -1 padded int matrix in lexicographic row order;
    `labels[r]` is the class index of row r and classes are numbered in
    order of their canonical (least) member.
    """

    def __init__(self, pcs, u, v, mat, lengths):
        self.pcs = pcs
        self.u = u
        self.v = v
        self.mat = mat
        self.lengths = lengths
        self.count = len(mat)
        self._lookup = None
        if self.count:
            keys, sa, sb, n_e = _move_table(pcs)
            roots = kernels().classify_paths(mat, keys, sa, sb, max(n_e, 1))
            order_of_root: dict[int, int] = {}
            labels = np.empty(self.count, dtype=np.int64)
            canon_rows = []
            sizes = []
            for r, root in enumerate(roots.tolist()):
                if root not in order_of_root:
                    order_of_root[root] = len(canon_rows)
                    canon_rows.append(r)
                    sizes.append(0)
                labels[r] = order_of_root[root]
                sizes[order_of_root[root]] += 1
            self.labels = labels
            self.classes = [
                DipathClass(self._path(r), sizes[c]) for c, r in enumerate(canon_rows)
            ]
        else:
            self.labels = np.zeros(0, dtype=np.int64)
            self.classes = []

    def _path(self, row) -> EdgePath:
        arcs = tuple(int(a) for a in self.mat[row, : self.lengths[row]])
        return EdgePath(arcs, self.u, self.v)

    def paths(self) -> list[EdgePath]:
        return [self._path(r) for r in range(self.count)]

    def class_of(self, arcs: tuple[int, ...]) -> int:
        """Class index of a member path, by exact arc sequence."""
        if self._lookup is None:
            self._lookup = {
                tuple(int(a) for a in self.mat[r, : self.lengths[r]]): int(self.labels[r])
                for r in range(self.count)
            }
        return self._lookup[tuple(arcs)]

    @property
    def n_classes(self) -> int:
        return len(self.classes)


def _padded_matrix(rows: Sequence[Sequence[int]]):
    lengths = np.array([len(r) for r in rows], dtype=np.int32)
    width = int(lengths.max()) if len(rows) else 0
    mat = np.full((len(rows), width), -1, dtype=np.int32)
    for i, r in enumerate(rows):
        mat[i, : len(r)] = r
    return mat, lengths


def _lexsorted(mat, lengths):
    if mat.shape[0] <= 1 or mat.shape[1] == 0:
        return mat, lengths
    order = np.lexsort(tuple(mat[:, c] for c in range(mat.shape[1] - 1, -1, -1)))
    return np.ascontiguousarray(mat[order]), lengths[order]


def class_set(pcs: PreCubicalSet, u: CellId, v: CellId, budget: int = DEFAULT_BUDGET) -> ClassSet:
    """Enumerate and classify all directed edge paths from u to v."""
    if not _loop_free(pcs):
        raise LoopsPresent("complex admits a directed loop; path sets are infinite")
    with _lock:
        per = _class_cache.setdefault(pcs, {})
        hit = per.get((u, v))
    if hit is not None:
        if hit.count > budget:
            raise BudgetExceeded(hit.count, budget)
        return hit

    n = pcs.n_cells(0)
    if not (u.dim == 0 and v.dim == 0 and 0 <= u.index < n and 0 <= v.index < n):
        raise ValueError("endpoints must be vertices of the complex")
    clo = reach._closure(pcs)
    if not (clo[u.index] >> v.index) & 1:
        cs = ClassSet(pcs, u, v, np.zeros((0, 0), dtype=np.int32), np.zeros(0, dtype=np.int32))
    else:
        sk = reach.skeleton(pcs)
        from_u = clo[u.index]
        relevant = [
            w for w in range(n) if (from_u >> w) & 1 and (clo[w] >> v.index) & 1
        ]
        rel = set(relevant)
        per_vertex: dict[int, list[tuple[int, int]]] = {w: [] for w in relevant}
        succ: dict[int, list[int]] = {w: [] for w in relevant}
        for aid, (t, h) in enumerate(zip(sk.tails.tolist(), sk.heads.tolist())):
            if t in rel and h in rel:
                per_vertex[t].append((aid, h))
                succ[t].append(h)
        order = reach._topo_order_subset(relevant, succ)
        npaths = {w: 0 for w in relevant}
        longest = {w: 0 for w in relevant}
        npaths[v.index] = 1
        for w in reversed(order):
            if w == v.index:
                continue
            npaths[w] = sum(npaths[h] for h in succ[w])
            longest[w] = 1 + max(longest[h] for h in succ[w])
        total = npaths[u.index]
        if total > budget:
            raise BudgetExceeded(total, budget)
        indptr = np.zeros(n + 1, dtype=np.int64)
        heads_l, aids_l = [], []
        for w in range(n):
            if w in rel:
                for aid, h in sorted(per_vertex[w]):
                    aids_l.append(aid)
                    heads_l.append(h)
            indptr[w + 1] = len(aids_l)
        heads = np.asarray(heads_l, dtype=np.int64)
        aids = np.asarray(aids_l, dtype=np.int32)
        mat, lengths, got = kernels().enumerate_paths(
            indptr, heads, aids, u.index, v.index, total, longest[u.index]
        )
        assert got == total
        mat, lengths = _lexsorted(mat[:total], lengths[:total])
        cs = ClassSet(pcs, u, v, mat, lengths)
    with _lock:
        per[(u, v)] = cs
    return cs


def enumerate_dipaths(pcs: PreCubicalSet, u: CellId, v: CellId,
                      budget: int = DEFAULT_BUDGET) -> list[EdgePath]:
    """All directed edge paths u -> v in lexicographic arc order."""
    return class_set(pcs, u, v, budget).paths()


def square_classes(pcs: PreCubicalSet, paths: Sequence[EdgePath]) -> list[DipathClass]:
    """Partition the given paths by the square-move closure (within the set).

    Duplicate paths land in one class; sizes count list entries.
    """
    if not paths:
        return []
    sk = reach.skeleton(pcs)
    src, dst = paths[0].source, paths[0].target
    multiplicity: dict[tuple, int] = {}
    for p in paths:
        if p.source != src or p.target != dst:
            raise ValueError("paths must share source and target")
        at = p.source.index
        for arc in p.arcs:
            if int(sk.tails[arc]) != at:
                raise ValueError(f"arcs of {p} do not concatenate")
            at = int(sk.heads[arc])
        if at != p.target.index:
            raise ValueError(f"{p} does not end at its declared target")
        multiplicity[p.arcs] = multiplicity.get(p.arcs, 0) + 1
    mat, lengths = _padded_matrix(sorted(multiplicity))
    cs = ClassSet(pcs, src, dst, mat, lengths)
    sizes = [0] * cs.n_classes
    for r in range(cs.count):
        arcs = tuple(int(a) for a in mat[r, : lengths[r]])
        sizes[int(cs.labels[r])] += multiplicity[arcs]
    return [DipathClass(c.canonical, s) for c, s in zip(cs.classes, sizes)]


def _effective_denominator(points, denom=None) -> int:
    denoms = {p.denom for p in points if p.carrier.dim > 0}
    if len(denoms) > 1:
        raise ValueError(f"points must share a denominator, got {sorted(denoms)}")
    if denom is not None:
        if denoms and denoms != {denom}:
            raise ValueError(
                f"points have denominator {denoms.pop()}, requested grid {denom}"
            )
        return denom
    return denoms.pop() if denoms else 1


def trace_pi0(pcs: PreCubicalSet, p: GridPoint, q: GridPoint,
              budget: int = DEFAULT_BUDGET, denom: int | None = None) -> TraceResult:
    """Number of dihomotopy classes of directed paths from p to q.

    Subdivides by the shared denominator (or an explicit `denom` when all
    points are vertices) so both points become vertices, then enumerates and
    classifies edge paths.
    """
    k = _effective_denominator((p, q), denom)
    sub, smap = subdivision(pcs, k)
    pu = smap.point_to_vertex(p)
    qv = smap.point_to_vertex(q)
    cs = class_set(sub, pu, qv, budget)
    return TraceResult(cs.n_classes, cs.classes)


@dataclass(frozen=True)
class ExtMorphism:
    """Extension morphism (x, y) -> (x', y'): a class into the source and a
    class out of the target."""

    src_pair: tuple[CellId, CellId]
    dst_pair: tuple[CellId, CellId]
    back: DipathClass  # from x' to x
    fwd: DipathClass   # from y to y'
    ctx: PreCubicalSet = field(compare=False, repr=False)


def homset(pcs: PreCubicalSet, src: tuple[GridPoint, GridPoint],
           dst: tuple[GridPoint, GridPoint],
           budget: int = DEFAULT_BUDGET, denom: int | None = None) -> list[ExtMorphism]:
    """Extension morphisms from the pair `src` to the pair `dst`.

    The first leg runs backwards: morphisms are pairs (class x' -> x,
    class y -> y'), listed with the back class varying slowest.
    """
    x, y = src
    x2, y2 = dst
    k = _effective_denominator((x, y, x2, y2), denom)
    sub, smap = subdivision(pcs, k)
    xv, yv = smap.point_to_vertex(x), smap.point_to_vertex(y)
    xv2, yv2 = smap.point_to_vertex(x2), smap.point_to_vertex(y2)
    backs = class_set(sub, xv2, xv, budget)
    fwds = class_set(sub, yv, yv2, budget)
    out = []
    for b in backs.classes:
        for f in fwds.classes:
            out.append(ExtMorphism((xv, yv), (xv2, yv2), b, f, sub))
    return out


def compose(m1: ExtMorphism, m2: ExtMorphism, budget: int = DEFAULT_BUDGET) -> ExtMorphism:
    """Classwise concatenation; back legs concatenate in reverse order."""
    if m1.ctx is not m2.ctx:
        raise ValueError("morphisms live in different complexes")
    if m1.dst_pair != m2.src_pair:
        raise ValueError("target pair of m1 must equal source pair of m2")
    back_arcs = m2.back.canonical.arcs + m1.back.canonical.arcs
    fwd_arcs = m1.fwd.canonical.arcs + m2.fwd.canonical.arcs
    backs = class_set(m1.ctx, m2.dst_pair[0], m1.src_pair[0], budget)
    fwds = class_set(m1.ctx, m1.src_pair[1], m2.dst_pair[1], budget)
    b = backs.classes[backs.class_of(back_arcs)]
    f = fwds.classes[fwds.class_of(fwd_arcs)]
    return ExtMorphism(m1.src_pair, m2.dst_pair, b, f, m1.ctx)
