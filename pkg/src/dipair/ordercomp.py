"""Order types, canonical grid representatives and order pair categories.

Objects are triples (source cell, target cell, order type) whose canonical
representative pair is reachable; hom-sets are extension hom-sets between
the canonical representatives, computed in one global subdivision at
denominator 2 * dims + 1 so that all representatives are vertices of a
single complex.  Euclidean complexes get the coarser cube-pair category:
objects are reachable cell pairs represented by barycenters (subdivision
factor 2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import fundcat, reach
from .category import PairExtensionCategory
from .errors import LoopsPresent
from .precubical import (CellId, EuclideanComplex, GridPoint, PreCubicalSet,
                         from_euclidean)


@dataclass(frozen=True, order=True)
class OrderType:
    """Dense rank pattern of a coordinate vector: equal rank means equal
    coordinates, smaller rank strictly smaller coordinate."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        b = max(self.ranks) if self.ranks else 0
        if set(self.ranks) != set(range(1, b + 1)):
            raise ValueError(f"ranks {self.ranks} are not dense from 1")

    @property
    def arity(self) -> int:
        return len(self.ranks)

    @property
    def blocks(self) -> int:
        return max(self.ranks) if self.ranks else 0


def order_type(s: Sequence[Fraction], t: Sequence[Fraction]) -> OrderType:
    """Order type of the concatenated coordinate vector; two pairs get equal
    types iff they are order equivalent."""
    vec = list(s) + list(t)
    for x in vec:
        if not 0 < x < 1:
            raise ValueError(f"coordinate {x} must lie strictly inside (0, 1)")
    levels = sorted(set(vec))
    rank = {x: i + 1 for i, x in enumerate(levels)}
    return OrderType(tuple(rank[x] for x in vec))


def all_order_types(arity: int) -> list[OrderType]:
    """All dense rank patterns of the given arity, lexicographically."""
    if arity == 0:
        return [OrderType(())]
    out = []
    for ranks in itertools.product(range(1, arity + 1), repeat=arity):
        b = max(ranks)
        if set(ranks) == set(range(1, b + 1)):
            out.append(OrderType(ranks))
    return out


def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of n elements."""
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        for k in range(1, m + 1):
            total += _binom(m, k) * counts[m - k]
        counts.append(total)
    return counts[n]


def _binom(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@dataclass(frozen=True)
class PairObject:
    """An object of the order pair category: a reachable (cell, cell, order
    type) triple with its canonical representative pair."""

    src_cell: CellId
    dst_cell: CellId
    otype: OrderType
    rep: tuple[GridPoint, GridPoint]


def grid_denominator(pcs: PreCubicalSet) -> int:
    return 2 * pcs.dims + 1


def canonical_rep(pcs: PreCubicalSet, c: CellId, d: CellId,
                  otype: OrderType) -> tuple[GridPoint, GridPoint]:
    """Representative pair on the 1/(2*dims+1) grid: coordinate i is rank(i)/k."""
    if otype.arity != c.dim + d.dim:
        raise ValueError(f"order type arity {otype.arity} != {c.dim} + {d.dim}")
    k = grid_denominator(pcs)
    if otype.blocks >= k:
        raise ValueError(f"rank {otype.blocks} does not fit the 1/{k} grid")
    sc = otype.ranks[: c.dim]
    tc = otype.ranks[c.dim:]
    p = GridPoint(c, k if c.dim else 1, sc)
    q = GridPoint(d, k if d.dim else 1, tc)
    return p, q


def order_objects(pcs: PreCubicalSet) -> list[PairObject]:
    """All (cell, cell, order type) triples whose canonical pair is reachable.

    Reachability is tested once per triple on the subdivided skeleton; it
    does not depend on the choice of point inside the order simplex.
    """
    k = grid_denominator(pcs)
    sub, smap = fundcat.subdivision(pcs, k)
    out = []
    for c in pcs.all_cells():
        for d in pcs.all_cells():
            for ot in all_order_types(c.dim + d.dim):
                p, q = canonical_rep(pcs, c, d, ot)
                if reach.reachable(sub, smap.point_to_vertex(p), smap.point_to_vertex(q)):
                    out.append(PairObject(c, d, ot, (p, q)))
    return out


def hom_exists(pcs: PreCubicalSet, o1: PairObject, o2: PairObject) -> bool:
    """Whether the order category has a morphism o1 -> o2 (reachability only:
    a path from o2's source back into o1's source and from o1's target on to
    o2's target)."""
    k = grid_denominator(pcs)
    sub, smap = fundcat.subdivision(pcs, k)
    back = reach.reachable(sub, smap.point_to_vertex(o2.rep[0]), smap.point_to_vertex(o1.rep[0]))
    fwd = reach.reachable(sub, smap.point_to_vertex(o1.rep[1]), smap.point_to_vertex(o2.rep[1]))
    return back and fwd


# -- category construction ---------------------------------------------------

_CT_ENTRY_LIMIT = 200_000_000


def _build_pair_category(sub, reps, labels, budget, object_json=None, label_fn=None):
    """Extension category over fixed representative vertex pairs in `sub`."""
    n = len(reps)
    mat = reach.closure_matrix(sub)
    u = np.array([a.index for a, _ in reps], dtype=np.int64)
    v = np.array([b.index for _, b in reps], dtype=np.int64)
    exist = mat[np.ix_(u, u)].T & mat[np.ix_(v, v)]

    pair_idx = np.argwhere(exist)
    pairs = set()
    for i, j in pair_idx:
        pairs.add((int(u[j]), int(u[i])))
        pairs.add((int(v[i]), int(v[j])))
    out_map: dict[int, set] = {}
    in_map: dict[int, set] = {}
    for a, b in pairs:
        out_map.setdefault(a, set()).add(b)
        in_map.setdefault(b, set()).add(a)
    triples = []
    closed = set(pairs)
    for b in set(in_map) & set(out_map):
        for a in in_map[b]:
            for c in out_map[b]:
                triples.append((a, b, c))
                closed.add((a, c))

    cs = {}
    for a, b in sorted(closed):
        cs[(a, b)] = fundcat.class_set(sub, CellId(0, a), CellId(0, b), budget)
    cmax = max((s.n_classes for s in cs.values()), default=1)

    verts = sorted({int(x) for x in u} | {int(x) for x in v})
    rv = len(verts)
    comp = {w: i for i, w in enumerate(verts)}
    if rv ** 3 * cmax * cmax > _CT_ENTRY_LIMIT:
        raise MemoryError(
            f"dense concatenation table would need {rv ** 3 * cmax * cmax} entries; "
            "the category is too large for this construction"
        )
    ct = np.full((rv, rv, rv, cmax, cmax), -1, dtype=np.int16)
    for a, b, c in triples:
        csab, csbc, csac = cs[(a, b)], cs[(b, c)], cs[(a, c)]
        for i1, cl1 in enumerate(csab.classes):
            head = cl1.canonical.arcs
            for i2, cl2 in enumerate(csbc.classes):
                ct[comp[a], comp[b], comp[c], i1, i2] = csac.class_of(
                    head + cl2.canonical.arcs
                )

    nb = np.zeros((n, n), dtype=np.int64)
    nf = np.zeros((n, n), dtype=np.int64)
    for i, j in pair_idx:
        nb[i, j] = cs[(int(u[j]), int(u[i]))].n_classes
        nf[i, j] = cs[(int(v[i]), int(v[j]))].n_classes
    sizes = nb * nf
    flat = sizes.ravel()
    starts = np.concatenate(([0], np.cumsum(flat)[:-1]))
    base_flat = np.where(flat > 0, starts, -1)
    base = base_flat.reshape(n, n)
    m_total = int(flat.sum())
    msrc = np.empty(m_total, dtype=np.int64)
    mdst = np.empty(m_total, dtype=np.int64)
    m_b = np.empty(m_total, dtype=np.int64)
    m_f = np.empty(m_total, dtype=np.int64)
    for i, j in pair_idx:
        b0 = base[i, j]
        sz = sizes[i, j]
        msrc[b0:b0 + sz] = i
        mdst[b0:b0 + sz] = j
        idx = np.arange(sz)
        m_b[b0:b0 + sz] = idx // nf[i, j]
        m_f[b0:b0 + sz] = idx % nf[i, j]

    class_sets = {
        (CellId(0, a), CellId(0, b)): s for (a, b), s in cs.items()
    }
    bu = np.array([comp[int(x)] for x in u], dtype=np.int64)
    fv = np.array([comp[int(x)] for x in v], dtype=np.int64)
    return PairExtensionCategory(
        labels, reps, msrc, mdst, m_b, m_f, base, nb, nf, bu, fv, ct,
        class_sets, object_json=object_json, label_fn=label_fn,
    )


def order_category(pcs: PreCubicalSet, budget: int = fundcat.DEFAULT_BUDGET) -> PairExtensionCategory:
    """The order pair component category of a loop-free pre-cubical set."""
    if reach.has_directed_loop(pcs):
        raise LoopsPresent(
            "complex admits a directed loop; its order category has infinite hom-sets"
        )
    objs = order_objects(pcs)
    k = grid_denominator(pcs)
    sub, smap = fundcat.subdivision(pcs, k)
    reps = [
        (smap.point_to_vertex(o.rep[0]), smap.point_to_vertex(o.rep[1])) for o in objs
    ]

    def object_json(i):
        o = objs[i]
        return {
            "src": o.src_cell.key(),
            "dst": o.dst_cell.key(),
            "ranks": list(o.otype.ranks),
            "rep": [o.rep[0].text(pcs), o.rep[1].text(pcs)],
        }

    def label_fn(i):
        o = objs[i]
        ranks = ",".join(str(r) for r in o.otype.ranks)
        return f"{pcs.cell_name(o.src_cell)}|{pcs.cell_name(o.dst_cell)}|{ranks}"

    return _build_pair_category(sub, reps, objs, budget, object_json, label_fn)


def cube_pair_category(e: EuclideanComplex, budget: int = fundcat.DEFAULT_BUDGET) -> PairExtensionCategory:
    """Objects are reachable ordered cell pairs, represented by barycenters."""
    pcs, coords = from_euclidean(e)
    sub, smap = fundcat.subdivision(pcs, 2)
    cells = list(pcs.all_cells())
    bary = {
        c: smap.point_to_vertex(GridPoint(c, 2 if c.dim else 1, (1,) * c.dim))
        for c in cells
    }
    objs = [
        (c, d) for c in cells for d in cells if reach.reachable(sub, bary[c], bary[d])
    ]
    reps = [(bary[c], bary[d]) for c, d in objs]

    def object_json(i):
        c, d = objs[i]
        return {
            "src": {"base": list(coords[c][0]), "extent": list(coords[c][1])},
            "dst": {"base": list(coords[d][0]), "extent": list(coords[d][1])},
        }

    def cell_label(c):
        base, extent = coords[c]
        return "(" + ",".join(str(x) for x in base) + ";" + "".join(str(x) for x in extent) + ")"

    def label_fn(i):
        c, d = objs[i]
        return f"{cell_label(c)}|{cell_label(d)}"

    return _build_pair_category(sub, reps, objs, budget, object_json, label_fn)
