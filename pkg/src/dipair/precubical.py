"""Finite pre-cubical sets: validation, subdivision, products and example spaces.

A pre-cubical set is stored as per-dimension cell counts together with two
face arrays per dimension: for an n-cell c and axis i (1-based), ``d(i,-)``
and ``d(i,+)`` give the (n-1)-cells obtained by restricting coordinate i to
its lower/upper endpoint.  The face arrays must satisfy the pre-cubical
relations d(i,a) d(j,b) = d(j-1,b) d(i,a) for i < j; `validate` checks them
exhaustively.

Points of the geometric realization are `GridPoint`s: a carrier cell plus
rational coordinates n_i/denom that are strictly interior (boundary values
are pushed to the boundary cell at construction time, so the carrier is the
unique open cell containing the point).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError


@dataclass(frozen=True, order=True)
class CellId:
    """A cell, identified by dimension and index within that dimension."""

    dim: int
    index: int

    def key(self) -> str:
        return f"{self.dim}:{self.index}"

    @staticmethod
    def parse(text: str) -> "CellId":
        try:
            d, i = text.split(":")
            return CellId(int(d), int(i))
        except ValueError as exc:
            raise InputError(f"bad cell id {text!r}") from exc


class PreCubicalSet:
    """Immutable pre-cubical set with explicit lower/upper face maps.

    `faces_minus[d]` and `faces_plus[d]` are int arrays of shape
    (cells[d], d) giving, for each d-cell, the (d-1)-cell index of its
    lower/upper face along each axis.
    """

    def __init__(self, cells: Sequence[int], faces_minus, faces_plus, names=None):
        cells = list(int(c) for c in cells)
        while len(cells) > 1 and cells[-1] == 0:
            cells.pop()
        self.cells = tuple(cells)
        self.dims = len(self.cells) - 1
        self._minus = {}
        self._plus = {}
        for d in range(1, self.dims + 1):
            m = np.asarray(faces_minus[d], dtype=np.int64).reshape(self.cells[d], d)
            p = np.asarray(faces_plus[d], dtype=np.int64).reshape(self.cells[d], d)
            m.setflags(write=False)
            p.setflags(write=False)
            self._minus[d] = m
            self._plus[d] = p
        self.names: dict[str, CellId] = dict(names) if names else {}
        self._valid = None  # lazy validate() cache

    # -- basic queries ----------------------------------------------------

    def n_cells(self, dim: int) -> int:
        return self.cells[dim] if 0 <= dim <= self.dims else 0

    def all_cells(self) -> Iterable[CellId]:
        for d in range(self.dims + 1):
            for i in range(self.cells[d]):
                yield CellId(d, i)

    def face(self, cell: CellId, axis: int, sign: int) -> CellId:
        """d(axis, sign) of `cell`; axis is 1-based, sign is -1 or +1."""
        if not (1 <= axis <= cell.dim):
            raise ValueError(f"axis {axis} out of range for {cell}")
        arr = self._minus[cell.dim] if sign < 0 else self._plus[cell.dim]
        return CellId(cell.dim - 1, int(arr[cell.index, axis - 1]))

    def cell_name(self, cell: CellId) -> str:
        for name, cid in self.names.items():
            if cid == cell:
                return name
        return cell.key()

    def named(self, name: str) -> CellId:
        if name in self.names:
            return self.names[name]
        return CellId.parse(name)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        faces = {}
        for d in range(1, self.dims + 1):
            for i in range(self.cells[d]):
                faces[f"{d}:{i}"] = {
                    "minus": [f"{d - 1}:{int(j)}" for j in self._minus[d][i]],
                    "plus": [f"{d - 1}:{int(j)}" for j in self._plus[d][i]],
                }
        out = {"dims": self.dims, "cells": list(self.cells), "faces": faces}
        if self.names:
            out["names"] = {n: c.key() for n, c in sorted(self.names.items())}
        return out

    @staticmethod
    def from_json(data: Mapping) -> "PreCubicalSet":
        try:
            cells = [int(c) for c in data["cells"]]
            dims = int(data["dims"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad pre-cubical JSON: {exc}") from exc
        if dims != len(cells) - 1:
            raise InputError("dims field does not match cells list")
        minus = {d: np.zeros((cells[d], d), dtype=np.int64) - 1 for d in range(1, dims + 1)}
        plus = {d: np.zeros((cells[d], d), dtype=np.int64) - 1 for d in range(1, dims + 1)}
        for key, val in data.get("faces", {}).items():
            cid = CellId.parse(key)
            if not (1 <= cid.dim <= dims and 0 <= cid.index < cells[cid.dim]):
                raise InputError(f"face entry for unknown cell {key}")
            try:
                mrow = [CellId.parse(t) for t in val["minus"]]
                prow = [CellId.parse(t) for t in val["plus"]]
            except (KeyError, TypeError) as exc:
                raise InputError(f"bad face entry for {key}") from exc
            if len(mrow) != cid.dim or len(prow) != cid.dim:
                raise InputError(f"face entry for {key} has wrong arity")
            for t in mrow + prow:
                if t.dim != cid.dim - 1 or not (0 <= t.index < cells[t.dim]):
                    raise InputError(f"face of {key} references unknown cell {t.key()}")
            minus[cid.dim][cid.index] = [t.index for t in mrow]
            plus[cid.dim][cid.index] = [t.index for t in prow]
        for d in range(1, dims + 1):
            if cells[d] and ((minus[d] < 0).any() or (plus[d] < 0).any()):
                raise InputError(f"missing face entries in dimension {d}")
        names = None
        if "names" in data:
            names = {str(n): CellId.parse(t) for n, t in data["names"].items()}
        return PreCubicalSet(cells, minus, plus, names)

    def validate(self) -> "ValidationReport":
        if self._valid is None:
            self._valid = validate(self)
        return self._valid

    def __repr__(self):
        return f"PreCubicalSet(cells={list(self.cells)})"


@dataclass
class ValidationReport:
    """Violations of the pre-cubical relations; empty means the set is valid."""

    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(self.violations)


def validate(pcs: PreCubicalSet) -> ValidationReport:
    """Exhaustively check that all face references resolve and that
    d(i,a) d(j,b) = d(j-1,b) d(i,a) for i < j."""
    bad = []
    for d in range(1, pcs.dims + 1):
        limit = pcs.n_cells(d - 1)
        for sign, arr in (("-", pcs._minus[d]), ("+", pcs._plus[d])):
            for idx, axis in zip(*np.nonzero((arr < 0) | (arr >= limit))):
                bad.append(
                    f"cell {d}:{idx}: d{axis + 1}^{sign} references "
                    f"missing cell {d - 1}:{arr[idx, axis]}"
                )
    if bad:
        return ValidationReport(bad)
    for d in range(2, pcs.dims + 1):
        for idx in range(pcs.n_cells(d)):
            c = CellId(d, idx)
            for j in range(2, d + 1):
                for i in range(1, j):
                    for a in (-1, +1):
                        for b in (-1, +1):
                            left = pcs.face(pcs.face(c, j, b), i, a)
                            right = pcs.face(pcs.face(c, i, a), j - 1, b)
                            if left != right:
                                sa = "-" if a < 0 else "+"
                                sb = "-" if b < 0 else "+"
                                bad.append(
                                    f"cell {c.key()}: d{i}^{sa} d{j}^{sb} = "
                                    f"{left.key()} but d{j - 1}^{sb} d{i}^{sa} = {right.key()}"
                                )
    return ValidationReport(bad)


# -- points of the realization --------------------------------------------


@dataclass(frozen=True, order=True)
class GridPoint:
    """A point with rational coordinates, carried by the open cell containing it."""

    carrier: CellId
    denom: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.carrier.dim:
            raise InputError(f"point needs {self.carrier.dim} coordinates")
        if self.denom < 1:
            raise InputError("denominator must be positive")
        for c in self.coords:
            if not 0 < c < self.denom:
                raise InputError(
                    f"coordinate {c}/{self.denom} not interior; "
                    "normalize boundary points with grid_point()"
                )

    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.denom) for c in self.coords)

    def text(self, pcs: PreCubicalSet | None = None) -> str:
        label = pcs.cell_name(self.carrier) if pcs is not None else self.carrier.key()
        if not self.coords:
            return label
        return label + "@" + ",".join(f"{c}/{self.denom}" for c in self.coords)


def grid_point(pcs: PreCubicalSet, carrier: CellId, denom: int, coords: Sequence[int]) -> GridPoint:
    """Build a GridPoint, pushing boundary coordinates to the boundary cell.

    A coordinate equal to 0 or denom means the point lies on the matching
    face; the smallest such axis is collapsed first, repeatedly, until all
    remaining coordinates are interior.
    """
    coords = list(int(c) for c in coords)
    if denom < 1:
        raise InputError("denominator must be positive")
    for c in coords:
        if not 0 <= c <= denom:
            raise InputError(f"coordinate {c}/{denom} outside the unit cube")
    while True:
        axis = next((a for a, c in enumerate(coords) if c in (0, denom)), None)
        if axis is None:
            break
        sign = -1 if coords[axis] == 0 else +1
        carrier = pcs.face(carrier, axis + 1, sign)
        coords.pop(axis)
    if carrier.dim == 0:
        denom = 1
    return GridPoint(carrier, denom, tuple(coords))


def parse_point(pcs: PreCubicalSet, text: str) -> GridPoint:
    """Parse ``CELL@n1/d,n2/d`` where CELL is a name or ``dim:index``."""
    if "@" in text:
        cell_part, coord_part = text.split("@", 1)
    else:
        cell_part, coord_part = text, ""
    try:
        carrier = pcs.named(cell_part.strip())
    except InputError:
        raise InputError(f"unknown cell {cell_part!r}") from None
    if not (0 <= carrier.dim <= pcs.dims and 0 <= carrier.index < pcs.n_cells(carrier.dim)):
        raise InputError(f"unknown cell {cell_part!r}")
    if not coord_part.strip():
        if carrier.dim != 0:
            raise InputError(f"cell {cell_part!r} needs {carrier.dim} coordinates")
        return GridPoint(carrier, 1, ())
    nums, denom = [], None
    for tok in coord_part.split(","):
        try:
            n, d = tok.strip().split("/")
            n, d = int(n), int(d)
        except ValueError:
            raise InputError(f"bad coordinate {tok!r} (expected n/d)") from None
        if denom is None:
            denom = d
        elif d != denom:
            raise InputError("all coordinates of one point must share a denominator")
        nums.append(n)
    return grid_point(pcs, carrier, denom, nums)


# -- subdivision -----------------------------------------------------------
#
# A sub-cell of the k-fold subdivision is named by a label
# (original cell, intervals) where each axis carries either a unit interval
# [p, p+1] (extent 1, 0 <= p < k) or a grid point {p} (extent 0, 0 <= p <= k).
# A label is canonical when no point coordinate sits at 0 or k; otherwise the
# smallest offending axis is pushed through the corresponding face map.  The
# same 1-dimensional subdivision on every axis keeps identifications across
# glued faces consistent.


class SubdivisionMap:
    """Relates a pre-cubical set to its k-fold subdivision."""

    def __init__(self, factor, new_pcs, forward, vertex_lookup):
        self.factor = factor
        self.new_pcs = new_pcs
        self.forward = forward  # (CellId, multi-index) -> CellId
        self._vertex = vertex_lookup  # canonical label -> vertex CellId

    def point_to_vertex(self, point: GridPoint) -> CellId:
        """Vertex of the subdivided set realizing a denom-`factor` point."""
        if point.carrier.dim > 0 and point.denom != self.factor:
            raise InputError(
                f"point has denominator {point.denom}, subdivision factor is {self.factor}"
            )
        label = (point.carrier, tuple((c, 0) for c in point.coords))
        return self._vertex[label]


def _canonical_label(pcs, k, cell, intervals):
    intervals = list(intervals)
    while True:
        axis = next(
            (a for a, (p, e) in enumerate(intervals) if e == 0 and p in (0, k)), None
        )
        if axis is None:
            return cell, tuple(intervals)
        p, _ = intervals.pop(axis)
        cell = pcs.face(cell, axis + 1, -1 if p == 0 else +1)


def _label_combos(k, dim):
    """All interval tuples of a d-cell's subdivision grid."""
    if dim == 0:
        yield ()
        return
    for rest in _label_combos(k, dim - 1):
        for p in range(k):
            yield ((p, 1),) + rest
        for p in range(k + 1):
            yield ((p, 0),) + rest


def subdivide(pcs: PreCubicalSet, k: int) -> tuple[PreCubicalSet, SubdivisionMap]:
    """Replace every n-cell by k**n n-cells on the uniform grid."""
    if k < 1:
        raise InputError("subdivision factor must be >= 1")
    if not pcs.validate().ok:
        raise ValueError("cannot subdivide an invalid pre-cubical set")

    by_dim: dict[int, list] = {d: [] for d in range(pcs.dims + 1)}
    seen = set()
    for cell in pcs.all_cells():
        for iv in _label_combos(k, cell.dim):
            label = _canonical_label(pcs, k, cell, iv)
            if label in seen:
                continue
            seen.add(label)
            newdim = sum(e for _, e in label[1])
            by_dim[newdim].append(label)
    index = {}
    for d, labels in by_dim.items():
        labels.sort(key=lambda lab: (lab[0], lab[1]))
        for i, lab in enumerate(labels):
            index[lab] = CellId(d, i)

    cells = [len(by_dim.get(d, [])) for d in range(pcs.dims + 1)]
    minus = {d: np.zeros((cells[d], d), dtype=np.int64) for d in range(1, pcs.dims + 1)}
    plus = {d: np.zeros((cells[d], d), dtype=np.int64) for d in range(1, pcs.dims + 1)}
    for d in range(1, pcs.dims + 1):
        for i, (cell, iv) in enumerate(by_dim[d]):
            axes = [a for a, (_, e) in enumerate(iv) if e == 1]
            for ax_new, a in enumerate(axes):
                p = iv[a][0]
                for sign, arr, endpoint in ((-1, minus, p), (+1, plus, p + 1)):
                    face_iv = list(iv)
                    face_iv[a] = (endpoint, 0)
                    lab = _canonical_label(pcs, k, cell, face_iv)
                    arr[d][i, ax_new] = index[lab].index

    new = PreCubicalSet(cells, minus, plus)
    forward = {}
    for cell in pcs.all_cells():
        for iv in _label_combos(k, cell.dim):
            if all(e == 1 for _, e in iv):
                m = tuple(p for p, _ in iv)
                forward[(cell, m)] = index[(cell, iv)]
    vertex_lookup = {lab: cid for lab, cid in index.items() if cid.dim == 0}
    return new, SubdivisionMap(k, new, forward, vertex_lookup)


# -- products ---------------------------------------------------------------


def product(a: PreCubicalSet, b: PreCubicalSet) -> PreCubicalSet:
    """Cells of dim n are pairs (p-cell of a, q-cell of b), p+q = n.

    Face maps act on the left factor for axes 1..p and on the right factor
    for the remaining axes.
    """
    if not (a.validate().ok and b.validate().ok):
        raise ValueError("cannot form the product of invalid pre-cubical sets")
    dims = a.dims + b.dims
    pairs: dict[int, list] = {n: [] for n in range(dims + 1)}
    for n in range(dims + 1):
        for p in range(n + 1):
            q = n - p
            if p > a.dims or q > b.dims:
                continue
            for i in range(a.n_cells(p)):
                for j in range(b.n_cells(q)):
                    pairs[n].append((p, i, j))
    index = {}
    for n, lst in pairs.items():
        for m, key in enumerate(lst):
            index[(n, key)] = m

    cells = [len(pairs[n]) for n in range(dims + 1)]
    minus = {d: np.zeros((cells[d], d), dtype=np.int64) for d in range(1, dims + 1)}
    plus = {d: np.zeros((cells[d], d), dtype=np.int64) for d in range(1, dims + 1)}
    for n in range(1, dims + 1):
        for m, (p, i, j) in enumerate(pairs[n]):
            q = n - p
            for axis in range(1, n + 1):
                for sign, arr in ((-1, minus), (+1, plus)):
                    if axis <= p:
                        fc = a.face(CellId(p, i), axis, sign)
                        key = (p - 1, fc.index, j)
                    else:
                        fc = b.face(CellId(q, j), axis - p, sign)
                        key = (p, i, fc.index)
                    arr[n][m, axis - 1] = index[(n - 1, key)]
    return PreCubicalSet(cells, minus, plus)


# -- Euclidean cubical complexes --------------------------------------------


@dataclass(frozen=True)
class EuclideanComplex:
    """Subcomplex of the unit-grid decomposition of R^n, given by generating cells."""

    ambient_dim: int
    top_cells: tuple

    def __post_init__(self):
        seen = set()
        for base, extent in self.top_cells:
            if len(base) != self.ambient_dim or len(extent) != self.ambient_dim:
                raise InputError("cell base/extent length must equal the ambient dimension")
            if any(e not in (0, 1) for e in extent):
                raise InputError("extent entries must be 0 or 1")
            if (base, extent) in seen:
                raise InputError(f"duplicate cell {(base, extent)}")
            seen.add((base, extent))

    @staticmethod
    def from_json(data: Mapping) -> "EuclideanComplex":
        try:
            n = int(data["n"])
            cells = tuple(
                (tuple(int(x) for x in c["base"]), tuple(int(x) for x in c["extent"]))
                for c in data["top_cells"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad Euclidean JSON: {exc}") from exc
        return EuclideanComplex(n, cells)

    def to_json(self) -> dict:
        return {
            "n": self.ambient_dim,
            "top_cells": [
                {"base": list(b), "extent": list(e)} for b, e in self.top_cells
            ],
        }


def unit_squares(squares: Iterable[tuple[int, int]]) -> EuclideanComplex:
    """Convenience: the 2d complex generated by unit squares at the given bases."""
    return EuclideanComplex(2, tuple((tuple(s), (1, 1)) for s in squares))


def from_euclidean(e: EuclideanComplex) -> tuple[PreCubicalSet, dict]:
    """Close the generating cells under faces; returns (set, cell -> (base, extent))."""
    n = e.ambient_dim
    cells = set()
    stack = list(e.top_cells)
    while stack:
        base, extent = stack.pop()
        if (base, extent) in cells:
            continue
        cells.add((base, extent))
        for a in range(n):
            if extent[a]:
                low = tuple(0 if i == a else x for i, x in enumerate(extent))
                stack.append((base, low))
                up = tuple(x + (1 if i == a else 0) for i, x in enumerate(base))
                stack.append((up, low))
    by_dim: dict[int, list] = {}
    for base, extent in cells:
        by_dim.setdefault(sum(extent), []).append((base, extent))
    dims = max(by_dim)
    counts = [len(by_dim.get(d, [])) for d in range(dims + 1)]
    index = {}
    for d in range(dims + 1):
        for i, key in enumerate(sorted(by_dim.get(d, []))):
            index[key] = CellId(d, i)

    minus = {d: np.zeros((counts[d], d), dtype=np.int64) for d in range(1, dims + 1)}
    plus = {d: np.zeros((counts[d], d), dtype=np.int64) for d in range(1, dims + 1)}
    for (base, extent), cid in index.items():
        d = cid.dim
        if d == 0:
            continue
        axes = [a for a in range(n) if extent[a]]
        for ax_new, a in enumerate(axes):
            low = tuple(0 if i == a else x for i, x in enumerate(extent))
            minus[d][cid.index, ax_new] = index[(base, low)].index
            up = tuple(x + (1 if i == a else 0) for i, x in enumerate(base))
            plus[d][cid.index, ax_new] = index[(up, low)].index
    pcs = PreCubicalSet(counts, minus, plus)
    coord_map = {cid: key for key, cid in index.items()}
    return pcs, coord_map


# -- builtin example spaces ---------------------------------------------------


class _Builder:
    """Incremental construction of small complexes by named cells."""

    def __init__(self):
        self.vnames: list[str] = []
        self.edges: list[tuple[str, str, str]] = []  # (name, tail, head)
        self.squares: list[tuple[str, str, str, str, str]] = []  # (name, l, r, b, t)

    def vertex(self, *names):
        self.vnames.extend(names)

    def edge(self, name, tail, head):
        self.edges.append((name, tail, head))

    def square(self, name, left, right, bottom, top):
        """2-cell with d1- = left, d1+ = right, d2- = bottom, d2+ = top."""
        self.squares.append((name, left, right, bottom, top))

    def build(self) -> PreCubicalSet:
        vidx = {n: i for i, n in enumerate(self.vnames)}
        eidx = {e[0]: i for i, e in enumerate(self.edges)}
        counts = [len(self.vnames)]
        minus, plus = {}, {}
        names = {n: CellId(0, i) for n, i in vidx.items()}
        if self.edges:
            counts.append(len(self.edges))
            minus[1] = [[vidx[t]] for _, t, _ in self.edges]
            plus[1] = [[vidx[h]] for _, _, h in self.edges]
            names.update({e[0]: CellId(1, i) for i, e in enumerate(self.edges)})
        if self.squares:
            counts.append(len(self.squares))
            minus[2] = [[eidx[l], eidx[b]] for _, l, _, b, _ in self.squares]
            plus[2] = [[eidx[r], eidx[t]] for _, _, r, _, t in self.squares]
            names.update({s[0]: CellId(2, i) for i, s in enumerate(self.squares)})
            for _, l, r, b, t in self.squares:
                tail = lambda e: self.edges[eidx[e]][1]
                head = lambda e: self.edges[eidx[e]][2]
                assert tail(l) == tail(b) and head(b) == tail(r)
                assert head(l) == tail(t) and head(t) == head(r)
        return PreCubicalSet(counts, minus, plus, names)


def _dubut() -> PreCubicalSet:
    # Four squares A, B1, B2, C; A's upper edge is B2's lower edge, A's right
    # edge is B1's left edge, C's left edge is B1's right edge and C's lower
    # edge is B2's upper edge.  Both gluings around C identify B1's upper-left
    # run with B2's lower-right run at the single vertex C00.
    b = _Builder()
    b.vertex("A00", "A10", "A01", "aplus", "C00", "C10", "C01", "C11")
    b.edge("A_b", "A00", "A10")
    b.edge("A_l", "A00", "A01")
    b.edge("a1", "A10", "aplus")   # A right = B1 left
    b.edge("a2", "A01", "aplus")   # A top = B2 bottom
    b.edge("B1_b", "A10", "C00")
    b.edge("b1", "aplus", "C01")   # B1 top
    b.edge("B2_l", "A01", "C00")
    b.edge("b2", "aplus", "C10")   # B2 right
    b.edge("glue1", "C00", "C01")  # B1 right = C left
    b.edge("glue2", "C00", "C10")  # B2 top = C bottom
    b.edge("c1", "C10", "C11")     # C right
    b.edge("c2", "C01", "C11")     # C top
    b.square("A", "A_l", "a1", "A_b", "a2")
    b.square("B1", "a1", "glue1", "B1_b", "b1")
    b.square("B2", "B2_l", "b2", "a2", "glue2")
    b.square("C", "glue1", "c1", "glue2", "c2")
    return b.build()


def _letter_m() -> PreCubicalSet:
    b = _Builder()
    b.vertex("a", "b", "m", "p", "q")
    b.edge("ap", "a", "p")
    b.edge("mp", "m", "p")
    b.edge("mq", "m", "q")
    b.edge("bq", "b", "q")
    return b.build()


def _branching() -> PreCubicalSet:
    b = _Builder()
    b.vertex("O", "A", "B")
    b.edge("a", "O", "A")
    b.edge("b", "O", "B")
    return b.build()


def _edge() -> PreCubicalSet:
    b = _Builder()
    b.vertex("v0", "v1")
    b.edge("e", "v0", "v1")
    return b.build()


def _circle() -> PreCubicalSet:
    b = _Builder()
    b.vertex("v")
    b.edge("e", "v", "v")
    return b.build()


def _boundary_cube(n: int) -> PreCubicalSet:
    """All cells of the n-cube except the top cell; tuples over {0, 1, *}."""
    if n < 1:
        raise InputError("boundary_cube needs n >= 1")
    tuples = []

    def gen(prefix):
        if len(prefix) == n:
            if any(c != "*" for c in prefix):
                tuples.append("".join(prefix))
            return
        for c in ("0", "1", "*"):
            gen(prefix + [c])

    gen([])
    by_dim: dict[int, list[str]] = {}
    for t in tuples:
        by_dim.setdefault(t.count("*"), []).append(t)
    dims = max(by_dim)
    counts = [len(by_dim.get(d, [])) for d in range(dims + 1)]
    index = {}
    names = {}
    for d in range(dims + 1):
        for i, t in enumerate(sorted(by_dim.get(d, []))):
            index[t] = CellId(d, i)
            names[t] = CellId(d, i)
    minus = {d: np.zeros((counts[d], d), dtype=np.int64) for d in range(1, dims + 1)}
    plus = {d: np.zeros((counts[d], d), dtype=np.int64) for d in range(1, dims + 1)}
    for t, cid in index.items():
        if cid.dim == 0:
            continue
        axes = [a for a, c in enumerate(t) if c == "*"]
        for ax_new, a in enumerate(axes):
            lo = t[:a] + "0" + t[a + 1:]
            hi = t[:a] + "1" + t[a + 1:]
            minus[cid.dim][cid.index, ax_new] = index[lo].index
            plus[cid.dim][cid.index, ax_new] = index[hi].index
    return PreCubicalSet(counts, minus, plus, names)


def _swiss_retract() -> PreCubicalSet:
    # Directed deformation retract of the swiss-flag state space: a graph
    # with a deadlock D, an unreachable vertex U, plus 2-cells d and u.
    b = _Builder()
    b.vertex("A", "X1", "X2", "D", "U", "Y1", "Y2", "C")
    b.edge("x1", "A", "X1")
    b.edge("x2", "A", "X2")
    b.edge("d1", "X1", "D")
    b.edge("d2", "X2", "D")
    b.edge("b1", "X1", "Y1")
    b.edge("b2", "X2", "Y2")
    b.edge("u1", "U", "Y1")
    b.edge("u2", "U", "Y2")
    b.edge("y1", "Y1", "C")
    b.edge("y2", "Y2", "C")
    b.square("d", "x1", "d2", "x2", "d1")
    b.square("u", "u1", "y2", "u2", "y1")
    return b.build()


def builtin(name: str, param: int | None = None) -> PreCubicalSet:
    """Named example complexes; `boundary_cube` and `torus` take a dimension."""
    if name == "dubut":
        return _dubut()
    if name == "letterM":
        return _letter_m()
    if name == "branching":
        return _branching()
    if name == "edge":
        return _edge()
    if name == "circle":
        return _circle()
    if name == "swiss_retract":
        return _swiss_retract()
    if name == "boundary_cube":
        if param is None:
            raise InputError("boundary_cube needs a dimension, e.g. boundary_cube(2)")
        return _boundary_cube(param)
    if name == "torus":
        if param is None:
            raise InputError("torus needs a dimension, e.g. torus(2)")
        if param < 1:
            raise InputError("torus needs n >= 1")
        t = _circle()
        for _ in range(param - 1):
            t = product(t, _circle())
        return t
    raise InputError(f"unknown builtin {name!r}")


BUILTIN_NAMES = (
    "dubut",
    "letterM",
    "branching",
    "edge",
    "circle",
    "swiss_retract",
    "boundary_cube(n)",
    "torus(n)",
)


def parse_builtin(spec: str) -> PreCubicalSet:
    """Parse ``name`` or ``name(k)``."""
    spec = spec.strip()
    if "(" in spec:
        if not spec.endswith(")"):
            raise InputError(f"bad builtin spec {spec!r}")
        name, arg = spec[:-1].split("(", 1)
        try:
            param = int(arg)
        except ValueError:
            raise InputError(f"bad builtin parameter {arg!r}") from None
        return builtin(name.strip(), param)
    return builtin(spec)


def load_pcs(path: str) -> PreCubicalSet:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return PreCubicalSet.from_json(data)
