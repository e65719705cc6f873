"""Closed-form component categories for loop examples and cubical spheres.

The directed circle and torus get symbolic categories whose hom-sets are
translated free commutative monoids; boundaries of n-boxes get the
extension category of the poset P_n of boundary cells and a closed-form
homotopy type per cell pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .category import ThinCategory
from .errors import InputError


class MonoidShiftCategory:
    """2^n objects (bit vectors: 0 diagonal factor, 1 off-diagonal factor);
    hom(d, d') is the set of integer vectors >= L(d, d'), where L is 1
    exactly on coordinates with (d_i, d_i') = (1, 0); composition adds."""

    def __init__(self, n: int):
        if n < 1:
            raise InputError("torus dimension must be >= 1")
        self.n = n
        self.objects = list(itertools.product((0, 1), repeat=n))

    def lower_bound(self, d, d2) -> tuple[int, ...]:
        self._check(d)
        self._check(d2)
        return tuple(1 if (a, b) == (1, 0) else 0 for a, b in zip(d, d2))

    def hom_contains(self, d, d2, vec) -> bool:
        low = self.lower_bound(d, d2)
        return len(vec) == self.n and all(
            int(x) == x and x >= l for x, l in zip(vec, low)
        )

    def compose(self, vec1, vec2) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(vec1, vec2))

    def identity(self, d) -> tuple[int, ...]:
        self._check(d)
        return (0,) * self.n

    def is_isomorphic(self, d, d2) -> bool:
        # any round trip through a (1, 0) factor has coordinate >= 1 there,
        # so it is never the zero identity
        self._check(d)
        self._check(d2)
        return tuple(d) == tuple(d2)

    def _check(self, d):
        if len(d) != self.n or any(x not in (0, 1) for x in d):
            raise InputError(f"not an object of the {self.n}-torus category: {d}")

    def to_json(self) -> dict:
        homs = {}
        for d in self.objects:
            for d2 in self.objects:
                key = "".join(map(str, d)) + "," + "".join(map(str, d2))
                homs[key] = list(self.lower_bound(d, d2))
        return {
            "kind": "monoid-shift-category",
            "n": self.n,
            "objects": ["".join(map(str, d)) for d in self.objects],
            "hom_lower_bounds": homs,
        }


def torus_category(n: int) -> MonoidShiftCategory:
    """Pair component category of the directed n-torus."""
    return MonoidShiftCategory(n)


# -- cubical sphere boundaries ------------------------------------------------


def pn_elements(n: int) -> list[str]:
    """Cells of the n-box boundary: strings over 0/1/* except the all-* cell."""
    if n < 1:
        raise InputError("need n >= 1")
    return [
        "".join(t)
        for t in itertools.product("01*", repeat=n)
        if any(c != "*" for c in t)
    ]


def pn_leq(e: str, f: str) -> bool:
    """Product order from 0 <= * <= 1, except the one-determined-coordinate
    pairs 0_i -> 1_i which are not related."""
    for a, b in zip(e, f):
        if a != b and (a, b) not in (("0", "*"), ("0", "1"), ("*", "1")):
            return False
    det_e = [i for i, c in enumerate(e) if c != "*"]
    det_f = [i for i, c in enumerate(f) if c != "*"]
    if (len(det_e) == 1 and det_f == det_e
            and e[det_e[0]] == "0" and f[det_e[0]] == "1"):
        return False
    return True


@dataclass(frozen=True)
class PnPoset:
    """The poset of boundary cells of the n-box under the restricted product
    order (0 <= * <= 1 minus the one-determined-coordinate exceptions)."""

    n: int

    @property
    def elements(self) -> list[str]:
        return pn_elements(self.n)

    def leq(self, e: str, f: str) -> bool:
        if len(e) != self.n or len(f) != self.n:
            raise InputError(f"elements of P_{self.n} have length {self.n}")
        return pn_leq(e, f)


def _pn_leq_matrix(elems: list[str]) -> np.ndarray:
    """leq[i, j] = elems[i] <= elems[j], vectorized over all pairs."""
    code = {"0": 0, "*": 1, "1": 2}
    enc = np.array([[code[c] for c in e] for e in elems], dtype=np.int8)
    leq = np.ones((len(elems), len(elems)), dtype=bool)
    for a in range(enc.shape[1]):
        leq &= enc[:, None, a] <= enc[None, :, a]
    determined = enc != 1
    single = determined.sum(axis=1) == 1
    pos = np.argmax(determined, axis=1)
    lo = single & (enc[np.arange(len(elems)), pos] == 0)
    hi = single & (enc[np.arange(len(elems)), pos] == 2)
    leq &= ~(lo[:, None] & hi[None, :] & (pos[:, None] == pos[None, :]))
    return leq


def pn_extension_category(n: int) -> ThinCategory:
    """Extension category of P_n: objects are comparable pairs (e, f); a
    unique morphism (e, f) -> (e', f') exactly when e' <= e and f <= f'."""
    if not 1 <= n <= 6:
        raise InputError("pn_extension_category supports 1 <= n <= 6")
    elems = pn_elements(n)
    leq = _pn_leq_matrix(elems)
    oe, of = np.nonzero(leq)
    if len(oe) ** 2 > 400_000_000:
        raise InputError(
            f"the P_{n} extension category has {len(oe)} objects; its dense "
            "hom matrix does not fit in memory"
        )
    objs = [(elems[i], elems[j]) for i, j in zip(oe.tolist(), of.tolist())]
    exists = leq[oe[None, :], oe[:, None]] & leq[of[:, None], of[None, :]]

    def object_json(i):
        return {"src": objs[i][0], "dst": objs[i][1]}

    def label_fn(i):
        return f"{objs[i][0]}|{objs[i][1]}"

    return ThinCategory(objs, exists, object_json=object_json, label_fn=label_fn)


@dataclass(frozen=True)
class TraceType:
    """Homotopy type of a trace space: empty, contractible, or a sphere."""

    kind: str
    dim: int | None = None

    def __post_init__(self):
        if self.kind not in ("empty", "contractible", "sphere"):
            raise ValueError(f"bad trace type kind {self.kind!r}")
        if self.kind == "sphere" and (self.dim is None or self.dim < 0):
            raise ValueError("sphere needs dimension >= 0")

    @property
    def implied_pi0(self) -> int:
        if self.kind == "empty":
            return 0
        if self.kind == "sphere" and self.dim == 0:
            return 2
        return 1

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "sphere":
            out["dim"] = self.dim
        return out


EMPTY = TraceType("empty")
CONTRACTIBLE = TraceType("contractible")


def boundary_trace_type(n: int, e: str, f: str) -> TraceType:
    """Homotopy type of the trace space of the n-box boundary between cells.

    For comparable cells, with d_i = f_i - e_i under * -> 0.5: contractible
    when some d_i = 0.5, when some coordinate is frozen at 0 or 1 (paths are
    then confined to a solid face, not the boundary shell), or when at most
    one d_i = 1; otherwise a sphere of dimension (number of d_i = 1) - 2.
    """
    for t in (e, f):
        if len(t) != n or any(c not in "01*" for c in t):
            raise InputError(f"{t!r} is not a cell of the {n}-box boundary")
        if all(c == "*" for c in t):
            raise InputError("the all-* cell is not part of the boundary")
    if not pn_leq(e, f):
        return EMPTY
    val = {"0": 0.0, "1": 1.0, "*": 0.5}
    d = [val[b] - val[a] for a, b in zip(e, f)]
    ones = sum(1 for x in d if x == 1.0)
    face_frozen = any(a == b and a in "01" for a, b in zip(e, f))
    if any(x == 0.5 for x in d) or face_frozen or ones <= 1:
        return CONTRACTIBLE
    return TraceType("sphere", ones - 2)


def interval_category() -> ThinCategory:
    """The trivial category: one object, one identity morphism."""
    return ThinCategory(
        ["*"], np.ones((1, 1), dtype=bool),
        object_json=lambda i: {"label": "*"},
        label_fn=lambda i: "*",
    )
