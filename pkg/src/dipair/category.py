"""Enumerated finite categories: hom lists, composition, axiom checks, export.

Two concrete layouts:

* `ThinCategory` - at most one morphism per ordered object pair, composition
  forced by hom existence (graph piece categories, poset extension
  categories, the trivial interval category).
* `PairExtensionCategory` - morphisms are pairs (back class, forward class)
  between fixed representative vertex pairs in one complex; composition
  concatenates the legs and re-classifies, via a dense concatenation table
  indexed by representative-vertex triples.
"""

from __future__ import annotations

import json

import numpy as np

from ._backend import kernels


class FiniteCategory:
    """Base: object labels, morphism src/dst arrays, identities, hom lists."""

    kind = "category"

    def __init__(self, labels, msrc, mdst, identities):
        self.objects = list(labels)
        self.msrc = np.asarray(msrc, dtype=np.int64)
        self.mdst = np.asarray(mdst, dtype=np.int64)
        self.identities = np.asarray(identities, dtype=np.int64)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.msrc)

    def src(self, f: int) -> int:
        return int(self.msrc[f])

    def dst(self, f: int) -> int:
        return int(self.mdst[f])

    def identity(self, i: int) -> int:
        return int(self.identities[i])

    def is_identity(self, f: int) -> bool:
        return self.identity(self.src(f)) == f

    def hom(self, i: int, j: int) -> list[int]:
        raise NotImplementedError

    def compose(self, f: int, g: int) -> int:
        """Composite of f: a -> b followed by g: b -> c."""
        raise NotImplementedError

    def object_json(self, i: int):
        return {"index": i, "label": str(self.objects[i])}

    def morphism_json(self, f: int):
        return {"src": self.src(f), "dst": self.dst(f)}

    def object_label(self, i: int) -> str:
        return str(self.objects[i])

    # -- checks -----------------------------------------------------------

    def check_identities(self) -> int:
        bad = 0
        for f in range(self.n_morphisms):
            if self.compose(self.identity(self.src(f)), f) != f:
                bad += 1
            if self.compose(f, self.identity(self.dst(f))) != f:
                bad += 1
        return bad

    def _adjacency(self):
        order = np.argsort(self.msrc, kind="stable")
        out_ptr = np.zeros(self.n_objects + 1, dtype=np.int64)
        np.add.at(out_ptr, self.msrc + 1, 1)
        out_ptr = np.cumsum(out_ptr)
        order_in = np.argsort(self.mdst, kind="stable")
        in_ptr = np.zeros(self.n_objects + 1, dtype=np.int64)
        np.add.at(in_ptr, self.mdst + 1, 1)
        in_ptr = np.cumsum(in_ptr)
        return in_ptr, order_in.astype(np.int64), out_ptr, order.astype(np.int64)

    def check_associativity(self) -> int:
        """Exhaustive over composable triples; subclasses may accelerate."""
        in_ptr, in_ids, out_ptr, out_ids = self._adjacency()
        bad = 0
        for g in range(self.n_morphisms):
            j, k = self.src(g), self.dst(g)
            fs = in_ids[in_ptr[j]:in_ptr[j + 1]]
            hs = out_ids[out_ptr[k]:out_ptr[k + 1]]
            if not len(fs) or not len(hs):
                continue
            gh = {int(h): self.compose(g, int(h)) for h in hs}
            for f in fs:
                fg = self.compose(int(f), g)
                for h in hs:
                    if self.compose(fg, int(h)) != self.compose(int(f), gh[int(h)]):
                        bad += 1
        return bad

    def check_axioms(self) -> tuple[int, int]:
        return self.check_identities(), self.check_associativity()

    # -- export -----------------------------------------------------------

    def summary(self) -> str:
        return (f"objects: {self.n_objects}, morphisms: {self.n_morphisms}, "
                f"identities: {self.n_objects}")

    def hom_table(self) -> list[str]:
        lines = []
        for i in range(self.n_objects):
            for j in range(self.n_objects):
                ids = self.hom(i, j)
                if ids:
                    lines.append(
                        f"hom({self.object_label(i)}, {self.object_label(j)}): {len(ids)}"
                    )
        return lines

    def iter_compose_triples(self):
        in_ptr, in_ids, out_ptr, out_ids = self._adjacency()
        for f in range(self.n_morphisms):
            j = self.dst(f)
            for g in out_ids[out_ptr[j]:out_ptr[j + 1]]:
                yield f, int(g), self.compose(f, int(g))

    def to_json(self, with_compose: bool = True) -> dict:
        homs = {}
        for i in range(self.n_objects):
            for j in range(self.n_objects):
                ids = self.hom(i, j)
                if ids:
                    homs[f"{i},{j}"] = [self.morphism_json(f) for f in ids]
        out = {
            "kind": self.kind,
            "objects": [self.object_json(i) for i in range(self.n_objects)],
            "identities": [self.identity(i) for i in range(self.n_objects)],
            "homs": homs,
        }
        if with_compose:
            out["compose"] = [list(t) for t in self.iter_compose_triples()]
        return out

    def to_dot(self) -> str:
        lines = ["digraph category {"]
        for i in range(self.n_objects):
            label = self.object_label(i).replace('"', "'")
            lines.append(f'  n{i} [label="{label}"];')
        for f in range(self.n_morphisms):
            if not self.is_identity(f):
                lines.append(f"  n{self.src(f)} -> n{self.dst(f)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class ThinCategory(FiniteCategory):
    """At most one morphism per ordered object pair; composition is forced."""

    kind = "thin-category"

    def __init__(self, labels, exists, object_json=None, label_fn=None):
        exists = np.asarray(exists, dtype=bool)
        n = len(labels)
        if exists.shape != (n, n):
            raise ValueError("existence matrix shape mismatch")
        if not exists.diagonal().all():
            raise ValueError("every object needs an identity")
        src, dst = np.nonzero(exists)
        self._hom_id = np.full((n, n), -1, dtype=np.int32)
        self._hom_id[src, dst] = np.arange(len(src))
        identities = self._hom_id[np.arange(n), np.arange(n)]
        super().__init__(labels, src, dst, identities)
        self._object_json = object_json
        self._label_fn = label_fn
        # composition must be total on composable pairs (cubic check; for
        # big categories compose() asserts the same per lookup instead)
        if n <= 2000:
            reach2 = (exists.astype(np.float32) @ exists.astype(np.float32)) > 0
            closure_gap = reach2 & ~exists
            if closure_gap.any():
                i, j = np.argwhere(closure_gap)[0]
                raise ValueError(
                    f"hom existence is not transitive at objects "
                    f"{labels[i]!r}, {labels[j]!r}"
                )

    def hom(self, i, j):
        f = self._hom_id[i, j]
        return [int(f)] if f >= 0 else []

    def compose(self, f, g):
        h = self._hom_id[self.src(f), self.dst(g)]
        assert h >= 0
        return int(h)

    def object_json(self, i):
        if self._object_json:
            return self._object_json(i)
        return super().object_json(i)

    def object_label(self, i):
        if self._label_fn:
            return self._label_fn(i)
        return super().object_label(i)


class PairExtensionCategory(FiniteCategory):
    """Morphisms (back class, forward class) between representative pairs.

    `ct[x, y, z, c1, c2]` holds the class index of rep(c1: x->y) followed by
    rep(c2: y->z) within the classes x->z, over compact rep-vertex ids.
    """

    kind = "pair-category"

    def __init__(self, labels, rep_pairs, msrc, mdst, m_b, m_f,
                 base, nb, nf, bu, fv, ct, class_sets, object_json=None,
                 label_fn=None):
        identities = [int(base[i, i]) for i in range(len(labels))]
        super().__init__(labels, msrc, mdst, identities)
        self.rep_pairs = rep_pairs
        self.m_b = m_b
        self.m_f = m_f
        self.base = base
        self.nb = nb
        self.nf = nf
        self.bu = bu
        self.fv = fv
        self.ct = ct
        self._class_sets = class_sets  # (vertex, vertex) -> ClassSet
        self._object_json = object_json
        self._label_fn = label_fn

    def hom(self, i, j):
        b = int(self.base[i, j])
        if b < 0:
            return []
        return list(range(b, b + int(self.nb[i, j]) * int(self.nf[i, j])))

    def hom_classes(self, f: int):
        """The (back DipathClass, forward DipathClass) of morphism f."""
        i, j = self.src(f), self.dst(f)
        backs = self._class_sets[(self.rep_pairs[j][0], self.rep_pairs[i][0])]
        fwds = self._class_sets[(self.rep_pairs[i][1], self.rep_pairs[j][1])]
        return backs.classes[int(self.m_b[f])], fwds.classes[int(self.m_f[f])]

    def compose(self, f, g):
        if self.dst(f) != self.src(g):
            raise ValueError("morphisms are not composable")
        h = kernels().compose_product(
            self.ct, self.base, self.nf, self.bu, self.fv,
            self.msrc, self.mdst, self.m_b, self.m_f, f, g)
        assert h >= 0
        return h

    def check_associativity(self) -> int:
        in_ptr, in_ids, out_ptr, out_ids = self._adjacency()
        return int(kernels().assoc_check_product(
            self.msrc, self.mdst, self.m_b, self.m_f,
            in_ptr, in_ids, out_ptr, out_ids,
            self.base, self.nf, self.bu, self.fv, self.ct))

    def morphism_json(self, f):
        back, fwd = self.hom_classes(f)
        return {
            "src": self.src(f),
            "dst": self.dst(f),
            "back": list(back.canonical.arcs),
            "fwd": list(fwd.canonical.arcs),
        }

    def object_json(self, i):
        if self._object_json:
            return self._object_json(i)
        return super().object_json(i)

    def object_label(self, i):
        if self._label_fn:
            return self._label_fn(i)
        return super().object_label(i)


def category_text(cat: FiniteCategory, verbose: bool = False) -> str:
    lines = [cat.summary()]
    if verbose:
        lines.extend(cat.hom_table())
    return "\n".join(lines) + "\n"


def category_json_str(cat: FiniteCategory, with_compose: bool = True) -> str:
    return json.dumps(cat.to_json(with_compose), sort_keys=True) + "\n"
