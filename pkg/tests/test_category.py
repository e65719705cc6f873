import json

import numpy as np
import pytest

import dipair as dp
from dipair import ordercomp as oc
from dipair.category import ThinCategory, category_text

from conftest import assert_well_formed_dot


def chain_category(n):
    """Thin category of the chain poset 0 < 1 < ... < n-1 (as its extension
    would be, collapsed to objects = elements)."""
    exists = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i, n):
            exists[i, j] = True
    return ThinCategory(list(range(n)), exists)


def test_thin_category_basics():
    cat = chain_category(4)
    assert cat.n_objects == 4
    assert cat.n_morphisms == 10
    assert cat.check_axioms() == (0, 0)
    f = cat.hom(0, 2)[0]
    g = cat.hom(2, 3)[0]
    assert cat.compose(f, g) == cat.hom(0, 3)[0]


def test_thin_category_requires_identities():
    with pytest.raises(ValueError):
        ThinCategory(["a"], np.zeros((1, 1), dtype=bool))


def test_thin_category_requires_transitive_existence():
    exists = np.eye(3, dtype=bool)
    exists[0, 1] = exists[1, 2] = True  # 0->1->2 but no 0->2
    with pytest.raises(ValueError):
        ThinCategory(["a", "b", "c"], exists)


def test_axiom_checker_detects_broken_compose():
    class Broken(ThinCategory):
        def compose(self, f, g):
            h = super().compose(f, g)
            # deliberately wrong on one composable pair
            if (f, g) == (self.hom(0, 1)[0], self.hom(1, 2)[0]):
                return self.identity(0)
            return h

    cat = Broken(list(range(3)), np.triu(np.ones((3, 3), dtype=bool)))
    ident, assoc = cat.check_axioms()
    assert assoc > 0 or ident > 0


def test_summary_format():
    cat = chain_category(3)
    assert cat.summary() == "objects: 3, morphisms: 6, identities: 3"
    text = category_text(cat, verbose=True)
    assert text.startswith("objects: 3, morphisms: 6, identities: 3\n")
    assert "hom(0, 1): 1" in text


def test_json_export_structure(bd2):
    cat = oc.order_category(dp.builtin("edge"))
    data = cat.to_json()
    assert set(data) >= {"objects", "homs", "identities", "compose"}
    assert len(data["objects"]) == cat.n_objects
    for f, g, h in data["compose"]:
        assert 0 <= h < cat.n_morphisms
    # deterministic serialization
    assert json.dumps(data, sort_keys=True) == json.dumps(cat.to_json(), sort_keys=True)


def test_dot_export(bd2):
    for cat in (chain_category(3), oc.order_category(bd2)):
        assert_well_formed_dot(cat.to_dot())


def test_compose_triples_consistent(letter_m):
    from dipair import graphcomp as gc
    cat = gc.graph_components(letter_m, "total")
    for f, g, h in cat.iter_compose_triples():
        assert cat.dst(f) == cat.src(g)
        assert cat.src(h) == cat.src(f)
        assert cat.dst(h) == cat.dst(g)
