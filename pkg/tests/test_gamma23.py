import random

from superlie import catalog, gamma23, invariants
from superlie.algebra import SuperAlgebra
from superlie.field import FieldElem, format_elem
from superlie.gamma23 import (REPRESENTATIVES, classify_pair, pair_act,
                              pencil_signature, random_gl, sym_normal_form)


def test_twelve_distinct_labels():
    assert len(REPRESENTATIVES) == 12
    assert {classify_pair(p) for p in REPRESENTATIVES.values()} == \
        set(REPRESENTATIVES)


def test_signatures_distinct():
    sigs = {label: pencil_signature(pair)
            for label, pair in REPRESENTATIVES.items()}
    assert len(set(sigs.values())) == 12


def test_seeded_group_actions_preserve_label():
    rng = random.Random(20260823)
    mismatches = []
    for label, pair in REPRESENTATIVES.items():
        for _ in range(200):
            T = random_gl(2, rng)
            S = random_gl(3, rng)
            if classify_pair(pair_act(T, S, pair)) != label:
                mismatches.append(label)
    assert mismatches == []


def pair_to_algebra(pair):
    """Assemble the gamma-only (2|3) superalgebra of a symmetric pair."""
    g1, g2 = pair
    brackets = []
    for j in range(3):
        for k in range(j, 3):
            value = []
            if not g1[j][k].is_zero():
                value.append({"coeff": format_elem(g1[j][k]), "basis": "e1"})
            if not g2[j][k].is_zero():
                value.append({"coeff": format_elem(g2[j][k]), "basis": "e2"})
            if value:
                brackets.append({"lhs": f"f{j + 1}", "rhs": f"f{k + 1}",
                                 "value": value})
    return SuperAlgebra.from_doc({"name": "pair", "m": 2, "n": 3,
                                  "brackets": brackets})


def test_representatives_match_catalog_fingerprints():
    """Each representative, assembled as a superalgebra, agrees with the
    catalog entry of the same index in every computed invariant."""
    for label, pair in REPRESENTATIVES.items():
        index = int(label.split("_")[1])
        entry = catalog.get(f"(2|3)_{index}")
        built = pair_to_algebra(pair)
        cat = entry.algebra.ab()  # gamma-only part of the catalog algebra
        assert invariants.center(built)[0] == invariants.center(cat)[0], label
        assert invariants.derived(built) == invariants.derived(cat), label
        assert invariants.orbit_dim(built) == invariants.orbit_dim(cat), label
        # and the catalog gamma classifies back to the same label
        K = [[cat.gamma[j][k][0] for k in range(3)] for j in range(3)]
        L = [[cat.gamma[j][k][1] for k in range(3)] for j in range(3)]
        assert classify_pair((K, L)) == label


def test_sym_normal_form_diagonalizable():
    a = [[FieldElem(2), FieldElem(0), FieldElem(0)],
         [FieldElem(0), FieldElem(0), FieldElem(1)],
         [FieldElem(0), FieldElem(1), FieldElem(0)]]
    res = sym_normal_form(a)
    assert res is not gamma23.UNSUPPORTED
    assert res["kind"] == "diagonal"
