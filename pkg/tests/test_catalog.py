import pytest

from superlie import catalog
from superlie.catalog import K2m, MEven, NotFound, heisenberg_1n


def test_counts():
    assert len(catalog.labels()) == 99
    by_total = {}
    for e in catalog.list_entries():
        by_total[e.m + e.n] = by_total.get(e.m + e.n, 0) + 1
    assert by_total == {2: 4, 3: 9, 4: 21, 5: 65}


def test_family_lookups():
    assert len(catalog.list_entries("(2|3)")) == 25
    assert len(catalog.list_entries((1, 2))) == 4
    assert len(catalog.list_entries(4)) == 21


def test_not_found():
    with pytest.raises(NotFound):
        catalog.get("(9|9)_1")
    with pytest.raises(NotFound):
        catalog.list_entries("bogus")


def test_witness_and_nondegen_counts():
    assert len(catalog.witnesses()) == 117
    assert len(catalog.nondegen_rows()) == 188
    table = [w for w in catalog.witnesses(3) if w["source"] == "table"]
    assert len(table) == 1
    for w in catalog.witnesses():
        catalog.get(w["from"])
        catalog.get(w["to"])


def test_heisenberg():
    for n in range(1, 7):
        g = heisenberg_1n(n)
        assert (g.m, g.n) == (1, n)
        assert g.check_consistency() == []
        assert g.check_jacobi() == []
        assert g.is_nilpotent()
    with pytest.raises(ValueError):
        heisenberg_1n(0)


def test_k2m():
    for m in (1, 3, 5):
        g = K2m(m)
        assert (g.m, g.n) == (2, m)
        assert g.check_consistency() == []
        assert g.check_jacobi() == []
        assert g.is_nilpotent()
    with pytest.raises(MEven):
        K2m(4)


def test_expected_tables_reference_real_labels():
    exp = catalog.expected()
    for label in exp["orbit_dims"]:
        catalog.get(label)
    for label in exp["h2_dims"]:
        catalog.get(label)
    for key, labels in exp["components"].items():
        for label in labels:
            catalog.get(label)
    # every label has an orbit dim, published or regression
    covered = set(exp["orbit_dims"]) | set(exp["orbit_dims_regression"])
    assert covered == set(catalog.labels())
