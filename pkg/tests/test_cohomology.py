from superlie import catalog, cohomology
from superlie.catalog import heisenberg_1n
from superlie.cohomology import (d1, format_cocycle, h2_even,
                                 independent_mod_coboundaries, is_cocycle,
                                 parse_cocycle)
from superlie.field import FieldElem


def expected_h2(label):
    """The exactly computed dimension: recorded erratum value if one exists,
    else the source value."""
    exp = catalog.expected()
    return exp["known_h2_discrepancies"].get(label, exp["h2_dims"][label])


def test_h2_dims_all_regression_labels():
    for label in catalog.expected()["h2_dims"]:
        g = catalog.get(label).algebra
        assert h2_even(g)["dim"] == expected_h2(label), label


def test_corrected_cocycle_lists_validate():
    exp = catalog.expected()
    fixes = exp["known_cocycle_discrepancies"]
    for label, texts in exp["cocycles"].items():
        g = catalog.get(label).algebra
        fixed = [fixes.get(label, {}).get(t, t) for t in texts]
        phis = [parse_cocycle(t, g.m, g.n) for t in fixed]
        assert all(is_cocycle(g, p) for p in phis), label
        if label != "(1|3)_1":  # recorded erratum: only 3 of 4 independent
            assert independent_mod_coboundaries(g, phis), label


def test_recorded_cocycle_errata_fail_as_printed():
    exp = catalog.expected()
    for label, fixes in exp["known_cocycle_discrepancies"].items():
        g = catalog.get(label).algebra
        for verbatim, corrected in fixes.items():
            bad = parse_cocycle(verbatim, g.m, g.n)
            good = parse_cocycle(corrected, g.m, g.n)
            assert is_cocycle(g, good)
            assert (not is_cocycle(g, bad)
                    or cohomology.in_coboundaries(g, bad))


def test_cocycle_format_roundtrip():
    g = catalog.get("(2|3)_24").algebra
    for text in catalog.expected()["cocycles"]["(2|3)_24"]:
        phi = parse_cocycle(text, g.m, g.n)
        again = parse_cocycle(format_cocycle(phi), g.m, g.n)
        assert cohomology.cochain_to_vector(again) == \
            cohomology.cochain_to_vector(phi)


def test_d2_after_d1_vanishes_on_all_catalog(rng):
    for entry in catalog.list_entries():
        g = entry.algebra
        A = [[FieldElem(rng.randint(-3, 3)) for _ in range(g.m)]
             for _ in range(g.m)]
        D = [[FieldElem(rng.randint(-3, 3)) for _ in range(g.n)]
             for _ in range(g.n)]
        assert is_cocycle(g, d1(g, A, D)), entry.label


def test_heisenberg_rigid():
    for n in range(1, 7):
        assert h2_even(heisenberg_1n(n))["dim"] == 0


def test_deformation_probes():
    for probe in catalog.expected()["deformation_probes"]:
        base = catalog.get(probe["label"]).doc
        result = cohomology.deformation_nilpotency_probe(
            base, probe["extra"], probe["param"])
        assert result["nilpotent"] == probe["expect_nilpotent"], probe["label"]
