from fractions import Fraction

import _lrcw


def test_fixture_catalog():
    names = _lrcw.fixture_names()
    assert "FIX-SL2" in names
    assert "FIX-HEIS" in names
    for name in names:
        # the catalog lists the Heisenberg family by its parameter placeholder
        concrete = name.replace("(c)", "(7/2)")
        assert _lrcw.validate(concrete) == []


def test_cohomology_dims():
    assert _lrcw.cohomology_dims("FIX-SL2") == [1, 0, 0, 1]
    assert _lrcw.cohomology_dims("FIX-AB2") == [1, 2, 1]
    assert _lrcw.cohomology_dims("FIX-TP2") == [1, 1]


def test_curvature_and_bianchi():
    table = dict((tuple(t), v) for t, v in _lrcw.curvature("FIX-HEIS"))
    assert table == {(0, 1): ["1"]}
    assert _lrcw.bianchi("FIX-HEIS")
    assert _lrcw.bianchi("FIX-SPLIT-SL2")


def test_classification():
    assert _lrcw.cocycle_class("FIX-HEIS") == ["1"]
    assert _lrcw.cocycle_class("FIX-HEIS(0)") == ["0"]
    assert _lrcw.congruent("FIX-HEIS", "FIX-HEIS")
    assert not _lrcw.congruent("FIX-HEIS", "FIX-HEIS(0)")


def test_invariants_and_classes():
    assert _lrcw.invariants_dims("FIX-HEIS", 4) == [1, 1, 1, 1, 1]
    assert _lrcw.invariants_dims("FIX-SPLIT-SL2", 2) == [1, 0, 1]

    classes = _lrcw.chern_weil_classes("FIX-HEIS", 1)
    assert [Fraction(c) for c in classes[1][0]] == [Fraction(1)]
    zero = _lrcw.chern_weil_classes("FIX-HEIS(0)", 1)
    assert [Fraction(c) for c in zero[1][0]] == [Fraction(0)]


def test_chern_weil_form_values():
    table = dict(
        (tuple(t), [Fraction(c) for c in v])
        for t, v in _lrcw.chern_weil_form("FIX-HEIS", 1, ["1"])
    )
    assert table == {(0, 1): [Fraction(1)]}
    assert _lrcw.verify_classifying_map("FIX-HEIS", 1)


def test_global_invariant():
    dims = _lrcw.global_invariant_dims("FIX-HEIS", 1)
    assert dims == {0: 1, 1: 1}
    assert _lrcw.global_invariant_dims("FIX-SPLIT-SL2", 1)[1] == 0
