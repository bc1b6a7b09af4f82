import pytest

import circdet


def test_known_coefficients():
    assert circdet.coefficient([0, 0, 1, 1, 1, 1, 3, 7, 8, 8]) == 200
    assert circdet.coefficient([0, 1, 2]) == -3
    assert circdet.coefficient([0, 0, 0]) == 1


def test_gate_and_family_zero():
    assert circdet.coefficient([0, 0, 1]) == 0
    assert not circdet.is_condition8([0, 0, 1])
    assert circdet.zero_by_family([1, 2, 3, 3, 4, 5])
    assert circdet.coefficient([1, 2, 3, 3, 4, 5]) == 0
    assert circdet.coefficient_detailed([1, 2, 3, 3, 4, 5], zero_criterion=True)["path"] == "zero-criterion"
    assert not circdet.zero_by_family([0, 0, 2, 2, 4, 4])
    assert circdet.coefficient([0, 0, 2, 2, 4, 4]) == 9


def test_detailed_matches_plain():
    d = circdet.coefficient_detailed([0, 0, 1, 1, 1, 1, 3, 7, 8, 8])
    assert d["value"] == 200
    assert d["path"] == "theorem3"
    rep, sign = circdet.reduce_representative([0, 0, 1, 1, 1, 1, 3, 7, 8, 8])
    assert d["evaluated"] == rep and d["sign"] == sign


def test_reduce_off_agrees():
    for idx in ([0, 1, 2, 3, 4, 5, 6, 7], [0, 0, 1, 2, 3, 3, 5, 6]):
        assert circdet.coefficient(idx) == circdet.coefficient(idx, reduce=False)


def test_expand_three():
    poly = circdet.expand(3)
    assert poly == {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): -3}
    assert circdet.expand(4, strategy="direct") == circdet.expand(4)


def test_large_values_are_python_ints():
    v = circdet.coefficient([0] * 10 + [1, 11])
    assert isinstance(v, int) and v == -12
    assert circdet.coefficient(list(range(11))) == 6765


def test_classify_counts():
    c = circdet.classify_counts(5)
    assert (c["additive"], c["super"], c["F"]) == (6, 4, 26)


def test_bad_input_raises():
    with pytest.raises(ValueError):
        circdet.coefficient([0, 0, 9])
    with pytest.raises(ValueError):
        circdet.coefficient([])
