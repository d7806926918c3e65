import pytest

import potstab


def test_sequences():
    assert potstab.parse_sequence("4,4,1^6") == [4, 4, 1, 1, 1, 1, 1, 1]
    assert potstab.format_sequence([7, 1, 1, 1, 1, 1, 1, 1]) == "7,1^7"
    assert potstab.is_graphic("4,4,1^6")
    assert not potstab.is_graphic([3, 3, 1, 1])
    assert potstab.layoff([2, 2, 2], 1) == [1, 1]
    assert potstab.l1_distance("4,4,1^6", "7,1^7") == 6


def test_analyze():
    report = potstab.analyze("K 3")
    assert report["profile"]["sigmaTilde"] == 2
    assert report["profile"]["type"] == "Type2"
    assert potstab.graph("C 5")["order"] == 5


def test_oracle():
    assert not potstab.potentially("4,4,1^6", "K 3")["potentially"]
    assert potstab.potentially([2, 2, 2], "K 3")["potentially"]
    s = potstab.sigma_exact("K 3", 8, threads=2)
    assert s["value"] == 16


def test_probe():
    r = potstab.probe("7,1^7", "K 3", f_override=4)
    assert r["verdict"]["kind"] == "FoundSplit"
    assert r["trace"]["iterations"]


def test_errors():
    with pytest.raises(potstab.ParseError):
        potstab.parse_sequence("1,x")
    with pytest.raises(potstab.CapExceeded):
        potstab.graph("K 20")
    with pytest.raises(ValueError):
        potstab.potentially([3, 3, 1, 1], "K 3")
