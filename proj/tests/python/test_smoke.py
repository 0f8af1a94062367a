import pytest

import logsplit


def test_search_found():
    r = logsplit.search("y' = y^2")
    assert list(r)[:5] == ["outcome", "witness", "bounds", "darboux_pairs", "timing_ms"]
    assert r["outcome"] == "found"
    w = r["witness"]
    assert logsplit.verify("y' = y^2", w["h"], w["e"], w["k"])


def test_search_linear_has_no_witness():
    r = logsplit.search("y'' = y + y'", degree=6, kmax=5)
    assert r["outcome"] == "no_witness_any_degree"
    assert r["witness"] is None
    assert r["bounds"]["kmax"] == 5


def test_search_over_function_field():
    r = logsplit.search("y' = y^2 - y/t")
    assert r["outcome"] == "found"
    assert logsplit.verify("y' = y^2 - y/t", r["witness"]["h"], r["witness"]["e"], r["witness"]["k"])


def test_verify_corpus_and_perturbation():
    assert logsplit.verify("y'' = y*y'", "x1")
    assert logsplit.verify("y' = y^2 - y", "x0", e="1")
    assert not logsplit.verify("y' = y^2 - y", "x0", e="2")
    assert not logsplit.verify("y' = y^2", "x0", k=2)


def test_construct_round_trip():
    out = logsplit.construct("x0*x1 - 1", e="2", k=-1)
    assert out["equation"].startswith("y'' = ")
    r = logsplit.search(out["equation"])
    assert r["outcome"] == "found"


def test_numcheck():
    good = logsplit.numcheck("y' = y^2", "x0")
    assert good["pass"] and good["max_drift"] < 1e-6 and good["trials"] == 5
    assert not logsplit.numcheck("y' = y^2", "x0", e="1")["pass"]


def test_errors():
    with pytest.raises(logsplit.OrderViolation):
        logsplit.search("y' = y'")
    with pytest.raises(logsplit.FieldViolation):
        logsplit.search("y' = t*y", field="Q")
    with pytest.raises(logsplit.ParseError) as err:
        logsplit.search("y' = y +")
    assert "column 9" in str(err.value)
    assert issubclass(logsplit.ParseError, ValueError)
    with pytest.raises(ValueError):
        logsplit.verify("y' = y^2", "x0", k=0)
