import pytest

import mixmult

MAXIMAL = {"variables": ["x", "y"], "J": ["x", "y"], "ideals": [["x", "y"]]}


def test_compute_maximal_ideal():
    result = mixmult.compute(MAXIMAL)
    assert result["q"] == 2
    assert result["mixed"] == {"0,1": 1, "1,0": 1}
    assert result["tilde_e"] == 2


def test_polynomial_coefficients_are_fractions():
    terms = mixmult.compute(MAXIMAL)["polynomial"]["terms"]
    assert terms == {"0,0": "1/1", "0,1": "1/1", "1,0": "1/1"}


def test_samuel_case():
    doc = {"variables": ["x", "y"], "J": ["x^2", "y^3"], "ideals": []}
    assert mixmult.compute(doc)["mixed"] == {"1": 6}


def test_length_table_matches_closed_form():
    table = mixmult.length_table(MAXIMAL, offset=0, side=4)
    assert all(v == n0 + n1 + 1 for (n0, n1), v in table.items())


def test_verifiers():
    assert mixmult.verify("scaling", MAXIMAL, u=[3])["verdict"] == "verified"
    assert mixmult.verify("recursion", MAXIMAL, candidates=["x"], v=1)["verdict"] == "verified"
    assert mixmult.verify("chain", MAXIMAL, candidates=["x"])["verdict"] == "verified"
    assert mixmult.verify("exactseq", MAXIMAL, lower_prime=["x"])["verdict"] == "verified"


def test_primes_of_cross():
    doc = {"variables": ["x", "y"], "J": ["x", "y"], "ideals": [["x"]], "module": {"L": ["x*y"]}}
    out = mixmult.primes(doc)
    assert out["minimal_primes"] == [["x"], ["y"]]
    assert out["pi"] == [{"prime": ["y"], "local_length": 1}]


def test_degenerate_system_is_value_error():
    doc = {"variables": ["x", "y"], "J": ["x", "y"], "ideals": [["x"]], "module": {"L": ["x"]}}
    with pytest.raises(ValueError):
        mixmult.compute(doc)


def test_non_stabilized_error():
    late = {"variables": ["x", "y"], "J": ["x^2", "y^2"], "ideals": [["x"]], "module": {"L": ["x^3*y^3"]}}
    assert mixmult.compute(late)["offset"] == 4
    with pytest.raises(mixmult.NonStabilizedError):
        mixmult.compute(dict(late, options={"cap": 2}))


def test_corpus_is_deterministic():
    assert mixmult.corpus(3, 4, threads=2) == mixmult.corpus(3, 4, threads=1)
