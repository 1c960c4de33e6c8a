"""End-to-end checks of the python module against the frozen reference values."""

import math
from fractions import Fraction
from pathlib import Path

import pytest

import skewspec

DATA = Path(__file__).resolve().parent.parent / "data"


def test_graph_construction_and_encoding():
    g = skewspec.OrientedGraph(3, [(0, 1), (2, 1)])
    assert g.order == 3
    assert g.arcs == [(0, 1), (2, 1)]
    assert g.direction(0, 1) == 1
    assert g.direction(1, 0) == -1
    assert g.to_compact() == "o3:102"
    assert skewspec.OrientedGraph.from_compact("o3:102") == g
    assert skewspec.OrientedGraph.parse(g.to_text()) == g
    assert g.transposed().transposed() == g
    assert "o3:102" in repr(g)

    with pytest.raises(ValueError):
        skewspec.OrientedGraph(11)
    with pytest.raises(ValueError):
        skewspec.OrientedGraph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        skewspec.OrientedGraph.parse("")


def test_fixture_files_match_builtins():
    pairs = [
        ("example1_d.txt", skewspec.example1_d()),
        ("example1_c.txt", skewspec.example1_c()),
        ("example2_d.txt", skewspec.example2_d()),
    ]
    for name, builtin in pairs:
        parsed = skewspec.OrientedGraph.parse((DATA / name).read_text())
        assert parsed == builtin


def test_reference_det_and_membership():
    d1 = skewspec.example1_d()
    assert skewspec.det_walk(d1) == -14392
    r = skewspec.fn_membership(d1)
    assert r["in_fn"] is True
    assert r["reduced"] == -1799
    assert r["odd_primes"] == [7, 257]
    assert r["k"] == 2
    assert r["bound"] == 3
    assert r["factorization"] == "(-1) * 2^3 * 7 * 257"
    assert skewspec.mate_bound(d1) == 3

    d2 = skewspec.example2_d()
    assert skewspec.det_walk(d2) == 1528
    assert skewspec.fn_membership(d2)["reduced"] == 191


def test_char_polys_and_fingerprints():
    d1 = skewspec.example1_d()
    p_skew, p_ones = skewspec.char_polys(d1)
    assert p_skew == [0, 15, 0, 28, 0, 10, 0, 1]
    assert p_ones == [-1, 15, -88, 28, -52, 10, -7, 1]

    c1 = skewspec.example1_c()
    assert skewspec.generalized_cospectral(d1, c1)
    assert skewspec.is_isomorphic(d1, c1) is None
    assert skewspec.fingerprint_digest(d1) == skewspec.fingerprint_digest(c1)
    assert skewspec.fingerprint_digest(d1) == skewspec.fingerprint_digest(d1.transposed())
    assert len(skewspec.fingerprint_digest(d1)) == 32


def test_walk_and_skew_matrices():
    d1 = skewspec.example1_d()
    s = skewspec.skew_adjacency(d1)
    assert all(s[i][j] == -s[j][i] for i in range(7) for j in range(7))
    # trace of S^2 counts arcs: -2 per arc, 10 arcs.
    assert sum(s[i][j] * s[j][i] for i in range(7) for j in range(7)) == -20

    w = skewspec.walk_matrix(d1)
    assert [row[0] for row in w] == [1] * 7
    se = [sum(s[i][j] for j in range(7)) for i in range(7)]
    assert [row[1] for row in w] == se


def test_isomorphism_and_canonical_form():
    d2 = skewspec.example2_d()
    # Relabel by an explicit permutation and check the witness round-trips.
    sigma = [3, 0, 5, 1, 4, 2]
    relabeled = skewspec.OrientedGraph(6, [(sigma[u], sigma[v]) for u, v in d2.arcs])
    witness = skewspec.is_isomorphic(d2, relabeled)
    assert witness is not None
    # The witness really maps the arc set onto the relabeled arc set.
    assert sorted((witness[u], witness[v]) for u, v in d2.arcs) == relabeled.arcs
    assert skewspec.canonical_form(d2) == skewspec.canonical_form(relabeled)
    assert skewspec.is_isomorphic(d2, d2.transposed()) is None


def test_recover_q_level_and_exactness():
    d1 = skewspec.example1_d()
    c1 = skewspec.example1_c()
    cert = skewspec.recover_q(d1, c1)
    assert cert["verified"] is True
    assert cert["level"] == 7
    q = cert["q"]
    denoms = [f.denominator for row in q for f in row]
    assert math.lcm(*denoms) == 7
    # Orthogonality and row sums, recomputed in exact python arithmetic.
    for i in range(7):
        assert sum(q[i][k] for k in range(7)) == Fraction(1)
        for j in range(7):
            dot = sum(q[k][i] * q[k][j] for k in range(7))
            assert dot == (Fraction(1) if i == j else Fraction(0))

    assert skewspec.recover_q(d1, d1.transposed())["level"] == 1799
    assert skewspec.recover_q(d1, c1.transposed())["level"] == 257

    with pytest.raises(ValueError):
        skewspec.recover_q(d1, skewspec.example2_d())
    cyc = skewspec.OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        skewspec.recover_q(cyc, cyc)


def test_wdgss_and_structure():
    d2 = skewspec.example2_d()
    v = skewspec.wdgss_criterion(d2)
    assert v["verdict"] == "wdgss_by_criterion"
    assert v["self_transpose"] is False
    assert v["reduced_is_odd_prime"] is True
    assert skewspec.wdgss_criterion(skewspec.example1_d())["verdict"] == "not_applicable"

    assert skewspec.snf_structure_check(d2) is True
    assert skewspec.walk_invariant_factors(d2) == [1, 1, 1, 2, 2, 382]
    assert skewspec.walk_invariant_factors(skewspec.example1_d()) == [1, 1, 1, 1, 2, 2, 3598]


def test_number_theory_helpers():
    assert skewspec.factorize(-14392) == (-1, {2: 3, 7: 1, 257: 1})
    assert skewspec.factorize(1528) == (1, {2: 3, 191: 1})
    assert skewspec.factorize(0) == (0, {})
    assert skewspec.is_prime(191)
    assert skewspec.is_prime(257)
    assert not skewspec.is_prime(1799)  # 7 * 257


def test_mates_and_candidates():
    d2 = skewspec.example2_d()
    rep = skewspec.verify_candidate_mate(d2, d2.transposed())
    assert rep["representative"] == skewspec.canonical_form(d2)
    assert rep["members"] == [skewspec.canonical_form(d2.transposed())]
    assert rep["levels"] == [191]
    assert all(a["all_passed"] for a in rep["certificate_audits"])

    d1 = skewspec.example1_d()
    rep1 = skewspec.verify_candidate_mate(d1, skewspec.example1_c())
    assert len(rep1["members"]) == 3
    assert sorted(rep1["levels"]) == [7, 257, 1799]
    assert all(a["all_passed"] for a in rep1["certificate_audits"])
    assert all(a["all_passed"] for a in rep1["pairwise_audits"])

    with pytest.raises(ValueError):
        skewspec.verify_candidate_mate(d1, d1)  # isomorphic to itself

    star = skewspec.find_mates(skewspec.OrientedGraph.from_compact("o3:011"))
    assert star["members"] == ["o3:022"]
    assert star["certificates_available"] is False


def test_census_small():
    res = skewspec.census(3)
    assert res["classes"] == 7
    assert len(res["records"]) == 7
    assert res["findings"] == []
    assert res["bound_violations"] == 0
    canons = [r["canon"] for r in res["records"]]
    assert canons == sorted(canons)
    by_canon = {r["canon"]: r for r in res["records"]}
    assert by_canon["o3:011"]["mates"] == ["o3:022"]
    assert by_canon["o3:011"]["mate_levels"] == []
    assert by_canon["o3:000"]["self_transpose"] is True


def test_verify_examples():
    all_passed, lines = skewspec.verify_examples()
    assert all_passed is True
    assert len(lines) >= 30
    assert all(passed for (_, _, _, passed) in lines)
