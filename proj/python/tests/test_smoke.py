import pytest

import bnsigma

COMMUTATOR = "<x1,x2 | [x1,x2]>"


def test_parse_and_betti():
    p = bnsigma.parse_presentation(COMMUTATOR)
    assert p["generators"] == ["x1", "x2"]
    assert p["relators"] == [[1, 2, -1, -2]]
    assert bnsigma.first_betti("<i,j,k,l | [i,j], [j,k], [k,l]>") == 4
    assert bnsigma.character_lattice("<x1,x2 | x1 x2 x1^-1 x2^-2>") == [[1, 0]]


def test_fixed_verdicts():
    assert bnsigma.decide(COMMUTATOR, [1, -1])["membership"] == "IN_SIGMA"
    assert bnsigma.decide("<x1,x2 | [x1,x2]^2>", [1, -1], True)["membership"] == "NOT_IN_SIGMA"
    assert bnsigma.decide("<x1,x2 | [x1,x2]^2>", [1, -1])["membership"] == "UNKNOWN"
    bs = bnsigma.symmetry_report("<x1,x2 | x1 x2 x1^-1 x2^-2>")
    assert bs["plus"]["membership"] == "UNKNOWN"


def test_transform_round_trip_and_symmetry():
    rec = bnsigma.insert_commutators(COMMUTATOR, [1, -1])
    image = rec["output"]["text"]
    assert len(rec["output"]["relators"][0]) == 16
    back = bnsigma.remove_commutators(image, [1, -1])
    assert back["relators"] == [[1, 2, -1, -2]]
    s = bnsigma.symmetry_report(image, [1, -1], True)
    assert s["nonsymmetric"] and s["not_lerf"] and s["not_fibering"]


def test_fox_matrix_shape():
    f = bnsigma.fox_matrix(COMMUTATOR, [1, -1])
    assert len(f["matrix"]) == 1 and len(f["matrix"][0]) == 2


def test_counting_and_sampling():
    assert [bnsigma.count_cyclically_reduced(2, k) for k in (1, 2, 3)] == [4, 12, 28]
    report, csv = bnsigma.run_experiment(2, 1, 12, 200, seed=4)
    again, csv_again = bnsigma.run_experiment(2, 1, 12, 200, seed=4, threads=3)
    assert csv == csv_again
    assert csv.startswith("name,successes,trials,estimate,ci_low,ci_high\n")
    names = {p["name"] for p in report["properties"]}
    assert {"b1_eq_1", "nonsymmetric", "small_cancellation"} <= names


def test_growth():
    assert bnsigma.growth("x -> y; y -> x y", "x")["classification"] == "EXPONENTIAL"
    g = bnsigma.growth("a -> a; b -> b a; c -> c b", "c")
    assert g["classification"] == "POLYNOMIAL(2)" and g["levitt_bound"] is True


def test_errors_raise():
    with pytest.raises(bnsigma.Error, match="b1 = 4, supply --char"):
        bnsigma.symmetry_report("<i,j,k,l | [i,j], [j,k], [k,l]>")
    with pytest.raises(bnsigma.Error):
        bnsigma.parse_presentation("<x1,x2 | x3>")
    assert bnsigma.small_cancellation(COMMUTATOR)[0] is False
