import json

import pytest

from coblegeom.cli import COMMANDS, run

THREE_AND_THREE = {"ambient_dim": 1, "points": [["1", "0"]] * 3 + [["0", "1"]] * 3}
COLLINEAR = {"ambient_dim": 2, "points": [["1", str(t), "0"] for t in range(6)]}
CONIC = {"ambient_dim": 2, "points": [["1", str(t), str(t * t)] for t in range(6)]}


def call(tmp_path, *argv, name="out.json"):
    out = tmp_path / name
    status = run([*argv, "--output", str(out)])
    return status, json.loads(out.read_text()), out.read_bytes()


def write(tmp_path, obj, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


@pytest.fixture(scope="module")
def igusa_report(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("igusa")
    status, report, raw = call(tmp, "igusa", "--seed", "0")
    assert status == 0
    return report, raw


def test_stability_three_and_three(tmp_path):
    status, report, _ = call(tmp_path, "stability", "--input", write(tmp_path, THREE_AND_THREE))
    assert status == 0
    assert report["verdict"]["status"] == "strictly-semistable"
    assert report["verdict"]["witness"] == [1, 2, 3]
    assert report["oracle_agrees"] is True
    assert report["seed"] == 0 and report["tool"]["name"] == "coblegeom"


def test_stability_report_round_trips(tmp_path):
    _, first, _ = call(tmp_path, "stability", "--input", write(tmp_path, THREE_AND_THREE))
    status, second, _ = call(tmp_path, "stability", "--input", write(tmp_path, first, "again.json"), name="b.json")
    assert status == 0
    assert second["verdict"] == first["verdict"]


def test_dims(tmp_path):
    status, report, _ = call(tmp_path, "dims", "--rank", "3", "--genus", "2")
    assert status == 0
    assert {k: report[k] for k in ("fiber", "quotient", "equal")} == {"fiber": 4, "quotient": 4, "equal": True}


def test_gale_collinear_is_a_domain_error(tmp_path):
    status, report, _ = call(tmp_path, "gale", "--input", write(tmp_path, COLLINEAR))
    assert status == 2
    assert report["error"] == "degenerate configuration"
    assert "detail" in report


def test_gale_round_trip_is_an_involution(tmp_path):
    status, once, _ = call(tmp_path, "gale", "--input", write(tmp_path, CONIC))
    assert status == 0 and once["residual_zero"]
    status, twice, _ = call(tmp_path, "gale", "--input", write(tmp_path, once, "once.json"), name="twice.json")
    assert status == 0
    assert twice["config"]["ambient_dim"] == 2


def test_conic_inline_input(tmp_path):
    status, report, _ = call(tmp_path, "conic", "--input", json.dumps(CONIC))
    assert status == 0 and report["on_conic"] is True


def test_malformed_input(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    status, report, _ = call(tmp_path, "stability", "--input", str(bad))
    assert status == 1 and report["error"] == "malformed input"
    status, report, _ = call(tmp_path, "stability", "--input", json.dumps({"ambient_dim": 1, "points": [[0.5, 1]]}))
    assert status == 1


def test_dimension_mismatch_is_a_domain_error(tmp_path):
    five = {"ambient_dim": 1, "points": [["1", str(t)] for t in range(5)]}
    status, report, _ = call(tmp_path, "stability", "--input", json.dumps(five))
    assert status == 2 and report["error"] == "dimension mismatch"


def test_fiber_report(tmp_path):
    datum = {"genus": 3, "rank": 2, "collisions": [], "config": THREE_AND_THREE}
    status, report, _ = call(tmp_path, "fiber", "--input", write(tmp_path, datum))
    assert status == 0
    assert report["agree"] is True
    assert report["verdict"]["status"] == "strictly-semistable"
    assert report["decomposable"]["partition"] == [[1, 2, 3], [4, 5, 6]]
    assert report["presentation"]["rank"] == 2 and report["presentation"]["degree"] == 6
    assert len(report["slopes"]) == 63
    status, again, _ = call(tmp_path, "fiber", "--input", write(tmp_path, report, "r.json"), name="again.json")
    assert status == 0 and again["datum"] == report["datum"]


def test_fiber_on_big_diagonal_has_no_presentation(tmp_path):
    datum = {"genus": 3, "rank": 2, "collisions": [[1, 4]], "config": THREE_AND_THREE}
    status, report, _ = call(tmp_path, "fiber", "--input", json.dumps(datum))
    assert status == 0 and report["presentation"] is None


@pytest.mark.parametrize("rank, collide, distinct", [("3", [], 15), ("2", [], 10), ("3", ["5,6"], 9)])
def test_decomposables(tmp_path, rank, collide, distinct):
    extra = [a for c in collide for a in ("--collide", c)]
    status, report, _ = call(tmp_path, "decomposables", "--rank", rank, *extra)
    assert status == 0
    assert report["distinct"] == distinct
    assert report["total"] == {"3": 15, "2": 10}[rank]


def test_decomposables_unsupported_rank(tmp_path):
    status, report, _ = call(tmp_path, "decomposables", "--rank", "4")
    assert status == 2 and report["error"] == "unsupported"


def test_incidence(tmp_path):
    status, report, _ = call(tmp_path, "incidence", "--collide", "5,6")
    assert status == 0
    assert report["is_15_3"] is True
    assert report["axioms"]["flags"] == 45
    assert report["degenerate"]["points"] == 9


def test_segre_report_is_deterministic(tmp_path):
    status, report, raw = call(tmp_path, "segre", "--seed", "5")
    assert status == 0
    checks = report["checks"]
    assert checks["kappa_rank"] == 5 and checks["node_count"] == 10
    assert checks["node_hessian_ranks"] == [4] * 10
    _, _, raw2 = call(tmp_path, "segre", "--seed", "5", name="again.json")
    assert raw == raw2


def test_too_few_samples_is_a_domain_error(tmp_path):
    status, report, _ = call(tmp_path, "segre", "--samples", "20")
    assert status == 2 and report["error"] == "nonunique cubic"


def test_igusa_report(igusa_report):
    report, _ = igusa_report
    checks = report["checks"]
    assert checks["quartic_holdout_vanishing"] and checks["biduality_returns_to_cubic"]
    assert report["quartic"]["vars"] == 5
    assert all(sum(t["exp"]) == 4 for t in report["quartic"]["terms"])


def test_dual_check_consumes_igusa_report(tmp_path, igusa_report):
    report, _ = igusa_report
    status, out, _ = call(tmp_path, "dual-check", "--input", write(tmp_path, report), "--count", "10")
    assert status == 0
    assert out["checks"]["returns_to_cubic"] and out["checks"]["quartic_vanishes"]
    assert out["cubic"] == report["cubic"] and out["quartic"] == report["quartic"]


def test_every_command_is_wired():
    assert set(COMMANDS) == {
        "stability", "gale", "conic", "fiber", "decomposables", "incidence", "segre", "igusa", "dual-check", "dims",
    }
