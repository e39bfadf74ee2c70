"""Suite runner determinism, report contracts, JSON round trips, and the
command line front end."""
import json

import pytest

from arcbar import cli, jsonio
from arcbar.rational import InvariantViolation
from arcbar.suites import SUITES, Report, RunConfig, run_suite


def test_unknown_suite():
    with pytest.raises(InvariantViolation) as err:
        run_suite(RunConfig(suite="nope"))
    assert "cyclic-relations" in str(err.value)


def test_bad_config():
    with pytest.raises(InvariantViolation):
        RunConfig(suite="operad-laws", trials=0)


def test_suite_determinism():
    cfg = RunConfig(suite="embed-compose", seed=5, trials=40)
    a = run_suite(cfg).to_json()
    b = run_suite(cfg).to_json()
    a.pop("elapsed_s")
    b.pop("elapsed_s")
    assert a == b


def test_all_suites_pass_small():
    for name in SUITES:
        cfg = RunConfig(suite=name, seed=1, trials=25, n_max=2, q_max=2,
                        m_max=2, den=2)
        rep = run_suite(cfg)
        assert rep.ok, (name, rep.failures[:3])
        assert rep.cases > 0


def test_report_exit_contract(tmp_path):
    out = tmp_path / "report.json"
    cfg = RunConfig(suite="operad-laws", seed=0, trials=20, out=str(out))
    rep = run_suite(cfg)
    data = json.loads(out.read_text())
    assert data["ok"] is rep.ok
    assert data["suite"] == "operad-laws"
    assert data["failures"] == []


def test_failing_report_shape():
    rep = Report("demo", {})
    rep.fail("law", "witness", "want", "got")
    assert not rep.ok
    assert rep.to_json()["failures"][0]["law"] == "law"


# -- JSON round trips ---------------------------------------------------------

def test_rat_normalization():
    assert jsonio.element_round_trip("2/4") == "1/2"
    assert jsonio.element_round_trip({"kind": "rat", "value": "6/4"}) == \
        {"kind": "rat", "value": "3/2"}


def test_arc_system_roundtrip_and_errors():
    obj = {"m": 2, "variant": "uEc",
           "pairs": [{"zeta": "0", "r": "1/8"}, {"zeta": "1/4", "r": "2/16"}],
           "phi": ["1/4", "1/4"]}
    out = jsonio.element_round_trip(obj)
    assert out["pairs"][1]["r"] == "1/8"
    bad = {"m": 2, "variant": "uEc",
           "pairs": [{"zeta": "0", "r": "0"}, {"zeta": "1/4", "r": "0"}],
           "phi": ["1/4", "1/2"]}
    with pytest.raises(jsonio.SchemaError) as err:
        jsonio.element_round_trip(bad)
    assert "gap-sum" in str(err.value)
    with pytest.raises(jsonio.SchemaError):
        jsonio.element_round_trip({"m": 2, "variant": "uEc", "pairs": []})


def test_wreath_and_point_roundtrip():
    w = {"perm": [2, 1, 3], "members": [{"order": 2, "exponent": 1},
                                        {"order": 2, "exponent": 0},
                                        {"order": 2, "exponent": 3}]}
    out = jsonio.element_round_trip(w)
    assert out["members"][2]["exponent"] == 1
    p = {"m": 2, "rbar": "5/2", "simplex": ["1/2", "1/2"]}
    out = jsonio.element_round_trip(p)
    assert out["rbar"] == "1/2"
    with pytest.raises(jsonio.SchemaError):
        jsonio.element_round_trip({"m": 2, "rbar": "0", "simplex": ["1/2"]})


def test_system_with_perm_roundtrip():
    obj = {"base": {"m": 1, "variant": "uE",
                    "pairs": [{"zeta": "0", "r": "1/8"},
                              {"zeta": "1/2", "r": "1/8"}]},
           "perm": [2, 1]}
    out = jsonio.element_round_trip(obj)
    assert out["perm"] == [2, 1]
    assert out["base"]["variant"] == "uE"


def test_operad_elem_roundtrip():
    obj = {"instance": "dc", "perm": [2, 1],
           "pairs": [{"v": "0", "r": "0"}, {"v": "0", "r": "0"}]}
    assert jsonio.element_round_trip(obj)["instance"] == "dc"
    with pytest.raises(jsonio.SchemaError):
        jsonio.element_round_trip({"instance": "dR",
                                   "pairs": [{"v": "0", "r": "2"}]})


def test_monoid_roundtrip():
    from arcbar.barcalc import pointed_cyclic_monoid
    table = jsonio.monoid_to_json(pointed_cyclic_monoid("c2", 2, 2))
    assert jsonio.element_round_trip(table) == table
    table["sigma"] = ["*", "g1", "g0"]  # no longer fixes the unit
    with pytest.raises(jsonio.SchemaError):
        jsonio.element_round_trip(table)


# -- the CLI ------------------------------------------------------------------

def test_cli_suite_and_exit(capsys):
    assert cli.main(["suite", "operad-laws", "--trials", "20"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] and data["suite"] == "operad-laws"


def test_cli_embed_compose(capsys):
    outer = json.dumps({"m": 1, "variant": "uEc",
                        "pairs": [{"zeta": "0", "r": "1/8"},
                                  {"zeta": "1/2", "r": "1/8"}],
                        "phi": ["1/2", "1/2"]})
    code = cli.main(["embed", "compose", "--outer", outer,
                     "--inner", "[[\"0\", \"1/2\"]]",
                     "--inner", "[[\"1/2\", \"1/4\"]]"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["phi"] == ["9/16", "7/16"]


def test_cli_cyclic_normalize(capsys):
    assert cli.main(["cyclic", "normalize", "--word", "s0.t1",
                     "--m", "2", "--q", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["normal_form"] == "t2.t2.s1"


def test_cli_cyclic_act(capsys):
    # the twist subtracts the last coordinate from the base angle: at m=1 the
    # result 1/4 - 1 reduces back to 1/4 mod 1
    point = json.dumps({"m": 1, "rbar": "1/4", "simplex": ["1"]})
    assert cli.main(["cyclic", "act", "--word", "t0", "--point", point]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rbar"] == "1/4"
    point = json.dumps({"m": 3, "rbar": "1/4", "simplex": ["1"]})
    assert cli.main(["cyclic", "act", "--word", "t0", "--point", point]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rbar"] == "9/4"
    assert data["simplex"] == ["1"]


def test_cli_retract(capsys):
    sys_json = json.dumps({"m": 1, "variant": "uCc",
                           "pairs": [{"zeta": "0", "r": "0"},
                                     {"zeta": "0", "r": "0"}],
                           "phi": ["1", "0"]})
    assert cli.main(["embed", "retract", "--system", sys_json,
                     "--steps", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["phi"] == ["1/2", "1/2"]


def test_cli_element_roundtrip(capsys):
    assert cli.main(["element", "roundtrip", "--json", "\"2/4\""]) == 0
    assert json.loads(capsys.readouterr().out) == "1/2"


def test_cli_error_exit(capsys):
    bad = json.dumps({"m": 1, "variant": "uEc",
                      "pairs": [{"zeta": "0", "r": "0"}], "phi": ["1/2"]})
    assert cli.main(["embed", "retract", "--system", bad]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_operad_compose(capsys):
    outer = json.dumps({"instance": "dR", "pairs": [{"v": "0", "r": "1/2"}]})
    inner = json.dumps({"instance": "dR", "pairs": [{"v": "1/2", "r": "1/4"}]})
    assert cli.main(["operad", "compose", "--instance", "dR",
                     "--outer", outer, "--inner", inner]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pairs"] == [{"v": "1/4", "r": "1/8"}]


def test_cli_workbench_seed_env(monkeypatch, capsys):
    monkeypatch.setenv("WORKBENCH_SEED", "7")
    assert cli.main(["suite", "embed-compose", "--trials", "10"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["config"]["seed"] == 7
