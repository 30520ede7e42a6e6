import io
import json

from qgsurf.cli import run
from qgsurf.config import to_document
from qgsurf.corpus import builtin


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_chain_subcommand_classt_line():
    code, text = invoke("chain", "4,2,3,2")
    assert code == 0
    assert ("classT d=3 n=3 a=1 m=27 q=8 index=3 contribution=2 "
            "discrepancies=-2/3,-2/3,-2/3,-1/3") in text


def test_chain_subcommand_rejection():
    code, text = invoke("chain", "5")
    assert code == 0
    assert "notClassT" in text
    assert "hj=5/1" in text


def test_chain_subcommand_bad_input():
    code, _ = invoke("chain", "4,x")
    assert code == 2
    code, _ = invoke("chain", "4,1,3")
    assert code == 2


def test_chain_json_mode():
    code, text = invoke("--output", "json", "chain", "4")
    assert code == 0
    blob = json.loads(text)
    assert blob["classT"]["index"] == 2
    assert blob["hj"] == "4/1"


def test_example_subcommand_passes():
    code, text = invoke("example", "enriques-k1")
    assert code == 0
    assert "K2_X=1" in text
    assert "pi1=criterion-satisfied" in text
    assert text.strip().endswith("status=pass")


def test_example_subcommand_unknown_name():
    code, _ = invoke("example", "bogus")
    assert code == 2


def test_verify_all_subcommand():
    code, text = invoke("verify-all")
    assert code == 0
    assert text.count("pass") == 6


def test_verify_all_json():
    code, text = invoke("--output", "json", "verify-all")
    assert code == 0
    rows = json.loads(text)
    assert [r["K2"] for r in rows] == ["1", "2", "3", "3", "4", "5"]


def test_verify_subcommand_on_file(tmp_path):
    doc = to_document(builtin_document("enriques-k2"))
    path = tmp_path / "k2.json"
    path.write_text(json.dumps(doc))
    code, text = invoke("verify", str(path))
    assert code == 0
    assert "K2_X=2" in text


def builtin_document(name):
    from qgsurf import config as config_mod

    return config_mod.parse(builtin(name).document)


def test_verify_subcommand_missing_file():
    code, _ = invoke("verify", "does-not-exist.json")
    assert code == 2


def test_verify_subcommand_schema_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"surface": {}}')
    code, _ = invoke("verify", str(path))
    assert code == 2


def test_verify_subcommand_violation_exits_one(tmp_path):
    doc = {
        "surface": {"kind": "other", "chi": 1, "K2": 0, "K_num_trivial": False},
        "curves": [{"name": "C", "self": -3, "genus": 0, "Kdeg": 0, "tags": []}],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, text = invoke("verify", str(path))
    assert code == 1
    assert "adjunction" in text


def test_enumerate_classt():
    code, text = invoke("enumerate-classT", "--max-len", "2", "--max-entry", "5")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].startswith("chain=4 ")
    assert any(line.startswith("chain=2,5 ") for line in lines)
    assert any(line.startswith("chain=5,2 ") for line in lines)


def test_enumerate_classt_deterministic():
    a = invoke("enumerate-classT", "--max-len", "4", "--max-entry", "6")
    b = invoke("enumerate-classT", "--max-len", "4", "--max-entry", "6")
    assert a == b


def test_export_dot(tmp_path):
    doc = to_document(builtin_document("enriques-k1"))
    path = tmp_path / "k1.json"
    path.write_text(json.dumps(doc))
    code, text = invoke("export-dot", str(path))
    assert code == 0
    assert text.startswith("graph configuration {")
    assert '"G1" -- "G2";' in text
    again = invoke("export-dot", str(path))
    assert again == (code, text)


def test_verify_without_plan_runs_lints_only(tmp_path):
    doc = {
        "surface": {"kind": "enriques", "chi": 1, "K2": 0, "K_num_trivial": True},
        "curves": [{"name": "C", "self": -2, "genus": 0, "Kdeg": 0, "tags": []}],
    }
    path = tmp_path / "plain.json"
    path.write_text(json.dumps(doc))
    code, text = invoke("verify", str(path))
    assert code == 0
    assert "status=pass" in text
    assert "K2_X" not in text


def test_example_json_mode():
    code, text = invoke("--output", "json", "example", "enriques-k4")
    assert code == 0
    blob = json.loads(text)
    assert blob["passed"] is True
    assert blob["report"]["K2_X"] == "4"
    assert blob["report"]["indices"] == [19, 73]
    assert blob["report"]["topology"]["homeomorphism_target"] == "3CP2#11CP2bar"
