import json
import os

import pytest

from fqcurves.cli import main

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures", "tables.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


with open(FIXTURES) as fh:
    TABLES = json.load(fh)


@pytest.mark.parametrize("name", sorted(TABLES))
def test_golden_tables(capsys, name):
    table = TABLES[name]
    doc = run_json(capsys, *table["argv"])
    rows = {r["name"]: r["value"] for r in doc["bounds"]["rows"]}
    for key, val in table["rows"].items():
        assert rows[key] == val, key
    for key, val in table.get("counts", {}).items():
        assert doc["counts"][key] == val
    if "genus" in table:
        assert doc["genus"]["bound"] == table["genus"]


def test_analyze_am(capsys):
    doc = run_json(capsys, "analyze", "--family", "artin-mumford", "5")
    assert [(s["point"], s["multiplicity"], s["ordinary"]) for s in doc["singularities"]] == [
        ("(1:0:0)", 5, True), ("(0:1:0)", 5, True)]
    assert doc["hypothesis_H"]["r1"] == 5 and doc["genus"]["bound"] == 16
    assert list(doc) == ["curve", "singularities", "hypothesis_H", "genus", "counts", "classicality",
                         "bounds", "warnings", "assumptions"]


def test_analyze_hurwitz_text(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "17", "--curve", "X^4*Y^3 + X^3 + Y^4")
    assert code == 0
    assert out.count("non-ordinary") == 3 and "genus: <= 6" in out


def test_analyze_from_file(capsys, tmp_path):
    path = tmp_path / "curve.txt"
    path.write_text("X^3 + Y^3 + 1\n")
    doc = run_json(capsys, "analyze", "--p", "7", "--curve", str(path))
    assert doc["curve"]["degree"] == 3 and doc["singularities"] == []


def test_exit_codes(capsys):
    assert run(capsys, "analyze", "--p", "4", "--curve", "X + Y")[0] == 2
    code, _, err = run(capsys, "analyze", "--p", "5", "--curve", "2X + Y")
    assert code == 2 and "position 1" in err and "^" in err
    assert run(capsys, "count", "--family", "artin-mumford", "5", "--m", "0")[0] == 2
    assert run(capsys, "am-verify", "--q", "3")[0] == 2
    assert run(capsys, "analyze", "--family", "artin-mumford", "5", "--ext-bound", "3", "--budget", "100")[0] == 3
    assert run(capsys, "analyze")[0] == 2


def test_count(capsys):
    doc = run_json(capsys, "count", "--family", "artin-mumford", "5", "--m", "1", "2")
    assert doc["counts"] == {"N_1": 10, "N_2": 110}
    doc = run_json(capsys, "count", "--family", "product-sextic", "--m", "1")
    assert doc["counts"] == {"N_1": 48} and doc["genus"]["bound"] == 25


def test_bounds_without_counts_warns(capsys):
    doc = run_json(capsys, "bounds", "--family", "product-sextic", "--m", "2")
    assert "abc" not in [r["name"] for r in doc["bounds"]["rows"]]
    assert any("abc omitted" in w for w in doc["warnings"])


def test_bounds_user_counts_and_constants(capsys):
    doc = run_json(capsys, "bounds", "--family", "product-sextic", "--m", "2", "--N", "1=48", "--c", "20", "2", "13")
    rows = {r["name"]: r["value"] for r in doc["bounds"]["rows"]}
    assert rows["abc"] == (72 + 12 * 13 * 14 - 5 * 48 - 13 * 48) // 2


def test_bounds_text_table(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "hurwitz", "4", "3", "--p", "17")
    assert code == 0
    lines = out.splitlines()
    assert any(line.split()[:2] == ["sv[g_5^2]", "52"] for line in lines)
    assert any(line.split()[:2] == ["hw_serre", "66"] for line in lines)
    assert all(line == line.rstrip() for line in lines)


def test_json_roundtrip_and_determinism(capsys):
    argv = ("bounds", "--family", "product-sextic", "--m", "2", "--use-counts", "--json")
    main(list(argv))
    first = capsys.readouterr().out
    main(list(argv))
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert json.loads(json.dumps(doc)) == doc


def test_classicality_command(capsys):
    doc = run_json(capsys, "classicality", "--family", "artin-mumford", "5", "--m", "2", "--system", "h-conics",
                   "--u", "1")
    cls = doc["classicality"]
    assert cls["classical"] is False and cls["kappa"] == [0, 1]
    doc = run_json(capsys, "classicality", "--family", "artin-mumford", "5", "--system", "h-conics")
    assert doc["classicality"]["nu"] == [0, 1, 2]


def test_am_verify(capsys):
    doc = run_json(capsys, "am-verify", "--q", "5")
    assert doc["passed"] and doc["values"]["bam_lhs"] == doc["values"]["bam_rhs"] == 350
    doc = run_json(capsys, "am-verify", "--q", "7")
    assert doc["values"]["bam_rhs"] == 882


def test_cremona(capsys):
    doc = run_json(capsys, "cremona", "--p", "5", "--curve", "X*Y - 1")
    assert doc["transformed"] == doc["input"]
    doc = run_json(capsys, "cremona", "--family", "artin-mumford", "5")
    assert doc["degree"] == 10 and doc["hypothesis_H"] is not None
    assert run(capsys, "cremona", "--p", "5", "--curve", "X^2 + Y^2 - X")[0] == 2
    doc = run_json(capsys, "cremona", "--p", "5", "--curve", "X^2 + Y^2 - X", "--auto", "0:0:1", "1:0:1")
    assert doc["degree"] == 2
    assert run(capsys, "cremona", "--p", "5", "--curve", "X^2 + Y^2 - X", "--auto", "0:0:1", "2:2:1")[0] == 2


def test_precision_flag(capsys):
    assert run(capsys, "am-verify", "--q", "5", "--precision", "2000")[0] == 2
    doc = run_json(capsys, "am-verify", "--q", "5", "--precision", "6")
    assert doc["passed"]


def test_cremona_auto_point_syntax(capsys):
    doc = run_json(capsys, "cremona", "--p", "7", "--curve", "X^3 + Y^3 + 1", "--auto", "(3:0:1)", "5:0:1")
    assert doc["degree"] == 4 and doc["hypothesis_H"]["r1"] == doc["hypothesis_H"]["r2"] == 2
    assert run(capsys, "cremona", "--p", "7", "--curve", "X^3 + Y^3 + 1", "--auto", "a:0:1", "5:0:1")[0] == 2
    assert run(capsys, "cremona", "--p", "7", "--curve", "X^3 + Y^3 + 1", "--auto", "3:0", "5:0:1")[0] == 2
