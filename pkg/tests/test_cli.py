import json
from os import path

import pytest

from temperedforms.modules.cli import run
from temperedforms.modules.config import conf
from temperedforms.modules.data.database import Database
from temperedforms.modules.forms.bqf import Form
from temperedforms.modules.tempered.records import TwoTwoRecord, from_csv


def test_classgroup_table(capsys):
    assert run(["classgroup", "--disc", "-1155"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert len(lines) == 9
    assert "19,-17,19" in out
    assert "15,-15,23" in out
    assert out.count("yes") >= 8 + 2


def test_classgroup_json(capsys):
    assert run(["classgroup", "--disc", "-55", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["order"] for row in rows] == [1, 4, 4, 2]
    assert [row["well_rounded"] for row in rows] == ["no", "no", "no", "yes"]


def test_temperaments_csv(capsys):
    assert run(["temperaments", "--ell", "23", "--kind", "2and2",
                "--csv"]) == 0
    records = from_csv(capsys.readouterr().out)
    assert TwoTwoRecord.create(23, -1155, Form(19, -17, 19),
                               Form(17, -1, 17)) in records


def test_temperaments_eisenstein(capsys):
    assert run(["temperaments", "--ell", "11", "--kind", "3and1",
                "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [(row["tau2_num"], row["tau2_den"]) for row in rows] == [
        (3, 1), (7, 1)]


def test_temperaments_db(tmp_path, capsys):
    db_path = path.join(str(tmp_path), "out.db")
    assert run(["temperaments", "--ell", "7", "--kind", "3and3",
                "--db", db_path]) == 0
    capsys.readouterr()
    with Database(db_path) as database:
        rows = database.select("eisenstein_record", "WHERE 1")
        run_row = database.select("run", "WHERE 1")[0]
    assert [(row["wx"], row["wy"]) for row in rows] == [(2, -1)]
    assert json.loads(run_row["prog_params"])["ell"] == 7


def test_verify(capsys):
    assert run(["verify", "--gram", "391,169,19", "--sub", "1,0,0,23",
                "--ell", "23", "--json"]) == 0
    [row] = json.loads(capsys.readouterr().out)
    assert row["tempered"] == "yes"
    assert row["kind"] == "2and2"
    assert row["tau2"] == "391/19"
    assert row["S"] == "0,1 1,-4"


def test_verify_bad_sublattice(capsys):
    assert run(["verify", "--gram", "1,-1,1", "--sub", "1,0,0,5",
                "--ell", "7"]) == 1
    assert "determinant" in capsys.readouterr().err


def test_verify_zero_denominator(capsys):
    assert run(["verify", "--gram", "1/0,1,1", "--sub", "1,0,0,7",
                "--ell", "7"]) == 1
    assert "zero denominator" in capsys.readouterr().err


def test_oracle(capsys):
    assert run(["oracle", "--ell", "7", "--csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1] == "h11,h12,h22,kind,tempered,tau2"
    assert out.count("3and3,yes,7") == 2


def test_ells_for_disc(capsys):
    assert run(["ells-for-disc", "--disc", "-55", "--max", "100",
                "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["ell"] for row in rows] == [59, 71]


def test_congruences(capsys):
    assert run(["congruences", "--disc", "-55", "--json"]) == 0
    [row] = json.loads(capsys.readouterr().out)
    assert row["decidable"] == "no"
    assert run(["congruences", "--disc", "-4", "--json"]) == 0
    [row] = json.loads(capsys.readouterr().out)
    assert (row["modulus"], row["residues"]) == (4, "1")


def test_primeclass(capsys):
    assert run(["primeclass", "--disc", "-55", "--p", "31", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["principal"] for row in rows] == ["no"]


def test_scan_summary_line(capsys):
    assert run(["scan", "--max-ell", "23"]) == 0
    out = capsys.readouterr().out
    assert "|D| <= 3 l^2 holds: yes" in out.splitlines()[-1]

    assert run(["scan", "--max-ell", "23", "--csv"]) == 0
    captured = capsys.readouterr()
    assert "holds" in captured.err
    assert "holds" not in captured.out


def test_scan_csv_file(tmp_path, capsys):
    csv_path = path.join(str(tmp_path), "scan.csv")
    assert run(["scan", "--max-ell", "23", "--csv", csv_path]) == 0
    assert capsys.readouterr().out == ""
    with open(csv_path) as csv_file:
        rows = from_csv(csv_file.read())
    assert rows[-1].ell == 23
    assert 1155 <= -rows[-1].discriminant <= 4 * 23 * 23

    other = path.join(str(tmp_path), "other.csv")
    assert run(["scan", "--max-ell", "23", "--csv", csv_path,
                "--out", other]) == 1


def test_figure(tmp_path, capsys):
    svg_path = path.join(str(tmp_path), "fig.svg")
    assert run(["figure", "--ell", "23", "--disc", "-1155",
                "--out", svg_path]) == 0
    with open(svg_path) as svg_file:
        svg = svg_file.read()
    assert svg.startswith("<svg")
    assert 'id="minimal-circles"' in svg
    assert capsys.readouterr().out == ""


def test_figure_errors(capsys):
    assert run(["figure", "--ell", "23"]) == 1
    assert run(["figure", "--ell", "5", "--kind", "3and3"]) == 1
    assert run(["figure", "--ell", "7", "--kind", "3and3",
                "--window", "0"]) == 1


def test_usage_errors(capsys):
    assert run(["temperaments", "--ell", "21", "--kind", "2and2"]) == 2
    assert "not prime" in capsys.readouterr().err
    assert run(["temperaments", "--ell", "7"]) == 2
    assert run(["classgroup", "--disc", "-55", "--json", "--csv"]) == 2
    assert run([]) == 2
    assert run(["--help"]) == 0


def test_invalid_discriminant(capsys):
    assert run(["classgroup", "--disc", "-5"]) == 1
    assert "error" in capsys.readouterr().err


def test_conf_is_restored(capsys):
    assert run(["classgroup", "--disc", "-23", "--verbose",
                "--num-threads", "3"]) == 0
    assert conf["verbose"] is False
    assert conf["num_threads"] == 1


@pytest.mark.slow
def test_scan_to_100(capsys):
    assert run(["scan", "--max-ell", "100"]) == 0
    summary = capsys.readouterr().out.splitlines()[-1]
    assert "at ell=47, D=-6435" in summary
    assert summary.startswith("max |D|/l^2 = 6435/2209")
