import csv
import io
import json

import pytest

from cylkings import oracle
from cylkings.cli import main
from cylkings.verify import VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "9")
    assert code == 0
    rows = {r["n"]: r for r in json.loads(out)["rows"]}
    assert rows[1]["kings"] == "1" and rows[1]["cyl_kings"] == "1"
    assert rows[6]["kings"] == "90"
    assert rows[9]["cyl_kings"] == "36954"
    assert rows[2]["ratio"] is None or rows[2]["kings"] == "0"


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == ["1", "2", "3", "4", "5"]
    assert rows[4]["cyl_kings"] == "10"


def test_verify_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "corollary1", "--max-n", "9")
    assert code == 0
    rep = VerificationReport.from_dict(json.loads(out))
    assert rep.status == "pass" and rep.range == list(range(3, 10))


def test_verify_cap_exceeded(capsys):
    code, _, err = run(capsys, "verify", "cbond1", "--max-n", "11")
    assert code == 2 and "cap" in err
    assert oracle.CAPS == oracle.Caps()


def test_usage_errors(capsys):
    assert run(capsys, "series", "H", "--order", "13")[0] == 2
    assert run(capsys, "oeis", "A000045", "--offline")[0] == 2
    assert run(capsys, "table", "--threads", "0")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_series_outputs(capsys):
    code, out, _ = run(capsys, "series", "H", "--order", "3")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "2*u", "6*u^2"]
    code, out, _ = run(capsys, "series", "CK", "--order", "10")
    data = json.loads(out)
    assert data["coefficients"][-1] == "382740"
    assert data["comparison"]["exponent_1_matches"] is True
    assert data["comparison"]["exponent_2_matches"] is False


def test_bijections_cmd(capsys):
    code, out, _ = run(capsys, "bijections", "--max-n", "7")
    assert code == 0
    recs = json.loads(out)["records"]
    assert [r["n"] for r in recs] == [5, 6, 7]


def test_oeis_offline_byte_identical(capsys):
    a = run(capsys, "oeis", "A002493", "--offline")
    b = run(capsys, "oeis", "A002493", "--offline")
    assert a[0] == 0 and a[1] == b[1]


def test_oeis_mismatch_exit_1(capsys, tmp_path):
    (tmp_path / "b002464.txt").write_text("5 15\n")
    code, out, _ = run(capsys, "oeis", "A002464", "--cache-dir", str(tmp_path),
                       "--max-n", "6")
    assert code == 1
    assert json.loads(out)["failures"][0]["n"] == 5


def test_oeis_env_cache(capsys, tmp_path, monkeypatch):
    (tmp_path / "b002493.txt").write_text("5 10\n6 60\n")
    monkeypatch.setenv("CYLKINGS_CACHE_DIR", str(tmp_path))
    code, out, _ = run(capsys, "oeis", "A002493", "--max-n", "6")
    assert code == 0
    assert "source: cached" in json.loads(out)["notes"]


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--out", str(tmp_path / "o"), "--offline",
                       "--max-n", "8")
    assert code == 0
    names = {p.name for p in (tmp_path / "o").iterdir()}
    assert {"table.json", "table.csv", "verify.json", "series_CK.json"} <= names
