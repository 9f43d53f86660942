import json

import pytest

from bcsym import cli, suites
from bcsym.report import Report
from bcsym.scalar import DegenerateParameters


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_interp_example(capsys):
    code, out, _ = run(["interp", "--n", "1", "--lambda", "1", "--qh", "2", "--th", "3", "--s", "5"], capsys)
    assert code == 0
    assert out.strip() == "{(1):1, ():-26/5}"  # -(5 + 1/5)


def test_koorn_and_lift_commands(tmp_path, capsys):
    pfile = tmp_path / "p.json"
    pfile.write_text(json.dumps({"qh": "3/2", "th": "5/3", "r": ["1/2", "2/3", "-3/4", "5/7"]}))
    code, out, _ = run(["koorn", "--n", "1", "--lambda", "1", "--params-file", str(pfile)], capsys)
    assert code == 0 and out.startswith("{(1):1, ():")
    code, out, _ = run(["lift", "koorn", "--lambda", "1", "--params-file", str(pfile), "--T", "25/9"], capsys)
    assert code == 0
    # at T = t the lifted polynomial restricts to the one-variable one; degree-one terms coincide
    code2, out2, _ = run(["koorn", "--n", "1", "--lambda", "1", "--params-file", str(pfile)], capsys)
    assert out.strip().split(", ")[1] == out2.strip().split(", ")[1]


def test_verify_example_and_report(tmp_path, capsys):
    path = tmp_path / "r.json"
    argv = ["verify", "hyperg", "--suite", "inversion", "--max-size", "4", "--spec-count", "3", "--seed", "7",
            "--report", str(path), "--quiet"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    data = json.loads(path.read_text())
    assert set(data) == {"header", "items"}
    assert {"version", "seed", "timestamp"} <= set(data["header"]) and data["header"]["seed"] == 7
    assert data["items"] and all(item["equal"] for item in data["items"])
    assert not list(tmp_path.glob(".bcsym-*"))  # no temp file left behind


def _strip_header(path):
    data = json.loads(path.read_text())
    del data["header"]["timestamp"]
    return json.dumps(data, sort_keys=True)


def test_reports_are_deterministic(tmp_path, capsys):
    a, b, c = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"
    base = ["vanishing", "--family", "uo", "--max-size", "3", "--seed", "11", "--spec-count", "2", "--quiet"]
    assert cli.main(base + ["--report", str(a)]) == 0
    assert cli.main(base + ["--report", str(b), "--jobs", "2"]) == 0
    assert cli.main(["vanishing", "--family", "uo", "--max-size", "3", "--seed", "12", "--spec-count", "2",
                     "--quiet", "--report", str(c)]) == 0
    capsys.readouterr()
    assert _strip_header(a) == _strip_header(b)
    assert _strip_header(a) != _strip_header(c)


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"family": "dm", "max_n": 1, "seed": 3, "spec_count": 1}))
    code, out, _ = run(["vanishing", "--config", str(cfg)], capsys)
    assert code == 0 and "vanishing.dm draw 0" in out
    code, out, _ = run(["vanishing", "--config", str(cfg), "--family", "t0", "--max-size", "2"], capsys)
    assert code == 0 and "vanishing.t0" in out and "vanishing.dm" not in out


@pytest.mark.parametrize("argv", [
    ["verify", "nosuch"],
    ["verify", "hyperg", "--suite", "nosuch"],
    ["interp", "--n", "1", "--lambda", "1", "--qh", "0.5", "--th", "3", "--s", "5"],
    ["interp", "--n", "1"],
    ["verify", "hyperg", "--seed", str(2 ** 64)],
    ["bogus"],
    [],
])
def test_config_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 3


def test_bad_config_key(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"nonsense": 1}))
    assert run(["vanishing", "--config", str(cfg)], capsys)[0] == 3


@pytest.fixture
def fake_suites(monkeypatch):
    def advisory(cfg, p):
        return [Report("open_guess", 1, 2, advisory=True)]

    def broken(cfg, p):
        raise DegenerateParameters("pole hit")

    monkeypatch.setitem(suites.SUITES, "fake", {"advisory": advisory, "broken": broken})


def test_advisory_failures_need_strict(fake_suites, tmp_path, capsys):
    path = tmp_path / "r.json"
    assert cli.main(["verify", "fake", "--suite", "advisory", "--spec-count", "1", "--report", str(path)]) == 0
    assert json.loads(path.read_text())["header"]["advisory_failures"] is True
    assert cli.main(["verify", "fake", "--suite", "advisory", "--spec-count", "1", "--strict"]) == 2
    capsys.readouterr()


def test_module_errors_become_failed_entries(fake_suites, tmp_path, capsys):
    path = tmp_path / "r.json"
    assert cli.main(["verify", "fake", "--suite", "broken", "--spec-count", "1", "--report", str(path)]) == 2
    item, = json.loads(path.read_text())["items"]
    assert item["equal"] is False and "pole hit" in item["note"]
    capsys.readouterr()


def test_list_suites(capsys):
    code, out, _ = run(["suites"], capsys)
    assert code == 0 and "vanishing:" in out
