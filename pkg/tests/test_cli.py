import io
import json
import subprocess
import sys

import pytest

from babybeads import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def test_closed_sign_example():
    code, text = run("decompose", "--N", "7", "--n", "4", "--rho", "[1,1,1,1,1,1,1]", "--model", "closed")
    assert code == 0
    assert "[4]" in text and text.strip().splitlines()[-1].split() == ["[4]", "1"]


def test_closed_hook_example():
    code, text = run("decompose", "--N", "9", "--n", "6", "--rho", "[2,1,1,1,1,1,1,1]",
                     "--model", "closed", "--format", "json")
    assert code == 0
    d = json.loads(text)
    assert sorted((tuple(e["lambda"]), e["mult"]) for e in d["entries"]) == \
        sorted([((3, 2, 1), 1), ((4, 1, 1), 1), ((5, 1), 1), ((4, 2), 1)])
    assert "rho" not in d["entries"][0]


def test_empty_range():
    code, text = run("decompose", "--N", "3", "--n", "5")
    assert code == 0 and "(zero)" in text


@pytest.mark.parametrize("argv", [
    ["decompose", "--N", "3", "--n", "2", "--rho", "[1,2]"],
    ["decompose", "--N", "3", "--n", "2", "--rho", "[2,1,1]"],
    ["decompose", "--N", "9", "--n", "6", "--model", "beads"],
    ["decompose", "--N", "7", "--n", "4", "--model", "free"],
    ["decompose", "--N", "3"],
    ["verify", "--suite", "nonsense"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize("model", cli.MODELS)
def test_models_agree_on_the_sign_slice(model):
    _, text = run("decompose", "--N", "5", "--n", "4", "--rho", "[1,1,1,1,1]", "--model", model, "--format", "json")
    assert cli.from_json(text)[4] == {((1,) * 5, (2, 1, 1)): 1}


def test_json_round_trip():
    for argv in (["--N", "5", "--n", "3"], ["--N", "4", "--n", "3", "--rho", "[2,1,1]"]):
        code, text = run("decompose", *argv, "--format", "json")
        N, n, rho, model, table = cli.from_json(text)
        assert cli.to_json(N, n, rho, model, table) == text.strip()
        assert table == cli.compute(N, n, rho, model)


def test_full_table_without_rho():
    _, text = run("decompose", "--N", "4", "--n", "3", "--model", "closed", "--format", "json")
    table = cli.from_json(text)[4]
    _, text2 = run("decompose", "--N", "4", "--n", "3", "--model", "beads", "--format", "json")
    assert table == cli.from_json(text2)[4]


def test_determinism_and_threads(monkeypatch):
    a = run("decompose", "--N", "6", "--n", "4", "--model", "closed")
    b = run("--threads", "2", "decompose", "--N", "6", "--n", "4", "--model", "closed")
    monkeypatch.setenv("BABYBEADS_THREADS", "2")
    c = run("decompose", "--N", "6", "--n", "4", "--model", "closed")
    assert a == b == c


def test_verify_props():
    code, text = run("verify", "--suite", "props")
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 50 and all(l.startswith("PASS ") for l in lines)


def test_verify_reports_first_failure(monkeypatch):
    monkeypatch.setitem(cli.SUITE_FUNCS, "calc", lambda: [("one", True, ""), ("two", False, "boom"), ("three", False, "x")])
    code, text = run("verify", "--suite", "calc")
    assert code == 1
    assert "FAIL two" in text and "boom" in text and "three" not in text


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "babybeads", "decompose", "--N", "3", "--n", "2",
                        "--rho", "(2,1)", "--model", "closed"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "N=3 n=2 model=closed rho=[2,1]"
