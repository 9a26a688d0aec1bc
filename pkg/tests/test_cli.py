import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from friezemod.cli import main

DATA = Path(__file__).parent / "data"
SCHEMA = json.loads(resources.files("friezemod").joinpath("data/envelope.schema.json").read_text())
TABLE_PRIMES = "11,13,17,19,23,29,31,37,41,43,47"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert json.loads(json.dumps(doc)) == doc
    return code, doc


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--modulus", "14", "--tuple", "7,3,11,3,11,3,11,3,11,3,11,3,11,3,11,3,11,7")
    assert code == 0 and "solution" in out and "not" not in out
    code, doc = run_json(capsys, "check", "--modulus", "5", "--tuple", "0,0")
    assert doc["result"] == {"is_solution": True, "sign": -1, "sign_ambiguous": False}
    code, doc = run_json(capsys, "check", "--modulus", "5", "--tuple", "1,2")
    assert code == 0 and doc["result"]["is_solution"] is False
    code, out, _ = run(capsys, "check", "--modulus", "5", "--tuple", "1,2", "--format", "csv")
    assert out == "modulus,tuple,is_solution,sign\n5,\"(1,2)\",false,\n"


@pytest.mark.parametrize("argv", [
    ["check", "--modulus", "5", "--tuple", "1,x"],
    ["check", "--modulus", "1", "--tuple", "1"],
    ["reduce", "--modulus", "5", "--tuple", "1,2,3"],
    ["reduce", "--modulus", "5", "--tuple", "0,0"],
    ["enumerate", "--modulus", "5", "--size", "0"],
    ["enumerate", "--modulus", "5", "--size", "2", "--irreducible-only"],
    ["monomial-table", "--primes", "11,15"],
    ["monomial-table", "--primes-up-to", "1"],
    ["dynomial2-table", "--up-to", "1"],
    ["reduce", "--modulus", "5", "--tuple", "1,1,1", "--max-work", "-1"],
])
def test_input_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["check", "--modulus", "five", "--tuple", "1"])
    assert e.value.code == 2


def test_reduce(capsys):
    code, doc = run_json(capsys, "reduce", "--modulus", "11", "--tuple", "2,9,2,9,2,9,2,9,2,9,2,9")
    assert code == 0
    r = doc["result"]
    assert r["status"] == "reducible"
    assert r["witness"]["right"] == [6, 9, 2, 9, 6]
    assert r["witness"]["left"] == [7, 9, 2, 9, 2, 9, 2, 9, 7]
    code, out, _ = run(capsys, "reduce", "--modulus", "19", "--tuple", "6,-6,6,-6", "--balanced")
    assert code == 0 and "(6,-6,6,-6) mod 19: Irreducible" in out


def test_reduce_unknown(capsys):
    tup = ",".join(["2"] * 101)
    code, out, _ = run(capsys, "reduce", "--modulus", "101", "--tuple", tup, "--max-work", "100")
    assert code == 3 and "Unknown" in out
    code, doc = run_json(capsys, "reduce", "--modulus", "101", "--tuple", tup, "--max-work", "100")
    assert code == 3 and doc["result"]["status"] == "unknown"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--modulus", "5", "--size", "3")
    assert code == 0 and out.splitlines()[:2] == ["(1,1,1)", "(4,4,4)"]
    code, doc = run_json(capsys, "enumerate", "--modulus", "7", "--size", "5", "--classes", "--irreducible-only")
    assert code == 0 and doc["result"] == [
        {"tuple": [2, 2, 5, 4, 5], "status": "irreducible"},
        {"tuple": [2, 3, 2, 5, 5], "status": "irreducible"},
    ]
    code, out, err = run(capsys, "enumerate", "--modulus", "9", "--size", "6", "--max-work", "1000")
    assert code == 3 and "Unknown" in err


def test_monomial_table_csv_matches_reference(capsys):
    code, out, _ = run(capsys, "monomial-table", "--primes", TABLE_PRIMES, "--format", "csv")
    assert code == 0
    assert out.encode() == (DATA / "monomial_sizes_11_47.csv").read_bytes()


def test_monomial_table_md_and_json(capsys):
    code, out, _ = run(capsys, "monomial-table", "--primes", "11,13")
    lines = out.splitlines()
    assert lines[0] == "| k \\ N | 11 | 13 |" and len(lines) == 2 + 7
    code, doc = run_json(capsys, "monomial-table", "--primes-up-to", "13", "--all-k")
    assert doc["result"]["columns"] == [2, 3, 5, 7, 11, 13]
    assert doc["result"]["rows"][12]["sizes"] == [None] * 5 + [3]


def test_dynomial_table(capsys):
    code, doc = run_json(capsys, "dynomial2-table", "--up-to", "100", "--verify-paper-witnesses")
    assert code == 0
    rows = {r["N"]: r for r in doc["result"]}
    assert rows[59]["reducibility"] == "irreducible" and rows[59]["roots"] == [12, 49]
    assert rows[11]["published_witness"] == "valid"
    code, out, _ = run(capsys, "dynomial2-table", "--up-to", "40", "--format", "csv", "--balanced")
    assert out.splitlines()[:2] == [
        "N,size,reducibility,roots,witness_length,witness",
        '11,12,reducible,"{-5,-4}",5,"(-5,-2,2,-2,-5)"',
    ]


@pytest.mark.parametrize("argv", [
    ["dynomial2-table", "--up-to", "250"],
    ["monomial-table", "--primes-up-to", "60"],
    ["enumerate", "--modulus", "6", "--size", "5", "--irreducible-only"],
])
@pytest.mark.parametrize("fmt", ["md", "csv", "json"])
def test_output_independent_of_jobs(capsys, monkeypatch, argv, fmt):
    base = run(capsys, *argv, "--format", fmt, "--jobs", "1")
    assert run(capsys, *argv, "--format", fmt, "--jobs", "3") == base
    monkeypatch.setenv("FRIEZEMOD_JOBS", "2")
    assert run(capsys, *argv, "--format", fmt, "--jobs", "1") == base


def test_env_jobs_must_be_int(capsys, monkeypatch):
    monkeypatch.setenv("FRIEZEMOD_JOBS", "many")
    code, _, err = run(capsys, "monomial-table", "--primes", "11")
    assert code == 2 and "FRIEZEMOD_JOBS" in err


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "friezemod", "check", "--modulus", "5", "--tuple", "1,1,1"],
        capture_output=True, text=True,
    )
    assert p.returncode == 0 and "sign -1" in p.stdout
