import json

import jsonschema
import pytest

CASES = [
    ("pp", ["--pair", "so(3,1)>so(2,1)"]),
    ("pp", ["--pair", "sp(3,R)>sp(2,R)+sp(1,R)", "--seed", "3", "--samples", "2"]),
    ("bb", ["--pair", "F2:n=2"]),
    ("bb", ["--pair", "sp(3,C)>sp(2,C)+sp(1,C)"]),
    ("triple", ["--algebra", "su(2,1)", "--samples", "2"]),
    ("classify", ["--pair", "H4:p=1,q=1"]),
    ("classify", ["--pair", "F3:n=1 + so(3,1)>so(3)"]),
    ("classify", ["--pair", "sl(4,R)>so(2,2)"]),
    ("shintani", ["--n", "2", "--lambda", "5,0", "--nu", "2"]),
    ("shintani", ["--n", "2", "--lambda", "5,1", "--nu", "2"]),
    ("roots", ["--algebra", "su(2,1)"]),
    ("rho", ["--algebra", "so(5)"]),
    ("dominant", ["--c", "3", "--rho", "1/2", "--side", "minus"]),
    ("explain", ["--pair", "so(3,1)>so(2,1)"]),
]


@pytest.mark.parametrize("cmd,args", CASES)
def test_output_matches_schema(run_cli, schema, cmd, args):
    out = run_cli(cmd, *args).stdout
    jsonschema.validate(json.loads(out), schema(cmd))


def test_spec_examples(run_cli):
    pp = json.loads(run_cli("pp", "--pair", "so(3,1)>so(2,1)").stdout)
    assert pp["holds"] is True
    sh = json.loads(run_cli("shintani", "--n", "2", "--lambda", "5,0", "--nu", "2").stdout)
    assert sh["dim_mod"] == 1
    cl = json.loads(run_cli("classify", "--pair", "H4:p=1,q=1").stdout)
    assert cl["finite"] is True and cl["bounded"] is False
    dom = json.loads(run_cli("dominant", "--c", "3", "--rho", "1/2", "--side", "minus").stdout)
    assert dom["value"] == "-5/2"


def test_deterministic(run_cli):
    args = ("pp", "--pair", "F5:p=1,q=1", "--seed", "7")
    assert run_cli(*args).stdout == run_cli(*args).stdout


def test_exit_codes(run_cli):
    run_cli("pp", "--pair", "so(3,1)>", expect=2)
    run_cli("pp", "--pair", "so(3,1)>so(2,1)", "--bogus", expect=2)
    run_cli("shintani", "--n", "2", "--lambda", "1", "--nu", "2", expect=2)
    run_cli("rho", "--algebra", "e6(-26)", expect=2)
    run_cli("pp", "--pair", "E4", expect=2)


def test_text_format(run_cli):
    out = run_cli("rho", "--algebra", "sl(3)", "--format", "text").stdout
    assert "rho: [1, 0, -1]" in out
    out = run_cli("explain", "--pair", "sp(3,R)>sp(2,R)+sp(1,R)", "--format", "text").stdout
    assert "finite: no" in out
