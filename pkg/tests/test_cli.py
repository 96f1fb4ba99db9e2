import json

import pytest

from lexmono import cli
from lexmono.core import eps
from lexmono.oracle import from_element
from lexmono.product import Element
from lexmono.textio import format_raw

E0 = '{"D":[],"R":[1],"c":0}'
S1 = '{"D":[],"R":[],"c":1}'


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_eval(capsys):
    assert run(capsys, "eval", "E(0) E(0)") == (0, '{"D":[],"R":[1,2],"c":0}', "")
    code, out, _ = run(capsys, "eval", "E(0,1) S(1,2)", "--n", "2")
    assert code == 0 and json.loads(out)["comps"][1] == {"D": [], "R": [], "c": 1}


def test_eval_bad_level_is_a_parse_error(capsys):
    code, _, err = run(capsys, "eval", "E(0,3)", "--n", "2")
    assert code == 2 and "parse error" in err


def test_compose_inverse(capsys):
    assert run(capsys, "compose", E0, '{"D":[],"R":[],"c":2}')[:2] == (0, '{"D":[],"R":[3],"c":2}')
    assert run(capsys, "inverse", E0)[:2] == (0, '{"D":[1],"R":[],"c":0}')
    code, _, _ = run(capsys, "compose", E0, '{"n":2,"comps":[%s,%s]}' % (E0, E0))
    assert code == 1


def test_relations(capsys):
    assert run(capsys, "green", E0, S1, "--rel", "r")[1] == "true"
    assert run(capsys, "green", E0, S1, "--rel", "l")[1] == "false"
    assert run(capsys, "sigma", E0)[1] == "0 1"
    a = '{"n":2,"comps":[%s,%s]}' % (E0, S1)
    b = '{"n":2,"comps":[{"D":[],"R":[6],"c":0},%s]}' % S1
    assert run(capsys, "cong", a, b, "--set", "1")[1] == "true"
    assert run(capsys, "cong", a, b, "--set", "2")[1] == "false"


def test_factor(capsys):
    assert run(capsys, "factor", '{"D":[],"R":[1,2],"c":0}')[1] == "E(0) E(0)"
    code, out, _ = run(capsys, "factor-o", '{"D":[1],"R":[4],"c":2}')
    assert out.splitlines() == ['{"D":[1],"R":[],"c":0}', '{"D":[],"R":[4],"c":2}']


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", E0, E0)
    assert code == 0 and sorted(out.splitlines()) == sorted(
        ['{"D":[1],"R":[1],"c":0}', '{"D":[],"R":[],"c":0}'])
    assert run(capsys, "solve", E0, E0, "--side", "left")[0] == 0


def test_auto(capsys):
    a = '{"n":2,"comps":[%s,%s]}' % (E0, S1)
    assert run(capsys, "auto", a, "--perm", "2,1")[1] == '{"n":2,"comps":[%s,%s]}' % (S1, E0)
    assert run(capsys, "auto", E0, "--unit", "1")[1] == '{"D":[],"R":[0],"c":0}'
    assert run(capsys, "auto", a, "--perm", "1,1")[0] == 1


def test_validate_and_shadow(capsys, tmp_path):
    code, raw, _ = run(capsys, "shadow", E0, "--window", "6")
    assert code == 0
    path = tmp_path / "raw.json"
    path.write_text(raw)
    assert run(capsys, "validate", str(path))[1] == E0
    mixing = {"n": 2, "W": 1, "table": [[1, k, 2, k] for k in (-1, 0, 1)]
              + [[2, k, 1, k] for k in (-1, 0, 1)],
              "tails": [{"cL": 0, "cR": 0}, {"cL": 0, "cR": 0}]}
    code, _, err = run(capsys, "validate", json.dumps(mixing))
    assert code == 1 and "coordinate-mixing" in err
    assert run(capsys, "shadow", '{"D":[30],"R":[],"c":0}', "--window", "5")[0] == 1


def test_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(E0))
    assert run(capsys, "inverse", "-")[1] == '{"D":[1],"R":[],"c":0}'


def test_parse_errors(capsys):
    assert run(capsys, "inverse", '{"D":[2,1],"R":[],"c":0}')[0] == 2
    code, _, err = run(capsys, "inverse", '{"D":[1,')
    assert code == 2 and "line 1" in err


def test_rand(capsys, monkeypatch):
    first = run(capsys, "rand", "--seed", "7", "--n", "2")
    assert first == run(capsys, "rand", "--seed", "7", "--n", "2")
    monkeypatch.setenv("LEXMONO_SEED", "7")
    assert run(capsys, "rand", "--n", "2") == first
    assert run(capsys, "rand", "--seed", "8", "--n", "2") != first


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["green", E0, E0, "--rel", "q"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_check_quick(capsys):
    code, out, _ = run(capsys, "check", "--quick")
    assert code == 0
    assert out.splitlines()[-1] == "9/9 checks passed"
