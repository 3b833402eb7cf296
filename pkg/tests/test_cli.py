import json
import subprocess
import sys

import pytest

from wolfform.cli import main
from wolfform.poly import parse_polynomial
from wolfform.spaces import presentation, parse_space


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_gi_json(capsys):
    code, out, _ = run_cli("cohomology", "--space", "gi", "--json",
                           capsys=capsys)
    assert code == 0
    assert out == '{"betti":[1,0,0,0,1,0,0,0,1]}\n'


def test_cohomology_text(capsys):
    code, out, _ = run_cli("cohomology", "--space", "gr-c:n=2", capsys=capsys)
    assert code == 0
    assert "H^4 = <l^2, x>" in out
    assert "betti: 1 0 1 0 2 0 1 0 1" in out


def test_model_json_structure(capsys):
    code, out, _ = run_cli("model", "--space", "fi", "--euler", "a=1",
                           "--json", capsys=capsys)
    assert code == 0
    document = json.loads(out)
    assert document["space"] == "fi"
    assert document["euler"] == "x"
    assert document["generators_by_degree"]["8"] == ["y"]
    assert [k for k, v in enumerate(document["betti"]) if v] == [0, 8, 23, 31]


def test_model_euler_round_trips(capsys):
    code, out, _ = run_cli("model", "--space", "gr-c:n=2", "--json",
                           capsys=capsys)
    assert code == 0
    document = json.loads(out)
    ring = presentation(parse_space(document["space"]))
    parsed = parse_polynomial(document["euler"], ring.generators)
    assert parsed == ring.polynomial("-1/4*l^2 + x")


def test_classify_json(capsys):
    code, out, _ = run_cli("classify", "--space", "gr-c:n=2", "--euler",
                           "a=1,b=0", "--json", capsys=capsys)
    assert code == 0
    document = json.loads(out)
    assert document["formal"] is False
    assert document["justification"] == "Thm4.4"
    witness = document["witness"]
    assert witness["inputs"] == ["l", "l", "x"]
    assert witness["trivial"] is False
    assert witness["representative"] == "1/2*l^2*u - x*u"
    assert witness["indeterminacy_dim"] == 0


def test_classify_formal_has_no_witness(capsys):
    code, out, _ = run_cli("classify", "--space", "gr-r:n=5", "--euler",
                           "a=7,b=-3", "--json", capsys=capsys)
    assert code == 0
    document = json.loads(out)
    assert document["formal"] is True
    assert document["justification"] == "Thm5.6"
    assert document["witness"] is None


def test_classify_sphere(capsys):
    code, out, _ = run_cli("classify", "--space", "sphere:k=4", "--json",
                           capsys=capsys)
    assert code == 0
    document = json.loads(out)
    assert document["formal"] is True
    assert document["justification"] == "SphereRP"
    assert document["euler"] is None


def test_massey_json(capsys):
    code, out, _ = run_cli("massey", "--space", "gr-c:n=2", "--euler",
                           "a=1,b=0", "l", "l", "x", "--json", capsys=capsys)
    assert code == 0
    document = json.loads(out)
    assert document == {"defined": True, "trivial": False,
                        "representative": "1/2*l^2*u - x*u",
                        "indeterminacy_dim": 0}


def test_massey_representative_round_trips(capsys):
    from wolfform.model import build_model, class_from_string
    from wolfform.spaces import EulerClassSpec, complex_grassmannian
    code, out, _ = run_cli("massey", "--space", "gr-c:n=2", "--euler",
                           "a=1,b=0", "l", "l", "x", "--json", capsys=capsys)
    assert code == 0
    text = json.loads(out)["representative"]
    model = build_model(complex_grassmannian(2), EulerClassSpec(1, 0))
    parsed = class_from_string(model, text)
    assert parsed.fiber_part and parsed.cocycle


def test_cohomology_max_degree(capsys):
    code, out, _ = run_cli("cohomology", "--space", "gi", "--max-degree", "4",
                           "--json", capsys=capsys)
    assert code == 0
    assert out == '{"betti":[1,0,0,0,1]}\n'


def test_massey_undefined(capsys):
    code, out, _ = run_cli("massey", "--space", "gr-c:n=2", "--euler",
                           "a=0,b=1", "l", "l", "l", "--json", capsys=capsys)
    assert code == 0
    assert json.loads(out)["defined"] is False


def test_massey_fiber_class_input(capsys):
    code, out, _ = run_cli("massey", "--space", "gr-c:n=2", "--euler",
                           "a=1,b=0", "l^2*u - 2*x*u", "l", "l",
                           "--json", capsys=capsys)
    assert code == 0
    assert json.loads(out)["defined"] is True


def test_massey_rejects_non_cocycle(capsys):
    code, _, err = run_cli("massey", "--space", "gr-c:n=2", "--euler",
                           "a=1,b=0", "u", "l", "l", capsys=capsys)
    assert code == 2
    assert "cocycle" in err


def test_table_csv(capsys):
    code, out, err = run_cli("table", "--space", "gr-c:n=2",
                             "--grid", "0..1", capsys=capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "space,a,b,c,formal,justification,witness_trivial"
    assert "gr-c:n=2,1,0,0,false,Thm4.4,false" in lines
    assert "gr-c:n=2,0,0,0,true,ProductModel," in lines
    assert "cross-check: 4 points, 0 failures" in err


def test_table_negative_grid(capsys):
    code, out, _ = run_cli("table", "--space", "gr-c:n=2", "--grid", "-1..0",
                           capsys=capsys)
    assert code == 0
    assert "gr-c:n=2,-1,0,0,false,Thm4.4,false" in out


def test_table_json(capsys):
    code, out, _ = run_cli("table", "--space", "gr-r:n=4", "--grid", "0..1",
                           "--json", capsys=capsys)
    assert code == 0
    document = json.loads(out)
    assert document["cross_check"] == {"points": 8, "failures": 0}
    formal = {(p["a"], p["b"], p["c"]): p["formal"]
              for p in document["points"]}
    assert formal[("1", "1", "0")] is False
    assert formal[("1", "1", "1")] is True


def test_exit_code_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    capsys.readouterr()
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["classify", "--space", "gi", "--unknown-flag"])
    capsys.readouterr()
    assert info.value.code == 1


def test_exit_code_domain_error(capsys):
    assert run_cli("classify", "--space", "gr-c:n=0", capsys=capsys)[0] == 2
    assert run_cli("cohomology", "--space", "sphere:k=1", capsys=capsys)[0] == 2
    assert run_cli("classify", "--space", "gi", "--euler", "a=oops",
                   capsys=capsys)[0] == 2
    assert run_cli("table", "--space", "gi", "--grid", "2..1",
                   capsys=capsys)[0] == 2


def test_cli_output_deterministic():
    argv = [sys.executable, "-m", "wolfform", "classify", "--space",
            "gr-r:n=8", "--euler", "a=1,b=-1", "--json"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
