import json

from khconc import build_ck, to_json, unit_complex, shift
from khconc.cli import main


RIGHT_TREFOIL = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_s_trefoil(capsys):
    code, out, _ = run(capsys, "s", RIGHT_TREFOIL, "--char", "0,2")
    assert code == 0
    assert out.strip() == "s_0 = 2, s_2 = 2"


def test_s_rejects_composite_char(capsys):
    code, _, err = run(capsys, "s", RIGHT_TREFOIL, "--char", "4")
    assert code == 1
    assert "characteristic" in err


def test_stair_examples(capsys):
    code, out, _ = run(capsys, "stair", "S(2)*S(3)")
    assert code == 0
    assert out.strip() == "Σ_(6)"
    code, out, _ = run(capsys, "stair", "S(2,4) * S(2)^-1 * S(4)^-1")
    assert code == 0
    assert out.strip() == "Σ_()"


def test_sz_from_json_file(tmp_path, capsys):
    path = tmp_path / "ck1.json"
    path.write_text(to_json(build_ck(1)))
    code, out, _ = run(capsys, "sz", str(path))
    assert code == 0
    assert out.strip() == "(0, 2), gl = 1"


def test_kh_json_roundtrips(capsys):
    code, out, _ = run(capsys, "kh", "PD[]", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["generators"] == [{"id": payload["generators"][0]["id"], "t": 0, "q": 0}]
    assert payload["diff"] == []


def test_kh_grid(capsys):
    code, out, _ = run(capsys, "kh", RIGHT_TREFOIL)
    assert code == 0
    assert "q\\t" in out


def test_zeq_verdict(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(to_json(build_ck(1)))
    b.write_text(to_json(build_ck(2)))
    code, out, _ = run(capsys, "zeq", str(a), str(b))
    assert code == 0
    assert "Z-equivalent: no" in out
    code, out, _ = run(capsys, "zeq", str(a), str(a))
    assert code == 0
    assert "Z-equivalent: yes" in out


def test_dist_output(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(to_json(unit_complex()))
    b.write_text(to_json(shift(unit_complex(), 0, 4)))
    code, out, _ = run(capsys, "dist", str(a), str(b))
    assert code == 0
    assert out.strip() == "d = 2"
    code, out, _ = run(capsys, "dist", str(a), str(b), "--bound", "1")
    assert code == 0
    assert out.strip() == "d > 1"


def test_validate_command(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(to_json(build_ck(1)))
    code, out, _ = run(capsys, "validate", str(good))
    assert code == 0 and out.strip() == "valid"
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "generators": [{"id": "a", "t": 0, "q": 0}, {"id": "b", "t": 1, "q": 0}],
                "diff": [{"from": "a", "to": "b", "coeff": "1", "gpow": 3}],
            }
        )
    )
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1
    assert "G-power" in out


def test_input_error_is_exit_one(capsys):
    code, _, err = run(capsys, "s", "no-such-file.json")
    assert code == 1
    assert "no-such-file.json" in err


def test_crossing_cap_is_exit_two(capsys):
    code, _, err = run(capsys, "s", "BR[2; 1,1,1,1,1]", "--cap", "3")
    assert code == 2
    assert "cap" in err


def test_crossing_cap_env_var(capsys, monkeypatch):
    monkeypatch.setenv("KHCONC_CROSSING_CAP", "3")
    code, _, err = run(capsys, "s", "BR[2; 1,1,1,1,1]")
    assert code == 2
    monkeypatch.setenv("KHCONC_CROSSING_CAP", "6")
    code, out, _ = run(capsys, "s", "BR[2; 1,1,1,1,1]", "--char", "0")
    assert code == 0
    assert out.strip() == "s_0 = 4"


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "kh", RIGHT_TREFOIL, "--json")
    _, out2, _ = run(capsys, "kh", RIGHT_TREFOIL, "--json")
    assert out1 == out2
