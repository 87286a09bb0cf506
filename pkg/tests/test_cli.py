import json

from gl2zeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_chartable_ascii(capsys):
    code, out = run(capsys, "chartable", "--group", "pgl2", "--q", "3")
    assert code == 0
    assert "steinberg:0" in out and "cuspidal:2" in out
    assert "c4:" in out


def test_chartable_json_round_trip(capsys):
    code, out = run(capsys, "chartable", "--group", "gl2", "--q", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "mednykh-zeta/1"
    assert len(doc["irreps"]) == 15
    again = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    assert again == out  # byte-identical round trip


def test_chartable_csv(capsys):
    code, out = run(capsys, "chartable", "--group", "gl2", "--q", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("irrep,dim,fs,")
    assert len(lines) == 4  # header + 3 irreps


def test_deterministic_output(capsys):
    _, out1 = run(capsys, "chartable", "--group", "gl2", "--q", "5", "--format", "json")
    _, out2 = run(capsys, "chartable", "--group", "gl2", "--q", "5", "--format", "json")
    assert out1 == out2


def test_zeta_exact(capsys):
    code, out = run(capsys, "zeta", "--group", "gl2", "--q", "3", "--s", "2",
                    "--format", "json")
    assert code == 0
    assert json.loads(out)["generic"] == "437/144"


def test_zeta_both_match(capsys):
    code, out = run(capsys, "zeta", "--group", "pgl2", "--q", "5", "--s", "3", "--both",
                    "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["match"] is True
    assert doc["generic"] == doc["closed_form"]
    assert doc["difference"] == "0"


def test_zeta_insert(capsys):
    code, out = run(capsys, "zeta", "--group", "gl2", "--q", "3", "--s", "0",
                    "--insert", "c2:0", "--both", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["generic"] == "3/4"
    assert doc["match"] is True


def test_zeta_fs_and_double(capsys):
    code, out = run(capsys, "zeta", "--group", "gl2", "--q", "4", "--s", "1",
                    "--fs", "+1", "--both", "--format", "json")
    assert code == 0 and json.loads(out)["match"] is True
    code, out = run(capsys, "zeta", "--group", "gl2", "--q", "3", "--s", "0",
                    "--double", "--format", "json")
    assert code == 0 and json.loads(out)["generic"] == "56"


def test_zeta_float_argument(capsys):
    code, out = run(capsys, "zeta", "--group", "gl2", "--q", "3", "--s", "1.5",
                    "--both", "--format", "json")
    assert code == 0
    assert json.loads(out)["match"] is True


def test_count_with_oracle(capsys):
    code, out = run(capsys, "count", "--group", "gl2", "--q", "3", "--genus", "2",
                    "--orientable", "--oracle", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "MATCH"
    assert doc["value"] == doc["oracle"] == "335616"


def test_count_nonorientable(capsys):
    code, out = run(capsys, "count", "--group", "gl2", "--q", "3", "--genus", "1",
                    "--non-orientable", "--oracle", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == "14" and doc["verdict"] == "MATCH"


def test_count_quotient_with_insert(capsys):
    code, out = run(capsys, "count", "--group", "gl2", "--q", "3", "--genus", "1",
                    "--orientable", "--insert", "c2:0", "--quotient", "--oracle",
                    "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "MATCH"


def test_count_cache(tmp_path, capsys):
    cache = str(tmp_path / "thetas")
    code, out1 = run(capsys, "count", "--group", "gl2", "--q", "2", "--genus", "3",
                     "--orientable", "--oracle", "--cache", cache, "--format", "json")
    assert code == 0
    cached = json.loads((tmp_path / "thetas" / "theta-gl-q2-torus.json").read_text())
    assert cached["schema"] == "mednykh-zeta/1"
    assert all(isinstance(v, str) for v in cached["values"].values())
    code, out2 = run(capsys, "count", "--group", "gl2", "--q", "2", "--genus", "3",
                     "--orientable", "--oracle", "--cache", cache, "--format", "json")
    assert code == 0
    assert json.loads(out1)["value"] == json.loads(out2)["value"]


def test_fusion_triple(capsys):
    code, out = run(capsys, "fusion", "--q", "3", "--triple", "steinberg:0",
                    "steinberg:0", "steinberg:0", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["bracket"] == "1" and doc["match"] is True


def test_fusion_all(capsys):
    code, out = run(capsys, "fusion", "--q", "3", "--all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "MATCH"
    assert len(doc["triples"]) == 120


def test_verify_passes(capsys):
    code, out = run(capsys, "verify", "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["failed"] == 0
    assert doc["passed"] >= 20
    names = {c["formula"] for c in doc["checks"]}
    assert "zeta-at-minus-two-burnside" in names


def test_show_field(capsys):
    code, out = run(capsys, "show-field", "--q", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["modpoly"] == [1, 1, 1]


def test_exit_code_usage_errors(capsys):
    assert main(["zeta", "--q", "6", "--s", "0"]) == 1  # not a prime power
    capsys.readouterr()
    assert main(["zeta", "--group", "gl2", "--q", "3", "--s", "0",
                 "--insert", "c3:1,1"]) == 1  # repeated eigenvalue
    capsys.readouterr()
    assert main(["chartable"]) == 1  # missing --q
    capsys.readouterr()
    assert main(["fusion", "--q", "3", "--triple", "cuspidal:4",
                 "cuspidal:4", "cuspidal:4"]) == 1  # non-primitive exponent
    capsys.readouterr()


def test_exit_code_cap(capsys):
    assert main(["count", "--group", "gl2", "--q", "7", "--genus", "1",
                 "--orientable", "--oracle"]) == 3
    capsys.readouterr()


def test_classspec_projection_for_pgl(capsys):
    code, out = run(capsys, "zeta", "--group", "pgl2", "--q", "3", "--s", "0",
                    "--insert", "c1:1", "--format", "json")
    assert code == 0
    assert json.loads(out)["insertions"] == ["c1:0"]  # central -> identity
