import json

from xfam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_threshold(capsys):
    code, out, _ = run(capsys, "threshold", "--k", "2", "--l", "2", "--t", "1")
    assert code == 0 and out.strip() == "259"


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--formula", "a", "--args", "x=2", "t=1", "n=6")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "eval", "--formula", "tilde-a", "--args", "x=2", "t=1", "n=259")
    assert code == 0 and out.strip() == "3/1"
    code, _, err = run(capsys, "eval", "--formula", "a", "--args", "x=2")
    assert code == 2 and "missing" in err


def test_construct_and_classify_roundtrip(capsys, tmp_path):
    path = tmp_path / "fam.txt"
    code, _, _ = run(capsys, "construct", "--kind", "A", "--n", "6", "--k", "3", "--t", "1", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.startswith("# n=6 k=3")
    code, out, _ = run(capsys, "classify", "--in", str(path), "--theorem", "1.2", "--t", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert payload["results"]["template"] == "T1.2-i"


def test_classify_missing_file(capsys):
    code, _, err = run(capsys, "classify", "--in", "/nonexistent/fam.txt", "--theorem", "1.2", "--t", "1")
    assert code == 2 and "cannot read" in err


def test_audit_json_and_determinism(capsys):
    args = ["audit", "--lemma", "4.4ii", "--grid", "t=1;k=2,3;l=2,3;n=600,1300"]
    code, out1, _ = run(capsys, *args)
    assert code == 0
    code, out2, _ = run(capsys, *args)
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["verdict"] == "pass"
    assert payload["results"][0]["violations"] == 0


def test_audit_csv(capsys):
    code, out, _ = run(capsys, "audit", "--lemma", "eq9", "--grid", "t=1;k=2;l=2;n=259", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("lemma,verdict")
    assert len(lines) == 3  # both (x, y) orders of one point


def test_search(capsys):
    code, out, _ = run(
        capsys, "search", "--n", "5", "--k1", "2", "--k2", "2", "--t", "1", "--min-tau", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["best_product"] == "16"
    assert payload["results"]["at_proved_threshold"] is False


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate-maximal", "--n", "5", "--k", "2", "--t", "1", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["results"]["count"] == 15


def test_classify_all(capsys):
    code, out, _ = run(capsys, "classify-all", "--n", "5", "--k", "2", "--t", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["unmatched"] == []
    assert payload["results"]["with_min_cover_t_plus_1"] == 10


def test_verify_constructions(capsys):
    code, out, _ = run(
        capsys,
        "verify-constructions",
        "--grid",
        "t=1;k=2,3;l=2,3;n=l+2..8",
        "--kinds",
        "AA,BB",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"


def test_leading_term(capsys):
    code, out, _ = run(
        capsys, "leading-term", "--pair", "AA", "--k", "3", "--l", "3", "--t", "1", "--n-seq", "1000,100000"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["constant"] == 9


def test_bad_construct_args(capsys):
    code, _, err = run(capsys, "construct", "--kind", "B", "--n", "6", "--k", "2", "--t", "1", "--quad", "1 2 2 4")
    assert code == 2 and "error" in err
