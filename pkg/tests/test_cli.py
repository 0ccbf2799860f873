import json

import pytest
from hypothesis import given, settings, strategies as st

from dpjordan.cli import main
from dpjordan.errors import SpecError
from dpjordan.groupspec import build, parse_spec


@pytest.mark.parametrize("text, order", [
    ("s4", 24), ("a5", 60), ("cyclic:12", 12), ("dihedral:5", 10), ("wd5", 1920),
    ("ex-dp4-32", 32), ("ex-dp6:n=5", 100), ("ex-dp8-product", 7200), ("ex-dp8-s5", 120),
    ("product(s3,cyclic:2)", 12), ("swapwreath(cyclic:3)", 18),
    ("perm:5:(1 2 3 4 5);(1 2)", 120), ("perm:3:", 1),
    ("product(swapwreath(cyclic:2),perm:4:(1 2)(3 4))", 16),
])
def test_specs_build(text, order):
    spec = parse_spec(text)
    assert build(spec).order == order
    assert parse_spec(str(spec)) == spec


@pytest.mark.parametrize("bad", ["", "s", "x5", "cyclic:0", "dihedral:2", "ex-dp6:n=9", "ex-dp6:n=2",
                                 "product(s3)", "swapwreath(s3,s3)", "perm:3:(1 4)", "product(s3,(s2)"])
def test_bad_specs(bad):
    with pytest.raises(SpecError):
        parse_spec(bad)


def test_canonical_form():
    assert str(parse_spec(" perm:4:(2 1)(4 3) ; (3 2 1) ")) == "perm:4:(1 2)(3 4);(1 3 2)"
    assert str(parse_spec("product( s3 , a4 )")) == "product(s3,a4)"


leaf = st.sampled_from(["s3", "a4", "cyclic:6", "dihedral:4", "ex-dp4-32", "ex-dp6:n=7"])
specs = st.recursive(leaf, lambda inner: st.one_of(
    st.tuples(inner, inner).map(lambda p: f"product({p[0]},{p[1]})"),
    inner.map(lambda s: f"swapwreath({s})")), max_leaves=4)


@settings(max_examples=60, deadline=None)
@given(specs)
def test_spec_round_trip(text):
    spec = parse_spec(text)
    assert parse_spec(str(spec)) == spec
    assert str(parse_spec(str(spec))) == str(spec)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jordan_command(capsys):
    code, out, _ = run(capsys, "jordan", "s5")
    assert code == 0 and "J        120" in out
    code, out, _ = run(capsys, "--json", "jordan", "ex-dp6:n=5")
    assert code == 0 and json.loads(out)["jordan"] == 4
    code, out, _ = run(capsys, "jordan", "cyclic:12", "--json")
    assert json.loads(out)["jordan"] == 1


def test_jordan_lower_bound_marker(capsys):
    code, out, _ = run(capsys, "jordan", "ex-dp6:n=5", "--subgroup-cap", "16")
    assert code == 0 and "lower-bound-only" in out


def test_jordan_parse_error(capsys):
    code, _, err = run(capsys, "jordan", "q7")
    assert code == 2 and "error" in err


def test_lines_command(capsys):
    code, out, _ = run(capsys, "--json", "lines", "--degree", "4")
    d = json.loads(out)
    assert code == 0 and d["line_count"] == 16 and d["automorphism_order"] == 1920
    code, out, _ = run(capsys, "lines", "--degree", "6")
    assert "hexagon" in out and "automorphism group order: 12" in out
    code, out, _ = run(capsys, "--json", "lines", "--degree", "9")
    assert json.loads(out)["line_count"] == 0
    code, out, _ = run(capsys, "--json", "lines", "--degree", "3")
    assert json.loads(out)["automorphism_order"] == 51840
    assert run(capsys, "lines", "--degree", "2")[0] == 2


def test_weyl_command(capsys):
    code, out, _ = run(capsys, "--json", "weyl", "(1 2 3 4 5)")
    assert code == 0 and json.loads(out)["fixed_lines"] == ["Q"]
    code, out, _ = run(capsys, "weyl", "i12")
    assert "(E1 E2)" in out
    code, _, err = run(capsys, "weyl", "i1")
    assert code == 2 and "odd" in err


def test_verify_command(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "verify", "--only", "lemma-iota12", "--out", str(out), "--deterministic")
    assert code == 0 and "PASS  lemma-iota12" in text
    assert json.loads(out.read_text())["summary"]["pass_count"] == 1
    assert run(capsys, "verify", "--out", "/nonexistent/x.json")[0] == 2
    assert run(capsys, "verify", "--only", "nope", "--out", str(out))[0] == 2


def test_verify_failure_exit_code(tmp_path, capsys, monkeypatch):
    from dpjordan import cli, verify

    real = verify.run_all
    monkeypatch.setattr(cli, "run_all",
                        lambda cfg: real(verify.VerifyConfig(only="wd5-basics", mutations=frozenset({"flip-gram"}))))
    assert run(capsys, "verify", "--out", str(tmp_path / "r.json"))[0] == 1


def test_config_file_precedence(tmp_path, capsys):
    conf = tmp_path / "c.conf"
    out_conf = tmp_path / "from_conf.json"
    out_flag = tmp_path / "from_flag.json"
    conf.write_text(f"# settings\nonly = lemma-iota12\nout = {out_conf}\ndeterministic = true  # stable\n")
    assert run(capsys, "--config", str(conf), "verify")[0] == 0
    assert out_conf.exists()
    report = json.loads(out_conf.read_text())
    assert report["config"]["only"] == "lemma-iota12" and report["config"]["deterministic"] is True
    assert run(capsys, "--config", str(conf), "verify", "--out", str(out_flag), "--only", "line-counts")[0] == 0
    report = json.loads(out_flag.read_text())
    assert [c["check_id"] for c in report["checks"]] == ["line-counts"]


@pytest.mark.parametrize("body", ["bogus = 1\n", "subgroup_cap = many\n", "no equals sign\n",
                                  "deterministic = maybe\n"])
def test_bad_config_file(tmp_path, capsys, body):
    conf = tmp_path / "c.conf"
    conf.write_text(body)
    assert run(capsys, "--config", str(conf), "verify", "--only", "line-counts",
               "--out", str(tmp_path / "r.json"))[0] == 2


def test_missing_config_file(capsys):
    assert run(capsys, "--config", "/nonexistent.conf", "jordan", "s3")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "lines")[0] == 2
