import json

import pytest

from eqmon import cli, fmon, rees
from eqmon.words import W


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def wfile(tmp_path):
    p = tmp_path / "w.txt"
    p.write_text("x y\n", encoding="utf-8")
    return str(p)


@pytest.fixture
def idfile(tmp_path):
    p = tmp_path / "ids.txt"
    p.write_text("x x = x x x\nx y = y x\n", encoding="utf-8")
    return str(p)


@pytest.fixture
def sigmafile(tmp_path):
    p = tmp_path / "sigma.txt"
    p.write_text("x x = x x x\nx x y = x y x\nx y x = y x x\n", encoding="utf-8")
    return str(p)


# ---------------------------------------------------------------- word


def test_word_info(capsys):
    code, out, _ = run(capsys, "word", "info", "x z x y t y")
    assert code == 0
    assert "simple: ['t', 'z']" in out


def test_word_factors(capsys):
    code, out, _ = run(capsys, "word", "factors", "x y")
    assert code == 0
    assert out.splitlines() == ["1", "x", "y", "x y"]


def test_word_canon_delete_restrict(capsys):
    assert run(capsys, "word", "canon", "z x z")[1].strip() == "a b a"
    assert run(capsys, "word", "delete", "x z x y t y", "--letters", "z")[1].strip() == "x x y t y"
    assert run(capsys, "word", "restrict", "x z x y", "--letters", "x y")[1].strip() == "x x y"


def test_word_bad_token_exits_3(capsys):
    code, _, err = run(capsys, "word", "canon", "X!")
    assert code == 3
    assert "error" in err


# ---------------------------------------------------------------- ident


def test_ident_deduce_and_check_round_trip(capsys, tmp_path, sigmafile):
    code, out, _ = run(
        capsys, "ident", "deduce", "--sigma", sigmafile,
        "--from", "x y z x t1 y", "--to", "y x z x t1 y", "--json",
    )
    assert code == 0
    derivation = tmp_path / "d.json"
    derivation.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "ident", "check", "--sigma", sigmafile, str(derivation))
    assert code == 0 and out.strip() == "valid"
    # corrupting one chain word invalidates it
    blob = json.loads(derivation.read_text(encoding="utf-8"))
    blob["chain"][0] = "t1"
    derivation.write_text(json.dumps(blob), encoding="utf-8")
    code, out, _ = run(capsys, "ident", "check", "--sigma", sigmafile, str(derivation))
    assert code == 1 and out.strip() == "invalid"


def test_ident_deduce_budget_exit(capsys, tmp_path):
    sigma = tmp_path / "s.txt"
    sigma.write_text("x x = x x x\n", encoding="utf-8")
    code, out, _ = run(
        capsys, "ident", "deduce", "--sigma", str(sigma),
        "--from", "x", "--to", "y", "--max-steps", "50",
    )
    assert code == 2
    assert "not found" in out


# ---------------------------------------------------------------- rees


def test_rees_build_and_elements(capsys, wfile):
    code, out, _ = run(capsys, "rees", "build", wfile, "--json")
    assert code == 0
    assert json.loads(out) == {"generators": ["x y"], "size": 5, "identity": "1"}
    code, out, _ = run(capsys, "rees", "elements", wfile)
    assert out.splitlines() == ["1", "x", "y", "x y", "0"]


def test_rees_check_exit_codes(capsys, wfile, idfile, tmp_path):
    code, out, _ = run(capsys, "rees", "check", wfile, idfile)
    assert code == 1  # commutativity fails in this monoid
    assert "holds" in out and "fails" in out
    good = tmp_path / "good.txt"
    good.write_text("x x = x x x\n", encoding="utf-8")
    assert run(capsys, "rees", "check", wfile, str(good))[0] == 0
    assert run(capsys, "rees", "check", wfile, str(good), "--naive")[0] == 0


def test_rees_check_json_is_deterministic(capsys, wfile, idfile):
    _, out1, _ = run(capsys, "rees", "check", wfile, idfile, "--json")
    _, out2, _ = run(capsys, "rees", "check", wfile, idfile, "--json")
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["verdicts"][1]["witness"] == {"x": "x", "y": "y"}


# ---------------------------------------------------------------- fmon


def test_fmon_check_from_rees(capsys, wfile, idfile):
    code, out, _ = run(capsys, "fmon", "check", "--rees", wfile, idfile)
    assert code == 1
    assert "fails" in out


def test_fmon_theory(capsys, wfile):
    code, out, _ = run(capsys, "fmon", "theory", "--rees", wfile, "--max-len", "3", "--letters", "2")
    assert code == 0
    lines = out.splitlines()
    assert "a a = a a a" in lines
    assert "a b = b a" not in lines


def test_fmon_isoterm(capsys, wfile):
    code, out, _ = run(
        capsys, "fmon", "isoterm", "--rees", wfile, "--word", "x y x", "--bound", "4", "--json"
    )
    assert code == 1
    assert json.loads(out)["status"] == "not_isoterm"


def test_fmon_product(capsys, tmp_path):
    a = tmp_path / "a.json"
    a.write_text(json.dumps(fmon.from_rees(rees.build([W("x")])).to_dict()), encoding="utf-8")
    out_path = tmp_path / "prod.json"
    code, _, _ = run(capsys, "fmon", "product", str(a), str(a), "-o", str(out_path))
    assert code == 0
    prod = fmon.FiniteMonoid.from_dict(json.loads(out_path.read_text(encoding="utf-8")))
    assert prod.size == 9


# ---------------------------------------------------------------- family


def test_family_commands(capsys):
    code, out, _ = run(capsys, "family", "a-word", "--n", "1", "--m", "1", "--perm", "1 2")
    assert code == 0
    assert out.splitlines() == ["z1 t1 x z1 z2 x t2 z2", "z1 t1 z1 z2 x x t2 z2"]
    code, out, _ = run(capsys, "family", "basis", "--n-max", "1", "--m-max", "1")
    assert len(out.splitlines()) == 8
    code, out, _ = run(capsys, "family", "variety", "zigzag:1")
    assert out.splitlines() == ["x z x y t y", "x t1 x"]
    code, out, _ = run(capsys, "family", "step2", "--n", "1", "--m", "1", "--perm", "2 1", "--json")
    assert json.loads(out)["case"] == "high"
    assert run(capsys, "family", "step1")[1].splitlines()[0].startswith("z1 t1 z2 t2 c c")


def test_family_bad_perm_exits_3(capsys):
    code, _, err = run(capsys, "family", "a-word", "--n", "1", "--m", "1", "--perm", "1 1")
    assert code == 3


# ---------------------------------------------------------------- lattice


def test_lattice_builtin_and_check(capsys, tmp_path):
    code, out, _ = run(capsys, "lattice", "builtin", "fig2")
    assert code == 0
    assert "modular: 0 x y c p r 1" in out
    lat = tmp_path / "pent.txt"
    lat.write_text(
        "elements: 0 a b c 1\n0 < a\na < b\nb < 1\n0 < c\nc < 1\n", encoding="utf-8"
    )
    code, out, _ = run(capsys, "lattice", "check", str(lat), "--element", "c", "--json")
    assert code == 1
    assert json.loads(out)["pentagon"]["center"] == "c"
    assert run(capsys, "lattice", "check", str(lat), "--element", "a")[0] == 0
    code, out, _ = run(capsys, "lattice", "modular", str(lat), "--json")
    assert json.loads(out)["modular"] == ["0", "a", "b", "1"]


# ---------------------------------------------------------------- claim


def test_claim_fig1_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "claim", "fig1-pentagon", "--json")
    code2, out2, _ = run(capsys, "claim", "fig1-pentagon", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["verdict"] == "verified"


def test_claim_with_params(capsys):
    code, out, _ = run(
        capsys, "claim", "basis-derives", "--target", "x x = x x x x", "--json"
    )
    assert code == 0
    assert json.loads(out)["evidence"]["chain"] == ["x x", "x x x", "x x x x"]


def test_claim_jobs_parity(capsys):
    code1, out1, _ = run(capsys, "claim", "theorem-ii-holds", "--variety", "x", "--json")
    code2, out2, _ = run(
        capsys, "claim", "theorem-ii-holds", "--variety", "x", "--jobs", "2", "--json"
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_claim_unknown_name(capsys):
    code, _, err = run(capsys, "claim", "no-such-claim")
    assert code == 3
    assert "unknown claim" in err


def test_claim_list(capsys):
    code, out, _ = run(capsys, "claim", "list")
    assert code == 0
    assert "fig2-modularity" in out


# ---------------------------------------------------------------- misc


def test_usage_error_is_exit_3(capsys):
    assert run(capsys, "frobnicate")[0] == 3
    assert run(capsys, "rees", "check", "/nonexistent", "/nonexistent")[0] == 3


def test_kernel_backend_command(capsys):
    code, out, _ = run(capsys, "kernel")
    assert code == 0
    assert out.strip() in ("c", "python")
