import io
from importlib import resources
from pathlib import Path

import pytest

from tautilt.cli import FALSE, OK, USAGE, run

GOLDEN = Path(__file__).parent / "golden"
E_AMBIENT = "fac:2+2/3+1/2"


@pytest.fixture(scope="module")
def alg_path():
    return str(resources.files("tautilt.data").joinpath("lambda6.alg"))


def call(*argv):
    out = io.StringIO()
    rc = run(list(argv), out)
    return rc, out.getvalue()


def test_indec(alg_path):
    rc, text = call("indec", alg_path)
    assert rc == OK
    assert text.splitlines()[0] == "indecomposables: 5"
    assert "complete: true" in text
    assert "  2/3  dim (0,1,1)  projective injective" in text


def test_stautilt_yes_and_no(alg_path):
    rc, text = call("stautilt", alg_path, "2+2/3+1/2", "--ambient", E_AMBIENT)
    assert rc == OK and text.startswith("support τ-tilting: YES")
    rc, text = call("stautilt", alg_path, "1/2+1", "--ambient", E_AMBIENT)
    assert rc == FALSE
    assert text.strip() == ("support τ-tilting: NO: condition (A) fails at projective 2/3: "
                            "approximation 2/3 -> 1/2 (kernel 3 not in ambient)")


def test_complete(alg_path):
    rc, text = call("complete", alg_path, "2/3+1/2", "--ambient", E_AMBIENT)
    assert (rc, text.strip()) == (OK, "completion: 1+2/3+1/2")
    rc, text = call("complete", alg_path, "2+1")
    assert rc == FALSE and "not tau-rigid" in text


def test_taurigid(alg_path):
    rc, text = call("taurigid", alg_path, "--ambient", E_AMBIENT)
    lines = text.splitlines()
    assert rc == OK and len(lines) == 8
    assert "(2/3+1/2 | 0)  not support tau-tilting" in lines


def test_hasse_matches_golden(alg_path):
    rc, text = call("hasse", alg_path, "--ambient", E_AMBIENT)
    assert rc == OK
    assert text == (GOLDEN / "hasse_E.dot").read_text()


def test_hasse_to_file(alg_path, tmp_path):
    target = tmp_path / "out.dot"
    rc, text = call("hasse", alg_path, "--ambient", E_AMBIENT, "--dot", str(target))
    assert rc == OK and text.startswith("vertices: 7, edges: 8")
    assert target.read_text() == (GOLDEN / "hasse_E.dot").read_text()


def test_cotorsion(alg_path):
    rc, text = call("cotorsion", alg_path, "--ambient", E_AMBIENT)
    assert rc == OK
    assert "tau-cotorsion pairs: 7, support tau-tilting: 7" in text
    assert "bijection: YES" in text


def test_restrict(alg_path):
    rc, text = call("restrict", alg_path, "1+2/3", "--ambient", E_AMBIENT)
    assert rc == OK
    assert "tilting in E_T: YES" in text and "rho equivalence: YES" in text


def test_bb(alg_path):
    rc, text = call("bb", alg_path, "2+2/3+1/2")
    assert rc == OK
    assert "equivalence: YES" in text and "triangle: YES" in text


def test_check_all():
    rc, text = call("check-all")
    assert rc == OK and text.splitlines()[-1] == "14/14 checks passed"


def test_usage_errors(alg_path, tmp_path, capsys):
    assert call("stautilt", alg_path, "9/9")[0] == USAGE
    assert "unknown module '9/9'" in capsys.readouterr().err
    assert call("stautilt", alg_path, "3", "--ambient", E_AMBIENT)[0] == USAGE
    assert call("hasse", alg_path, "--ambient", "weird")[0] == USAGE
    assert call("indec", str(tmp_path / "missing.alg"))[0] == USAGE
    bad = tmp_path / "bad.alg"
    bad.write_text("vertices: 2\narrow: a 1 5\n")
    assert call("indec", str(bad))[0] == USAGE
    assert call("nonsense")[0] == USAGE
    capsys.readouterr()


def test_non_admissible_rejected(tmp_path):
    loop = tmp_path / "loop.alg"
    loop.write_text("vertices: 1\narrow: x 1 1\n")
    assert call("indec", str(loop))[0] == USAGE


def test_output_is_deterministic(alg_path):
    for argv in (("hasse", alg_path), ("cotorsion", alg_path, "--ambient", E_AMBIENT),
                 ("restrict", alg_path, "2+2/3+1/2")):
        assert call(*argv) == call(*argv)
