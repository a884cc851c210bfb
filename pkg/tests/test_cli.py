import json

import pytest

from eisres.cli import main, parse_char


def run_cli(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(["--out", str(out)] + args)
    return code, out.read_bytes()


def test_charinfo(tmp_path):
    code, data = run_cli(["charinfo", "--p", "5", "--char", "omega^2"], tmp_path)
    assert code == 0
    doc = json.loads(data)
    assert doc["payload"]["order"] == 2
    assert doc["payload"]["character"]["conductor"] == 5
    assert doc["embedding"]["p"] == 5


def test_char_grammar_roundtrip():
    chi = parse_char("quad8", 5)
    spec = json.dumps({"modulus": chi.modulus,
                       "images": chi.describe()["generator_images"]})
    chi2 = parse_char(spec, 5)
    assert chi == chi2


def test_klps_pole_flag(tmp_path):
    code, data = run_cli(["klps", "--p", "5", "--char", "triv", "--prec", "8,8"],
                         tmp_path)
    assert code == 0
    doc = json.loads(data)
    assert doc["payload"]["pole_at_p"] is True


def test_residues_verify_exit_zero(tmp_path):
    code, data = run_cli(["residues", "verify", "--p", "5", "--theta", "omega^2",
                          "--psi", "triv", "--t", "1", "--prec", "6,5"], tmp_path)
    assert code == 0
    doc = json.loads(data)
    assert doc["payload"]["match"] is True
    assert doc["payload"]["total_residue_zero"] is True


def test_inadmissible_exit_two(tmp_path):
    code, _ = run_cli(["eis", "--p", "5", "--theta", "omega^2", "--psi", "triv",
                       "--t", "5", "--nmax", "20"], tmp_path)
    assert code == 2


def test_bad_character_exit_two(tmp_path):
    code, _ = run_cli(["charinfo", "--p", "5", "--char", "nonsense"], tmp_path)
    assert code == 2


def test_bell_verb(tmp_path):
    code, data = run_cli(["bell", "--p", "5", "--theta", "quad8", "--psi", "triv",
                          "--ell", "3"], tmp_path)
    assert code == 0
    doc = json.loads(data)
    assert "is_unit" in doc["payload"]


def test_weierstrass_verb(tmp_path):
    code, data = run_cli(["weierstrass", "--p", "5",
                          "--coeffs", "[5, 1, 0, 0]"], tmp_path)
    assert code == 0
    doc = json.loads(data)
    assert doc["payload"]["mu"] == 0 and doc["payload"]["lambda"] == 1


def test_fitting_verb(tmp_path):
    code, data = run_cli(["fitting", "--p", "5",
                          "--matrix", "[[[5,1],[0]],[[0],[(-5)"
                          ",0,1]]]".replace("(-5)", "-5")], tmp_path)
    assert code == 0
    doc = json.loads(data)
    assert len(doc["payload"]["generators"]) == 1


def test_determinism_byte_identical(tmp_path):
    args = ["residues", "verify", "--p", "5", "--theta", "omega^2",
            "--psi", "triv", "--t", "1", "--prec", "5,4"]
    _, a = run_cli(args, tmp_path, "a.json")
    _, b = run_cli(args, tmp_path, "b.json")
    assert a == b


def test_series_json_roundtrip(tmp_path):
    # klps output re-parses losslessly into the internal types
    from eisres.padics import PadicRing
    from eisres.series import LambdaSeries
    from eisres.characters import needed_embedding_order, quadratic_character
    code, data = run_cli(["klps", "--p", "5", "--char", "quad8",
                          "--prec", "7,5"], tmp_path)
    assert code == 0
    doc = json.loads(data)
    emb = doc["embedding"]
    ring = PadicRing(emb["p"], emb["m"], 7 + 14)
    F = LambdaSeries.from_digits(ring, doc["payload"]["series"])
    assert F.digits() == doc["payload"]["series"]
    # and the parsed series is the same mathematical object
    from eisres.klseries import kl_series
    F2 = kl_series(quadratic_character(8), ring, 7, 5)
    assert (F - F2).is_zero()


def test_cusps_verbs(tmp_path):
    code, data = run_cli(["cusps", "widths", "--M", "5"], tmp_path)
    assert code == 0
    doc = json.loads(data)
    assert sorted(doc["payload"]["widths"].values()) == [1, 1, 5, 5]
    code, data = run_cli(["cusps", "ordinary", "--M", "25", "--p", "5"], tmp_path)
    assert code == 0
