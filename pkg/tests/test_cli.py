import json
import subprocess
import sys
from fractions import Fraction

import pytest

from poscodeg.cli import main
from poscodeg.sdp import Certificate, parse_sdpa


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_construct_and_mpcd_via_file(capsys, tmp_path):
    code, text, _ = run(capsys, "construct", "Jk:4")
    assert code == 0
    path = tmp_path / "j4.txt"
    path.write_text(text)
    assert run(capsys, "mpcd", str(path))[:2] == (0, "1\n")
    assert run(capsys, "mpcd", "FanoComplement")[1] == "4\n"


def test_stdin_piping():
    made = subprocess.run([sys.executable, "-m", "poscodeg", "construct", "K5"], capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "poscodeg", "mpcd", "-"], input=made.stdout,
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "3\n"


def test_json_format(capsys):
    code, text, _ = run(capsys, "optimize-weights", "K5", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["value"] == "3/5" and data["weights"] == ["1/5"] * 5
    code, text, _ = run(capsys, "coplusex", "--n", "4", "--forbid", "K4", "--format", "json")
    data = json.loads(text)
    assert data["value"] == 1 and data["witness_count"] == 3 and len(data["witnesses"]) == 3


def test_output_is_deterministic(capsys):
    first = run(capsys, "enumerate", "--n", "5", "--forbid", "K4")
    second = run(capsys, "enumerate", "--n", "5", "--forbid", "K4", "--jobs", "2")
    assert first == second and first[0] == 0


def test_counts_and_relations(capsys):
    assert run(capsys, "enumerate", "--n", "5", "--count")[1] == "34\n"
    assert run(capsys, "hom", "F1", "K4minus")[1] == "no homomorphism\n"
    assert run(capsys, "iso", "Jk:4", "Jk:4")[1] == "isomorphic\n"
    assert run(capsys, "classify", "Cminus:6")[1] == "Zero\n"
    assert run(capsys, "classify", "F5")[1] == "OneOverR\n"


def test_family_extract_and_filter(capsys, tmp_path):
    code, text, _ = run(capsys, "family-extract", "FanoComplement", "--k", "6", "--format", "json")
    assert code == 0 and len(json.loads(text)["members"]) == 13
    fam = tmp_path / "thirteen.json"
    fam.write_text(text)
    code, text, _ = run(capsys, "filter", str(fam), "--subgraphs", "5", "--containing", "K4", "--format", "json")
    assert len(json.loads(text)["members"]) == 2


def test_suite_passes(capsys):
    code, text, _ = run(capsys, "suite", "j4-claims.json")
    assert code == 0 and text.splitlines()[-1] == "PASS 0 failures"


def test_suite_failure_exits_one(capsys, tmp_path):
    suite = {
        "name": "wrong",
        "families": {"pair": {"named": ["K4", "Jk:4"]}},
        "entries": [{"name": "claims K4 is excluded", "family": "pair", "expect": "excluded",
                     "pattern": {"labels": ["a", "b", "c", "d"],
                                 "required": [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]]}}],
    }
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps(suite))
    code, text, err = run(capsys, "suite", str(path))
    assert code == 1 and text.splitlines()[-1].startswith("FAIL")


def test_usage_errors_exit_two(capsys):
    code, _, err = run(capsys, "mpcd", "NoSuchGraph")
    assert code == 2 and err.startswith("poscodeg mpcd: error:")
    code, _, err = run(capsys, "blowup", "K4")
    assert code == 2 and "blowup needs" in err
    with pytest.raises(SystemExit) as exc:
        main(["no-such-verb"])
    assert exc.value.code == 2


def test_sdp_export_and_verify(capsys, tmp_path):
    out = tmp_path / "p.dat-s"
    code, text, _ = run(capsys, "sdp-export", "--k", "4", "--pos-codegree", "1/2", "--out", str(out))
    assert code == 0 and "blocks 1 2" in text
    data = parse_sdpa(out.read_text())
    assert data.block_struct[:2] == [1, 2]

    cert = tmp_path / "c.json"
    cert.write_text(Certificate(Fraction(-1), [[[0]], [[0, 0], [0, 0]]], [0]).dumps())
    code, text, _ = run(capsys, "verify-cert", "--k", "4", "--pos-codegree", "1/2", "--cert", str(cert),
                        "--host", "K5")
    assert code == 0 and text.startswith("ACCEPT") and "host objective" in text
    cert.write_text(Certificate(Fraction(0), [[[0]], [[0, 0], [0, 0]]], [-1]).dumps())
    code, text, _ = run(capsys, "verify-cert", "--k", "4", "--pos-codegree", "1/2", "--cert", str(cert))
    assert code == 1 and "multiplier 0: negative value -1" in text
    cert.write_text("{not json")
    assert run(capsys, "verify-cert", "--k", "4", "--objective", "zero", "--cert", str(cert))[0] == 2


def test_blowup_and_density(capsys):
    code, text, _ = run(capsys, "blowup", "FanoComplement", "--n", "14")
    assert code == 0 and "class sizes 2 2 2 2 2 2 2" in text
    assert run(capsys, "density", "K4", "K5")[1] == "1\n"


def test_family_from_fixture_name(capsys):
    code, text, _ = run(capsys, "filter", "fano-complement-family.json", "--subgraphs", "5", "--containing", "K4",
                        "--format", "json")
    assert code == 0 and len(json.loads(text)["members"]) == 2
