"""The command-line interface: golden outputs, exit codes, determinism."""

from __future__ import annotations

import json
from pathlib import Path

from oblivion import Signature, lift, load_kb, loads_ocf, marginalise, run_dfp_suite
from oblivion.cli import main

EXAMPLES = Path(__file__).resolve().parent.parent / "src" / "oblivion" / "examples"
BIRDS_KB = str(EXAMPLES / "birds.kb")
BIRDS_OCF = str(EXAMPLES / "birds.ocf")


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_models_golden(capsys):
    code, out, _ = run_cli(capsys, "models", BIRDS_KB)
    assert code == 0
    assert out == "sig: b f p\n-b -f -p\nb -f p\nb f -p\nworlds: 3\n"


def test_models_empty_base_with_pinned_signature(capsys, tmp_path):
    path = tmp_path / "empty.kb"
    path.write_text("sig: p\n")
    code, out, _ = run_cli(capsys, "models", str(path))
    assert code == 0
    assert "worlds: 2" in out


def test_models_inconsistent_base_notes_it(capsys, tmp_path):
    path = tmp_path / "bad.kb"
    path.write_text("p\n!p\n")
    code, out, _ = run_cli(capsys, "models", str(path))
    assert code == 0
    assert "worlds: 0 (inconsistent)" in out


def test_models_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.kb"
    path.write_text("p ->\n")
    code, _, err = run_cli(capsys, "models", str(path))
    assert code == 2
    assert "broken.kb:1" in err


def test_models_json_matches_library(capsys):
    code, out, _ = run_cli(capsys, "models", "--json", BIRDS_KB)
    assert code == 0
    assert json.loads(out) == load_kb(BIRDS_KB).models().to_json_dict()


def test_forget_reduced_golden(capsys):
    code, out, _ = run_cli(capsys, "forget", BIRDS_KB, "--atoms", "p")
    assert code == 0
    assert out == "sig: b f\n-b -f\nb -f\nb f\nworlds: 3\n"


def test_forget_original_golden(capsys):
    code, out, _ = run_cli(capsys, "forget", BIRDS_KB, "--atoms", "p", "--original")
    assert code == 0
    assert out.splitlines()[0] == "sig: b f p"
    assert "worlds: 6" in out


def test_forget_nothing_is_models(capsys):
    code, out, _ = run_cli(capsys, "forget", BIRDS_KB)
    assert code == 0
    assert "worlds: 3" in out
    assert "sig: b f p" in out


def test_forget_everything_prints_empty_world(capsys):
    code, out, _ = run_cli(capsys, "forget", BIRDS_KB, "--atoms", "p,b,f")
    assert code == 0
    assert out == "sig: (empty)\n(empty)\nworlds: 1\n"


def test_marginalise_golden(capsys):
    code, out, _ = run_cli(capsys, "marginalise", BIRDS_OCF, "--keep", "b,f")
    assert code == 0
    assert out == "sig: b f\n0 : -b -f\n0 : b -f\n0 : b f\n1 : -b f\n"


def test_marginalise_keep_all_is_identity(capsys):
    code, out, _ = run_cli(capsys, "marginalise", BIRDS_OCF, "--keep", "p,b,f", "--json")
    assert code == 0
    assert json.loads(out) == loads_ocf(Path(BIRDS_OCF).read_text()).to_json_dict()


def test_lift_golden(capsys, tmp_path):
    marginal = marginalise(
        loads_ocf(Path(BIRDS_OCF).read_text()), Signature(["b", "f"])
    )
    path = tmp_path / "marginal.ocf"
    path.write_text("sig: b f\n-b -f : 0\n-b f : 1\nb -f : 0\nb f : 0\n")
    code, out, _ = run_cli(capsys, "lift", str(path), "--to", "p,b,f", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["signature"] == ["b", "f", "p"]
    assert payload["ranks"]["-b f p"] == 1
    assert payload == lift(marginal, Signature(["b", "f", "p"])).to_json_dict()


def test_check_dfp_random_passes(capsys):
    code, out, _ = run_cli(capsys, "check", "dfp", "--random", "25", "--seed", "42")
    assert code == 0
    assert "result: PASS" in out


def test_check_dfpes_sig_exhaustive_passes(capsys):
    code, out, _ = run_cli(capsys, "check", "dfpes-sig", "--exhaustive", "2")
    assert code == 0
    assert "DFPes-1: 60 checks, 0 violations" in out


def test_check_identity_operator_fails_with_witness(capsys):
    code, out, _ = run_cli(
        capsys, "check", "dfpes-formula", "--operator", "identity", "--exhaustive", "2"
    )
    assert code == 1
    assert "result: FAIL" in out
    assert "violation DFPes-L-6" in out


def test_check_exhaustive_cap(capsys):
    code, _, err = run_cli(capsys, "check", "dfp", "--exhaustive", "4")
    assert code == 2
    assert "capped" in err


def test_check_unknown_operator(capsys):
    code, _, err = run_cli(
        capsys, "check", "dfpes-sig", "--operator", "nope", "--random", "5"
    )
    assert code == 2
    assert "unknown signature operator" in err


def test_check_json_is_the_library_result_serialized(capsys):
    code, out, _ = run_cli(capsys, "check", "dfp", "--random", "12", "--seed", "9", "--json")
    assert code == 0
    assert json.loads(out) == run_dfp_suite(random_instances=12, seed=9).to_json_dict()


def test_check_json_deterministic_across_runs(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(
            capsys, "check", "dfp", "--random", "30", "--seed", "7", "--json"
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    changed_seed = run_cli(
        capsys, "check", "dfp", "--random", "30", "--seed", "8", "--json"
    )[1]
    assert json.loads(changed_seed)["mode"]["seed"] == 8


def test_reproduce_passes_on_bundled_files(capsys):
    code, out, _ = run_cli(capsys, "reproduce")
    assert code == 0
    assert out.count("PASS") == 8  # seven checks plus the final result line
    assert "result: PASS" in out


def test_reproduce_fails_on_corrupted_input(capsys, tmp_path):
    corrupted = tmp_path / "birds.kb"
    corrupted.write_text("sig: p b f\np -> b\n")  # dropped three formulas
    code, out, _ = run_cli(capsys, "reproduce", "--kb", str(corrupted))
    assert code == 1
    assert "models-gamma: FAIL" in out
    assert "expected:" in out and "actual:" in out


def test_reproduce_json_mode(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert [c["name"] for c in payload["checks"]] == [
        "models-gamma", "forget-reduced", "forget-original",
        "ocf-ranks", "ocf-marginal", "ocf-lifted", "beliefs-link",
    ]


def test_census_one_atom_summary(capsys):
    code, out, _ = run_cli(capsys, "census", "--atoms", "1")
    assert code == 0
    assert "operators: 531441" in out
    assert "survivors: 1" in out
    assert "constant-top" in out


def test_census_cap_refuses_three_atoms(capsys):
    code, _, err = run_cli(capsys, "census", "--atoms", "3")
    assert code == 2
    assert "capped" in err


def test_census_json_fields(capsys):
    code, out, _ = run_cli(capsys, "census", "--atoms", "0", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["operators"] == 1
    assert payload["survivors"][0]["description"] == "constant-top"


def test_env_var_lowers_signature_cap(capsys, monkeypatch):
    monkeypatch.setenv("OBLIVION_MAX_ATOMS", "2")
    code, _, err = run_cli(capsys, "models", BIRDS_KB)
    assert code == 2
    assert "cap" in err
