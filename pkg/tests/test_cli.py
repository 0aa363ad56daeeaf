import json

import pytest

import klr_workbench.crystal as crystal
from klr_workbench.cli import main
from klr_workbench.dims import block_graded_dim
from klr_workbench.partitions import content
from klr_workbench.golden import GOLDEN, run_golden


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_mullineux_both(capsys):
    code, out, _ = run(capsys, "mullineux", "--p", "3", "--shape", "3,2,2,1", "--algo", "both")
    data = json.loads(out)
    assert code == 0
    assert data["result"] == [2, 1, 1, 1, 1, 1, 1] and data["agree"] is True
    assert data["schema"] == "klr-workbench/1"


def test_mullineux_seeded(capsys):
    code, out, _ = run(capsys, "mullineux", "--p", "5", "--shape", "4,3,3,1", "--seed", "7")
    assert code == 0 and json.loads(out)["agree"]


def test_dim_specht(capsys):
    code, out, _ = run(capsys, "dim", "specht", "--p", "3", "--shape", "2,1")
    assert code == 0
    assert json.loads(out)["dim_q"] == {"0": 1, "1": 1}


def test_dim_block_and_idem(capsys):
    code, out, _ = run(capsys, "dim", "block", "--p", "3", "--shape", "2,1,1")
    expected = block_graded_dim(3, content(3, (2, 1, 1)))
    assert code == 0 and json.loads(out)["dim_q"] == expected.to_json()
    assert expected.at_one() == 9
    code, out, _ = run(capsys, "dim", "idem", "--p", "3", "--shape", "2,1", "--i", "0,1,2", "--j", "0,1,2")
    assert code == 0


def test_crystal_dot_empty(capsys):
    code, out, _ = run(capsys, "crystal", "--p", "2", "--n", "0", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and '"()"' in out and "->" not in out


def test_crystal_csv(capsys):
    code, out, _ = run(capsys, "crystal", "--p", "2", "--n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "source,color,target"


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "--p", "3", "--shape", "3,3,2,1,1", "--i", "2")
    data = json.loads(out)
    assert code == 0
    assert data["label"] == "known factors (lower bound)"
    assert len(data["entries"]) == 3
    assert data["socle"]["top_multiplicity"] == {"-1": 1, "1": 1}


def test_garnir(capsys):
    code, out, _ = run(capsys, "garnir", "--p", "2", "--shape", "7,7,4,1", "--node", "2,3")
    data = json.loads(out)
    assert code == 0
    assert (data["data"]["u"], data["data"]["v"], data["data"]["d"]) == (10, 17, 11)
    assert len(data["element"]["terms"]) == 3
    code, out, _ = run(capsys, "garnir", "--p", "3", "--shape", "2,1")
    assert code == 0 and json.loads(out)["generator_degree"] == 0


def test_module_check(capsys):
    code, out, _ = run(capsys, "module", "hook", "--p", "5", "--i", "3", "--check")
    data = json.loads(out)
    assert code == 0 and data["relations"]["passed"]
    code, out, _ = run(capsys, "module", "component", "--p", "2", "--word", "0,1,0,1", "--check")
    assert code == 0 and json.loads(out)["relations"]["passed"]


def test_char_commands(capsys):
    code, out, _ = run(capsys, "char", "shuffle", "--p", "2", "--words", "0,1", "0,1")
    assert code == 0
    entries = {tuple(e["word"]): e["coeff"] for e in json.loads(out)["character"]}
    assert entries == {(0, 0, 1, 1): {"-2": 1, "0": 2, "2": 1}, (0, 1, 0, 1): {"0": 2}}
    code, out, _ = run(capsys, "char", "jacobi-trudi", "--p", "2", "--shape", "2")
    assert code == 0
    code, out, _ = run(capsys, "char", "gg", "--p", "2", "--shape", "2", "--composition", "2,0")
    assert code == 0 and json.loads(out)["coefficient"] == {"0": 1}


def test_rootpart(capsys):
    code, out, _ = run(capsys, "rootpart", "--p", "2", "--alpha", "0:1,1:2")
    data = json.loads(out)
    assert code == 0 and len(data["root_partitions"]) == 3


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "mullineux", "--p", "3", "--shape", "4")
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "NotRestrictedError" and "[4]" in payload["message"]
    code, _, err = run(capsys, "garnir", "--p", "2", "--shape", "3,1", "--node", "1,3")
    assert code == 1 and "Garnir node" in json.loads(err)["message"]
    code, _, err = run(capsys, "module", "component", "--p", "3", "--word", "0,0")
    assert code == 1 and "non-homogeneous" in json.loads(err)["message"]
    code, _, _ = run(capsys, "crystal", "--p", "1", "--n", "2")
    assert code == 1


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "crystal", "--n", "2")[0] == 2
    assert run(capsys, "crystal", "--p", "2", "--n", "2", "--wat")[0] == 2
    assert run(capsys, "dim", "specht", "--p", "2")[0] == 2
    assert run(capsys, "mullineux", "--p", "3", "--shape", "2,1", "--format", "dot")[0] == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "crystal", "--p", "3", "--n", "5")[1]
    second = run(capsys, "crystal", "--p", "3", "--n", "5")[1]
    assert first == second


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest", "--p", "2")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0 and data["passed"] == len(GOLDEN)


def test_selftest_text(capsys):
    code, out, _ = run(capsys, "selftest", "--p", "2", "--format", "text")
    assert code == 0 and out.count("PASS") == len(GOLDEN)


def test_tampered_cancellation_breaks_branching_item(monkeypatch):
    # cancelling nothing leaves every removable node normal
    monkeypatch.setattr(crystal, "cancel_signs", lambda signs: list(signs))
    results = {name: ok for name, ok, _ in run_golden()}
    assert not results["branching of (3^2,2,1^2) at p=3"]


def test_tampered_signs_break_jt_item(monkeypatch):
    import klr_workbench.characters as characters

    original = characters.shuffle_words
    monkeypatch.setattr(characters, "shuffle_words", lambda p, u, v: {w: c.bar() for w, c in original(p, u, v).items()})
    results = {name: ok for name, ok, _ in run_golden()}
    assert not results["Jacobi-Trudi at p=2 for (2)"]


def test_tampered_selftest_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(crystal, "cancel_signs", lambda signs: list(signs))
    code, out, _ = run(capsys, "selftest", "--p", "2")
    assert code == 1 and json.loads(out)["failed"] >= 1


@pytest.mark.parametrize("flag", ["--help"])
def test_help_exit_zero(capsys, flag):
    assert run(capsys, flag)[0] == 0
