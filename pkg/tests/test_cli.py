import json

import pytest

from twistlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTwist:
    def test_single_letter(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "twist", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["min_degree"] == -1
        assert payload["profile"]["1,-1"] == 3

    def test_empty_word_is_identity(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "twist", "")
        assert code == 0
        payload = json.loads(out)
        assert payload["complex"]["degrees"] == {"0": [1, 2]}

    def test_object_spec_stalk(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "twist", "1", "--object", "P2")
        assert code == 0
        payload = json.loads(out)
        assert payload["complex"]["degrees"] == {"-1": [1], "0": [2]}

    def test_malformed_word_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "--diagram", "A2", "twist", "1,x")
        assert code == 2
        assert "input error" in err

    def test_bad_diagram_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "--diagram", "Z9", "twist", "1")
        assert code == 2

    def test_text_format(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "--format", "text", "twist", "1")
        assert code == 0
        assert "profile" in out

    def test_complex_on_stdin(self, capsys, monkeypatch):
        import io

        payload = {"degrees": {"0": [2]}, "diffs": {}}
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
        code, out, _ = run_cli(capsys, "--diagram", "A2", "twist", "1", "--object", "-")
        assert code == 0
        assert json.loads(out)["complex"]["degrees"] == {"-1": [1], "0": [2]}

    def test_bad_stdin_complex_exits_2(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("{not json"))
        code, _, err = run_cli(capsys, "--diagram", "A2", "twist", "1", "--object", "-")
        assert code == 2


class TestRecover:
    def test_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "recover", "--word", "1,2,1")
        assert code == 0
        payload = json.loads(out)
        assert payload["verified"] is True
        assert len(payload["word"]) == 3
        assert payload["peels"][0]["min_degree"] < 0

    def test_identity(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "recover", "--word", "")
        assert code == 0
        assert json.loads(out)["word"] == []

    def test_non_image_exits_1(self, capsys, monkeypatch):
        import io

        payload = {"degrees": {"0": [1]}, "diffs": {}}
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
        code, _, err = run_cli(capsys, "--diagram", "A2", "recover")
        assert code == 1
        assert "not a twist image" in err

    def test_complex_from_stdin_verified(self, capsys, monkeypatch):
        import io

        # T_{s1} over A2 serialized by hand: P1[1] + cone(arrow)
        payload = {
            "degrees": {"-1": [1, 1], "0": [2]},
            "diffs": {
                "-1": [[
                    {"src": 1, "tgt": 2, "terms": []},
                    {"src": 1, "tgt": 2, "terms": [{"kind": "arrow", "coef": "1"}]},
                ]]
            },
        }
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
        code, out, _ = run_cli(capsys, "--diagram", "A2", "recover")
        assert code == 0
        payload = json.loads(out)
        assert payload["word"] == [1]
        assert payload["verified"] is True


class TestBraidEq:
    def test_equal_words(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "braid-eq", "1,2,1", "2,1,2")
        assert code == 0
        payload = json.loads(out)
        assert payload["equal"] and payload["oracle"] and payload["category"]

    def test_unequal_words_exit_1(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "braid-eq", "1,2", "2,1")
        assert code == 1
        assert json.loads(out)["equal"] is False

    def test_commutation_case(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A3", "braid-eq", "1,3", "3,1")
        assert code == 0

    def test_oracle_only_mode(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "braid-eq", "1", "1", "--mode", "oracle")
        payload = json.loads(out)
        assert code == 0 and "category" not in payload


class TestMeshSolve:
    def test_a2_example(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "A2", "mesh-solve", "1,2,1")
        assert code == 0
        payload = json.loads(out)
        assert payload["divisor"] == 2
        assert payload["replay_ok"] is True
        assert payload["certificate"][0]["move"] == "braid"

    def test_d4_example(self, capsys):
        code, out, _ = run_cli(capsys, "--diagram", "D4", "mesh-solve", "2,1,3,4,2,1,3,4,2,4")
        assert code == 0
        payload = json.loads(out)
        assert payload["divisor"] != 2
        assert payload["replay_ok"] is True

    def test_hypothesis_violation_exits_2(self, capsys):
        # theta goes negative for s1 s1
        code, _, err = run_cli(capsys, "--diagram", "A2", "mesh-solve", "1,1")
        assert code == 2
        assert "hypotheses" in err

    def test_decorated_stdin(self, capsys, monkeypatch):
        import io

        payload = {
            "diagram": {"family": "A", "rank": 2},
            "vertices": [[0, 1], [1, 2], [2, 1]],
            "theta": {"0,1": 1, "1,2": 1, "2,1": 0},
            "boundary": {"1": -1, "2": 0},
        }
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
        code, out, _ = run_cli(capsys, "--diagram", "A2", "mesh-solve", "--decorated")
        assert code == 0
        assert json.loads(out)["divisor"] == 2

    def test_dot_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "--diagram", "A2", "--format", "dot", "mesh-solve", "1,2,1"
        )
        assert code == 0
        assert out.startswith("digraph")

    def test_empty_word_rejected(self, capsys):
        code, _, _ = run_cli(capsys, "--diagram", "A2", "mesh-solve", "")
        assert code == 2


class TestSelftest:
    def test_small_scale_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "--diagram", "A2", "--max-len", "2", "selftest"
        )
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith("ACCEPTANCE")]
        assert len(lines) == 9
        assert all("PASS" in l for l in lines)

    def test_corrupt_hook_fails_with_pinpointed_invariant(self, capsys):
        code, out, _ = run_cli(
            capsys, "--diagram", "A2", "--max-len", "1", "selftest", "--debug-corrupt-compose"
        )
        assert code == 3
        assert "FAIL" in out
        assert "trace pairing" in out  # criterion 1 names the broken invariant

    def test_jobs_flag_parallel_sweep(self, capsys):
        code, out, _ = run_cli(
            capsys, "--diagram", "A2", "--max-len", "2", "--jobs", "2", "selftest"
        )
        assert code == 0
        assert all("PASS" in l for l in out.splitlines() if l.startswith("ACCEPTANCE"))

    def test_seeded_sampling(self, capsys, monkeypatch):
        monkeypatch.setenv("TWISTLAB_SEED", "7")
        code, out, _ = run_cli(
            capsys, "--diagram", "A2", "--max-len", "1", "selftest", "--sample-longer", "2"
        )
        assert code == 0
        line = next(l for l in out.splitlines() if l.startswith("ACCEPTANCE 5"))
        assert "PASS" in line
