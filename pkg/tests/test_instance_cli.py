import json
import re
import subprocess
import sys

import pytest

from posetfix import FinitePoset, InstanceSpec, to_dot
from posetfix.cli import main
from posetfix.instance import InstanceFormatError

DIAMOND = {
    "elements": ["m", "a", "b", "M"],
    "covers": [["m", "a"], ["m", "b"], ["a", "M"], ["b", "M"]],
    "F": {"m": ["m"], "a": ["a"], "b": ["b"], "M": ["M"]},
}


def write(tmp_path, obj, name="inst.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestInstanceFormat:
    def test_roundtrip(self):
        spec = InstanceSpec.from_json_obj(dict(DIAMOND, seed_element="m"))
        p, F, e = spec.to_instance()
        again = InstanceSpec.from_instance(p, F, e)
        assert again.to_instance() == (p, F, e)
        assert InstanceSpec.loads(again.dumps()) == again

    @pytest.mark.parametrize(
        "obj",
        [
            [],
            {"elements": ["a"], "covers": []},
            {"elements": ["a"], "covers": [], "F": {"a": ["a"]}, "extra": 1},
            {"elements": "a", "covers": [], "F": {}},
            {"elements": ["a"], "covers": [["a"]], "F": {"a": ["a"]}},
            {"elements": ["a"], "covers": [], "F": {"a": "a"}},
            {"elements": ["a"], "covers": [], "F": {"a": ["a"]}, "seed_element": 3},
        ],
    )
    def test_malformed(self, obj):
        with pytest.raises(InstanceFormatError):
            InstanceSpec.from_json_obj(obj)

    def test_bad_json(self):
        with pytest.raises(InstanceFormatError):
            InstanceSpec.loads("{")


class TestDot:
    def parse(self, text):
        return re.findall(r'"([^"]+)" -> "([^"]+)";', text)

    def test_diamond(self):
        p = InstanceSpec.from_json_obj(DIAMOND).to_instance()[0]
        text = to_dot(p)
        assert text.startswith("digraph hasse {")
        assert len(self.parse(text)) == 4

    def test_antichain(self):
        assert self.parse(to_dot(FinitePoset.antichain(3))) == []

    def test_reparse_matches_covers(self):
        from posetfix.generate import GenConfig, random_poset

        for seed in range(50):
            p = random_poset(GenConfig(n=8, seed=seed))
            edges = self.parse(to_dot(p))
            assert edges == p.hasse_cover_labels()
            assert FinitePoset.from_cover_relation(p.labels, edges) == p


class TestCli:
    def test_validate_ok(self, tmp_path, capsys):
        code, out, _ = run(capsys, "validate", write(tmp_path, DIAMOND))
        assert code == 0 and out.startswith("PASS")

    def test_validate_cycle(self, tmp_path, capsys):
        bad = dict(DIAMOND, covers=[["m", "a"], ["a", "m"]])
        code, _, err = run(capsys, "validate", write(tmp_path, bad))
        assert code == 2 and "CycleError" in err

    def test_validate_empty_image(self, tmp_path, capsys):
        bad = dict(DIAMOND, F=dict(DIAMOND["F"], a=[]))
        code, _, _ = run(capsys, "validate", write(tmp_path, bad))
        assert code == 2

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(capsys, "validate", str(tmp_path / "nope.json"))
        assert code == 2 and "cannot read" in err

    def test_malformed_json(self, tmp_path, capsys):
        code, _, _ = run(capsys, "check-i", write(tmp_path, "{"))
        assert code == 2

    def test_check_i_generated(self, tmp_path, capsys):
        path = str(tmp_path / "g.json")
        assert run(capsys, "gen", "--n", "7", "--seed", "5", "--selectors", "2", "--out", path)[0] == 0
        code, out, _ = run(capsys, "check-i", path)
        assert code == 0 and out.startswith("PASS")

    def test_check_i_planted(self, tmp_path, capsys):
        planted = dict(DIAMOND, F={"m": ["M"], "a": ["m"], "b": ["b"], "M": ["M"]})
        code, out, _ = run(capsys, "check-i", write(tmp_path, planted))
        assert code == 1
        assert "witness x1=a x2=m y2=M" in out

    def test_check_iii(self, tmp_path, capsys):
        path = write(tmp_path, DIAMOND)
        assert run(capsys, "check-iii", path)[0] == 0
        code, out, _ = run(capsys, "check-iii", path, "--budget", "1")
        assert code == 0 and "not checked" in out

    def test_fixpoint_successor(self, tmp_path, capsys):
        inst = {
            "elements": ["0", "1", "2", "3"],
            "covers": [["0", "1"], ["1", "2"], ["2", "3"]],
            "F": {"0": ["1"], "1": ["2"], "2": ["3"], "3": ["3"]},
            "seed_element": "0",
        }
        code, out, _ = run(capsys, "fixpoint", write(tmp_path, inst))
        assert code == 0
        assert out.splitlines()[-1] == "PASS fixed point 3 in F(3)"
        assert out.count("step:") == 3

    def test_fixpoint_identity_trace(self, tmp_path, capsys):
        inst = dict(DIAMOND, seed_element="a")
        code, out, _ = run(capsys, "fixpoint", write(tmp_path, inst), "--mode", "ascent")
        assert code == 0 and "step:" not in out and "fixed point a" in out
        code, out, _ = run(capsys, "fixpoint", write(tmp_path, inst), "--mode", "trace")
        assert code == 0 and "x0 = sup C = M" in out

    def test_fixpoint_stuck(self, tmp_path, capsys):
        inst = {
            "elements": ["0", "1"],
            "covers": [["0", "1"]],
            "F": {"0": ["1"], "1": ["0"]},
            "seed_element": "0",
        }
        code, out, _ = run(capsys, "fixpoint", write(tmp_path, inst))
        assert code == 1 and "stuck at 1" in out and "condition I fails" in out

    def test_fixpoint_seed_not_expansive(self, tmp_path, capsys):
        inst = dict(DIAMOND, F={"m": ["m"], "a": ["m"], "b": ["b"], "M": ["M"]}, seed_element="a")
        assert run(capsys, "fixpoint", write(tmp_path, inst))[0] == 1

    def test_fixpoint_unknown_seed(self, tmp_path, capsys):
        assert run(capsys, "fixpoint", write(tmp_path, dict(DIAMOND, seed_element="z")))[0] == 2

    @pytest.mark.parametrize("policy", ["min-index", "min", "max"])
    def test_fixpoint_policies(self, tmp_path, capsys, policy):
        path = str(tmp_path / "g.json")
        run(capsys, "gen", "--n", "9", "--seed", "12", "--selectors", "3", "--out", path)
        for mode in ("ascent", "trace"):
            code, out, _ = run(capsys, "fixpoint", path, "--policy", policy, "--mode", mode)
            assert code == 0 and out.splitlines()[-1].startswith("PASS fixed point")

    def test_gen_stdout_deterministic(self, capsys):
        a = run(capsys, "gen", "--n", "6", "--seed", "3", "--density", "1/3")[1]
        b = run(capsys, "gen", "--n", "6", "--seed", "3", "--density", "1/3")[1]
        assert a == b and json.loads(a)["seed_element"] == "x0"

    def test_gen_bad_density(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "--n", "3", "--density", "3/2"])
        assert exc.value.code == 2

    def test_export_dot(self, tmp_path, capsys):
        code, out, _ = run(capsys, "export-dot", write(tmp_path, DIAMOND))
        assert code == 0 and out.count("->") == 4

    def test_counterexample(self, capsys):
        code, out, err = run(capsys, "counterexample")
        lines = out.splitlines()
        assert code == 0
        assert all(line.startswith("PASS ") for line in lines)
        assert sum(line.startswith("PASS gap(") for line in lines) == 5
        assert any(line.startswith("PASS corrected") for line in lines)
        assert "note:" in err

    def test_counterexample_more_samples(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--samples", "10000", "--seed", "4")
        assert code == 0 and "FAIL" not in out

    def test_suite(self, capsys):
        code, out, _ = run(capsys, "suite", "--instances", "50", "--seed", "2")
        assert code == 0 and out.startswith("PASS theorem: 50 instances, 0 failures")

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "posetfix", "counterexample", "--samples", "50"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0 and proc.stdout.startswith("PASS")
