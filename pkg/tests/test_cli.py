import json

import pytest

from slnbranch.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCore:
    def test_example_eight(self, capsys):
        code, out, _ = run_cli(capsys, "core", "--n", "3", "8")
        assert code == 0
        assert out.strip() == '{"core":[2],"weight":2,"rectangle":[2,1]}'

    def test_non_rectangular_core(self, capsys):
        code, out, _ = run_cli(capsys, "core", "--n", "3", "5,4,1")
        assert code == 0
        payload = json.loads(out)
        assert payload["rectangle"] is None or sum(payload["rectangle"]) <= 3

    def test_empty_partition_argument(self, capsys):
        code, out, _ = run_cli(capsys, "core", "--n", "4", "-")
        assert code == 0
        assert json.loads(out) == {"core": [], "weight": 0, "rectangle": [0, 0]}

    def test_invalid_partition_is_diagnosed(self, capsys):
        code, out, err = run_cli(capsys, "core", "--n", "3", "1,2,3")
        assert code == 2
        assert not out
        assert "error" in err


class TestBranching:
    def test_method_all_agrees(self, capsys):
        code, out, _ = run_cli(
            capsys, "branching", "--n", "3", "--j", "1", "--k", "0",
            "--order", "2", "--method", "all",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "AGREE"
        assert set(payload["methods"]) == {"paths", "fow", "crystal", "fermionic"}
        assert all(c == [1, 1, 2] for c in payload["methods"].values())

    def test_single_method_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "branching", "--n", "3", "--j", "0", "--k", "1",
            "--order", "3", "--method", "fow",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "n": 3, "j": 0, "k": 1, "order": 3, "coeffs": [0, 1, 2, 2], "method": "fow",
        }

    def test_csv_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "branching", "--n", "3", "--j", "1", "--k", "0",
            "--order", "2", "--method", "all", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "method,c0,c1,c2"
        assert "fow,1,1,2" in lines

    def test_text_verdict(self, capsys):
        code, out, _ = run_cli(
            capsys, "branching", "--n", "3", "--j", "2", "--k", "1",
            "--order", "3", "--method", "all", "--format", "text",
        )
        assert code == 0
        assert out.strip().endswith("verdict: AGREE")


class TestFermionic:
    def test_reports_lattice_point_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "fermionic", "--n", "3", "--s", "1", "--t", "2", "--order", "3"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["coeffs"] == [0, 1, 2, 2]
        assert payload["lattice_points"] >= 2


class TestJs:
    def test_list_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "js", "list", "--n", "3", "--core", "-", "--weight", "2"
        )
        assert code == 0
        members = [tuple(p) for p in json.loads(out)]
        assert set(members) == {(6,), (5, 1), (4, 1, 1), (3, 3), (3, 2, 1)}

    def test_list_rejects_non_core(self, capsys):
        code, _, err = run_cli(
            capsys, "js", "list", "--n", "3", "--core", "3", "--weight", "1"
        )
        assert code == 2
        assert "core" in err

    def test_chi_both_agree(self, capsys):
        code, out, _ = run_cli(
            capsys, "js", "chi", "--n", "3", "--core", "-", "--order", "2",
            "--method", "both",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "AGREE"
        assert payload["methods"]["direct"] == [1, 2, 5]
        assert payload["methods"]["branching"] == [1, 2, 5]

    def test_chi_single_method(self, capsys):
        code, out, _ = run_cli(
            capsys, "js", "chi", "--n", "3", "--core", "1,1", "--order", "2",
            "--method", "direct",
        )
        assert code == 0
        assert json.loads(out)["coeffs"] == [1, 1, 2]


class TestCrystal:
    def test_dot_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "crystal", "graph", "--n", "3", "--max-size", "4",
            "--format", "dot",
        )
        assert code == 0
        assert out.startswith("digraph crystal {")
        assert '"3,1" [label="3,1"];' in out      # not a member: no asterisk
        assert '"2,1" [label="2,1*"];' in out     # member: starred

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "crystal", "graph", "--n", "2", "--max-size", "3"
        )
        assert code == 0
        payload = json.loads(out)
        assert {tuple(v["partition"]) for v in payload["vertices"]} == {
            (), (1,), (2,), (2, 1), (3,),
        }


class TestVerify:
    def test_all_suites_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "all", "--n", "3",
            "--max-size", "6", "--order", "3",
        )
        assert code == 0
        reports = json.loads(out)
        assert [r["suite"].split("(")[0] for r in reports] == [
            "fow", "methods", "js", "cores", "crystal",
        ]
        assert all(r["ok"] for r in reports)

    def test_parallel_jobs_match_serial(self, capsys):
        code1, out1, _ = run_cli(
            capsys, "verify", "--suite", "all", "--n", "2",
            "--max-size", "6", "--order", "3",
        )
        code2, out2, _ = run_cli(
            capsys, "verify", "--suite", "all", "--n", "2",
            "--max-size", "6", "--order", "3", "--jobs", "3",
        )
        assert code1 == code2 == 0
        strip = lambda text: [
            {k: v for k, v in r.items() if k != "seconds"} for r in json.loads(text)
        ]
        assert strip(out1) == strip(out2)

    def test_single_suite_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "fow", "--n", "2", "--max-size", "8",
            "--format", "text",
        )
        assert code == 0
        assert out.startswith("suite fow")


def test_unknown_flag_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["core", "--n", "3", "--bogus", "8"])
    assert excinfo.value.code != 0
    assert "bogus" in capsys.readouterr().err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("branching", "--n", "3", "--j", "0", "--k", "1", "--order", "4"),
            ("js", "list", "--n", "3", "--core", "1", "--weight", "2"),
            ("crystal", "graph", "--n", "3", "--max-size", "5"),
            ("core", "--n", "3", "5,5,4,1,1"),
        ],
    )
    def test_outputs_byte_stable(self, capsys, argv):
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second
