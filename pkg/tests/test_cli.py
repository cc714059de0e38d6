"""
End-to-end tests for the isoset command line
"""

import json
from dataclasses import replace

import pandas as pd
import pytest

from isoset.commands import bench as bench_command
from isoset.commands import bound as bound_command
from isoset.commands.bench import summarize_table
from isoset.main import main
from isoset.services.error_handler import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_STALL, EXIT_VERIFICATION
from isoset.services.gadgets import gen_M
from isoset.services.graph_core import complete_graph, cycle_graph, path_graph
from isoset.services.graph_io import read_graph


class TestExact:
    def test_text_report(self, capsys, graph_file, c5):
        path = graph_file(c5)
        assert main(["exact", "-i", str(path), "--mode", "ii"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "command: exact ii" in out
        assert "value: 2" in out
        assert "witness: 0 2" in out
        assert "verdict: pass" in out

    def test_json_report(self, capsys, graph_file, k4):
        path = graph_file(k4)
        assert main(["--json", "exact", "-i", str(path), "--mode", "gt"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert report["value"] == 2
        assert report["budget_status"] == "ok"
        assert report["instance"] == {"n": 4, "m": 6, "source": str(path), "family": None, "seed": None}

    def test_budget_exhausted(self, capsys, graph_file, c5):
        path = graph_file(c5)
        assert main(["exact", "-i", str(path), "--mode", "ii", "--budget", "1"]) == EXIT_BUDGET
        assert "error:" in capsys.readouterr().err

    def test_disjoint_sets_absent(self, capsys, graph_file):
        graph, _ = gen_M(4)
        path = graph_file(graph)
        assert main(["exact", "-i", str(path), "--mode", "disjoint", "--k", "3"]) == EXIT_OK
        assert "absent (proven)" in capsys.readouterr().out

    def test_disjoint_needs_k(self, graph_file, c5):
        assert main(["exact", "-i", str(graph_file(c5)), "--mode", "disjoint"]) == EXIT_INPUT


class TestInputErrors:
    def test_self_loop(self, capsys, text_file):
        path = text_file("p 2 1\n0 0\n", "loop.txt")
        assert main(["exact", "-i", str(path), "--mode", "ii"]) == EXIT_INPUT
        err = capsys.readouterr().err
        assert "error:" in err
        assert "hint:" in err

    def test_missing_file(self, tmp_path):
        assert main(["exact", "-i", str(tmp_path / "absent.txt"), "--mode", "ii"]) == EXIT_INPUT

    def test_bound_on_disconnected_graph(self, text_file):
        path = text_file("p 4 2\n0 1\n2 3\n", "two.txt")
        assert main(["bound", "-i", str(path)]) == EXIT_INPUT


class TestBound:
    def test_grundy_on_complete_graph(self, capsys, graph_file, k4):
        assert main(["bound", "-i", str(graph_file(k4)), "--method", "grundy"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "bound: 12/7" in out
        assert "value: 1" in out

    def test_auto_picks_bipartite(self, capsys, graph_file, c6):
        assert main(["--json", "bound", "-i", str(graph_file(c6))]) == EXIT_OK
        report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert report["method"] == "bipartite"
        assert report["bound"] == "2"

    def test_sweep_trace(self, graph_file, c5, tmp_path):
        trace = tmp_path / "c5.trace"
        assert main(["bound", "-i", str(graph_file(c5)), "--method", "sweep", "--trace", str(trace)]) == EXIT_OK
        lines = trace.read_text(encoding="utf-8").splitlines()
        assert lines[-1].startswith("pivot ")
        assert all(line.startswith("sweep ") for line in lines[:-1])


    @pytest.mark.parametrize("method", ["bipartite", "sweep"])
    def test_unsuitable_method_exits_like_a_stall(self, capsys, graph_file, method):
        # K4 is neither bipartite nor 3-colorable
        assert main(["bound", "-i", str(graph_file(complete_graph(4))), "--method", method]) == EXIT_STALL
        assert "--method auto" in capsys.readouterr().err

    def test_same_error_elsewhere_is_an_input_error(self, graph_file, c5):
        assert main(["partition", "-i", str(graph_file(c5)), "--method", "bipartite"]) == EXIT_INPUT


class TestPartition:
    def test_bipartite(self, capsys, graph_file, c6):
        assert main(["partition", "-i", str(graph_file(c6))]) == EXIT_OK
        out = capsys.readouterr().out
        assert "partition:\n  0 3\n  1 5\n  2 4\n" in out
        assert "disjoint: pass" in out

    def test_sweep(self, capsys, graph_file):
        assert main(["--json", "partition", "-i", str(graph_file(path_graph(5))), "--method", "sweep"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert len(report["partition"]) == 3
        assert "disjoint" not in report["verdicts"]
        assert all(report["verdicts"].values())


class TestVerify:
    def test_both_claims_pass(self, capsys, graph_file, text_file, c5):
        set_path = text_file("0\n2\n", "set.txt")
        assert main(["verify", "-i", str(graph_file(c5)), "--set", str(set_path), "--claim", "both"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "independent: pass" in out
        assert "isolating: pass" in out

    def test_failure_exit_code(self, capsys, graph_file, text_file, p4):
        set_path = text_file("0\n1\n", "set.txt")
        code = main(["verify", "-i", str(graph_file(p4)), "--set", str(set_path), "--claim", "independent"])
        assert code == EXIT_VERIFICATION
        assert "independent: fail" in capsys.readouterr().out

    def test_partition(self, capsys, graph_file, text_file, c6):
        partition_path = text_file("0 3\n1 4\n2 5\n", "partition.txt")
        code = main([
            "verify", "-i", str(graph_file(c6)), "--partition", str(partition_path), "--claim", "partition", "--k", "3",
        ])
        assert code == EXIT_OK

    def test_set_file_required(self, graph_file, c5):
        assert main(["verify", "-i", str(graph_file(c5)), "--claim", "both"]) == EXIT_INPUT


class TestRejectedWitness:
    """A witness that fails re-verification exits with the verification code"""

    def test_exact_witness(self, capsys, monkeypatch, graph_file, c5):
        monkeypatch.setattr("isoset.commands.exact.is_independent_isolating", lambda g, s: False)
        assert main(["exact", "-i", str(graph_file(c5)), "--mode", "ii"]) == EXIT_VERIFICATION
        assert "verification failed: ii witness {0,2}" in capsys.readouterr().err

    def test_exact_disjoint_sets(self, monkeypatch, graph_file, c6):
        monkeypatch.setattr(
            "isoset.commands.exact.partition_verdicts", lambda *args, **kwargs: {"isolating": False}
        )
        code = main(["exact", "-i", str(graph_file(c6)), "--mode", "disjoint", "--k", "3"])
        assert code == EXIT_VERIFICATION

    def test_bound_certificate(self, capsys, monkeypatch, graph_file, c6):
        certify = bound_command.certify
        monkeypatch.setattr(
            "isoset.commands.bound.certify", lambda g, method: replace(certify(g, method), verified=False)
        )
        assert main(["bound", "-i", str(graph_file(c6))]) == EXIT_VERIFICATION
        assert "bipartite witness" in capsys.readouterr().err

    def test_partition_sets(self, monkeypatch, graph_file, c6):
        monkeypatch.setattr(
            "isoset.commands.partition.partition_verdicts",
            lambda *args, **kwargs: {"disjoint": True, "isolating": False},
        )
        assert main(["partition", "-i", str(graph_file(c6))]) == EXIT_VERIFICATION


class TestGenAndReduce:
    def test_gen_to_stdout(self, capsys):
        assert main(["gen", "--family", "jewel", "--m", "2"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[:3] == ["# family jewel", "# iota_independent 2", "p 5 5"]

    def test_gen_random_to_file(self, tmp_path):
        target = tmp_path / "tree.txt"
        assert main(["gen", "--family", "tree", "--n", "10", "--seed", "4", "-o", str(target)]) == EXIT_OK
        graph = read_graph(target)
        assert (graph.n, graph.m) == (10, 9)

    def test_gen_same_seed_same_file(self, tmp_path):
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        for target in (first, second):
            main(["gen", "--family", "gnp", "--n", "12", "--p", "0.3", "--seed", "8", "-o", str(target)])
        assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")

    def test_gen_named_family_needs_its_parameter(self):
        assert main(["gen", "--family", "M"]) == EXIT_INPUT

    def test_reduce_j_writes_map(self, graph_file, tmp_path):
        target = tmp_path / "j.txt"
        assert main(["reduce", "--gadget", "J", "-i", str(graph_file(complete_graph(2))), "-o", str(target)]) == EXIT_OK
        assert read_graph(target).n == 10
        assert (tmp_path / "j.txt.map").read_text(encoding="utf-8") == (
            "v 0 0\nv 1 1\ne 0 1 2 3\nq 0 4 5 6\nq 1 7 8 9\n"
        )

    def test_reduce_o(self, graph_file, tmp_path):
        target = tmp_path / "o.txt"
        code = main(["reduce", "--gadget", "O", "--vertex", "2", "-i", str(graph_file(cycle_graph(5))), "-o", str(target)])
        assert code == EXIT_OK
        assert read_graph(target).n == 8

    def test_reduce_o_needs_vertex(self, graph_file, tmp_path):
        code = main(["reduce", "--gadget", "O", "-i", str(graph_file(cycle_graph(5))), "-o", str(tmp_path / "o.txt")])
        assert code == EXIT_INPUT


class TestBench:
    def test_small_batch_with_csv(self, capsys, tmp_path):
        csv_path = tmp_path / "bench.csv"
        code = main([
            "bench", "--family", "gnp", "--n-min", "3", "--n-max", "6", "--count", "3", "--seed", "2",
            "--checks", "oracle,operation_o", "--workers", "1", "--csv", str(csv_path),
        ])
        assert code == EXIT_OK
        table = pd.read_csv(csv_path)
        assert len(table) == 6
        assert set(table["check"]) == {"oracle", "operation_o"}
        assert table["passed"].all()
        assert "failures=0 stalls=0" in capsys.readouterr().out

    def test_json_summary_is_last(self, capsys):
        code = main([
            "--json", "bench", "--family", "bipartite", "--n-max", "8", "--count", "2",
            "--checks", "bipartite_partition", "--workers", "1",
        ])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3
        summary = json.loads(lines[-1])
        assert summary["per_check"]["bipartite_partition"]["pass"] == 2

    def test_summary_counts(self):
        table = pd.DataFrame([
            {"check": "a", "passed": True, "skipped": False, "stalled": False, "ratio": 0.5},
            {"check": "a", "passed": False, "skipped": False, "stalled": False, "ratio": None},
            {"check": "b", "passed": False, "skipped": False, "stalled": True, "ratio": None},
            {"check": "b", "passed": False, "skipped": True, "stalled": False, "ratio": None},
        ])
        summary = summarize_table(table, "gnp", 2, 0)
        assert summary.per_check["a"] == {"pass": 1, "fail": 1, "stall": 0, "skip": 0}
        assert summary.per_check["b"] == {"pass": 0, "fail": 0, "stall": 1, "skip": 1}
        assert (summary.failures, summary.stalls) == (1, 1)
        assert summary.mean_ratio == 0.5
        assert not summary.ok
        assert summarize_table(table.iloc[:1], "gnp", 1, 0).ok

    def test_stalls_exit_with_the_stall_code(self, monkeypatch):
        real = bench_command.summarize_table
        monkeypatch.setattr(
            "isoset.commands.bench.summarize_table",
            lambda *args: real(*args).model_copy(update={"stalls": 1}),
        )
        code = main([
            "bench", "--family", "gnp", "--n-max", "5", "--count", "1", "--checks", "oracle", "--workers", "1",
        ])
        assert code == EXIT_STALL

    @pytest.mark.parametrize("argv", [
        ["--checks", "nonsense"],
        ["--checks", "oracle", "--count", "0"],
        ["--checks", "oracle", "--n-min", "9"],
    ])
    def test_bad_arguments(self, argv):
        assert main(["bench", "--family", "gnp", "--n-max", "6"] + argv) == EXIT_INPUT
