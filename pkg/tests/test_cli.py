"""Tests for the command-line interface and its exit codes."""

import json

import pytest

from src.core import config as config_module
from src.core.formats import parse_hypergraph, parse_witness, render_hypergraph
from src.core.hypergraph import Hypergraph
from src.main import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, main, run


pytestmark = pytest.mark.integration


@pytest.fixture
def write_instance(tmp_path):
    """Write a hypergraph file and return its path as a string."""

    def _write(hypergraph, name="h.kuh"):
        path = tmp_path / name
        path.write_text(render_hypergraph(hypergraph), encoding="utf-8")
        return str(path)

    return _write


class TestGen:
    """kpartite gen."""

    def test_writes_file(self, tmp_path):
        out = tmp_path / "complete.kuh"

        assert run(["gen", "--kind", "complete", "--n", "8", "--k", "2", "--out", str(out)]) == 0
        assert parse_hypergraph(out.read_text(encoding="utf-8")).m == 28

    def test_writes_stdout(self, capsys):
        assert run(["gen", "--kind", "exact-m", "--n", "6", "--k", "3", "--m", "4"]) == 0

        h = parse_hypergraph(capsys.readouterr().out)
        assert (h.n, h.k, h.m) == (6, 3, 4)

    def test_same_seed_same_bytes(self, capsys):
        args = ["gen", "--kind", "binomial", "--n", "20", "--k", "2", "--p", "0.3", "--seed", "9"]
        run(args)
        first = capsys.readouterr().out
        run(args)

        assert capsys.readouterr().out == first

    def test_planted(self, capsys):
        args = ["gen", "--kind", "planted", "--n", "9", "--k", "3", "--part-size", "3"]

        assert run(args) == 0
        assert parse_hypergraph(capsys.readouterr().out).m == 27

    def test_header_counts_edges(self, capsys):
        assert run(["gen", "--kind", "complete", "--n", "5", "--k", "3"]) == 0
        assert capsys.readouterr().out.splitlines()[:2] == ["kuh 1", "3 5 10"]

    def test_empty_has_no_edge_lines(self, capsys):
        assert run(["gen", "--kind", "empty", "--n", "4", "--k", "2"]) == 0
        assert capsys.readouterr().out == "kuh 1\n2 4 0\n"

    def test_invalid_combination(self, capsys):
        assert run(["gen", "--kind", "binomial", "--n", "6", "--k", "2"]) == EXIT_INPUT
        assert "need p" in capsys.readouterr().err

    def test_bad_probability(self):
        assert run(["gen", "--kind", "binomial", "--n", "6", "--k", "2", "--p", "x"]) == 1


class TestFind:
    """kpartite find."""

    def test_trimmed_witness(self, write_instance, capsys):
        path = write_instance(Hypergraph.complete(256, 2))

        assert run(["find", "--in", path]) == EXIT_OK
        assert capsys.readouterr().out == "kuw 1\n2\n2 2 3\n2 0 1\n"

    def test_untrimmed_witness(self, write_instance, capsys):
        path = write_instance(Hypergraph.complete(256, 2))

        assert run(["find", "--in", path, "--no-trim"]) == EXIT_OK
        parts = parse_witness(capsys.readouterr().out)
        assert parts == [tuple(range(2, 256)), (0, 1)]

    def test_explain_goes_to_stderr(self, write_instance, capsys):
        path = write_instance(Hypergraph.complete(256, 2))

        assert run(["find", "--in", path, "--explain"]) == EXIT_OK
        captured = capsys.readouterr()
        assert "t = 2" in captured.err
        assert "w = 8" in captured.err
        assert "s = 16" in captured.err
        assert captured.out.startswith("kuw 1\n")

    def test_trace_and_out_files(self, write_instance, tmp_path):
        path = write_instance(Hypergraph.complete(60, 3))
        trace_path = tmp_path / "trace.json"
        out_path = tmp_path / "w.kuw"

        args = ["find", "--in", path, "--forced-t", "2", "--trace", str(trace_path)]
        assert run([*args, "--out", str(out_path)]) == EXIT_OK

        parts = parse_witness(out_path.read_text(encoding="utf-8"))
        assert parts == [(4, 5), (2, 3), (0, 1)]
        trace = json.loads(trace_path.read_text(encoding="utf-8"))
        assert [level["k"] for level in trace["levels"]] == [3, 2]

    def test_fallback_single_edge(self, write_instance, capsys):
        path = write_instance(Hypergraph.build(10, 2, [(7, 9), (3, 8), (3, 5)]))

        assert run(["find", "--in", path]) == EXIT_OK
        assert parse_witness(capsys.readouterr().out) == [(3,), (5,)]

    def test_forced_not_found(self, write_instance, capsys):
        path = write_instance(Hypergraph.build(4, 2, [(0, 1)]))

        assert run(["find", "--in", path, "--forced-t", "2"]) == EXIT_NEGATIVE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "WitnessNotFound" in captured.err

    def test_no_edges(self, write_instance, capsys):
        path = write_instance(Hypergraph.empty(5, 2))

        assert run(["find", "--in", path]) == EXIT_INPUT
        assert "NoEdges" in capsys.readouterr().err

    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.kuh"
        path.write_text("kuh 1\n2 3 1\n1 0\n", encoding="utf-8")

        assert run(["find", "--in", str(path)]) == EXIT_INPUT
        assert "line 3" in capsys.readouterr().err

    def test_ids_beyond_rank_range(self, tmp_path, capsys):
        path = tmp_path / "huge.kuh"
        path.write_text("kuh 1\n2 10000000000 1\n0 9999999999\n", encoding="utf-8")

        assert run(["find", "--in", str(path)]) == EXIT_INPUT
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert run(["find", "--in", str(tmp_path / "nope.kuh")]) == EXIT_INPUT


class TestVerify:
    """kpartite verify."""

    def test_valid(self, write_instance, tmp_path, capsys):
        path = write_instance(Hypergraph.complete(6, 2))
        witness = tmp_path / "w.kuw"
        witness.write_text("kuw 1\n2\n3 0 1 2\n3 3 4 5\n", encoding="utf-8")

        assert run(["verify", "--in", path, "--witness", str(witness)]) == EXIT_OK
        assert capsys.readouterr().out == "VALID\n"

    def test_overlap(self, write_instance, tmp_path, capsys):
        path = write_instance(Hypergraph.complete(6, 2))
        witness = tmp_path / "w.kuw"
        witness.write_text("kuw 1\n2\n2 0 1\n2 1 2\n", encoding="utf-8")

        assert run(["verify", "--in", path, "--witness", str(witness)]) == EXIT_NEGATIVE
        assert capsys.readouterr().out.startswith("INVALID: vertex 1")

    def test_find_then_verify(self, write_instance, tmp_path):
        path = write_instance(Hypergraph.complete(60, 3))
        witness = tmp_path / "w.kuw"

        assert run(["find", "--in", path, "--forced-t", "2", "--out", str(witness)]) == 0
        assert run(["verify", "--in", path, "--witness", str(witness)]) == 0

    def test_wrong_part_count(self, write_instance, tmp_path):
        path = write_instance(Hypergraph.complete(6, 3))
        witness = tmp_path / "w.kuw"
        witness.write_text("kuw 1\n1\n1 0\n", encoding="utf-8")

        assert run(["verify", "--in", path, "--witness", str(witness)]) == EXIT_INPUT


class TestOracleAndParams:
    """kpartite oracle and kpartite params."""

    def test_oracle(self, write_instance, capsys):
        path = write_instance(Hypergraph.complete(6, 2))

        assert run(["oracle", "--in", path]) == EXIT_OK
        assert capsys.readouterr().out == "3\n"

    def test_oracle_on_small_graphs(self, write_instance, capsys):
        complete = write_instance(Hypergraph.complete(4, 2), "k4.kuh")
        cycle = write_instance(
            Hypergraph.build(5, 2, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]), "c5.kuh"
        )

        assert run(["oracle", "--in", complete]) == EXIT_OK
        assert run(["oracle", "--in", cycle]) == EXIT_OK
        assert capsys.readouterr().out == "2\n1\n"

    def test_oracle_too_large(self, write_instance, capsys):
        path = write_instance(Hypergraph.complete(13, 2))

        assert run(["oracle", "--in", path]) == EXIT_INPUT
        assert "InstanceTooLarge" in capsys.readouterr().err

    def test_params(self, write_instance, capsys):
        path = write_instance(Hypergraph.complete(256, 2))

        assert run(["params", "--in", path]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert "t = 2" in out
        assert "d = 32640/32640" in out


class TestGlobalOptions:
    """Usage errors, configuration and main()."""

    def test_usage_error_exits_with_input_code(self):
        with pytest.raises(SystemExit) as excinfo:
            run(["find"])

        assert excinfo.value.code == EXIT_INPUT

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as excinfo:
            run(["explode"])

        assert excinfo.value.code == EXIT_INPUT

    def test_invalid_config_file(self, tmp_path, write_instance, capsys):
        config_path = tmp_path / "bad.json"
        config_path.write_text(json.dumps({"storage": {"backend": "btree"}}))
        path = write_instance(Hypergraph.complete(6, 2))

        assert run(["--config", str(config_path), "oracle", "--in", path]) == EXIT_INPUT
        assert "invalid configuration" in capsys.readouterr().err

    def test_config_file_selects_backend(self, tmp_path, write_instance, capsys):
        config_path = tmp_path / "sorted.json"
        config_path.write_text(json.dumps({"storage": {"backend": "sorted"}}))
        path = write_instance(Hypergraph.complete(256, 2))

        assert run(["--config", str(config_path), "find", "--in", path]) == EXIT_OK
        assert capsys.readouterr().out == "kuw 1\n2\n2 2 3\n2 0 1\n"

    def test_verbose_logs_levels(self, write_instance, capsys):
        path = write_instance(Hypergraph.complete(256, 2))

        assert run(["-v", "find", "--in", path]) == EXIT_OK
        assert "Level k=2" in capsys.readouterr().err

    def test_main_exits_with_code(self, write_instance):
        path = write_instance(Hypergraph.build(4, 2, [(0, 1)]))

        with pytest.raises(SystemExit) as excinfo:
            main(["find", "--in", path, "--forced-t", "2"])

        assert excinfo.value.code == EXIT_NEGATIVE

    def test_malformed_env_override(self, monkeypatch, write_instance, capsys):
        path = write_instance(Hypergraph.complete(6, 2))
        monkeypatch.setenv("PARTITE_MEM_BUDGET_BITS", "lots")
        config_module._config = None

        assert run(["oracle", "--in", path]) == EXIT_INPUT
        assert "PARTITE_MEM_BUDGET_BITS" in capsys.readouterr().err

    def test_bench_defaults_follow_config_file(self, tmp_path, capsys):
        config_path = tmp_path / "bench.json"
        config_path.write_text(json.dumps({"bench": {"doublings": 1, "repeats": 1}}))
        args = ["--config", str(config_path), "bench", "--k", "2", "--n-start", "8"]

        assert run(args) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert [line.split(",")[0] for line in lines] == ["n", "8", "16", "slope"]
