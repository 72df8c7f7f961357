import json

import pytest

from cli import build_parser, main
from config import settings
from ddt.services.constructions import disjoint_cliques
from ddt.utils.graph_io import write_edge_list


def _payload(capsys):
    return json.loads(capsys.readouterr().out)


@pytest.fixture
def cliques_file(tmp_path):
    path = tmp_path / "cliques.el"
    write_edge_list(disjoint_cliques(3, 4), path)
    return path


def test_generate_then_stats(tmp_path, capsys):
    path = tmp_path / "g.el"
    assert main(["generate", "--family", "disjoint-cliques", "--m", "4", "--k", "3", "--out", str(path)]) == 0
    assert path.read_bytes().startswith(b"12 12\n")
    capsys.readouterr()

    assert main(["stats", str(path)]) == 0
    payload = _payload(capsys)
    assert payload["manifest"]["command"] == "stats"
    assert payload["report"]["f"] == 3
    assert payload["report"]["hom"] == 4
    assert payload["report"]["f_exact"] and payload["report"]["hom_exact"]
    assert not payload["report"]["delta_skipped"]


def test_stats_skips_distance_summary_above_pair_guard(cliques_file, capsys, monkeypatch):
    monkeypatch.setattr(settings, "pair_guard_n", 8)
    assert main(["stats", str(cliques_file)]) == 0
    report = _payload(capsys)["report"]
    assert report["delta_skipped"]
    assert report["delta_histogram"] == {}
    assert report["delta_max"] is None
    assert report["f"] == 3


def test_generate_writes_to_stdout(capsys):
    assert main(["generate", "--family", "complement-blowup", "--k", "4", "--b", "2", "--n", "8"]) == 0
    assert capsys.readouterr().out.startswith("8 ")


def test_verify_extremal_and_alias(capsys):
    assert main(["verify", "extremal", "--k", "4", "--m", "4"]) == 0
    assert _payload(capsys)["report"]["quantities"]["hom"] == 4
    assert main(["verify", "theorem2", "--k", "4", "--m", "4"]) == 0
    capsys.readouterr()
    assert main(["verify", "theorem2", "--k", "3", "--m", "1"]) == 0
    assert _payload(capsys)["report"]["quantities"]["f"] == 1


def test_witness_requires_seed(cliques_file, capsys):
    assert main(["witness", str(cliques_file)]) == 2
    assert "--seed" in capsys.readouterr().err


def test_random_family_requires_seed(capsys):
    assert main(["generate", "--family", "random", "--n", "5", "--p", "0.5"]) == 2
    assert main(["generate", "--family", "random", "--n", "5", "--p", "0.5", "--seed", "1"]) == 0


def test_seeded_runs_are_byte_identical(cliques_file, capsys):
    outputs = []
    for _ in range(2):
        assert main(["witness", str(cliques_file), "--seed", "7", "--trials", "20"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    manifest = json.loads(outputs[0])["manifest"]
    assert (manifest["seed"], manifest["trials"]) == (7, 20)


def test_verify_campaigns(cliques_file, capsys):
    assert main(["verify", "sweep", "--n-max", "3"]) == 0
    assert main(["verify", "sqrt-bound", str(cliques_file), "--seed", "1"]) == 0
    assert main(["verify", "collision", "--s-max", "10"]) == 0
    assert main(["verify", "central-binomial", "--s-max", "50", "--format", "csv"]) == 0
    assert main(["verify", "constants", "--k", "2", "3", "--eps", "0.1"]) == 0
    assert capsys.readouterr().out


def test_cluster_command(cliques_file, capsys):
    args = ["cluster", str(cliques_file), "--d0", "1", "--link-dist", "3",
            "--validate-k", "1", "--validate-j", "3", "--min-size", "4", "--max-leftover", "0"]
    assert main(args) == 0
    report = _payload(capsys)["report"]
    assert report["clusters"] == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]
    assert report["validation"]["passed"]


def test_cluster_rejects_inverted_radii(cliques_file, capsys):
    assert main(["cluster", str(cliques_file), "--d0", "3", "--link-dist", "1"]) == 2
    assert "partition parameters" in capsys.readouterr().err


def test_histogram_experiment_as_csv(capsys):
    args = ["experiment", "histogram", "--m", "50", "--k", "3", "--seed", "1", "--trials", "200", "--format", "csv"]
    assert main(args) == 0
    assert capsys.readouterr().out.startswith("degree,predicted,observed_mean,observed_std,z")


def test_input_errors_exit_with_two(tmp_path, capsys):
    bad = tmp_path / "bad.el"
    bad.write_bytes(b"3 2\n0 1\n0 1\n")
    assert main(["stats", str(bad)]) == 2
    assert "duplicate" in capsys.readouterr().err
    assert main(["stats", str(tmp_path / "missing.el")]) == 2


def test_parser_surface():
    parser = build_parser()
    args = parser.parse_args(["witness", "g.el", "--seed", "3", "--trials", "5"])
    assert (args.command_name, args.seed, args.trials) == ("witness", 3, 5)
    assert main(["--version"]) == 0
    assert main(["no-such-command"]) == 2
