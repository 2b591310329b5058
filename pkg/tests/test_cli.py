import json

import pytest

from beiblock.blocks import validate_block_graph
from beiblock.cli import run
from beiblock.generate import complete_graph, cycle_graph
from beiblock.graph import parse_graph

FIELDS = [
    "n", "edge_count", "component_count", "is_block_graph", "depth", "projective_dimension",
    "krull_dimension", "dim_witness", "regularity", "reg_bounds", "flowers",
    "indecomposable_part_count", "oracle",
]


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return _write


@pytest.fixture
def two_flower_file(write, two_flower_graph):
    return write("two_flowers.txt", two_flower_graph.to_text())


def call(argv, capsys):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_reg_two_flowers(two_flower_file, capsys):
    code, out, _ = call(["reg", two_flower_file], capsys)
    assert code == 0 and out == "regularity: 5\n"


def test_reg_bounds(two_flower_file, capsys):
    code, out, _ = call(["reg", two_flower_file, "--bounds"], capsys)
    assert out.splitlines() == ["regularity: 5", "flower_lower: 5", "path_lower: 3", "clique_upper: 6"]


def test_reg_bounds_disconnected(write, capsys):
    f = write("d.txt", "n 6\n1 2\n2 3\n4 5\n")
    code, out, _ = call(["reg", f, "--bounds"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "regularity: 3",
        "component[1]: flower_lower=2 path_lower=2 clique_upper=2",
        "component[2]: flower_lower=1 path_lower=1 clique_upper=1",
        "component[3]: isolated vertex 6",
    ]


def test_dim_k4(write, capsys):
    f = write("k4.txt", complete_graph(4).to_text())
    code, out, _ = call(["dim", f], capsys)
    assert code == 0 and out == "dimension: 5\n"


def test_dim_witness_and_check(two_flower_file, capsys):
    code, out, _ = call(["dim", two_flower_file, "--witness", "--check"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "dimension: 15", "witness: [2]", "peel: [[2, 4]]",
        "oracle_dimension: 15", "oracle_witness: [2]",
    ]


def test_c4_not_block_graph(write, capsys):
    f = write("c4.txt", cycle_graph(4).to_text())
    code, out, err = call(["invariants", f], capsys)
    assert code == 2 and out == ""
    assert "NotBlockGraph" in err


def test_oracle_accepts_general_graphs(write, capsys):
    f = write("c4.txt", cycle_graph(4).to_text())
    code, out, _ = call(["oracle", f], capsys)
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["cutsets"] == "3"
    assert lines["maxh_height"] == "4"
    assert lines["maxh_only_empty"] == "false"
    assert lines["dimension"] == "5"


def test_oracle_limit_exit_code(two_flower_file, capsys, monkeypatch):
    code, _, err = call(["oracle", two_flower_file, "--limit-n", "5"], capsys)
    assert code == 3 and "OracleLimitExceeded" in err
    code, _, _ = call(["invariants", two_flower_file, "--check", "--limit-n", "11"], capsys)
    assert code == 3
    monkeypatch.setenv("BEI_ORACLE_LIMIT", "10")
    code, _, _ = call(["dim", two_flower_file, "--check"], capsys)
    assert code == 3


def test_parse_error_exit_code(write, capsys):
    f = write("bad.txt", "1 1\n")
    code, _, err = call(["dim", f], capsys)
    assert code == 1 and "self-loop" in err
    code, _, _ = call(["dim", "/nonexistent/file.txt"], capsys)
    assert code == 1


@pytest.mark.parametrize("argv", [[], ["bogus"], ["dim"], ["invariants", "x", "--format", "xml"],
                                  ["gen", "--blocks", "0", "--max-block-size", "3", "--seed", "1"],
                                  ["gen", "--blocks", "2"]])
def test_bad_arguments(argv, capsys):
    code, _, _ = call(argv, capsys)
    assert code == 4


def test_invariants_json_fields(two_flower_file, capsys):
    code, out, _ = call(["invariants", two_flower_file, "--format", "json", "--check"], capsys)
    assert code == 0
    report = json.loads(out)
    assert list(report) == FIELDS
    assert report["krull_dimension"] == 15
    assert report["regularity"] == 5
    assert report["reg_bounds"] == {"flower_lower": 5, "path_lower": 3, "clique_upper": 6}
    assert report["flowers"] == [{"vertex": 1, "max_cdeg_f": 3}, {"vertex": 2, "max_cdeg_f": 4}]
    assert report["oracle"] == {"used": True, "dim_bruteforce": 15, "minh_height": 9, "maxh_height": 11}
    assert report["depth"] == report["n"] + report["component_count"]
    assert report["projective_dimension"] == report["n"] - report["component_count"]
    assert report["krull_dimension"] == 2 * report["n"] - report["oracle"]["minh_height"]
    # byte-identical round trip
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_invariants_text_order(two_flower_file, capsys):
    code, out, _ = call(["invariants", two_flower_file], capsys)
    keys = [line.split(":", 1)[0] for line in out.splitlines()]
    top = []
    for k in keys:
        head = k.split(".", 1)[0].split("[", 1)[0]
        if head not in top:
            top.append(head)
    assert top == FIELDS
    assert "regularity: 5" in out.splitlines()
    assert "oracle.used: false" in out.splitlines()


def test_invariants_disconnected_breakdown(write, capsys):
    f = write("d.txt", "n 7\n1 2\n3 4\n4 5\n4 6\n")
    code, out, _ = call(["invariants", f, "--format", "json", "--check"], capsys)
    report = json.loads(out)
    assert report["component_count"] == 3
    assert report["reg_bounds"] is None
    assert report["krull_dimension"] == sum(c["krull_dimension"] for c in report["components"]) == 11
    assert report["regularity"] == sum(c["regularity"] for c in report["components"]) == 3
    assert [c["vertices"] for c in report["components"]] == [[1, 2], [3, 4, 5, 6], [7]]
    assert report["components"][2]["reg_bounds"] is None
    assert report["oracle"]["dim_bruteforce"] == 11


def test_decompose(write, capsys):
    f = write("p.txt", "1 2\n2 3\n3 4\n")
    code, out, _ = call(["decompose", f], capsys)
    assert out.splitlines() == ["parts: 3", "part[1]: 1 2", "part[2]: 2 3", "part[3]: 3 4", "glue: 2 3"]


def test_gen_is_deterministic_and_valid(tmp_path, capsys):
    argv = ["gen", "--blocks", "12", "--max-block-size", "4", "--seed", "9", "--bias", "0.3"]
    _, a, _ = call(argv, capsys)
    _, b, _ = call(argv, capsys)
    assert a == b
    validate_block_graph(parse_graph(a))
    out = tmp_path / "g.txt"
    code, stdout, _ = call(argv + ["--out", str(out)], capsys)
    assert code == 0 and stdout == ""
    assert out.read_text() == a


def test_gen_outputs_always_validate(capsys):
    for seed in range(40):
        _, text, _ = call(["gen", "--blocks", str(1 + seed % 9), "--max-block-size", "5", "--seed", str(seed)], capsys)
        validate_block_graph(parse_graph(text))


def test_check_never_mismatches_on_corpus(write, capsys):
    from _corpus import random_corpus

    for i, g in enumerate(random_corpus()[:60]):
        f = write(f"g{i}.txt", g.to_text())
        code, _, err = call(["invariants", f, "--check"], capsys)
        assert code == 0, err


def test_stdin_input(monkeypatch, capsys, two_flower_graph):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(two_flower_graph.to_text()))
    code, out, _ = call(["reg", "-"], capsys)
    assert out == "regularity: 5\n"
