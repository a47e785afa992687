import json
import subprocess
import sys

import pytest

from romanmyc.cli import main
from romanmyc.graph import cartesian_product, complete_graph, format_edge_list, mycielskian, parse_edge_list, path_graph, generate
from romanmyc.solver import gamma_r


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def pet(tmp_path, capsys):
    path = tmp_path / "pet.txt"
    assert run(capsys, "gen", "petersen", "--out", str(path))[0] == 0
    return path


def test_gamma_r_on_petersen(capsys, pet):
    code, out, _ = run(capsys, "gamma-r", str(pet))
    value, witness = out.split()
    assert code == 0 and value == "6" and len(witness) == 10 and set(witness) <= set("012")


def test_mycielskian_of_k2(capsys, tmp_path):
    k2 = tmp_path / "k2.txt"
    k2.write_text(format_edge_list(complete_graph(2)))
    code, out, _ = run(capsys, "mycielskian", str(k2), "--m", "1")
    g = parse_edge_list(out)
    assert code == 0 and (g.n, g.edge_count) == (5, 5) and g.is_k_regular(2)


def test_check_rdf(capsys, tmp_path):
    (tmp_path / "p3.txt").write_text("3 2\n0 1\n1 2\n")
    (tmp_path / "f.txt").write_text("020\n")
    code, out, _ = run(capsys, "check-rdf", str(tmp_path / "p3.txt"), str(tmp_path / "f.txt"))
    assert code == 0 and out.split() == ["valid", "weight", "2"]
    (tmp_path / "g.txt").write_text("200\n")
    code, out, _ = run(capsys, "check-rdf", str(tmp_path / "p3.txt"), str(tmp_path / "g.txt"))
    assert out.splitlines() == ["invalid", "weight 2", "undefended 2"]


@pytest.mark.parametrize("argv", [
    ("gen", "cycle", "6"),
    ("gen", "complete_multipartite", "2", "3", "4"),
    ("gen", "star", "5"),
])
def test_round_trip_and_pipe_equivalence(capsys, tmp_path, argv):
    code, out, _ = run(capsys, *argv)
    g = parse_edge_list(out)
    assert g == generate(argv[1], *map(int, argv[2:]))
    path = tmp_path / "g.txt"
    path.write_text(out)
    _, out2, _ = run(capsys, "gamma-r", str(path))
    lib = gamma_r(g)
    assert out2.split() == [str(lib.value), str(lib.witness)]


def test_product_round_trip(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text(format_edge_list(path_graph(3)))
    b.write_text(format_edge_list(complete_graph(3)))
    _, out, _ = run(capsys, "product", str(a), str(b))
    assert parse_edge_list(out) == cartesian_product(path_graph(3), complete_graph(3))
    _, out, _ = run(capsys, "mycielskian", str(a), "--m", "3")
    assert parse_edge_list(out) == mycielskian(path_graph(3), 3)[0]


def test_classify_fields(capsys, pet):
    code, out, _ = run(capsys, "classify", str(pet))
    fields = dict(line.split(": ") for line in out.splitlines())
    assert fields == {"gamma": "3", "gamma_r": "6", "is_roman": "true",
                      "is_special_roman": "false", "special_witness": "-"}
    _, out, _ = run(capsys, "classify", str(pet), "--format", "structured")
    assert json.loads(out)["gamma_r"] == 6


def test_gamma_prints_set(capsys, pet):
    code, out, _ = run(capsys, "gamma", str(pet))
    lines = out.splitlines()
    assert lines[0] == "3" and len(lines[1].split()) == 3


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "prism_kn", "3", "5", "cycle")
    fields = dict(line.split(": ") for line in out.splitlines())
    assert code == 0 and fields["claimed_weight"] == "6" and fields["valid"] == "true"
    code, out, _ = run(capsys, "construct", "prism_k3", "4", "path", "--format", "structured")
    d = json.loads(out)
    assert d["valid"] is False and d["undefended"] == [9]
    k33 = tmp_path / "k33.txt"
    k33.write_text(format_edge_list(generate("complete_multipartite", 3, 3)))
    code, out, _ = run(capsys, "construct", "mu_m", "--graph", str(k33), "--m", "4")
    assert "claimed_weight: 10" in out and "valid: true" in out
    code, out, _ = run(capsys, "construct", "path_multipartite", "2", "4", "4")
    assert "claimed_weight: 8" in out


def test_usage_errors_name_the_token(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "cycle", "six")
    assert code == 1 and "'six'" in err
    code, _, err = run(capsys, "gen", "cycle", "2")
    assert code == 1 and "cycle" in err
    with pytest.raises(SystemExit) as exc:
        main(["gen", "wheel"])
    assert exc.value.code == 1
    assert "wheel" in capsys.readouterr().err
    code, _, err = run(capsys, "gamma-r", str(tmp_path / "missing.txt"))
    assert code == 1 and "missing.txt" in err
    (tmp_path / "bad.txt").write_text("3 1\n0 x\n")
    code, _, err = run(capsys, "gamma-r", str(tmp_path / "bad.txt"))
    assert code == 1 and "'x'" in err and "line 2" in err
    (tmp_path / "p3.txt").write_text("3 2\n0 1\n1 2\n")
    (tmp_path / "f.txt").write_text("0a0\n")
    code, _, err = run(capsys, "check-rdf", str(tmp_path / "p3.txt"), str(tmp_path / "f.txt"))
    assert code == 1 and "'a'" in err
    code, _, err = run(capsys, "construct", "prism_kn", "2", "3")
    assert code == 1 and "n must be >= 4" in err
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--time-limit-s", "-1"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_size_refusal_and_timeout_exit_2(capsys, pet, tmp_path):
    code, out, err = run(capsys, "gamma-r", str(pet), "--max-n", "8")
    assert code == 2 and out == "" and "10 vertices" in err
    big = tmp_path / "prism.txt"
    big.write_text(format_edge_list(cartesian_product(path_graph(16), complete_graph(3))))
    code, _, err = run(capsys, "gamma-r", str(big), "--time-limit-s", "0.001")
    assert code == 2 and "timeout" in err


def test_verify_writes_report(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, stdout, err = run(capsys, "verify", "--random-count", "3", "--m", "1", "--max-n", "21",
                            "--format", "structured", "--out", str(out))
    assert code == 0 and stdout == "" and "0 universal violations" in err
    d = json.loads(out.read_text())
    assert d["config"]["seed"] == 1729 and d["config"]["exact_cap"] == 21


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "romanmyc", "gen", "path", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "3 2\n0 1\n1 2\n"
