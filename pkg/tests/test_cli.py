import csv
import io

import pytest

from partialcds.cli import main
from partialcds.instances import Instance, serialize_instance
from partialcds.graph import from_edge_list


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star.cds"
    path.write_text(serialize_instance(Instance(from_edge_list(9, [(0, i) for i in range(1, 9)]))))
    return path


def test_gen_spider_parses(tmp_path, capsys):
    out = tmp_path / "s.cds"
    code, _, _ = run(capsys, "gen", "spider", "--heads", 4, "--c", 2, "--legs", 20, "-o", out)
    assert code == 0
    assert out.read_text().startswith("# label: spider-h4-c2-m20-l1\ncds 1 90 ")


def test_gen_is_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "gnp", "--n", 12, "--p", 0.3, "--seed", 7)
    _, b, _ = run(capsys, "gen", "gnp", "--n", 12, "--p", 0.3, "--seed", 7)
    assert a == b and a.startswith("# label: gnp-n12-p0.3-s7")


def test_gen_unitdisk(tmp_path, capsys):
    out = tmp_path / "u.cds"
    assert run(capsys, "gen", "unitdisk", "--n", 50, "--r", 0.25, "--seed", 1, "-o", out)[0] == 0


def test_solve_star(star_file, tmp_path, capsys):
    sol = tmp_path / "sol.txt"
    code, out, _ = run(capsys, "solve", "pcds", star_file, "--quota", 9, "--mode", "exact", "-o", sol)
    assert code == 0 and "size=1" in out
    assert "sol 9 1\nv 0\n" in sol.read_text()


def test_solve_then_verify(star_file, tmp_path, capsys):
    sol = tmp_path / "sol.txt"
    assert run(capsys, "solve", "bcds", star_file, "--k", 3, "-o", sol)[0] == 0
    code, out, _ = run(capsys, "verify", star_file, sol, "bcds", "--k", 3)
    assert code == 0 and out.strip() == "ok"


def test_verify_catches_removed_vertex(tmp_path, capsys):
    inst = tmp_path / "p.cds"
    inst.write_text("cds 1 4 3 -\ne 0 1\ne 1 2\ne 2 3\n")
    sol = tmp_path / "sol.txt"
    sol.write_text("sol 4 2\nv 0 2\nt 0 2\n")
    code, out, _ = run(capsys, "verify", inst, sol, "pcds", "--quota", 4)
    assert code == 4
    assert "not connected" in out and "not a graph edge" in out


def test_verify_catches_objective_mismatch(tmp_path, capsys):
    inst = tmp_path / "p.cds"
    inst.write_text("cds 1 4 3 -\ne 0 1\ne 1 2\ne 2 3\n")
    sol = tmp_path / "sol.txt"
    sol.write_text("sol 4 1\nv 1\n")
    code, out, _ = run(capsys, "verify", inst, sol, "pcds", "--quota", 2)
    assert code == 4 and "objective mismatch" in out


def test_exit_codes(star_file, tmp_path, capsys):
    assert run(capsys, "solve", "pcds", star_file, "--quota", 10)[0] == 3
    assert run(capsys, "solve", "pcds", star_file)[0] == 2
    assert run(capsys, "solve", "pgcds", star_file, "--quota", 2, "--profile", "weighted")[0] == 2
    assert run(capsys, "solve", "pcds", tmp_path / "missing.cds", "--quota", 1)[0] == 2
    big = tmp_path / "big.cds"
    big.write_text(serialize_instance(Instance(from_edge_list(16, [(i, i + 1) for i in range(15)]))))
    assert run(capsys, "oracle", "pcds", big, "--quota", 3)[0] == 5
    bad = tmp_path / "bad.cds"
    bad.write_text("cds 1 2 1 -\ne 0 5\n")
    code, _, err = run(capsys, "solve", "pcds", bad, "--quota", 1)
    assert code == 2 and "line 2" in err
    with pytest.raises(SystemExit) as exc:
        main(["solve", "nope"])
    assert exc.value.code == 2


def test_oracle_command(star_file, capsys):
    code, out, _ = run(capsys, "oracle", "bcds", star_file, "--k", 1)
    assert code == 0 and out.startswith("opt bcds objective=9 size=1 vertices=0")


def test_bench_empty_corpus(tmp_path, capsys):
    code, out, _ = run(capsys, "bench", tmp_path, "pcds")
    assert code == 0 and out.strip() == "instance,label,problem,param,objective,size,opt,bound,ratio,engine,ms"


def test_bench_rows(tmp_path, capsys):
    for seed in range(3):
        run(capsys, "gen", "gnp", "--n", 9, "--p", 0.4, "--seed", seed, "-o", tmp_path / f"g{seed}.cds")
    run(capsys, "gen", "spider", "--heads", 3, "--c", 1, "--legs", 2, "-o", tmp_path / "s.cds")
    out_csv = tmp_path / "out.csv"
    assert run(capsys, "bench", tmp_path, "pcds", "--quota-frac", 0.75, "-o", out_csv)[0] == 0
    rows = list(csv.DictReader(io.StringIO(out_csv.read_text())))
    assert [r["instance"] for r in rows] == ["g0.cds", "g1.cds", "g2.cds", "s.cds"]
    for r in rows:
        assert float(r["ratio"]) <= float(r["bound"])
    code, out, _ = run(capsys, "bench", tmp_path, "bcds", "--k", 4)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["problem"] for r in rows if r["instance"] == "s.cds"] == ["bcds", "lookahead-bcds"]


def test_decompose_command(tmp_path, capsys):
    t = tmp_path / "t.cds"
    t.write_text(serialize_instance(Instance(from_edge_list(12, [(i, i + 1) for i in range(11)]))))
    code, out, _ = run(capsys, "decompose", t, "--k", 3)
    assert code == 0 and "parts:" in out and out.startswith("case ")
    assert run(capsys, "decompose", t, "--k", 2)[0] == 2
