import json
import subprocess
import sys

import pytest

from clcs import ProblemInstance, solve
from clcs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out)


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--x", "abc", "--y", "abc")
    assert code == 0
    assert out == '{"found":true,"length":3,"start":0,"end":3,"match":"abc","match_hex":"616263"}\n'


def test_solve_case5(capsys):
    code, obj = run_json(capsys, "solve", "--x", "bab", "--y", "ba", "--p", "b")
    assert code == 0
    assert obj == {"found": True, "length": 2, "start": 0, "end": 2, "match": "ba", "match_hex": "6261"}


def test_solve_not_found(capsys):
    code, out, _ = run(capsys, "solve", "--x", "a", "--y", "a", "--p", "ab")
    assert code == 0
    assert out == '{"found":false}\n'


def test_solve_plain(capsys):
    code, out, _ = run(capsys, "solve", "--x", "abc", "--y", "xbc", "--plain")
    assert (code, out) == (0, "bc")
    code, out, err = run(capsys, "solve", "--x", "a", "--y", "b", "--p", "a", "--plain")
    assert (code, out) == (0, "")
    assert err


def test_solve_hex_and_non_utf8(capsys):
    code, obj = run_json(capsys, "solve", "--x-hex", "ff00ff", "--y-hex", "00ff", "--p-hex", "ff")
    assert code == 0
    assert obj == {"found": True, "length": 2, "start": 0, "end": 2, "match_hex": "00ff"}


def test_solve_files(tmp_path, capsys):
    (tmp_path / "x").write_bytes(b"abc\n")
    (tmp_path / "y").write_bytes(b"zabc\n")
    code, obj = run_json(capsys, "solve", "--x-file", str(tmp_path / "x"), "--y-file", str(tmp_path / "y"))
    assert obj["match"] == "abc"
    code, obj = run_json(
        capsys, "solve", "--x-file", str(tmp_path / "x"), "--y-file", str(tmp_path / "y"),
        "--keep-trailing-newline",
    )
    assert obj["match"] == "abc\n"


def test_file_strips_only_one_newline(tmp_path, capsys):
    (tmp_path / "y").write_bytes(b"a\n\n")
    code, obj = run_json(capsys, "solve", "--x", "a\n", "--y-file", str(tmp_path / "y"))
    assert obj["match_hex"] == "610a"


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "solve", "--x", "a")[0] == 2
    code, _, err = run(capsys, "solve", "--x", "a", "--y-file", str(tmp_path / "missing"))
    assert code == 2 and "missing" in err
    assert run(capsys, "solve", "--x", "a", "--y-hex", "zz")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--x", "a", "--x-hex", "61", "--y", "a"])
    assert exc.value.code == 2


def test_oracle(capsys):
    code, obj = run_json(capsys, "oracle", "--x", "ab", "--y", "ba", "--p", "b")
    assert code == 0
    assert obj == {"found": True, "length": 1, "start": 0, "end": 1, "match": "b", "match_hex": "62"}


def test_oracle_matches_solve_output(capsys):
    for argv in (["--x", "bab", "--y", "ba", "--p", "b"], ["--x", "abcab", "--y", "bcaab"], ["--x", "a", "--y", "b", "--p", "a"]):
        assert run(capsys, "solve", *argv)[1] == run(capsys, "oracle", *argv)[1]


def test_oracle_guard(capsys):
    code, out, err = run(capsys, "oracle", "--x", "a", "--y", "a" * 4097)
    assert code == 2 and out == "" and "4096" in err
    assert run(capsys, "oracle", "--x", "a", "--y", "a" * 4096)[0] == 0


def test_diff(capsys):
    code, out, err = run(capsys, "diff", "--count", "200", "--max-m", "10", "--max-n", "10", "--max-r", "3", "--seed", "7")
    assert code == 0 and out == ""
    assert "0 mismatches" in err
    assert run(capsys, "diff", "--count", "0")[:2] == (0, "")


def test_diff_failure_exit(capsys, monkeypatch):
    import clcs.harness as h
    from clcs import MatchResult

    monkeypatch.setattr(h, "solve", lambda inst: MatchResult.not_found())
    code, out, _ = run(capsys, "diff", "--count", "3", "--max-r", "0")
    assert code == 1
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines and {"index", "kind", "x_hex", "solver", "oracle"} <= set(lines[0])


@pytest.mark.parametrize("flag", ["--max-r", "--count", "--max-m"])
def test_diff_negative(flag):
    with pytest.raises(SystemExit) as exc:
        main(["diff", flag, "-1"])
    assert exc.value.code == 2


def test_dump(capsys):
    code, obj = run_json(capsys, "dump", "--x", "a", "--y", "a", "--p", "a")
    assert code == 0
    assert (obj["m"], obj["n"], obj["r"]) == (1, 1, 1)
    assert obj["layers"][1][1][1] == 1
    assert obj["layers"][1][0] == [None, None]
    assert obj["layers"][0] == [[0, 0], [0, 1]]


def test_dump_empty(capsys):
    code, out, _ = run(capsys, "dump", "--x", "", "--y", "", "--p", "")
    assert out == '{"m":0,"n":0,"r":0,"layers":[[[0]]]}\n'


def test_dump_guard(capsys):
    code, out, err = run(capsys, "dump", "--x", "a" * 999, "--y", "a" * 999, "--p", "a" * 10)
    assert code == 2 and out == ""


def test_gen_deterministic(capsys):
    argv = ["gen", "--seed", "1", "--m", "4", "--n", "4", "--r", "1", "--alphabet", "2", "--mode", "planted"]
    code, first = run_json(capsys, *argv)
    assert code == 0
    assert run_json(capsys, *argv)[1] == first
    assert first["spec"] == {"seed": 1, "m": 4, "n": 4, "r": 1, "alphabet_size": 2, "mode": "planted"}


def test_gen_infeasible_plant(capsys):
    code, out, err = run(capsys, "gen", "--mode", "planted", "--r", "5", "--m", "3", "--n", "3")
    assert code == 2 and "plant" in err


def test_gen_solve_round_trip(capsys):
    for seed in range(5):
        _, g = run_json(capsys, "gen", "--seed", str(seed), "--m", "30", "--n", "20", "--r", "3", "--alphabet", "3", "--mode", "planted")
        _, res = run_json(capsys, "solve", "--x-hex", g["x_hex"], "--y-hex", g["y_hex"], "--p-hex", g["p_hex"])
        inst = ProblemInstance(bytes.fromhex(g["x_hex"]), bytes.fromhex(g["y_hex"]), bytes.fromhex(g["p_hex"]))
        assert res == solve(inst).to_json()
        assert res["found"]


def test_bench(capsys, tmp_path):
    fig = tmp_path / "scaling.png"
    code, out, err = run(capsys, "bench", "--grid", "1000x1000x8", "--reps", "3", "--plot", str(fig))
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 1
    assert rows[0]["buffer_cells"] == 2 * 1001 * 9
    assert len(rows[0]["samples"]) == 3
    assert fig.stat().st_size > 0


def test_bench_grid_forms(capsys):
    code, out, _ = run(capsys, "bench", "--grid", "10x10x1,20x10x1", "--grid", "5x5x0", "--reps", "1")
    assert [(r["m"], r["n"], r["r"]) for r in map(json.loads, out.splitlines())] == [(10, 10, 1), (20, 10, 1), (5, 5, 0)]
    assert run(capsys, "bench", "--grid", "10x10")[0] == 2
    assert run(capsys, "bench", "--grid", "3x3x5")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "clcs.cli", "solve", "--x", "abc", "--y", "abc"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["length"] == 3
    proc = subprocess.run([sys.executable, "-m", "clcs.cli", "solve"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
