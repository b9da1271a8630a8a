import io
import json
import sys

import pytest

from agx.cli import main


def run(argv, capsys, stdin=None):
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = main(argv)
        finally:
            sys.stdin = old
    else:
        code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ag(capsys):
    code, out, _ = run(["ag", "A_"], capsys)
    assert code == 0 and out.strip() == "1.0000"
    code, out, _ = run(["ag", "--exact", "Bw"], capsys)
    assert code == 0 and "3" in out
    code, out, _ = run(["ag"], capsys, stdin="A_\nBw\n")
    assert out.splitlines() == ["1.0000", "3.0000"]


def test_bound(capsys):
    code, out, _ = run(["bound", "-n", "10", "-m", "9", "--format", "json"], capsys)
    assert code == 0
    blob = json.loads(out)
    assert blob["exceptional"] is True
    assert abs(blob["ub"]["float"] - 10.7811) < 5e-5
    assert abs(blob["sharp"]["float"] - 10.6754) < 5e-5


def test_construct(capsys):
    code, out, _ = run(["construct", "-n", "12", "-m", "11"], capsys)
    blob = json.loads(out)
    assert code == 0
    assert blob["quadruplet"] == [8, 1, 0, 3]
    assert abs(blob["ag"]["float"] - blob["ub"]["float"]) < 1e-9


def test_enumerate_and_count(capsys):
    code, out, _ = run(["enumerate", "-n", "4", "-m", "3"], capsys)
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(["count", "-n", "12", "-m", "11"], capsys)
    assert code == 0
    assert out.splitlines()[1] == "12,11,1,1"


def test_tables(capsys):
    code, out, _ = run(["tables", "--which", "2"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,sharp,gap"
    assert len(lines) == 23
    code, out, _ = run(["tables", "--which", "3", "--max-n", "5"], capsys)
    rows = out.strip().splitlines()[1:]
    assert "5,4,1,0" in rows


def test_exit_codes(capsys):
    code, _, err = run(["bound", "-n", "5", "-m", "30"], capsys)
    assert code == 2 and "range" in err
    code, _, err = run(["enumerate", "-n", "13", "-m", "12"], capsys)
    assert code == 3
    with pytest.raises(SystemExit) as exc:
        run(["nosuchcommand"], capsys)
    assert exc.value.code == 2


def test_improve(capsys):
    code, out, _ = run(["improve", "--trace"], capsys, stdin="DCo\n")
    assert code == 0


def test_verify_small(capsys):
    code, out, _ = run(["verify", "--max-n", "4"], capsys)
    assert code == 0
    assert out.count("[PASS]") == 8
