import io
import json
import sys
from types import SimpleNamespace

import pytest

from rscodec.cli import main
from rscodec.channel import all_messages
from rscodec.code import CodeParams


def run(capsys, *argv):
    rc = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def params(tmp_path, capsys):
    def make(*extra, name="p.json"):
        path = tmp_path / name
        rc, _, _ = run(capsys, "gen-params", *extra, "-o", path)
        assert rc == 0
        return path

    return make


def test_gen_params_gf7(params):
    path = params("--p", 7, "--alpha", 3, "--k", 2, "--b", 1, "--method", "remainder")
    rec = json.loads(path.read_text())
    assert " ".join(map(str, rec["g"])) == "4 2 3 6 1"
    assert (rec["n"], rec["d"], rec["method"]) == (6, 5, "remainder")


def test_gen_params_gf8(params):
    rec = json.loads(params("--p", 2, "--m", 3, "--prim-poly", "1 1 0 1", "--k", 3).read_text())
    assert (rec["n"], rec["d"], rec["method"]) == (7, 5, "spectral")


def test_gen_params_bad_alpha(capsys):
    rc, _, err = run(capsys, "gen-params", "--p", 7, "--alpha", 2, "--k", 2)
    assert rc == 2 and "NotPrimitive" in err


def test_encode_decode_identity(params, tmp_path, capsys):
    for method, algo in (("spectral", "gao"), ("spectral", "gs"), ("remainder", "wb")):
        p = params("--p", 7, "--alpha", 3, "--k", 2, "--method", method, name=f"{method}.json")
        msgs = tmp_path / "m.txt"
        C = CodeParams.from_record(json.loads(p.read_text()))
        msgs.write_text("".join(" ".join(map(str, m)) + "\n" for m in all_messages(C)))
        rc, enc, _ = run(capsys, "encode", "--params", p, msgs)
        assert rc == 0
        cw = tmp_path / "c.txt"
        cw.write_text(enc)
        rc, dec, _ = run(capsys, "decode", "--params", p, "--algo", algo, cw)
        assert rc == 0 and dec == msgs.read_text()


def test_corrupt_then_decode(params, tmp_path, capsys):
    p = params("--p", 2, "--m", 3, "--prim-poly", "1 1 0 1", "--k", 3, "--method", "remainder")
    msgs = tmp_path / "m.txt"
    msgs.write_text("1 2 3\n0 0 0\n7 7 7\n")
    _, enc, _ = run(capsys, "encode", "--params", p, msgs)
    cw = tmp_path / "c.txt"
    cw.write_text(enc)
    log = tmp_path / "log.txt"
    rc, bad, _ = run(capsys, "corrupt", "--params", p, cw, "--errors", 2, "--seed", 5, "--positions", "message", "--log", log)
    assert rc == 0
    rc2, bad2, _ = run(capsys, "corrupt", "--params", p, cw, "--errors", 2, "--seed", 5, "--positions", "message")
    assert bad2 == bad
    entries = [tok for line in log.read_text().splitlines() for tok in line.split()[1:]]
    assert len(entries) == 6 and all(3 < int(e.split(":")[0]) <= 6 for e in entries)
    # the sidecar log replays exactly
    clean = [list(map(int, l.split())) for l in enc.splitlines()]
    noisy = [list(map(int, l.split())) for l in bad.splitlines()]
    for line, c, r in zip(log.read_text().splitlines(), clean, noisy):
        for tok in line.split()[1:]:
            i, y = map(int, tok.split(":"))
            assert c[i] ^ y == r[i]
    rb = tmp_path / "r.txt"
    rb.write_text(bad)
    rc, dec, _ = run(capsys, "decode", "--params", p, "--algo", "wb", rb)
    assert rc == 0 and dec == msgs.read_text()
    rc, same, _ = run(capsys, "corrupt", "--params", p, cw, "--errors", 0)
    assert same == enc


def test_decode_failures_reported(params, tmp_path, capsys):
    p = params("--p", 7, "--alpha", 3, "--k", 2)
    words = tmp_path / "r.txt"
    words.write_text("2 4 3 0 5 6\n0 1 2 3 4 5\n")
    rc, out, err = run(capsys, "decode", "--params", p, words)
    lines = out.splitlines()
    assert lines[0] == "1 1"
    assert lines[1].startswith("FAIL ") and rc == 1


def test_decode_method_mismatch(params, tmp_path, capsys):
    p = params("--p", 7, "--alpha", 3, "--k", 2)
    words = tmp_path / "r.txt"
    words.write_text("2 4 3 0 5 6\n")
    rc, _, err = run(capsys, "decode", "--params", p, "--algo", "wb", words)
    assert rc == 2 and "MethodMismatch" in err


@pytest.mark.parametrize("line", ["2 4 3 0 5 7", "2 4 3 0 5 x", "1 2 3"])
def test_malformed_input(params, tmp_path, capsys, line):
    p = params("--p", 7, "--alpha", 3, "--k", 2)
    words = tmp_path / "r.txt"
    words.write_text("2 4 3 0 5 6\n" + line + "\n")
    rc, _, err = run(capsys, "decode", "--params", p, words)
    assert rc == 2 and "line 2" in err


def test_trace_keyeq(params, tmp_path, capsys):
    p = params("--p", 7, "--alpha", 3, "--k", 2, "--method", "remainder")
    words = tmp_path / "r.txt"
    # codeword for (2, 5) with error value 3 at position 5
    words.write_text("0 6 3 1 2 1\n")
    rc, out, err = run(capsys, "decode", "--params", p, "--algo", "wb", "--trace-keyeq", words)
    assert rc == 0 and out == "2 5\n"
    labels = [l.split(":")[0] for l in err.splitlines()]
    for key in ("S", "p", "L", "euclid[0] r", "N", "W_m", "result"):
        assert key in labels


def test_binary_roundtrip(params, tmp_path, capsys, monkeypatch):
    p = params("--p", 2, "--m", 3, "--prim-poly", "1 1 0 1", "--k", 3)
    msgs = tmp_path / "m.bin"
    msgs.write_bytes(bytes([1, 2, 3, 4, 5, 6]))
    buf = io.BytesIO()
    monkeypatch.setattr(sys, "stdout", SimpleNamespace(buffer=buf))
    assert main(["encode", "--params", str(p), "--binary", str(msgs)]) == 0
    monkeypatch.undo()
    data = buf.getvalue()
    assert len(data) == 2 * 7
    cw = tmp_path / "c.bin"
    cw.write_bytes(data)
    rc, out, _ = run(capsys, "decode", "--params", p, "--binary", cw)
    assert rc == 0 and out == "1 2 3\n4 5 6\n"


def test_diff_test_exhaustive_gf7(params, capsys):
    p = params("--p", 7, "--alpha", 3, "--k", 2)
    rc, out, _ = run(capsys, "diff-test", "--params", p, "--exhaustive")
    assert rc == 0
    assert "gao-vs-gs: trials=28273 agree=28273 disagree=0" in out
    assert "gao-vs-wb:" in out and "disagree=0" in out.splitlines()[1]


def test_diff_test_trials_deterministic(params, capsys):
    p = params("--p", 2, "--m", 3, "--prim-poly", "1 1 0 1", "--k", 3)
    rc, out1, _ = run(capsys, "diff-test", "--params", p, "--trials", 1000, "--seed", 7)
    rc2, out2, _ = run(capsys, "diff-test", "--params", p, "--trials", 1000, "--seed", 7)
    assert rc == rc2 == 0 and out1 == out2
    assert out1.count("disagree=0") == 2


def test_diff_test_budget(params, capsys, monkeypatch):
    p = params("--p", 2, "--m", 8, "--k", 200)
    rc, _, err = run(capsys, "diff-test", "--params", p, "--exhaustive")
    assert rc == 2 and "BudgetExceeded" in err
    p7 = params("--p", 7, "--alpha", 3, "--k", 2, name="small.json")
    monkeypatch.setenv("RSCODEC_BUDGET", "100")
    rc, _, err = run(capsys, "diff-test", "--params", p7, "--exhaustive")
    assert rc == 2 and "BudgetExceeded" in err


def test_bench_smoke(params, capsys):
    p = params("--p", 2, "--m", 3, "--prim-poly", "1 1 0 1", "--k", 3)
    rc, out, _ = run(capsys, "bench", "--params", p, "--trials", 1)
    assert rc == 0
    assert all(name in out for name in ("gao", "wb", "gs"))
    assert "not implemented" in out
