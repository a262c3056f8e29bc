import json
import subprocess
import sys

import pytest

from bcinverse.cli import run
from bcinverse.harness import CHECK_ORDER


def records(out):
    return [json.loads(line) for line in out.splitlines()]


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        ("inverse --ring zn:6 --kind bc --a 2 --b 4 --c 4", 0, "found y=2"),
        ("inverse --ring zn:6 --kind group --a 1", 0, "found y=1"),
        ("inverse --ring zn:4 --kind bc --a 1 --b 2 --c 2", 1, "not-found"),
        ("inverse --ring zn:4 --kind drazin --a 2", 0, "found y=0 (index 2)"),
        ("inverse --ring zn:6 --kind hybrid --a 2 --b 4 --c 4", 0, "found y=2"),
        ("inverse --ring zn:6 --kind annihilator --a 2 --b 4 --c 4", 0, "found y=2"),
        ("inverse --ring zn:6 --kind bott-duffin --a 2 --e 4 --f 4", 0, "found y=2"),
        ("inverse --ring zn:6 --kind image-kernel --a 2 --p 4 --q 3", 0, "found y=2"),
        ("inverse --ring mat:2:zn:2 --kind group --a 1,1,0,1", 0, "found y=1,1,0,1"),
        ("inverse --ring prod:zn:2,zn:3 --kind group --a (1;2)", 0, "found y=(1;2)"),
        ("ideals --ring zn:6 --a 0", 0, "r(a)   |6|"),
        ("verify --ring zn:6 --theorem all", 0, "thm-4.4-reverse-order"),
        ("verify --ring mat:2:zn:2 --theorem lem-4.1-identities", 0, "pass"),
        ("mine --family zn --max-n 2 --target iii-not-iv", 0, "none-found"),
        ("mine --family mat2 --max-n 2 --target annihilator-not-bc", 0, "none-found"),
    ],
)
def test_exit_codes_and_output(argv, code, needle):
    got, out, err = run(argv.split())
    assert got == code, err
    assert needle in out
    assert err == ""


def test_ideals_record():
    code, out, _ = run("ideals --ring zn:6 --a 2 --format jsonl".split())
    header, rec = records(out)
    assert header["record"] == "header" and code == 0
    assert rec["aR"] == [0, 2, 4] and rec["r(a)"] == [0, 3] and rec["rl(a)"] == [0, 2, 4]


def test_inverse_record():
    code, out, _ = run("inverse --ring zn:6 --kind bc --a 2 --b 4 --c 4 --format jsonl".split())
    rec = records(out)[1]
    assert rec["status"] == "found" and rec["value"] == 2 and rec["inputs"] == {"a": 2, "b": 4, "c": 4}


def test_verify_zn2_counts():
    code, out, _ = run("verify --ring zn:2 --theorem thm-3.4-equiv --format jsonl".split())
    rec = records(out)[1]
    assert code == 0 and rec["instances"] == 8 and rec["status"] == "pass"


@pytest.mark.parametrize(
    "argv, token",
    [
        ("inverse --ring zn:6 --kind bc --a 7 --b 4 --c 4", "'7'"),
        ("inverse --ring zn:6 --kind bc --a 2 --b x --c 4", "'x'"),
        ("inverse --ring zq:6 --kind bc --a 1 --b 1 --c 1", "'zq:6'"),
        ("inverse --ring zn:6 --kind bc --a 1 --b 1", "--c"),
        ("inverse --ring zn:6 --kind group --a 1 --b 1", "--b"),
        ("inverse --ring zn:6 --kind bott-duffin --a 2 --e 2 --f 4", "e=2"),
        ("inverse --ring mat:2:zn:2 --kind group --a 1,0,0", "'1,0,0'"),
        ("ideals --ring zn:6 --a -1", "'-1'"),
        ("verify --ring zn:6 --theorem thm-9.9", "thm-9.9"),
        ("verify --ring mat:2:zn:3 --max-order 16", "exceeds"),
        ("mine --target bogus", "bogus"),
    ],
)
def test_usage_errors_exit_2_without_output(argv, token):
    code, out, err = run(argv.split())
    assert code == 2
    assert out == ""
    assert token in err


def test_unknown_theorem_lists_ids():
    _, _, err = run("verify --ring zn:6 --theorem nope".split())
    for cid in CHECK_ORDER:
        assert cid in err


def test_argparse_errors_exit_2(capsys):
    assert run(["frobnicate"])[0] == 2
    assert run(["inverse", "--ring", "zn:6", "--kind", "weird", "--a", "1"])[0] == 2
    assert capsys.readouterr().out == ""


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "bcinv.json"
    cfg.write_text(json.dumps({"ring": "zn:4", "format": "jsonl"}))
    code, out, _ = run(["inverse", "--config", str(cfg), "--kind", "bc", "--a", "1", "--b", "2", "--c", "2"])
    assert code == 1 and records(out)[1]["ring"] == "zn:4"
    code, out, _ = run(["inverse", "--config", str(cfg), "--ring", "zn:6", "--kind", "bc", "--a", "2", "--b", "4", "--c", "4"])
    assert code == 0 and records(out)[1]["ring"] == "zn:6"
    cfg.write_text(json.dumps({"rings": "zn:4"}))
    code, _, err = run(["ideals", "--config", str(cfg), "--ring", "zn:4", "--a", "1"])
    assert code == 2 and "rings" in err


def test_cardinality_cap_from_environment(monkeypatch):
    monkeypatch.setenv("BCINV_MAX_ORDER", "5")
    code, out, err = run("ideals --ring zn:6 --a 1".split())
    assert code == 2 and out == "" and "zn:6" in err


def test_structured_output_is_deterministic():
    argv = "verify --ring zn:4 --theorem all --format jsonl".split()
    a = records(run(argv + ["--threads", "1"])[1])
    b = records(run(argv + ["--threads", "3"])[1])
    assert a[0]["record"] == "header" == b[0]["record"]
    assert a[1:] == b[1:]
    assert len(a) == 1 + len(CHECK_ORDER)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bcinverse", "inverse", "--ring", "zn:4", "--kind", "bc", "--a", "1", "--b", "2", "--c", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1 and "not-found" in proc.stdout
