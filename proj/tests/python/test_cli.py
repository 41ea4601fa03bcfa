"""End-to-end checks of the command-line tool named by $VTCODES_CLI."""

import os
import subprocess

import pytest

CLI = os.environ.get("VTCODES_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="VTCODES_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


def test_encode_decode_roundtrip():
    enc = run("encode", "--variant", "vt2", "-q", "3", "-n", "10", "-a", "0",
              "-m", "220011")
    assert enc.returncode == 0
    assert enc.stdout.split()[0] == "1121222100"

    dec = run("decode", "--variant", "vt2", "-q", "3", "-n", "10", "-a", "0",
              "-r", "112122100", "--format", "record")
    assert dec.returncode == 0
    assert "message=220011" in dec.stdout


def test_trace_record():
    out = run("decode", "--variant", "vt2", "-q", "4", "-n", "10", "-a", "0",
              "-r", "013112013", "--trace", "--format", "record")
    assert out.returncode == 0
    assert "delta=16" in out.stdout
    assert "case=2a" in out.stdout
    assert "position=3" in out.stdout


def test_exit_codes():
    usage = run("encode", "--variant", "vt2", "-q", "3", "-n", "10", "-a", "0")
    assert usage.returncode == 2  # missing -m

    bad = run("decode", "--variant", "vt2", "-q", "4", "-n", "10", "-a", "0",
              "-r", "1111111111")
    assert bad.returncode == 1
    assert "uncorrectable input" in bad.stderr

    helpout = run("--help")
    assert helpout.returncode == 0
    assert "encode" in helpout.stdout


def test_corrupt_is_seed_deterministic():
    a = run("corrupt", "-q", "4", "-w", "0103112013", "--seed", "11")
    b = run("corrupt", "-q", "4", "-w", "0103112013", "--seed", "11")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout

    bad_mode = run("corrupt", "-q", "4", "-w", "0103112013", "--mode", "both")
    assert bad_mode.returncode == 2


def test_verify_and_fuzz():
    ver = run("verify", "-q", "2", "-n", "4..5", "-a", "all", "--format", "record")
    assert ver.returncode == 0
    assert "failures=0" in ver.stdout

    fuz = run("fuzz", "-q", "4", "-n", "10", "-a", "0", "--trials", "300",
              "--seed", "5")
    assert fuz.returncode == 0
    assert "failures=0" in fuz.stdout


def test_enumerate_and_budget_env():
    enu = run("enumerate", "-q", "2", "-n", "2", "-a", "0")
    assert enu.returncode == 0
    assert enu.stdout.strip() == "00"

    env = dict(os.environ, VTCODES_ENUM_BUDGET="3")
    blocked = subprocess.run(
        [CLI, "enumerate", "-q", "2", "-n", "4", "-a", "0"],
        capture_output=True, text=True, env=env, timeout=120)
    assert blocked.returncode == 2
    assert "enumeration too large" in blocked.stderr
