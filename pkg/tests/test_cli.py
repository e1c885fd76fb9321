import json
import os
import subprocess
import sys

import pytest

from curvesum import io_formats
from curvesum.cli import main

from conftest import diamond_pair_with_interior_bridge, lens_pair
from curvesum.curves import Bridge, CurveLocation
from curvesum.invariants import base_invariants
from gmpy2 import mpq


def run_cli(args, stdin_text=None):
    proc = subprocess.run(
        [sys.executable, "-m", "curvesum.cli", *args],
        input=stdin_text, capture_output=True, text=True,
    )
    return proc


def test_gen_standard_pipes_into_invariants():
    gen = run_cli(["gen", "--standard", "3"])
    assert gen.returncode == 0
    inv = run_cli(["invariants"], stdin_text=gen.stdout)
    assert inv.returncode == 0
    assert "(-4, -6, 2)" in inv.stdout


def test_gen_random_is_seed_deterministic():
    a = run_cli(["gen", "--random", "--seed", "17"])
    b = run_cli(["gen", "--random", "--seed", "17"])
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_env_seed_override():
    env = dict(os.environ, CURVESUM_SEED="17")
    a = subprocess.run([sys.executable, "-m", "curvesum.cli", "gen", "--random"],
                       capture_output=True, text=True, env=env)
    b = run_cli(["gen", "--random", "--seed", "17"])
    assert a.stdout == b.stdout


def _lens_instance_text():
    a, b = lens_pair()
    bridge = Bridge(CurveLocation(3, mpq(1, 2)), CurveLocation(2, mpq(1, 2)), ())
    inst = io_formats.pair_with_bridge(a, b, bridge,
                                       base_invariants(1), base_invariants(1))
    return io_formats.dumps(inst)


def test_validate_and_analyze():
    text = _lens_instance_text()
    assert run_cli(["validate"], stdin_text=text).returncode == 0
    out = run_cli(["analyze"], stdin_text=text)
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert len(doc["crossings"]) == 2
    assert len(doc["faces"]) == 4


def test_validate_rejects_degenerate(tmp_path):
    from curvesum.curves import PolyCurve

    bad = PolyCurve.from_coords(
        [(mpq(0), mpq(0)), (mpq(4), mpq(0)), (mpq(2), mpq(0))])
    text = io_formats.dumps(io_formats.single_curve(bad))
    res = run_cli(["validate"], stdin_text=text)
    assert res.returncode == 1


def test_tpm_both_methods_lens():
    res = run_cli(["tpm", "--method", "both"], stdin_text=_lens_instance_text())
    assert res.returncode == 0
    lines = [l for l in res.stdout.splitlines() if "T+" in l]
    assert len(lines) == 2
    assert all("T+ = 0, T- = -1" in l for l in lines)


def test_tst_both_methods_with_trace():
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    inst = io_formats.pair_with_bridge(c0, c1, bridge,
                                       base_invariants(1), base_invariants(1))
    res = run_cli(["tst", "--method", "both", "--trace"],
                  stdin_text=io_formats.dumps(inst))
    assert res.returncode == 0
    assert res.stdout.count("T^St = 0") == 2


def test_sum_subcommand():
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    inst = io_formats.pair_with_bridge(c0, c1, bridge,
                                       base_invariants(1), base_invariants(1))
    res = run_cli(["sum"], stdin_text=io_formats.dumps(inst))
    assert res.returncode == 0
    assert "J+=0 J-=-2 St=0" in res.stdout
    assert "consistent" in res.stdout


def test_verify_random_batch():
    res = run_cli(["verify", "--random", "--seed", "1", "--count", "4"])
    assert res.returncode == 0
    assert "4/4 instances pass" in res.stdout


def test_render_subcommand(tmp_path):
    out = tmp_path / "scene.svg"
    res = run_cli(["render", "-o", str(out)], stdin_text=_lens_instance_text())
    assert res.returncode == 0
    assert out.read_text().startswith("<?xml")


def test_usage_error_exit_code():
    res = run_cli(["definitely-not-a-command"])
    assert res.returncode == 3


def test_main_in_process():
    assert main(["gen", "--standard", "0", "-o", os.devnull]) == 0
