"""Smoke tests for the python module and the CLI binary.

Run by ctest with PYTHONPATH pointing at the built extension; the first
argument is the path to the kuc CLI binary.
"""

import json
import math
import subprocess
import sys

import kuc


def approx(a, b, tol=1e-6):
    assert abs(a - b) <= tol, f"{a} vs {b} (tol {tol})"


def main(cli_path):
    # constants
    phi2 = kuc.phi(2)
    approx(phi2["mid"], 0.6180339887, 1e-9)
    rows = kuc.table([2, 3, 6])
    approx(rows[2]["z"]["mid"], 0.2183, 1e-4)
    approx(kuc.mu(5)["mid"], 3.0225424859, 1e-8)

    # entropy functions
    approx(kuc.h("1/2"), math.log(2), 1e-12)
    assert kuc.h("0") == 0.0
    approx(kuc.big_f_k(3, "341/500"), 1 / 0.4655, 5e-2)
    assert kuc.f_k(2, "1/2") > 0

    # polynomial family
    coeffs = kuc.p_coefficients(2)
    assert coeffs[0] == (0, "2", "-4")
    assert coeffs[3] == (3, "-1", "0")
    assert kuc.unit_interval_root_count(3) == (2, 2)
    pattern = kuc.derivative_root_pattern(4)
    assert pattern == [3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1]

    # inequalities, small sample
    rep = kuc.verify_entropy_product(500, 1)
    assert rep["status"] == "pass", rep

    # simulation determinism
    a = kuc.simulate(150, 3, trials=2000, seed=7)
    b = kuc.simulate(150, 3, trials=2000, seed=7)
    assert a["closure"]["closure_fraction"] == b["closure"]["closure_fraction"]

    # bound
    bnd = kuc.bound(3, "0", 1024)
    assert bnd["delta"] == 0.0
    approx(bnd["guaranteed_fraction"], 0.3176, 1e-3)

    # CLI: byte-identical JSON with the timestamp suppressed
    cmd = [cli_path, "--format", "json", "--no-timestamp", "--seed", "99", "simulate",
           "--n", "150", "--k", "3", "--trials", "2000"]
    out1 = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    out2 = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert out1 == out2, "JSON output must be byte-identical for a fixed seed"
    doc = json.loads(out1)
    assert doc["schema_version"] == 1
    assert doc["config"]["seed"] == 99
    assert "timestamp" not in doc["config"]

    # CLI: usage error path
    rc = subprocess.run([cli_path, "bound", "--eps", "0.7"], capture_output=True).returncode
    assert rc == 3, f"expected usage-error exit 3, got {rc}"

    print("python smoke tests passed")


if __name__ == "__main__":
    main(sys.argv[1])
