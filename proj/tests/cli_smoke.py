"""Runs the command-line tool on a few inputs and checks exit codes and output."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

exe = sys.argv[1]
failures = []


def run(*args, stdin=None):
    p = subprocess.run([exe, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    if not cond:
        failures.append(what)


rc, out, _ = run("analyze", "--catalog", "K6_minus_e")
rep = json.loads(out)
check(rc == 0 and rep["minimally_rigid"] and rep["rank_target"] == 14, "analyze K6_minus_e")
check(rep["conflicts"] == [], "no conflicts")

rc, out, _ = run("analyze", "--graph6", "-", "--space", "cyl-lq", "--jobs", "3", stdin="C~\nE~~w\nF~~~w\n")
lines = [json.loads(x) for x in out.splitlines()]
check(rc == 0 and [x["graph6"] for x in lines] == ["C~", "E~~w", "F~~~w"], "batch keeps input order")
check(lines[1]["minimally_rigid"], "K6 minimally rigid in cyl-lq")

rc, out, _ = run("analyze", "--catalog", "K6", "--space", "cyl4", "--pretty")
check(rc == 0 and "\n  " in out, "pretty output")

rc, out, _ = run("placement", "--catalog", "K5_glue_K3_K5")
pl = json.loads(out)
check(rc == 0 and pl["verified"] and pl["rank"] == pl["rank_target"] == 17, "certified placement")

with tempfile.TemporaryDirectory() as d:
    script = Path(d) / "ops.json"
    script.write_text(json.dumps([{"op": "zero_extension", "targets": [0, 1, 2]}, {"op": "vertex_split", "random": True}]))
    rc, out, _ = run("ops", "--catalog", "K6_minus_e", "--script", str(script), "--seed", "9")
    steps = [json.loads(x) for x in out.splitlines()]
    check(rc == 0 and len(steps) == 3 and all(s["minimally_rigid"] for s in steps), "ops script")
    rc2, out2, _ = run("ops", "--catalog", "K6_minus_e", "--script", str(script), "--seed", "9")
    check(out == out2, "ops deterministic for a fixed seed")
    bad = Path(d) / "bad.json"
    bad.write_text(json.dumps([{"op": "one_extension", "removed": [4, 5], "extra": [1, 2]}]))
    rc, _, err = run("ops", "--catalog", "K6_minus_e", "--script", str(bad))
    check(rc == 3 and "step 1" in err, "precondition exit code")

check(run("analyze")[0] == 1, "missing input is a usage error")
check(run("analyze", "--catalog", "K5", "--space", "sphere")[0] == 1, "bad space is a usage error")
check(run("analyze", "--graph6", "/nonexistent")[0] == 1, "missing file")
check(run("analyze", "--graph6", "-", stdin="C\n")[0] == 1, "bad graph6")
check(run("placement", "--catalog", "K4", "--space", "cone-euclid")[0] == 3, "placement needs a cylinder")

for f in failures:
    print("FAIL:", f)
print("cli smoke:", "ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
