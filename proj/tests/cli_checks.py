#!/usr/bin/env python3
"""End-to-end checks of the qflag binary: outputs, exit codes and JSON schemas."""

import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema

QFLAG = sys.argv[1]
SCHEMAS = Path(sys.argv[2])

failures = []


def load(name):
    return json.loads((SCHEMAS / name).read_text())


SCHEMA_FILES = {
    "qflag.poly.v1": "poly.v1.json",
    "qflag.form.v1": "form.v1.json",
    "qflag.scalar.v1": "scalar.v1.json",
    "qflag.matrix.v1": "matrix.v1.json",
    "qflag.tensor.v1": "tensor.v1.json",
    "qflag.degree.v1": "degree.v1.json",
    "qflag.report.v1": "report.v1.json",
    "qflag.error.v1": "error.v1.json",
}


def run(args, env=None):
    full_env = dict(os.environ)
    full_env.pop("QFLAG_DEFAULT_N", None)
    if env:
        full_env.update(env)
    p = subprocess.run([QFLAG, *args], capture_output=True, text=True, env=full_env, timeout=300)
    return p.returncode, p.stdout, p.stderr


def check(cond, label, detail=""):
    if not cond:
        failures.append(f"{label}: {detail}")
        print(f"FAIL {label} {detail}")
    else:
        print(f"ok   {label}")


def expect(args, code, stdout=None, label=None, env=None):
    label = label or " ".join(args)
    rc, out, err = run(args, env)
    check(rc == code, label + " exit", f"got {rc}, stderr={err.strip()!r}")
    if stdout is not None:
        check(out.strip() == stdout, label + " output", f"got {out.strip()!r}")
    return out, err


def validate(args, code=0, label=None):
    label = label or " ".join(args)
    rc, out, err = run(args + ["--json"])
    check(rc == code, label + " json exit", f"got {rc}, stderr={err.strip()!r}")
    try:
        doc = json.loads(out if out.strip() else err)
    except json.JSONDecodeError as e:
        check(False, label + " json parse", str(e))
        return None
    if isinstance(doc, list):
        schema = load("suites.v1.json")
    else:
        schema = load(SCHEMA_FILES.get(doc.get("schema"), "error.v1.json"))
    try:
        jsonschema.validate(doc, schema)
        check(True, label + " schema")
    except jsonschema.ValidationError as e:
        check(False, label + " schema", e.message)
    return doc


# plain outputs
expect(["nf", "--n", "2", "u[2,2]*u[1,1]"], 0, "u[1,1]*u[2,2] - (q - q^-1)*u[1,2]*u[2,1]")
expect(["d", "--n", "2", "u[1,1]"], 0, "u[1,1] e0 + u[1,2] ep[1]")
expect(["pair", "--n", "2", "u[1,1]", "u[2,2]"], 0, "q^(-1/2)")
expect(["coset", "--n", "2", "u[1,1]*u[1,1] - 1"], 0, "(q + 1) e0")
expect(["nf", "--n", "2", "--algebra", "su", "u[1,1]*u[2,2] - q*u[1,2]*u[2,1]"], 0, "1")
expect(["degree", "--n", "3", "zs[1]*zs[2]"], 0, "2")

# QFLAG_DEFAULT_N
expect(["nf", "u[3,3]"], 2, label="index out of range at default N=2")
expect(["nf", "u[3,3]"], 0, "u[3,3]", label="QFLAG_DEFAULT_N=3", env={"QFLAG_DEFAULT_N": "3"})

# exit codes
expect(["nf", "--n", "2", "u[1,1] +"], 2, label="syntax error")
expect(["no-such-command"], 2, label="unknown command")
expect(["theta", "--n", "2", "u[1,1]"], 2, label="theta precondition")
expect(["verify", "--n", "2", "no-such-suite"], 2, label="unknown suite")
expect(["verify", "--n", "5", "cpn-framing"], 2, label="resource guard")
expect(["verify", "--n", "2", "su2-ideal"], 0, label="verify su2-ideal")

_, err = expect(["nf", "--n", "2", "u[1,1] + foo"], 2, label="unknown identifier message")
check("unknown-identifier" in err, "error kind on stderr", err.strip())

# JSON documents validate against their schemas
validate(["nf", "--n", "2", "u[2,2]*u[1,1]"])
validate(["nf", "--n", "2", "--algebra", "u", "detinv*u[1,1]"])
validate(["nf", "--n", "2", "--bound", "3", "u[1,1]*u[2,2] - q*u[1,2]*u[2,1] - 1", "--algebra", "su"])
validate(["d", "--n", "3", "zz[1,2]"])
validate(["del", "--n", "2", "zz[1,2]"])
validate(["delbar", "--n", "2", "zz[2,1]"])
validate(["theta", "--n", "2", "z[2]"])
validate(["nabla", "--n", "2", "zs[2]"])
validate(["coset", "--n", "3", "u[1,2]"])
validate(["pair", "--n", "3", "u[1,2]", "u[2,1]"])
validate(["killing", "--n", "2", "u[1,1]"])
validate(["act", "--n", "2", "e0", "u[1,2]"])
for m in ("alpha", "beta", "gamma"):
    validate(["coact", "--n", "2", "--map", m, "u[1,1]"])
validate(["degree", "--n", "2", "zs[1]"])
validate(["verify", "--list"])
err_doc = validate(["nf", "--n", "2", "u[1,1] +"], code=2)
if err_doc:
    check(err_doc.get("error", {}).get("column") == 9, "error column", str(err_doc))

# verify reports are stable apart from elapsed time
rep = []
for _ in range(2):
    rc, out, _ = run(["verify", "--n", "3", "--seed", "7", "--budget", "sample:20", "oracle-consistency", "--json"])
    doc = json.loads(out)
    jsonschema.validate(doc, load("report.v1.json"))
    doc.pop("elapsed_seconds", None)
    rep.append(doc)
check(rep[0] == rep[1], "verify json is deterministic")
check(rep[0]["budget"] == "sample:20" and rep[0]["seed"] == 7, "verify echoes seed and budget")
podles = validate(["verify", "--n", "2", "podles-recovery"])
if podles:
    check(podles["summary"]["failed"] == 0, "podles-recovery passes")

# printed normal forms parse back to themselves
for n, expr in [(2, "(u[1,2] + q^(1/2) u[2,1])^3"), (3, "u[3,1]*u[1,3]*u[2,2] - 1/(q + 1)"), (3, "zz[1,2]*zz[2,1]")]:
    rc, first, _ = run(["nf", "--n", str(n), "--algebra", "su", expr])
    rc2, second, _ = run(["nf", "--n", str(n), "--algebra", "su", "--", first.strip()])
    check(rc == 0 and rc2 == 0 and first == second, f"round trip {expr}", f"{first.strip()!r} vs {second.strip()!r}")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
