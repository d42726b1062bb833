#!/usr/bin/env python3
"""Runs every rmcov verb with --json and validates the output against the schema."""
import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    (["nl", "--fun", "g0"], 0),
    (["nl", "--anf", "12", "-n", "4"], 0),
    (["nl2", "--anf", "123+145+246+356+456", "-n", "6"], 0),
    (["anf", "--hex", "244ee288acc66a00e828488860a0c000"], 0),
    (["anf", "--anf", "0", "-n", "3"], 0),
    (["spectrum", "--fun", "fun3"], 0),
    (["nfh", "--fun", "fun1"], 0),
    (["fh", "--fun", "fun1", "-r", "28"], 0),
    (["s16", "--fun", "fun2", "-r", "16"], 0),
    (["witness", "--budget", "5"], 1),
    (["bounds"], 0),
    (["explain-layout", "-n", "7"], 0),
    (["--explain-layout"], 0),
    (["verify", "--check", "bounds", "--check", "preamble"], 0),
    (["verify", "--check", "nl2", "--fixture", "fun1=12"], 1),
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, want_rc in INVOCATIONS:
        proc = subprocess.run([exe, *args, "--json"], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != want_rc:
            print(f"FAIL {label}: exit {proc.returncode}, want {want_rc}\n{proc.stderr}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: not JSON ({exc})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {label}")
    bad = {"schema_version": "rmcov.cli/1", "verb": "nl", "value": 3}
    if validator.is_valid(bad):
        print("FAIL schema accepts a document without a function")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
