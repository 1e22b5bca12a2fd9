#!/usr/bin/env python3
"""Validates every --format json report of nilcx on the corpus against the shipped schema."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    if len(sys.argv) != 4:
        print("usage: validate_reports.py NILCX CORPUS_DIR SCHEMA", file=sys.stderr)
        return 2
    nilcx, corpus, schema_path = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    runs = [[cmd, "--all", str(corpus)] for cmd in
            ("check", "series", "jseries", "nijenhuis", "obstruct", "audit", "ceq", "roundtrip")]
    for nla in sorted(corpus.glob("*.nla")):
        runs.append(["series", str(nla)])
        runs.append(["obstruct", str(nla)])
    runs.append(["quotient", str(corpus / "ex3_17.nla"), "--ideal", "7;8"])
    runs.append(["quotient", str(corpus / "ex3_17.nla"), "--ideal", "1"])
    runs.append(["product", str(corpus / "h3.nla"), str(corpus / "h3.nla")])
    runs.append(["family", "G2dim5", "--set", "B=1", "--set", "M=i", "--set", "t=1"])
    runs.append(["family", "G2dim3", "--set", "A=1"])
    runs.append(["family", "G2dim3", "--set", "t=1"])
    runs.append(["series", str(corpus / "does-not-exist.nla")])

    failures = 0
    for args in runs:
        proc = subprocess.run([nilcx, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: output is not JSON ({exc})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        elif doc.get("exit_code") != proc.returncode:
            failures += 1
            print(f"FAIL {label}: exit code {proc.returncode} differs from reported {doc.get('exit_code')}")
        else:
            print(f"ok   {label}")
    print(f"{len(runs) - failures}/{len(runs)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
