"""Runs every CLI subcommand and validates its output against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("generators", ["generators", "--n", "3"]),
    ("generators", ["generators", "--n", "4", "--index", "10"]),
    ("sequence", ["sequence", "--n", "5"]),
    ("unitary", ["unitary", "--n", "2", "--alpha", "0,0,0"]),
    ("unitary", ["unitary", "--n", "3", "--alpha", "1,0.5,2,0.3,1,0.2,3,1.5"]),
    ("kernel", ["kernel", "--n", "3", "--alpha", "1,0.5,2,0.3,1,0.2,3,1.5"]),
    ("kernel", ["kernel", "--n", "3", "--check-oracle", "--points", "3", "--seed", "1"]),
    ("volume", ["volume", "--n", "3", "--method", "marinov"]),
    ("volume", ["volume", "--n", "4", "--method", "quadrature"]),
    ("volume", ["volume", "--n", "3", "--method", "mc", "--samples", "20000", "--seed", "7", "--workers", "2"]),
    ("ranges", ["ranges", "--n", "4", "--mode", "covering"]),
    ("ranges", ["ranges", "--n", "4", "--mode", "quotient"]),
    ("rho", ["rho", "--n", "3", "--theta", "1.0,1.2", "--alpha", "1,0.5,2,0.3,1,0.2,3,1.5"]),
    ("sample_line", ["sample", "--n", "3", "--count", "3", "--seed", "5"]),
    ("sample_line", ["sample", "--n", "2", "--count", "3", "--seed", "5", "--what", "rho"]),
    ("verify", ["verify", "--suite", "paper"]),
]

ERROR_CASES = [
    (["frobnicate"], 2),
    (["volume", "--n", "3", "--bogus"], 2),
    (["volume", "--n", "1"], 2),
    (["rho", "--n", "3", "--theta", "0.1,0.1"], 2),
]


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    failures = 0
    for schema_name, args in CASES:
        first = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        second = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        docs = [json.loads(line) for line in first.stdout.splitlines()] if args[0] == "sample" else [json.loads(first.stdout)]
        try:
            if first.returncode != 0:
                raise ValueError(f"exit code {first.returncode}: {first.stderr.strip()}")
            if first.stdout != second.stdout:
                raise ValueError("output differs between identical runs")
            for doc in docs:
                jsonschema.validate(doc, schemas[schema_name])
        except (ValueError, jsonschema.ValidationError) as exc:
            failures += 1
            print(f"FAIL {' '.join(args)}: {exc}")
        else:
            print(f"ok   {' '.join(args)}")
    for args, code in ERROR_CASES:
        result = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        try:
            if result.returncode != code:
                raise ValueError(f"exit code {result.returncode}, expected {code}")
            jsonschema.validate(json.loads(result.stderr.strip().splitlines()[-1]), schemas["error"])
        except (ValueError, jsonschema.ValidationError) as exc:
            failures += 1
            print(f"FAIL {' '.join(args)}: {exc}")
        else:
            print(f"ok   {' '.join(args)} -> {code}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
