"""Validate ptqm JSON output against the shipped schema with jsonschema."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["two-level", "--r", "1", "--s", "1", "--theta", "0.5235987755982988"],
    ["two-level", "--r", "0.3", "--s", "-2", "--theta", "2.5"],
    ["check", "--r", "1", "--s", "1", "--theta", "0.5235987755982988", "--steps", "32"],
    ["--format", "json", "evolve", "--r", "1", "--s", "1", "--theta", "0.5235987755982988"],
    ["spectrum", "--nu", "1", "--k", "3", "--N", "2000"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        out = subprocess.run([binary, *args], capture_output=True, text=True, check=True).stdout
        errors = list(validator.iter_errors(json.loads(out)))
        status = "ok" if not errors else "FAIL: " + errors[0].message
        print(" ".join(args), "->", status)
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
