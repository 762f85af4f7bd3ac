"""Runs the tlq tool and validates its JSON output against a schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    if len(sys.argv) < 4:
        print("usage: validate.py SCHEMA TLQ ARG...", file=sys.stderr)
        return 2
    schema_path, exe, args = sys.argv[1], sys.argv[2], sys.argv[3:]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    run = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True, check=False)
    if run.returncode != 0:
        print(run.stderr, file=sys.stderr)
        print(f"tlq exited with {run.returncode}", file=sys.stderr)
        return 1
    doc = json.loads(run.stdout)
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(doc), key=lambda e: list(e.path))
    for e in errors[:10]:
        print(f"{list(e.path)}: {e.message}", file=sys.stderr)
    if errors:
        return 1
    print(f"valid against {schema_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
