"""Runs the command-line tool and validates every JSON output against docs/schema."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        contents = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(contents)))
    return Registry().with_resources(resources)


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    registry = load_registry(schema_dir)
    cases = [
        ("coeffs.schema.json", ["coeffs", "--kmax", "9", "--order", "8"]),
        ("laplace.schema.json", ["resum", "--object", "lambda32", "--z", "2"]),
        ("laplace.schema.json", ["resum", "--object", "mu", "--z", "5"]),
        ("laplace.schema.json", ["resum", "--object", "realmajor", "--z", "3+2j"]),
        ("stokes.schema.json", ["stokes", "--z", "5@-1.0471975511965976"]),
        ("realmajor.schema.json", ["realmajor", "--xi", "1+1j"]),
        ("realmajor.schema.json", ["realmajor", "--xi", "1@3.9269908169872414"]),
        ("realmajor.schema.json", ["realmajor", "--monodromy"]),
        ("alien.schema.json", ["alien", "--op", "full", "--m", "-2"]),
        ("grid.schema.json", ["grid", "--object", "major_chi", "--n-re", "4", "--n-im", "3"]),
        ("verify.schema.json", ["verify", "fast"]),
    ]
    failures = 0
    for schema_name, args in cases:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        validator = Draft202012Validator({"$ref": schema_name}, registry=registry)
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for err in errors:
            print(f"FAIL {label}: {err.message} at {list(err.absolute_path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label} -> {schema_name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
