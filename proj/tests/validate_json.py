"""Run the CLI and check its JSON output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, schemas = sys.argv[1], pathlib.Path(sys.argv[2])


def run(*args):
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    return json.loads(out)


def schema(name):
    return json.loads((schemas / name).read_text())


cases = [
    ("trace.schema.json", ["topple", "--config", "1,(2,3),4", "--trace"]),
    ("trace.schema.json", ["topple", "--config", "3,1,(2,5),4,6", "--trace"]),
    ("verify-report.schema.json", ["verify", "--n-max", "3", "--format", "json"]),
]
for which in ["1a", "1b", "2", "resultant-fibers", "T-array", "T-counts", "Npi"]:
    cases.append(("table.schema.json", ["tables", "--which", which, "--n", "5", "--p", "2", "--r", "2", "--format", "json"]))

for name, args in cases:
    doc = run(*args)
    jsonschema.validate(doc, schema(name))
    print("ok", " ".join(args))
