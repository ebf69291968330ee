"""Runs the CLI and validates its JSON output against schemas/*.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator

cli, schema_dir = sys.argv[1], Path(sys.argv[2])

cases = [
    ("roots", ["roots", "A2"], 0),
    ("roots", ["roots", "G2"], 0),
    ("roots", ["roots", "E8"], 0),
    ("cores", ["cores", "A2", "5"], 0),
    ("cores", ["cores", "C2", "5"], 0),
    ("cores", ["cores", "G2", "7"], 0),
    ("verify", ["verify", "strange"], 0),
    ("verify", ["verify", "main", "--type", "G2", "--b", "5,7,11"], 0),
    ("verify", ["verify", "conjecture", "--type", "C2", "--b", "5"], 0),
    ("verify", ["verify", "fg_poly", "--type", "G2"], 1),
]

failed = 0
for schema_name, args, want_rc in cases:
    schema = json.loads((schema_dir / f"{schema_name}.schema.json").read_text())
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != want_rc:
        print(f"FAIL {label}: exit {proc.returncode}, expected {want_rc}")
        failed += 1
        continue
    errors = sorted(Draft202012Validator(schema).iter_errors(json.loads(proc.stdout)), key=str)
    if errors:
        print(f"FAIL {label}: {errors[0].message}")
        failed += 1
    else:
        print(f"ok   {label}")
sys.exit(1 if failed else 0)
