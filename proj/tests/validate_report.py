"""Run the CLI for each command and validate its JSON against the report schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["verify", "--fixture", "F3", "--fixture", "N_rank", "--points", "10"],
    ["theorems", "--fixture", "F3", "--fixture", "N_flat", "--points", "6"],
    ["residual", "S(X, Y) = S(Y, X)", "--fixture", "F5", "--points", "4"],
    ["fixtures"],
]

failed = False
with tempfile.TemporaryDirectory() as tmp:
    for i, args in enumerate(runs):
        out = Path(tmp) / f"report{i}.json"
        proc = subprocess.run([cli, *args, "--json", str(out)], capture_output=True, text=True)
        if proc.returncode not in (0, 1, 3):
            print(f"{args[0]}: exit {proc.returncode}\n{proc.stderr}")
            failed = True
            continue
        doc = json.loads(out.read_text())
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"{args[0]}: {'/'.join(map(str, e.path))}: {e.message}")
        failed = failed or bool(errors)
        print(f"{args[0]}: {len(doc['rows'])} rows, {'invalid' if errors else 'valid'}")

sys.exit(1 if failed else 0)
