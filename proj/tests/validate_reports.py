"""Validate CLI JSON reports against the shipped schema."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    cli, schema_path, scenario_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    runs = [[cli, "--json", "suite"]]
    runs += [[cli, "--json", "run", str(p)] for p in sorted(scenario_dir.glob("*.conf"))]
    failures = 0
    for cmd in runs:
        out = subprocess.run(cmd, capture_output=True, text=True, check=False)
        if out.returncode not in (0, 1):
            print(f"{' '.join(cmd)}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(out.stdout)), key=lambda e: list(e.path))
        for e in errors:
            print(f"{' '.join(cmd)}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        print(f"{'ok' if not errors else 'INVALID'}  {' '.join(cmd[1:])}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
