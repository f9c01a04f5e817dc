"""Runs each CLI command and validates its JSON against the shipped schemas."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft7Validator
from referencing import Registry, Resource

root = pathlib.Path(__file__).resolve().parents[2]
cli = sys.argv[1]
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(body)) for name, body in schemas.items())
fx = root / "fixtures"

# (args, expected exit, schema)
cases = [
    (["validate", "--input", fx / "terminal2.json"], 0, "ok.schema.json"),
    (["validate", "--input", fx / "bad_target.json"], 3, "violation.schema.json"),
    (["validate", "--kind", "operad", "--input", fx / "operad_cyclic_seed1.json"], 0, "ok.schema.json"),
    (["truncate", "--dim", "1", "--input", fx / "globset_n2_seed7.json"], 0, "globset.schema.json"),
    (["free-cat", "--bound", "3", "--input", fx / "graph_seed14.json"], 0, "count.schema.json"),
    (["free-cat", "--bound", "2", "--from", "x0", "--to", "x0", "--input", fx / "graph_seed14.json"], 0, "count.schema.json"),
    (["tn-cells", "--n", "1", "--dim", "1", "--bound", "3"], 0, "count.schema.json"),
    (["oracle", "--n", "2", "--dim", "2", "--bound", "2", "--input", fx / "terminal2.json"], 0, "count.schema.json"),
    (["laws", "--monad", "fc", "--samples", "3", "--seed", "7", "--bound", "3"], 0, "law_report.schema.json"),
    (["adamek", "--functor", "word", "--alphabet", "a,b", "--depth", "3"], 0, "adamek.schema.json"),
    (["unfold", "--functor", "word", "--alphabet", "a,b", "--map", "swap", "--start", "0", "--depth", "4"], 0, "unfold.schema.json"),
    (["trimble", "--model", "graph", "--n", "2", "--bound", "3", "--input", fx / "space_two_cycle.json"], 0, "trimble.schema.json"),
    (["composite-check", "--n", "2", "--bound", "2"], 0, "composite.schema.json"),
    (["collection-check", "--input", fx / "collection_n2_seed3.json"], 3, "collection_check.schema.json"),
    (["gen-random", "--kind", "globset", "--n", "2", "--size", "3", "--seed", "7"], 0, "globset.schema.json"),
    (["gen-random", "--kind", "operad", "--n", "2", "--size", "3", "--seed", "1"], 0, "operad.schema.json"),
    (["gen-random", "--kind", "collection", "--n", "2", "--size", "2", "--seed", "3"], 0, "collection.schema.json"),
    (["gen-random", "--kind", "space", "--size", "3", "--seed", "5"], 0, "space.schema.json"),
]
inputs = [
    ("terminal2.json", "globset.schema.json"),
    ("globset_n2_seed7.json", "globset.schema.json"),
    ("graph_seed14.json", "globset.schema.json"),
    ("operad_cyclic_seed1.json", "operad.schema.json"),
    ("collection_n2_seed3.json", "collection.schema.json"),
    ("space_seed5.json", "space.schema.json"),
    ("space_two_cycle.json", "space.schema.json"),
]

failures = 0
def check(label, doc, schema):
    global failures
    errors = list(Draft7Validator(schemas[schema], registry=registry).iter_errors(doc))
    if errors:
        failures += 1
        print(f"FAIL {label}: {errors[0].message}")
    else:
        print(f"ok   {label}")

for args, code, schema in cases:
    args = [str(a) for a in args]
    r = subprocess.run([cli, *args], capture_output=True, text=True)
    if r.returncode != code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {r.returncode}, expected {code}")
        continue
    doc = json.loads(r.stdout)
    check(" ".join(a if "/" not in a else pathlib.Path(a).name for a in args), doc, schema)
    # The output parses back through the matching reader where one exists.
    if schema in ("globset.schema.json", "operad.schema.json", "collection.schema.json", "space.schema.json"):
        kind = schema.split(".")[0]
        tmp = root / "build" / f"roundtrip_{kind}.json"
        tmp.parent.mkdir(exist_ok=True)
        tmp.write_text(json.dumps(doc))
        back = subprocess.run([cli, "validate", "--kind", kind, "--input", str(tmp)], capture_output=True, text=True)
        if back.returncode != 0:
            failures += 1
            print(f"FAIL round trip of {kind}: {back.stdout}{back.stderr}")

for name, schema in inputs:
    check(name, json.loads((fx / name).read_text()), schema)

print(f"{failures} failures")
sys.exit(1 if failures else 0)
