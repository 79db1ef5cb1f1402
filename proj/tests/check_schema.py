"""Validates the tool's JSON output against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

EQ12 = json.dumps({"degree": 4, "terms": [
    {"lambda": l, "alpha": "1", "beta": b}
    for l, b in [("1", "2"), ("-4", "1"), ("6", "0"), ("-4", "-1"), ("1", "-2")]]})

runs = [
    ("analyze", ["analyze", "6*x^5*y + 6*x*y^5"]),
    ("analyze", ["analyze", "x^2*y^2"]),
    ("decompose", ["decompose", "6*x^5*y + 20*x^3*y^3 + 6*x*y^5"]),
    ("decompose", ["decompose", "6*x^5*y + 40*x^3*y^3 + 6*x*y^5"]),
    ("verify", ["verify", EQ12, "24*y^4"]),
    ("sweep", ["sweep", "(1/t)*x^4 + 6*x^2*y^2 + (1/t)*y^4", "0,2,4", "--limit-form", "x^2*y^2"]),
    ("fixtures", ["--filter", "ex-4", "fixtures"]),
    ("error", ["analyze", "x^3"]),
]
failed = 0
for kind, args in runs:
    out = subprocess.run([cli, "--output", "json", *args], capture_output=True, text=True).stdout
    doc = json.loads(out)
    sub = dict(schema)
    sub["$ref"] = "#/$defs/" + kind + "_output"
    try:
        jsonschema.validate(doc, sub)
        print("ok  ", " ".join(args[:2]))
    except jsonschema.ValidationError as e:
        failed += 1
        print("FAIL", " ".join(args[:2]), e.message)
sys.exit(1 if failed else 0)
