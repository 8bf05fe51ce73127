#!/usr/bin/env python3
"""Checks CLI documents against docs/schemas: usage: schema_check.py CLI SCHEMA_DIR"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry()
for name, s in schemas.items():
    jsonschema.Draft202012Validator.check_schema(s)
    resource = Resource.from_contents(s)
    registry = registry.with_resources([(s["$id"], resource), (name, resource)])


def validator(name):
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


output, request, certificate = validator("output.json"), validator("request.json"), validator("certificate.json")

commands = [
    ["invariants", "--space", "sp", "--n", "2", "--subspace", "[f1,e2,f2]"],
    ["perp", "--space", "so", "--n", "2", "--presentation", "split", "--subspace", "[u1,u2+v1]"],
    ["witt", "--space", "sp", "--n", "2", "--subspace", "[f1,e2,f2]"],
    ["witt", "--space", "so", "--n", "2", "--subspace", "[x1+y1]"],
    ["witt", "--space", "so", "--n", "2", "--subspace", "[x1]", "--phi", "[2/3*sqrt(3)*x1+1/3*sqrt(3)*y1]"],
    ["transport", "--space", "so", "--n", "2", "--w1", "[x1+y1]", "--w2", "[x2+y2]"],
    ["transport", "--space", "sp", "--n", "2", "--w1", "[e1]", "--w2", "[e1,f1]"],
    ["genpos", "--space", "so", "--n", "5", "--first", "0,3,2", "--second", "0,2,3"],
    ["arrange", "--space", "so", "--n", "3", "--w1", "[x1+y1,x2+y2,x3+y3]", "--w2", "[x1+y1,x2+y2,x3+y3]"],
    ["stabilizer", "--space", "sl", "--n", "2", "--subspaces", '[["e1"],["e2"],["e1+e2"]]'],
    ["spec", "--matrix", "[[2,1],[1,1]]"],
    ["spec", "--matrix", "[[0,-1],[1,0]]"],
    ["bm-check", "--matrix", "[[1,1],[0,1]]"],
    ["codim1", "--matrix", "[[2,1],[1,1]]"],
    ["gaps", "--matrix", "[[0,0,-1],[1,0,1],[0,1,3]]"],
    ["search", "--max-len", "3", "--predicate", "codim_one"],
    ["enumerate-validate", "--space", "sp", "--n", "2..3"],
    ["transport", "--space", "sp", "--n", "2", "--subspace", "[[1,2]]"],
    ["spec", "--matrix", "[[2,0],[0,1]]"],
]

documents = [
    {"space": {"kind": "so", "n": 2}, "w1": "[x1+y1]", "w2": {"basis": [["0", "1", "0", "1"]]}},
    {"kind": "sp", "n": 2, "first": {"p": 1, "two_r": 0}, "second": {"p": 3, "two_r": 2}},
    {"matrix": {"d": 2, "g": [[2, 1], [1, 1]]}},
    {"generators": "sp4", "max_len": 2, "predicate": "hyperbolic"},
]

failures = 0
for doc in documents:
    for e in request.iter_errors(doc):
        failures += 1
        print(f"request {doc}: {e.message}")

for args in commands:
    run = subprocess.run([cli, *args], capture_output=True, text=True)
    try:
        out = json.loads(run.stdout)
    except json.JSONDecodeError as e:
        failures += 1
        print(f"{' '.join(args)}: stdout is not JSON ({e})")
        continue
    errors = list(output.iter_errors(out))
    if "certificate" in out:
        errors += list(certificate.iter_errors(out["certificate"]))
    for e in errors:
        failures += 1
        print(f"{' '.join(args)} (exit {run.returncode}): {e.json_path}: {e.message}")
    if not errors:
        print(f"ok   {out['status']:<13} {' '.join(args)}")

print(f"{len(commands)} outputs, {len(documents)} requests, {failures} schema violations")
sys.exit(1 if failures else 0)
