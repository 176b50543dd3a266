#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Validate bhix JSON output against the schemas in schemas/.

Two modes:
  validate_json.py --schemas DIR --schema compute FILE...   check saved outputs
  validate_json.py --schemas DIR --bhix PATH                run the CLI and check a fixed set of commands
"""
import argparse
import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema

NUMBER = re.compile(r'(?<![\w".])-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?(?![\w"])')


def significant_digits(token):
    mantissa = re.split(r"[eE]", token.lstrip("-"))[0].replace(".", "").lstrip("0")
    return len(mantissa.rstrip("0")) if "." in token else len(mantissa)


def check_text(text, schema):
    """Problems with one JSON document; empty when it is valid."""
    problems = []
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        return [f"not JSON: {e}"]
    for err in jsonschema.Draft202012Validator(schema).iter_errors(doc):
        path = "/".join(str(p) for p in err.absolute_path)
        problems.append(f"{path or '<root>'}: {err.message}")
    if json.loads(json.dumps(doc)) != doc:
        problems.append("document does not survive a dump/load round trip")
    for token in NUMBER.findall(text):
        if "." in token or "e" in token.lower():
            if significant_digits(token) > 12:
                problems.append(f"number {token} has more than 12 significant digits")
    return problems


def load_schemas(directory):
    out = {}
    for name in os.listdir(directory):
        if name.endswith(".schema.json"):
            with open(os.path.join(directory, name)) as f:
                out[name[: -len(".schema.json")]] = json.load(f)
    return out


def cli_cases(tmp):
    p2 = os.path.join(tmp, "p2.g6")
    p4 = os.path.join(tmp, "p4.txt")
    with open(p2, "w") as f:
        f.write("A_\n")
    with open(p4, "w") as f:
        f.write("4 3\n0 1\n1 2\n2 3\n")
    return [
        ("compute", ["compute", "--family", "star", "--n", "4"], 0),
        ("compute", ["compute", "--family", "firefly", "--s", "1", "--t", "1", "--n", "7"], 0),
        ("compute", ["compute", "--family", "double_star", "--a", "2", "--b", "3"], 0),
        ("compute", ["compute", "--graph6", "Bw"], 0),
        ("compute", ["compute", "--graph6", "C`"], 0),
        ("compute", ["compute", "--edges", p4, "--index", "tau,wiener"], 0),
        ("verify_bounds", ["verify-bounds", "--family", "complete", "--n", "5"], 0),
        ("verify_bounds", ["verify-bounds", "--family", "path", "--n", "3"], 4),
        ("verify_bounds", ["verify-bounds", "--family", "cycle", "--n", "6", "--p", "1/2,3"], 0),
        ("bound_sweep", ["verify-bounds", "--exhaustive", "--n", "5"], 4),
        ("bound_sweep", ["verify-bounds", "--exhaustive", "--n", "6", "--workers", "2"], 0),
        ("scan_trees", ["scan", "trees", "--n", "9"], 0),
        ("scan_t52", ["scan", "t52", "--n", "9"], 0),
        ("scan_diameter2", ["scan", "diameter2", "--n", "5"], 0),
        ("scan_families", ["scan", "families", "--n-max", "12"], 0),
        ("product", ["product", "--op", "cartesian", "--a", p2, "--b", p2], 0),
        ("product", ["product", "--op", "complement", "--a", p4], 0),
        ("product", ["product", "--op", "lex", "--a", p4, "--b", p2], 0),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--schemas", required=True)
    ap.add_argument("--bhix", help="path to the bhix executable")
    ap.add_argument("--schema", help="schema name for FILE arguments")
    ap.add_argument("files", nargs="*")
    args = ap.parse_args()

    schemas = load_schemas(args.schemas)
    failures = 0

    if args.files:
        if args.schema not in schemas:
            ap.error(f"unknown schema {args.schema!r}; have {sorted(schemas)}")
        for path in args.files:
            with open(path) as f:
                problems = check_text(f.read(), schemas[args.schema])
            for p in problems:
                print(f"{path}: {p}")
            failures += bool(problems)

    if args.bhix:
        env = dict(os.environ, LC_ALL="de_DE.UTF-8")  # decimal comma locale must not leak into output
        with tempfile.TemporaryDirectory() as tmp:
            for schema, argv, want in cli_cases(tmp):
                proc = subprocess.run([args.bhix, *argv], capture_output=True, text=True, env=env)
                label = " ".join(argv).replace(tmp + os.sep, "")
                problems = [] if proc.returncode == want else [f"exit {proc.returncode}, expected {want}"]
                problems += check_text(proc.stdout, schemas[schema])
                print(f"{'ok  ' if not problems else 'FAIL'} {schema:15} {label}")
                for p in problems:
                    print(f"     {p}")
                failures += bool(problems)

    if not args.files and not args.bhix:
        ap.error("nothing to validate")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
