#!/usr/bin/env python3
"""
Compare report.schema.json with the RunReport model

The checked-in schema carries extra constraints (enums, minimums, the
checksum pattern) on top of what the model declares; this script prints the
model's own schema, or lists fields where the two disagree.

Usage:
    python scripts/export_schema.py            # print the model schema
    python scripts/export_schema.py --diff     # list fields that differ from report.schema.json
"""

import argparse
import json
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from greedykit.services.report_service import RunReport  # noqa: E402

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), '..', 'report.schema.json')


def main():
    parser = argparse.ArgumentParser(description='Export the RunReport JSON schema')
    parser.add_argument('--diff', action='store_true', help='Compare with report.schema.json')
    args = parser.parse_args()

    model_schema = RunReport.model_json_schema()
    if not args.diff:
        print(json.dumps(model_schema, indent=2))
        return 0

    with open(SCHEMA_PATH, encoding='utf-8') as handle:
        published = json.load(handle)

    missing = sorted(set(model_schema['properties']) - set(published['properties']))
    extra = sorted(set(published['properties']) - set(model_schema['properties']))
    required = sorted(set(model_schema.get('required', [])) ^ set(published.get('required', [])))
    for label, names in (('missing', missing), ('extra', extra), ('required mismatch', required)):
        if names:
            print(f"{label}: {', '.join(names)}")
    return 1 if missing or extra or required else 0


if __name__ == "__main__":
    sys.exit(main())
