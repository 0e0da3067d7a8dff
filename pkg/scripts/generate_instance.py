#!/usr/bin/env python3
"""
Generate a random facility instance

Entries are uniform in [0, 1] and fully determined by --seed.

Usage:
    python scripts/generate_instance.py --rows 10 --cols 14 --seed 3 --output inst.csv
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from greedykit.core.rng import make_generator  # noqa: E402
from greedykit.functions import FacilityMatrix  # noqa: E402
from greedykit.services.instance_service import write_matrix_csv  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description='Write a random facility matrix as CSV')
    parser.add_argument('--rows', type=int, required=True, help='Customers (m)')
    parser.add_argument('--cols', type=int, required=True, help='Candidate locations (n)')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--output', required=True, help='Destination .csv file')
    args = parser.parse_args()

    rng = make_generator(args.seed)
    matrix = FacilityMatrix(rng.random((args.rows, args.cols)))
    path = write_matrix_csv(matrix, args.output)
    print(f"Wrote {matrix.m}x{matrix.n} facility matrix to {path}")


if __name__ == "__main__":
    main()
