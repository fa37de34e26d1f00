#!/usr/bin/env python3
"""
Demo script for epscs.
Evaluates a few states and writes CSV files and a verification report.
"""
import os
import sys

import numpy as np

# Add parent directory to path for development
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from epscs import StateLabel, TransformSpec, ho_eigenfunction, normalization, overlap, transform
from epscs.export import JsonLinesWriter, save_csv
from epscs.states import wavefunction_closed
from epscs.verify import run_all


def main():
    demo_dir = os.path.dirname(os.path.abspath(__file__))
    output_dir = os.path.join(demo_dir, "output")

    # Create output directory if it doesn't exist
    os.makedirs(output_dir, exist_ok=True)

    # Wavefunctions of the same point on the first Landau levels
    x = np.linspace(-4.0, 4.0, 81)
    for m in range(3):
        label = StateLabel(1.0 + 0.5j, m, 0.5)
        print(f"m={m}: N = {normalization(label):.6f}")
        values = wavefunction_closed(x, label)
        output_path = os.path.join(output_dir, f"wavefunction_m{m}.csv")
        save_csv(output_path, ["x", "re", "im"], zip(x, values.real, values.imag), [f"state {label}"])
        print(f"  -> Saved: {output_path}")

    # Overlap decay along the real axis
    print("\n|<0.0; 1, 0.5 | w; 1, 0.5>|:")
    for w in (0.0, 0.5, 1.0, 2.0):
        print(f"  w={w}: {abs(overlap(0.0, w, 1, 0.5)):.6f}")

    # Transform of the first eigenfunction in the eps -> 0+ limit
    spec = TransformSpec(m=0, eps=0.0)
    z = 0.4 - 0.2j
    print(f"\nB[phi_1]({z}) = {transform(spec, lambda t: ho_eigenfunction(1, t), z):.6f}")

    # A few verification suites
    report_path = os.path.join(output_dir, "reports.jsonl")
    reports = run_all({"unit_norm": None, "overlap_closed_form": None, "identity_matrix": None})
    with JsonLinesWriter(report_path) as writer:
        for report in reports:
            print(f"{report.suite}: {'passed' if report.passed else 'FAILED'} (rel {report.defect_rel:.2e})")
            writer.write(report.to_record())

    print("\nDemo complete!")
    print(f"Output files saved to: {output_dir}")


if __name__ == "__main__":
    main()
