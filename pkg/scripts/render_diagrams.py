#!/usr/bin/env python3
"""Render Satake diagrams and restricted-root tables to a directory.

Runs the full pipeline (root decomposition, diagram, restricted system,
adapted-basis cross-check) for the three noncompact e6 models with Cartan
presets, and emits the two all-black compact diagrams as references.
"""

import argparse
import os

from realforms.pipeline import compact_diagram, run_satake

COMPUTED = ("e6m26", "e6m14", "e6p2")
COMPACT = ("f4m52", "e6m78")


def write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)
    print(f"wrote {path}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="diagrams")
    ap.add_argument(
        "--models", nargs="*", default=list(COMPUTED), choices=COMPUTED + COMPACT
    )
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for key in args.models:
        if key in COMPACT:
            diag = compact_diagram(key)
            write(os.path.join(args.out, f"{key}.satake.txt"), diag.render_ascii())
            write(os.path.join(args.out, f"{key}.satake.dot"), diag.render_dot())
            continue
        res = run_satake(key)
        label = res.preset_key
        base = os.path.join(args.out, label)
        write(f"{base}.satake.txt", res.diagram.render_ascii())
        write(f"{base}.satake.dot", res.diagram.render_dot())
        write(f"{base}.satake.json", res.diagram.to_json())
        write(f"{base}.restricted.txt", res.table.render_ascii())
        print(
            f"{label}: {res.checks['roots']} roots, "
            f"compact part {res.checks['delta0_type']}, "
            f"restricted {res.checks['sigma_type']}, "
            f"mult sum {res.checks['mult_sum']}"
        )


if __name__ == "__main__":
    main()
