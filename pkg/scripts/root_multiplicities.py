#!/usr/bin/env python3
"""Print the restricted root multiplicities of one model.

Example:
    python3 scripts/root_multiplicities.py e6m14
"""

import argparse

from realforms.pipeline import PRESET_MODEL, build_model, preset_cartan
from realforms.rootspace import restricted_multiplicities, root_decomposition


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("model", help="e6m26, e6m14, e6p2 or EIV/EIII/EII")
    args = ap.parse_args()
    key = PRESET_MODEL.get(args.model, args.model)
    build = build_model(key)
    cartan = preset_cartan(build)
    datum = root_decomposition(build.lie, cartan.hs, name=key)
    rmult = restricted_multiplicities(datum, cartan.a_idx)
    sig = build.signature
    print(f"{key}: dim {build.lie.dim}, signature {sig[0] - sig[1]:+d}")
    print(f"roots: {len(datum.spaces)}, zero space dim {datum.zero.dim}")
    print(f"split rank {len(cartan.a_idx)}, restricted roots {len(rmult)}")
    for r, m in sorted(rmult.items(), key=lambda kv: tuple(x.key() for x in kv[0])):
        text = ", ".join(x.to_str() for x in r)
        print(f"  ({text}): m = {m}")
    print(f"multiplicity sum {sum(rmult.values())}")


if __name__ == "__main__":
    main()
