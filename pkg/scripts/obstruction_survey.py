#!/usr/bin/env python3
"""Survey metric obstructions across classified quintuples.

For each index, expands the classification to a weight bound and tallies how
many members trip the index-ratio test, the volume test, both, or neither;
optionally dumps the raw rows as CSV:

    python3 scripts/obstruction_survey.py --max-index 8 --bound 100 --csv build/obstructions.csv
"""
from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass
from pathlib import Path

from dpweights.classify import classify_index, expand_classification
from dpweights.obstructions import obstruction_report


@dataclass(frozen=True)
class SurveyConfig:
    max_index: int
    bound: int
    csv_path: Path | None


def parse_config() -> SurveyConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-index", type=int, default=6)
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--csv", type=Path, default=None)
    a = p.parse_args()
    if a.max_index < 1 or a.bound < 1:
        p.error("max-index and bound must be positive")
    return SurveyConfig(a.max_index, a.bound, a.csv)


def main() -> None:
    cfg = parse_config()
    writer = None
    handle = None
    if cfg.csv_path is not None:
        cfg.csv_path.parent.mkdir(parents=True, exist_ok=True)
        handle = cfg.csv_path.open("w", newline="")
        writer = csv.writer(handle)
        writer.writerow(["index", "a0", "a1", "a2", "a3", "d", "k_squared", "group_order", "gmsy", "spotti"])

    print(f"{'index':>5}  {'members':>7}  {'gmsy':>5}  {'spotti':>6}  {'both':>5}  {'neither':>7}  max K^2*N")
    for index in range(1, cfg.max_index + 1):
        members = expand_classification(classify_index(index), cfg.bound)
        tally = {"gmsy": 0, "spotti": 0, "both": 0, "neither": 0}
        peak = None
        for q in members:
            r = obstruction_report(q)
            key = ("both" if r.spotti else "gmsy") if r.gmsy else ("spotti" if r.spotti else "neither")
            tally[key] += 1
            volume = r.k_squared * r.group_order
            if peak is None or volume > peak[0]:
                peak = (volume, q)
            if writer is not None:
                writer.writerow([index, *q.astuple(), r.k_squared, r.group_order, int(r.gmsy), int(r.spotti)])
        peak_txt = f"{peak[0]} at {peak[1]}" if peak else "-"
        print(f"{index:>5}  {len(members):>7}  {tally['gmsy']:>5}  {tally['spotti']:>6}"
              f"  {tally['both']:>5}  {tally['neither']:>7}  {peak_txt}")

    if handle is not None:
        handle.close()
        print(f"rows written to {cfg.csv_path}")


if __name__ == "__main__":
    main()
