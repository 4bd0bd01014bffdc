#!/usr/bin/env python3
"""Classify the 85 eligible graphs and write the report (JSON and text)."""

from __future__ import annotations

import argparse
from pathlib import Path

from cdgraphs.report import classify_all

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data-dir", type=Path, default=ROOT / "data")
    ap.add_argument("--out", type=Path, default=ROOT / "results")
    args = ap.parse_args()
    rep = classify_all(args.data_dir)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "classification.json").write_text(rep.to_json())
    (args.out / "classification.txt").write_text(rep.to_text())
    s = rep.summary
    print(f"eligible={s.eligible} occurring={s.occurring} nonoccurring={s.nonoccurring} unknown={s.unknown}")
    print(f"written to {args.out}")


if __name__ == "__main__":
    main()
