#!/usr/bin/env python3
"""Exhaustive sweep of S_n checking the tower-diagram correspondences.

For every permutation of the given degree this checks that

* the shape of a reduced word does not depend on the word chosen,
* distinct permutations get distinct shapes,
* standard tableaux of the shape are counted like reduced words,
* the Rothe diagram column counts equal the tower heights,
* Rothification rebuilds the Rothe diagram.

Example::

    python3 scripts/verify_sweep.py --degree 5
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from towertab.enumeration import count_stt, shape_of
from towertab.perm import all_permutations, reduced_words_oracle
from towertab.rothe import rothe_diagram, rothify, tower_from_rothe
from towertab.slide import sr_shape


@dataclass(frozen=True)
class SweepConfig:
    degree: int = 5
    words_up_to: int = 5  # reduced words are only listed for degrees up to this


@dataclass
class SweepReport:
    permutations: int = 0
    words: int = 0
    failures: list[str] = field(default_factory=list)


def sweep(config: SweepConfig) -> SweepReport:
    report = SweepReport()
    seen = {}
    for p in all_permutations(config.degree):
        report.permutations += 1
        shape = shape_of(p)
        if shape in seen:
            report.failures.append(f"{p} and {seen[shape]} share shape {shape.heights}")
        seen[shape] = p
        if config.degree <= config.words_up_to:
            words = reduced_words_oracle(p)
            report.words += len(words)
            if any(sr_shape(w) != shape for w in words):
                report.failures.append(f"reduced words of {p} reach different shapes")
            if count_stt(shape) != len(words):
                report.failures.append(f"{p}: {count_stt(shape)} tableaux, {len(words)} words")
        if tower_from_rothe(p) != shape:
            report.failures.append(f"{p}: Rothe column counts differ from the tower heights")
        if rothify(p) != rothe_diagram(p):
            report.failures.append(f"{p}: Rothification differs from the Rothe diagram")
    return report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degree", type=int, default=SweepConfig.degree)
    parser.add_argument("--words-up-to", type=int, default=SweepConfig.words_up_to)
    args = parser.parse_args(argv)
    config = SweepConfig(args.degree, args.words_up_to)

    start = time.perf_counter()
    report = sweep(config)
    elapsed = time.perf_counter() - start
    print(f"degree {config.degree}: {report.permutations} permutations, {report.words} reduced words, {elapsed:.2f}s")
    for line in report.failures:
        print("FAIL", line)
    print("all checks passed" if not report.failures else f"{len(report.failures)} failures")
    return 1 if report.failures else 0


if __name__ == "__main__":
    sys.exit(main())
