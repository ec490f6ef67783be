#!/usr/bin/env python3
"""Table of reduced-word counts per permutation, computed from tower tableaux.

Each row shows a permutation, its tower diagram, its length and the number of
standard tower tableaux of that diagram.  ``--check`` also runs the brute
force search and compares the two counts.
"""

import argparse
import sys

from towertab.core import format_diagram
from towertab.enumeration import count_stt, shape_of
from towertab.perm import all_permutations, coxeter_length, reduced_words_oracle


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degree", type=int, default=4)
    parser.add_argument("--check", action="store_true", help="compare with the brute force search")
    args = parser.parse_args(argv)

    mismatches = 0
    total = 0
    for p in all_permutations(args.degree):
        shape = shape_of(p)
        count = count_stt(shape)
        total += count
        one_line = " ".join(map(str, p.padded(args.degree)))
        heights = format_diagram(shape).strip() or "-"
        row = f"{one_line:>16}  {heights:<14} l={coxeter_length(p):<3} {count}"
        if args.check:
            brute = len(reduced_words_oracle(p))
            mismatches += brute != count
            row += "" if brute == count else f"  MISMATCH brute force {brute}"
        print(row)
    print(f"total reduced words in S_{args.degree}: {total}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
