#!/usr/bin/env python3
"""Exhaustive shortener sweep over small generator families.

Enumerates every n x n morphism table with entries drawn from a small
value set, filters to finite semigroups, rewrites every word up to a
length limit, and reports aggregate statistics (compression ratios, the
longest output seen, wall time). Useful for spotting regressions and for
getting a feel of how far below the worst-case bound real outputs sit.
"""

import argparse
import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

from semiforge import Mat, MorphismTable, Shortener, decide_finiteness


@dataclass
class SweepConfig:
    n: int = 2
    max_letters: int = 2
    values: tuple = (Fraction(0), Fraction(1), Fraction(-1))
    max_word_length: int = 8
    max_closure: int = 60
    limit_tables: int | None = None


def enumerate_tables(config: SweepConfig):
    n = config.n
    cells = n * n
    mats = [Mat([row[i * n:(i + 1) * n] for i in range(n)])
            for row in itertools.product(config.values, repeat=cells)]
    for m in mats:
        yield MorphismTable(n, ("a",), {"a": m})
    if config.max_letters >= 2:
        for m1, m2 in itertools.combinations(mats, 2):
            yield MorphismTable(n, ("a", "b"), {"a": m1, "b": m2})


def all_words(alphabet, max_len):
    for length in range(1, max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def run_sweep(config: SweepConfig) -> dict:
    start = time.monotonic()
    stats = {"tables": 0, "finite": 0, "words": 0, "shortened": 0,
             "max_output": 0, "total_in": 0, "total_out": 0}
    for count, table in enumerate(enumerate_tables(config)):
        if config.limit_tables is not None and count >= config.limit_tables:
            break
        stats["tables"] += 1
        verdict = decide_finiteness(table, config.max_closure + 1)
        if verdict.status != "finite" or len(verdict.closure) > config.max_closure:
            continue
        stats["finite"] += 1
        shortener = Shortener(table, assume_finite=True)
        best = {}
        for word in all_words(table.alphabet, config.max_word_length):
            value = table.evaluate(word)
            key = value.key()
            u = best.get(key)
            if u is None or len(u) > len(word):
                u = shortener.shorten(word)
                assert table.evaluate(u) == value
                best[key] = u
            assert len(u) <= len(word)
            stats["words"] += 1
            stats["total_in"] += len(word)
            stats["total_out"] += len(u)
            stats["max_output"] = max(stats["max_output"], len(u))
            if len(u) < len(word):
                stats["shortened"] += 1
    stats["seconds"] = round(time.monotonic() - start, 2)
    return stats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--max-word-length", type=int, default=8)
    parser.add_argument("--max-closure", type=int, default=60)
    parser.add_argument("--limit-tables", type=int, default=None,
                        help="stop after this many candidate tables")
    args = parser.parse_args()
    config = SweepConfig(n=args.n, max_word_length=args.max_word_length,
                         max_closure=args.max_closure,
                         limit_tables=args.limit_tables)
    stats = run_sweep(config)
    for k, v in stats.items():
        print(f"{k}: {v}")
    if stats["total_in"]:
        print(f"compression: {stats['total_out'] / stats['total_in']:.3f}")


if __name__ == "__main__":
    main()
