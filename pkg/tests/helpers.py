"""Shared brute-force oracles and deterministic random generators."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from bidistance.channel import ChannelParams, _score_table
from bidistance.core import Code, Word


def eq3_pairwise_oracle(d10: int, d01: int, params: ChannelParams) -> Fraction:
    """Pairwise error probability by exhaustive received-word enumeration.

    Builds an explicit word pair realizing the offsets (all coordinates
    differ), sums Pr(y | x) over every y whose likelihood under the rival
    is at least as large, comparing exact integer scores.
    """
    if d10 == 0 and d01 == 0:
        return Fraction(1)
    n = d10 + d01
    x = (1 << d10) - 1
    x_alt = ((1 << d01) - 1) << d10
    table = _score_table(n, params)
    numerator = 0
    for y in range(1 << n):
        s_x = table.score(d10, (x & ~y).bit_count(), (y & ~x).bit_count())
        s_alt = table.score(d01, (x_alt & ~y).bit_count(), (y & ~x_alt).bit_count())
        if s_alt >= s_x:
            numerator += s_x
    return Fraction(numerator, table.denominator)


def brute_distribution_counts(code: Code) -> dict[tuple[int, int], int]:
    """Plain dictionary pair count, independent of the library loop."""
    counts: dict[tuple[int, int], int] = {}
    for x in code.words:
        for y in code.words:
            key = ((x & ~y).bit_count(), (y & ~x).bit_count())
            counts[key] = counts.get(key, 0) + 1
    return counts


def random_code(rng: random.Random, n: int, size: int) -> Code:
    words = rng.sample(range(1 << n), size)
    return Code(n, words)


def random_generator_rows(rng: random.Random, n: int, k: int) -> list[int]:
    """k independent random rows over F_2^n (resampled until full rank)."""
    while True:
        rows = [rng.randrange(1, 1 << n) for _ in range(k)]
        if _rank(rows) == k:
            return rows


def _rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        v = row
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                break
    return len(pivots)


def span_code(n: int, rows: list[int]) -> Code:
    words = [0]
    for row in rows:
        words += [w ^ row for w in words]
    return Code(n, words, is_linear=True)


def rows_from_columns(columns: tuple[int, ...], k: int) -> list[int]:
    """Generator rows whose column c is the k-bit vector columns[c]."""
    rows = []
    for r in range(k):
        row = 0
        for c, col in enumerate(columns):
            if (col >> r) & 1:
                row |= 1 << c
        rows.append(row)
    return rows


def macwilliams(weights: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Dual weight distribution via the Krawtchouk transform (oracle only)."""
    size = sum(weights)
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a_i in enumerate(weights):
            if not a_i:
                continue
            kraw = sum((-1) ** l * math.comb(i, l) * math.comb(n - i, j - l)
                       for l in range(j + 1))
            acc += a_i * kraw
        assert acc % size == 0
        out.append(acc // size)
    return tuple(out)


def directional_pair(x: Word, y: Word) -> tuple[int, int]:
    """Independent recount of (d10, d01) straight from the bit tuples."""
    xb, yb = x.to_bits(), y.to_bits()
    d10 = sum(1 for a, b in zip(xb, yb) if a == 1 and b == 0)
    d01 = sum(1 for a, b in zip(xb, yb) if a == 0 and b == 1)
    return d10, d01
