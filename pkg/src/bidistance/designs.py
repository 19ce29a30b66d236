"""Closed-form bidistance distributions from combinatorial structure.

Codes with few weights carry enough regularity that their full pair
statistics follow without looping over pairs: two nonzero weights give
a strongly regular graph on the nonzero words, three give a 3-class
association scheme, and the block-design constructions fix every pair
intersection outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ._bitops import popcount
from .algebra import (coset_distribution_matrix, distinct_row_count, dual_code,
                      generator_from_code)
from .core import BidistanceDistribution, Code, solve_directional_system

SCHEME_SIZE_CAP = 1 << 12
GRAPH_SIZE_CAP = 1 << 16


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular graph parameters (v, k, lam, mu)."""

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        if not 0 < self.k < self.v or self.lam < 0 or self.mu < 0:
            raise ValueError(f"invalid graph parameters {self._tuple()}")
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ValueError(f"edge-count identity fails for {self._tuple()}")
        if (self.v - 2 * self.k + self.mu - 2 < 0
                or self.v - 2 * self.k + self.lam < 0):
            raise ValueError(f"complement of {self._tuple()} would be negative")

    def _tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    @property
    def complement(self) -> "SrgParams":
        return SrgParams(self.v, self.v - self.k - 1,
                         self.v - 2 * self.k + self.mu - 2,
                         self.v - 2 * self.k + self.lam)


def srg_from_two_weight(n: int, k: int, w1: int, w2: int) -> SrgParams:
    """Parameters of the distance-w1 graph on a two-weight code's words.

    Solved exactly from the eigenvalue relations of the graph's Seidel-type
    adjacency matrix; non-integral or negative intermediates mean the input
    does not describe a projective two-weight code.
    """
    if not 0 < w1 < w2 <= n:
        raise ValueError("need 0 < w1 < w2 <= n")
    v = 1 << k
    span = w2 - w1
    rho0 = Fraction(n * v - (w1 + w2) * (v - 1), span)
    rho1 = Fraction(w1 + w2, span)
    rho2 = Fraction(w1 + w2 - v, span)
    valency = (v - 1 - rho0) / 2
    s, prod = rho1 + rho2, rho1 * rho2
    lam = (prod + 4 * valency - s - 3) / 4
    mu = (prod + 4 * valency + s + 1) / 4
    if any(x.denominator != 1 or x < 0 for x in (valency, lam, mu)):
        raise ValueError(
            f"not a valid two-weight input: (n, k, w1, w2) = ({n}, {k}, {w1}, {w2})")
    return SrgParams(v, int(valency), int(lam), int(mu))


def dimension_from_weights(n: int, w1: int, w2: int) -> int | None:
    """Dimension forced by length and the two weights, when determined."""
    denom = n * n + n + 4 * w1 * w2 - 2 * n * (w1 + w2)
    if denom <= 0:
        raise ValueError("the dimension formula needs n^2 + n + 4 w1 w2 > 2 n (w1 + w2)")
    quotient, rem = divmod(4 * w1 * w2, denom)
    if rem or quotient < 1 or quotient & (quotient - 1):
        return None
    return quotient.bit_length() - 1


def _half(value: int, label: str) -> int:
    if value % 2:
        raise ValueError(f"{label} = {value} is odd; table offsets must be integers")
    return value // 2


def two_weight_ahb(n: int, k: int, w1: int, w2: int,
                   count_w1: int, count_w2: int) -> BidistanceDistribution:
    """Pair-frequency table of a two-weight code with its zero word removed.

    The six case rows follow from counting triangles through the zero word
    in the associated graph and its complement; coinciding offset pairs
    are aggregated.
    """
    v = 1 << k
    if count_w1 < 0 or count_w2 < 0 or count_w1 + count_w2 != v - 1:
        raise ValueError("weight counts must cover exactly the nonzero words")
    graph = srg_from_two_weight(n, k, w1, w2)
    if graph.k != count_w1:
        raise ValueError(
            f"graph valency {graph.k} disagrees with the weight-{w1} count {count_w1}")
    lam, mu = graph.lam, graph.mu
    a1, a2 = count_w1, count_w2
    doubled_rows = [
        ((w1, w1), a1 * a2 + lam * a1 - mu * a2),
        ((w2, w2), a2 * (a2 - a1 + mu - 1) + a1 * (a1 - lam - 1)),
        ((2 * w1 - w2, w2), a1 * (a1 - lam - 1)),
        ((w1, 2 * w2 - w1), a2 * (a1 - mu)),
        ((w2, 2 * w1 - w2), a1 * (a1 - lam - 1)),
        ((2 * w2 - w1, w1), a2 * (a1 - mu)),
    ]
    entries: dict[tuple[int, int], int] = {}
    for (two_d10, two_d01), freq in doubled_rows:
        if freq == 0:
            continue
        if freq < 0:
            raise ValueError(f"negative frequency {freq}; inputs are inconsistent")
        pair = (_half(two_d10, "2*d10"), _half(two_d01, "2*d01"))
        if pair[0] < 0 or pair[1] < 0:
            raise ValueError(f"offsets {pair} are negative; inputs are inconsistent")
        entries[pair] = entries.get(pair, 0) + freq
    return BidistanceDistribution.from_off_diagonal(n, v - 1, entries)


def verify_srg(code: Code, w1: int) -> SrgParams:
    """Measure (v, K, lam, mu) on the distance-w1 graph of the codewords.

    Returns the measured constants, or raises if the graph fails any of
    regularity, connectedness, or constant common-neighbour counts.
    """
    v = len(code)
    if v > GRAPH_SIZE_CAP:
        raise ValueError(f"graph verification capped at {GRAPH_SIZE_CAP} vertices")
    words = code.words
    adjacency = []
    for x in words:
        row = 0
        for j, y in enumerate(words):
            if x != y and (x ^ y).bit_count() == w1:
                row |= 1 << j
        adjacency.append(row)
    degrees = {row.bit_count() for row in adjacency}
    if len(degrees) != 1:
        raise ValueError("not strongly regular: the graph is not regular")
    valency = degrees.pop()
    if valency == 0 or valency == v - 1:
        raise ValueError("not strongly regular: the graph is empty or complete")
    lams, mus = set(), set()
    for i in range(v):
        for j in range(i + 1, v):
            common = (adjacency[i] & adjacency[j]).bit_count()
            (lams if (adjacency[i] >> j) & 1 else mus).add(common)
    if len(lams) > 1 or len(mus) > 1:
        raise ValueError("not strongly regular: common-neighbour counts vary")
    mu = mus.pop() if mus else 0
    if mu == 0:
        raise ValueError("not strongly regular: the graph is disconnected")
    return SrgParams(v, valency, lams.pop() if lams else 0, mu)


@dataclass(frozen=True)
class SchemeParams:
    """Valences and intersection numbers of a 3-class association scheme.

    ``p[k][i][j]`` counts, for any pair in class k, the third points in
    class i from one end and class j from the other; class 0 is equality.
    """

    valences: tuple[int, int, int]
    p: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        p = tuple(tuple(tuple(int(x) for x in row) for row in plane) for plane in self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "valences", tuple(int(x) for x in self.valences))
        v = (1,) + self.valences
        for k in range(4):
            for i in range(4):
                if sum(p[k][i]) != v[i]:
                    raise ValueError(f"row-sum identity fails at k={k}, i={i}")
                for j in range(4):
                    if p[k][i][j] != p[k][j][i]:
                        raise ValueError("intersection numbers are not symmetric")
        for i in range(4):
            if p[0][i][i] != v[i]:
                raise ValueError("p[0][i][i] must equal the valence")

    def to_json_dict(self) -> dict:
        return {
            "valences": list(self.valences),
            "p": [[list(row) for row in plane] for plane in self.p],
        }


def scheme_from_three_weight(code: Code, sample: int = 50) -> SchemeParams:
    """Measure the distance-scheme intersection numbers of a three-weight code.

    The dual's coset distribution matrix must have exactly four distinct
    rows for the distance classes to compose consistently; that condition
    is verified first, then every constant is measured on one representative
    and checked across a stride sample per class (``sample=0`` checks all).

    Linearity makes pair classes translation-invariant, so representatives
    of the form (0, z) with wt(z) = w_k cover every pair in class k.
    """
    if len(code) > SCHEME_SIZE_CAP:
        raise ValueError(f"scheme measurement capped at {SCHEME_SIZE_CAP} codewords")
    generator = generator_from_code(code)
    dist = code.weight_distribution()
    weights = [w for w in range(1, code.n + 1) if dist[w]]
    if len(weights) != 3:
        raise ValueError(f"need exactly three nonzero weights, found {len(weights)}")
    rows = distinct_row_count(coset_distribution_matrix(dual_code(generator)))
    if rows != 4:
        raise ValueError(
            f"not an association scheme: the dual coset matrix has {rows} distinct "
            "rows instead of 4")
    arr = np.array(code.words, dtype=np.uint64)
    wts = popcount(arr)
    class_of = {w: i for i, w in enumerate(weights, start=1)}
    measured: dict[int, tuple[int, ...]] = {}
    for wk, k in class_of.items():
        reps = arr[wts == wk]
        if sample and len(reps) > sample:
            stride = -(-len(reps) // sample)
            reps = reps[::stride][:sample]
        tables = set()
        for z in reps:
            wyz = popcount(arr ^ z)
            tables.add(tuple(int(np.sum((wts == wi) & (wyz == wj)))
                             for wi in weights for wj in weights))
        if len(tables) != 1:
            raise ValueError(
                f"not an association scheme: counts vary across class-{k} pairs")
        measured[k] = tables.pop()
    valences = tuple(int(dist[w]) for w in weights)
    p = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for i, v_i in enumerate((1,) + valences):
        p[0][i][i] = v_i
    for k in (1, 2, 3):
        p[k][0][k] = p[k][k][0] = 1
        flat = measured[k]
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                p[k][i][j] = flat[(i - 1) * 3 + (j - 1)]
    return SchemeParams(valences, tuple(tuple(tuple(r) for r in plane) for plane in p))


def three_weight_ahb(n: int, weights: Sequence[int],
                     scheme: SchemeParams) -> BidistanceDistribution:
    """Pair-frequency table of a three-weight code with its zero word removed.

    Every ordered class triple (a, b, c), the weight classes of x, y and
    x + y, contributes valence(a) * p[a][b][c] ordered pairs, at the
    offsets the three weights force through the directional linear system.
    """
    w = tuple(int(x) for x in weights)
    if len(w) != 3 or not 0 < w[0] < w[1] < w[2] <= n:
        raise ValueError("weights must be three increasing values within the length")
    entries: dict[tuple[int, int], int] = {}
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                freq = scheme.valences[a - 1] * scheme.p[a][b][c]
                if freq == 0:
                    continue
                try:
                    pair = solve_directional_system(w[a - 1], w[b - 1], w[c - 1])
                except ValueError as exc:
                    raise ValueError(
                        f"classes ({a}, {b}, {c}) have positive frequency {freq} "
                        f"but no integer offsets: {exc}") from None
                key = (pair.d10, pair.d01)
                entries[key] = entries.get(key, 0) + freq
    return BidistanceDistribution.from_off_diagonal(n, sum(scheme.valences), entries)


def with_zero_word(dist: BidistanceDistribution,
                   weights: Sequence[int]) -> BidistanceDistribution:
    """Distribution of a full linear code from that of its nonzero words.

    Adding the zero word back contributes one ordered pair per nonzero
    word on each axis, keyed by its weight.
    """
    entries = dict(dist.off_diagonal())
    for w, count in enumerate(weights):
        if w and count:
            entries[(0, w)] = entries.get((0, w), 0) + count
            entries[(w, 0)] = entries.get((w, 0), 0) + count
    return BidistanceDistribution.from_off_diagonal(dist.n, dist.size + 1, entries)


@dataclass(frozen=True)
class IncidenceDesign:
    """Symmetric (v, k, lam) block design on the point set 1..v.

    Construction validates the full definition: v blocks of size k, every
    point replicated k times, every point pair covered exactly lam times.
    """

    v: int
    k: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(int(p) for p in b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not 2 <= self.k < self.v:
            raise ValueError("need 2 <= k < v")
        if len(blocks) != self.v:
            raise ValueError("a symmetric design has exactly v blocks")
        if len(set(blocks)) != len(blocks):
            raise ValueError("duplicate blocks")
        replication = dict.fromkeys(range(1, self.v + 1), 0)
        coverage: dict[tuple[int, int], int] = {}
        for block in blocks:
            if len(set(block)) != self.k:
                raise ValueError("every block must hold k distinct points")
            if block[0] < 1 or block[-1] > self.v:
                raise ValueError("points must lie in 1..v")
            for point in block:
                replication[point] += 1
            for pair in combinations(block, 2):
                coverage[pair] = coverage.get(pair, 0) + 1
        if set(replication.values()) != {self.k}:
            raise ValueError("replication number differs from k")
        n_pairs = self.v * (self.v - 1) // 2
        if len(coverage) != n_pairs or set(coverage.values()) != {self.lam}:
            raise ValueError(f"pair coverage is not constant at lam={self.lam}")

    def complement(self) -> "IncidenceDesign":
        full = frozenset(range(1, self.v + 1))
        return IncidenceDesign(
            self.v, self.v - self.k, self.v - 2 * self.k + self.lam,
            tuple(tuple(sorted(full - set(b))) for b in self.blocks))

    def to_json_dict(self) -> dict:
        return {"v": self.v, "k": self.k, "lambda": self.lam,
                "blocks": [list(b) for b in self.blocks]}


def sbibd_from_difference_set(v: int, difference_set: Iterable[int]) -> IncidenceDesign:
    """Develop a difference set through Z_v into a symmetric design on 1..v."""
    base = sorted({d % v for d in difference_set})
    k = len(base)
    if not 2 <= k < v:
        raise ValueError("need a base block with 2 <= k < v distinct residues")
    pair_count, rem = divmod(k * (k - 1), v - 1)
    if rem:
        raise ValueError(f"not a difference set: k(k-1) = {k * (k - 1)} is not "
                         f"divisible by v - 1 = {v - 1}")
    blocks = tuple(tuple(sorted((d + shift) % v + 1 for d in base)) for shift in range(v))
    try:
        return IncidenceDesign(v, k, pair_count, blocks)
    except ValueError as exc:
        raise ValueError(f"not a difference set modulo {v}: {exc}") from None


#: shipped difference sets (quadratic-residue and point/hyperplane types),
#: re-verified by sbibd_from_difference_set on every load
DIFFERENCE_SETS: dict[tuple[int, int, int], tuple[int, ...]] = {
    (7, 3, 1): (1, 2, 4),
    (11, 5, 2): (1, 3, 4, 5, 9),
    (13, 4, 1): (0, 1, 3, 9),
    (15, 7, 3): (0, 1, 2, 4, 5, 8, 10),
    (23, 11, 5): (1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18),
}


def catalog_design(v: int, k: int, lam: int) -> IncidenceDesign:
    """Build and re-verify one of the shipped designs."""
    try:
        dset = DIFFERENCE_SETS[(v, k, lam)]
    except KeyError:
        known = ", ".join(str(t) for t in sorted(DIFFERENCE_SETS))
        raise ValueError(f"no catalog design ({v}, {k}, {lam}); shipped: {known}") from None
    return sbibd_from_difference_set(v, dset)


def sbibd_codes(design: IncidenceDesign, family: int,
                puncture_point: int | None = None) -> Code:
    """Support-set code families built from a symmetric design.

    Family 1 takes the blocks as supports; 2 adds the block complements;
    3 extends every block word by one shared new coordinate; 4 punctures
    at a chosen point, keeping blocks through it and complements of the
    rest.  Requires v >= 2k so that word supports stay distinct.
    """
    v, k = design.v, design.k
    if v < 2 * k:
        raise ValueError(f"construction needs v >= 2k, got v={v}, k={k}")

    def mask(points: Iterable[int], skip: int | None = None) -> int:
        m = 0
        for point in points:
            if point == skip:
                continue
            coord = point - 1 if skip is None or point < skip else point - 2
            m |= 1 << coord
        return m

    full = frozenset(range(1, v + 1))
    if family == 1:
        n = v
        words = [mask(b) for b in design.blocks]
    elif family == 2:
        n = v
        words = [mask(b) for b in design.blocks]
        words += [mask(full - set(b)) for b in design.blocks]
    elif family == 3:
        n = v + 1
        words = [mask(b) | (1 << v) for b in design.blocks]
        words += [mask(full - set(b)) for b in design.blocks]
    elif family == 4:
        anchor = 1 if puncture_point is None else puncture_point
        if not 1 <= anchor <= v:
            raise ValueError(f"puncture point must lie in 1..{v}")
        n = v - 1
        words = [mask(b, skip=anchor) for b in design.blocks if anchor in b]
        words += [mask(full - set(b), skip=anchor)
                  for b in design.blocks if anchor not in b]
    else:
        raise ValueError("family must be 1, 2, 3, or 4")
    if len(set(words)) != len(words):
        raise ValueError("support sets collide; the construction needs distinct words")
    return Code(n, words)


def sbibd_ahb(v: int, k: int, lam: int, family: int) -> BidistanceDistribution:
    """Closed-form pair frequencies for the four design code families.

    Block intersections are fixed by the design parameters, so each family
    has a short fixed list of (offset, frequency) rows; coinciding offsets
    are aggregated (they do coincide for small parameters).
    """
    if lam < 1 or not 2 <= k < v:
        raise ValueError("invalid design parameters")
    if lam * (v - 1) != k * (k - 1):
        raise ValueError(f"({v}, {k}, {lam}) is not symmetric: lam(v-1) != k(k-1)")
    if v < 2 * k:
        raise ValueError(f"construction needs v >= 2k, got v={v}, k={k}")
    diff = k - lam
    cross = v - 2 * k + lam
    if family == 1:
        n, size = v, v
        rows = [((diff, diff), v * (v - 1))]
    elif family == 2:
        n, size = v, 2 * v
        rows = [((diff, diff), 2 * v * (v - 1)),
                ((k, v - k), v), ((v - k, k), v),
                ((lam, cross), v * (v - 1)), ((cross, lam), v * (v - 1))]
    elif family == 3:
        n, size = v + 1, 2 * v
        rows = [((diff, diff), 2 * v * (v - 1)),
                ((k + 1, v - k), v), ((v - k, k + 1), v),
                ((lam + 1, cross), v * (v - 1)), ((cross, lam + 1), v * (v - 1))]
    elif family == 4:
        n, size = v - 1, v
        rows = [((diff, diff), k * (k - 1) + (v - k) * (v - k - 1)),
                ((lam, cross), k * (v - k)), ((cross, lam), k * (v - k))]
    else:
        raise ValueError("family must be 1, 2, 3, or 4")
    entries: dict[tuple[int, int], int] = {}
    for pair, freq in rows:
        entries[pair] = entries.get(pair, 0) + freq
    return BidistanceDistribution.from_off_diagonal(n, size, entries)
