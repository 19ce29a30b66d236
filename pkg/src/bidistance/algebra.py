"""GF(2^m) arithmetic, trace-defined codes, and F_2 matrix machinery.

Field elements are bitmasks of polynomial coefficients modulo a fixed
irreducible polynomial; generator-matrix rows are packed like words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from ._bitops import popcount, span_words
from .core import CapExceeded, Code, Word

#: one of the two degree-11 factors of x^23 + 1 over F_2
#: (x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1)
GOLAY_GENERATOR_POLY = 0b1100_0111_0101
GOLAY_LENGTH = 23

MAX_ENUM_DIMENSION = 28
COSET_SWEEP_CAP = 24
_SWEEP_CHUNK = 1 << 20


def _poly_mod(a: int, m: int) -> int:
    width = m.bit_length()
    while a.bit_length() >= width:
        a ^= m << (a.bit_length() - width)
    return a


def _is_irreducible(poly: int, m: int) -> bool:
    """Trial division by every polynomial of degree 1..m//2."""
    if m < 1 or poly.bit_length() != m + 1:
        return False
    for d in range(2, 1 << (m // 2 + 1)):
        if _poly_mod(poly, d) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(m: int) -> int:
    """Smallest-bitmask irreducible polynomial of degree m."""
    for cand in range(1 << m, 1 << (m + 1)):
        if _is_irreducible(cand, m):
            return cand
    raise AssertionError(f"no irreducible of degree {m}")  # cannot happen


@dataclass(frozen=True)
class BinaryField:
    """GF(2^m) with elements encoded as coefficient bitmasks below 2^m.

    The modulus defaults to the smallest irreducible of degree m, so
    element encodings are reproducible; any degree-m irreducible may be
    passed instead and is verified at construction.
    """

    m: int
    modulus: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.m <= 16:
            raise ValueError("supported extension degrees are 1..16")
        if self.modulus == 0:
            object.__setattr__(self, "modulus", smallest_irreducible(self.m))
        if self.modulus.bit_length() != self.m + 1:
            raise ValueError(f"modulus must have degree {self.m}")
        if not _is_irreducible(self.modulus, self.m):
            raise ValueError(f"modulus {bin(self.modulus)} is reducible")

    @property
    def order(self) -> int:
        return 1 << self.m

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise ValueError(f"element {a} outside GF(2^{self.m})")

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if (a >> self.m) & 1:
                a ^= self.modulus
            b >>= 1
        return r

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponents are not supported")
        self._check(a)
        r = 1
        base = a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def trace(self, a: int) -> int:
        """Absolute trace down to F_2."""
        t = 0
        x = a
        for _ in range(self.m):
            t ^= x
            x = self.mul(x, x)
        return t


def relative_trace(field: BinaryField, d: int, a: int, source: int | None = None) -> int:
    """Trace from GF(2^source) down to GF(2^d), evaluated inside ``field``.

    ``source`` defaults to the full degree m.  The element must lie in the
    GF(2^source) subfield, and the result lands in GF(2^d); both membership
    facts are checked via the Frobenius fixed-point test.
    """
    e = field.m if source is None else source
    if d < 1 or e % d or field.m % e:
        raise ValueError(f"need d | source | m, got d={d}, source={e}, m={field.m}")
    if field.pow(a, 1 << e) != a:
        raise ValueError(f"element {a} is not in the GF(2^{e}) subfield")
    t = 0
    x = a
    for _ in range(e // d):
        t ^= x
        x = field.pow(x, 1 << d)
    if field.pow(t, 1 << d) != t:
        raise AssertionError("trace left the target subfield")
    return t


def defining_set_code(field: BinaryField, defining_set: Sequence[int]) -> Code:
    """Linear code of trace evaluations over a set of field elements.

    Each field element beta yields the codeword whose coordinate i is the
    absolute trace of beta * d_i.  Duplicate rows collapse, so the size
    reported is the actual one (a power of two).
    """
    elems = list(defining_set)
    if not elems:
        raise ValueError("the defining set is empty")
    if len(set(elems)) != len(elems):
        raise ValueError("defining-set elements must be distinct")
    if 0 in elems:
        raise ValueError("defining-set elements must be nonzero")
    for x in elems:
        field._check(x)
    masks = set()
    for beta in range(field.order):
        w = 0
        for i, d in enumerate(elems):
            if field.trace(field.mul(beta, d)):
                w |= 1 << i
        masks.add(w)
    return Code(len(elems), sorted(masks), is_linear=True)


def trace_code_27_6() -> Code:
    """The [27,6] two-weight trace code over GF(64).

    The defining set collects the nonzero elements whose ninth power (a
    GF(8) subfield element) has subfield trace zero; coordinates are
    absolute traces of its multiples.
    """
    field = BinaryField(6)
    dset = [x for x in range(1, field.order)
            if relative_trace(field, 1, field.pow(x, 9), source=3) == 0]
    return defining_set_code(field, dset)


def _rref(rows: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over F_2: (reduced rows, pivot columns)."""
    work = [int(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> col) & 1:
                work[i] ^= work[rank]
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def _null_space_rows(rows: Sequence[int], n: int) -> list[int]:
    reduced, pivots = _rref(rows, n)
    pivot_of = dict(zip(pivots, reduced))
    out = []
    for free in (c for c in range(n) if c not in pivot_of):
        w = 1 << free
        for col, row in pivot_of.items():
            if (row >> free) & 1:
                w |= 1 << col
        out.append(w)
    return out


@dataclass(frozen=True)
class GeneratorMatrix:
    """Linearly independent rows over F_2, packed LSB-first like words."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.n < 1:
            raise ValueError("length must be at least 1")
        if not rows:
            raise ValueError("at least one row is required")
        top = 1 << self.n
        if any(not 0 <= r < top for r in rows):
            raise ValueError("row out of range for the stated length")
        if len(_rref(rows, self.n)[0]) != len(rows):
            raise ValueError("rows are linearly dependent")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "GeneratorMatrix":
        words = [Word.from_string(s) for s in lines]
        return cls(words[0].n, tuple(w.bits for w in words))

    def row_strings(self) -> list[str]:
        return [str(Word(self.n, r)) for r in self.rows]

    def codewords(self) -> Code:
        if self.k > MAX_ENUM_DIMENSION:
            raise CapExceeded(
                f"enumerating 2**{self.k} codewords; cap is k <= {MAX_ENUM_DIMENSION}")
        arr = span_words(self.rows, self.n)
        return Code(self.n, sorted(int(w) for w in arr), is_linear=True)


def generator_from_code(code: Code) -> GeneratorMatrix:
    """Row-reduced basis of a code that must form a linear subspace."""
    reduced, _ = _rref(code.words, code.n)
    if len(code) != 1 << len(reduced):
        raise ValueError("codewords do not form a linear subspace")
    return GeneratorMatrix(code.n, tuple(reduced))


def dual_code(g: GeneratorMatrix) -> GeneratorMatrix:
    """Generator of the orthogonal complement, via the null space."""
    rows = _null_space_rows(g.rows, g.n)
    if not rows:
        raise ValueError("the dual of the full space is the zero code")
    return GeneratorMatrix(g.n, tuple(rows))


def golay_code() -> GeneratorMatrix:
    """Cyclic [23,12] code: shifted copies of the fixed generator polynomial."""
    return GeneratorMatrix(
        GOLAY_LENGTH, tuple(GOLAY_GENERATOR_POLY << i for i in range(12)))


def weight_distribution(obj: GeneratorMatrix | Code) -> tuple[int, ...]:
    """Exact weight counts A_0..A_n; linear inputs enumerate 2^k words."""
    if isinstance(obj, Code):
        return obj.weight_distribution()
    if obj.k > MAX_ENUM_DIMENSION:
        raise CapExceeded(
            f"enumerating 2**{obj.k} codewords; cap is k <= {MAX_ENUM_DIMENSION}")
    counts = np.bincount(popcount(span_words(obj.rows, obj.n)), minlength=obj.n + 1)
    return tuple(int(c) for c in counts)


def is_projective(g: GeneratorMatrix) -> bool:
    """True iff the generator has no zero and no repeated column
    (equivalently, the dual minimum distance is at least 3)."""
    cols = []
    for c in range(g.n):
        v = 0
        for ri, row in enumerate(g.rows):
            if (row >> c) & 1:
                v |= 1 << ri
        cols.append(v)
    return 0 not in cols and len(set(cols)) == g.n


def coset_distribution_matrix(g: GeneratorMatrix, cap: int = COSET_SWEEP_CAP) -> np.ndarray:
    """Weight histogram of every coset of the code generated by ``g``.

    Sweeps all 2^n words in chunks, bucketing each by its syndrome under
    a dual basis of ``g``; one row per coset, columns are weights 0..n.
    """
    n = g.n
    if n > cap:
        raise CapExceeded(f"coset sweep enumerates 2**{n} words; cap is n <= {cap}")
    checks = _null_space_rows(g.rows, n)
    width = n + 1
    n_cosets = 1 << len(checks)
    hist = np.zeros(n_cosets * width, dtype=np.int64)
    for start in range(0, 1 << n, _SWEEP_CHUNK):
        stop = min(start + _SWEEP_CHUNK, 1 << n)
        words = np.arange(start, stop, dtype=np.uint64)
        weights = popcount(words)
        syndrome = np.zeros(stop - start, dtype=np.int64)
        for bit, h in enumerate(checks):
            syndrome |= (popcount(words & np.uint64(h)) & 1) << bit
        hist += np.bincount(syndrome * width + weights, minlength=n_cosets * width)
    return hist.reshape(n_cosets, width)


def distinct_row_count(matrix: np.ndarray) -> int:
    """Number of distinct rows, by exact integer comparison."""
    return int(np.unique(np.asarray(matrix), axis=0).shape[0])
