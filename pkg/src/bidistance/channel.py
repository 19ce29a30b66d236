"""Asymmetric-channel model, exact-likelihood decoding, and error probability.

Crossover probabilities are exact rationals parsed from decimal strings,
so likelihood comparisons (and therefore decoder ties) are decided
exactly rather than by float rounding.  The supported regime is
0 < p <= q < 1/2, where p is the 0->1 and q the 1->0 flip probability.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from ._bitops import popcount
from .core import CapExceeded, Code, ParseError, Word, dir_distances

DEFAULT_EXHAUSTIVE_CAP = 24

#: Monte Carlo draws happen in fixed batches of this many trials, which is
#: part of the reproducibility contract (see monte_carlo_error_probability).
MC_CHUNK = 1 << 15

#: float log-likelihood gaps below this are re-decided exactly
_NEAR_TIE = 1e-6

_DECIMAL_RE = re.compile(r"^\d+(\.\d+)?$")


class RegimeError(ValueError):
    """Channel parameters outside the supported regime 0 < p <= q < 1/2."""


def parse_probability(text: str) -> Fraction:
    """Exact rational from a plain decimal literal.

    Scientific notation and signs are rejected: the written digits alone
    define the value used in all downstream exact arithmetic.
    """
    text = text.strip()
    if not _DECIMAL_RE.match(text):
        raise ParseError(f"not a plain decimal probability: {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class ChannelParams:
    """Crossover probabilities: p flips 0 to 1, q flips 1 to 0."""

    p: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.p, Fraction) or not isinstance(self.q, Fraction):
            raise TypeError("p and q must be Fractions; see from_decimals()")
        if not 0 < self.p <= self.q < Fraction(1, 2):
            raise RegimeError(f"need 0 < p <= q < 1/2, got p={self.p}, q={self.q}")

    @classmethod
    def from_decimals(cls, p: str, q: str) -> "ChannelParams":
        return cls(parse_probability(p), parse_probability(q))

    @cached_property
    def gamma(self) -> float:
        """The exponent g solving (q/(1-p))**g = p/(1-q); 1 exactly iff p = q."""
        num = self.p / (1 - self.q)
        den = self.q / (1 - self.p)
        if num == den:
            return 1.0
        return ((math.log(num.numerator) - math.log(num.denominator))
                / (math.log(den.numerator) - math.log(den.denominator)))

    @cached_property
    def fp(self) -> float:
        return float(self.p)

    @cached_property
    def fq(self) -> float:
        return float(self.q)


class _ScoreTable:
    """Integer likelihood scores over the common denominator (dp*dq)**n.

    score(w, a, b) / denominator equals the probability of receiving a
    word at flip offsets (a 1->0, b 0->1) from a transmitted word of
    weight w, so integer score comparison is exact likelihood comparison.
    """

    def __init__(self, n: int, params: ChannelParams):
        self.n = n
        pn, pd = params.p.numerator, params.p.denominator
        qn, qd = params.q.numerator, params.q.denominator
        rng = range(n + 1)
        self._q_flip = [qn ** i for i in rng]
        self._q_keep = [(qd - qn) ** i for i in rng]
        self._p_flip = [pn ** i for i in rng]
        self._p_keep = [(pd - pn) ** i for i in rng]
        self._pd_pow = [pd ** i for i in rng]
        self._qd_pow = [qd ** i for i in rng]
        self.denominator = (pd * qd) ** n
        self._memo: dict[tuple[int, int, int], int] = {}

    def score(self, w: int, a: int, b: int) -> int:
        key = (w, a, b)
        s = self._memo.get(key)
        if s is None:
            s = (self._q_flip[a] * self._q_keep[w - a]
                 * self._p_flip[b] * self._p_keep[self.n - w - b]
                 * self._pd_pow[w] * self._qd_pow[self.n - w])
            self._memo[key] = s
        return s


@lru_cache(maxsize=64)
def _score_table(n: int, params: ChannelParams) -> _ScoreTable:
    return _ScoreTable(n, params)


def likelihood(y: Word, x: Word, params: ChannelParams) -> Fraction:
    """Exact probability of receiving y given that x was transmitted."""
    flips = dir_distances(x, y)
    w = x.weight
    return (params.q ** flips.d10 * (1 - params.q) ** (w - flips.d10)
            * params.p ** flips.d01 * (1 - params.p) ** (x.n - w - flips.d01))


def llr(x: Word, x_alt: Word, y: Word, params: ChannelParams) -> float:
    """Log likelihood ratio log(Pr(y|x) / Pr(y|x_alt)).

    The sign is decided by exact rational comparison; the magnitude is an
    informational float.  Zero is returned only on an exact tie.
    """
    lx = likelihood(y, x, params)
    la = likelihood(y, x_alt, params)
    if lx == la:
        return 0.0
    val = (math.log(lx.numerator) - math.log(lx.denominator)
           - math.log(la.numerator) + math.log(la.denominator))
    want = 1.0 if lx > la else -1.0
    if val == 0.0 or (val > 0.0) != (lx > la):
        return math.copysign(math.ulp(0.0), want)
    return val


@dataclass(frozen=True)
class DecodeResult:
    """The unique most-likely codeword, or a failure marker on exact ties."""

    word: Word | None

    @property
    def is_failure(self) -> bool:
        return self.word is None


FAILURE = DecodeResult(None)


def mld_decode(code: Code, y: Word, params: ChannelParams) -> DecodeResult:
    """Decode y to the unique likelihood maximizer; any exact tie fails."""
    if code.n != y.n:
        raise ValueError(f"length mismatch: code n={code.n}, word n={y.n}")
    table = _score_table(code.n, params)
    yb = y.bits
    best = -1
    arg = 0
    tie = False
    for idx, xb in enumerate(code.words):
        s = table.score(xb.bit_count(), (xb & ~yb).bit_count(), (yb & ~xb).bit_count())
        if s > best:
            best, arg, tie = s, idx, False
        elif s == best:
            tie = True
    return FAILURE if tie else DecodeResult(code.word(arg))


def exact_error_probability(code: Code, params: ChannelParams,
                            cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Fraction:
    """Average decoder error probability by exhaustive received-word sweep.

    Sums, over all 2^n received words, the exact probability mass decoded
    back to its transmitted word; failures (exact ties) count as errors
    for every transmitted word.  Guarded by the length cap.
    """
    if code.n > cap:
        raise CapExceeded(
            f"exhaustive sweep needs 2**{code.n} received words; cap is n <= {cap}")
    table = _score_table(code.n, params)
    pairs = [(xb, xb.bit_count()) for xb in code.words]
    score = table.score
    success = 0
    for y in range(1 << code.n):
        best = -1
        tie = False
        for xb, w in pairs:
            s = score(w, (xb & ~y).bit_count(), (y & ~xb).bit_count())
            if s > best:
                best, tie = s, False
            elif s == best:
                tie = True
        if not tie:
            success += best
    return 1 - Fraction(success, len(pairs) * table.denominator)


def monte_carlo_error_probability(code: Code, params: ChannelParams,
                                  trials: int, seed: int) -> tuple[float, float]:
    """Estimate the decoder error rate by simulation.

    Returns (estimate, standard_error) with the binomial standard error
    sqrt(e(1-e)/trials).

    Reproducibility contract: the generator is numpy's PCG64 via
    ``numpy.random.default_rng(seed)``.  Transmitted codeword indices for
    all trials are drawn first with a single ``integers`` call; channel
    flips are then drawn in fixed batches of MC_CHUNK trials as uniform
    (batch, n) matrices compared per-bit against q (on 1s) or p (on 0s).
    Decoding matches mld_decode exactly: float scoring is used for speed,
    and any case within a small gap of the maximum is re-decided with
    exact rational scores.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    n = code.n
    if n > 64:
        raise ValueError("the sampler supports lengths up to 64")
    rng = np.random.default_rng(seed)
    arr = np.array(code.words, dtype=np.uint64)
    wts = popcount(arr)
    shifts = np.arange(n, dtype=np.uint64)
    bit_rows = ((arr[:, None] >> shifts) & np.uint64(1)).astype(bool)
    flip_prob = np.where(bit_rows, params.fq, params.fp)
    lanes = np.uint64(1) << shifts
    tx = rng.integers(0, len(arr), size=trials)
    errors = 0
    for start in range(0, trials, MC_CHUNK):
        idx = tx[start:start + MC_CHUNK]
        u = rng.random((len(idx), n))
        flips = u < flip_prob[idx]
        noise = np.bitwise_or.reduce(np.where(flips, lanes, np.uint64(0)), axis=1)
        received = arr[idx] ^ noise
        errors += _decode_errors(code, params, arr, wts, received, idx)
    estimate = errors / trials
    stderr = math.sqrt(estimate * (1.0 - estimate) / trials)
    return estimate, stderr


def _decode_errors(code: Code, params: ChannelParams, arr: np.ndarray,
                   wts: np.ndarray, received: np.ndarray, tx_idx: np.ndarray) -> int:
    """Count trials whose decode differs from the transmitted word."""
    block = max(1, 8_000_000 // len(arr))
    if len(received) > block:
        return sum(_decode_errors(code, params, arr, wts,
                                  received[s:s + block], tx_idx[s:s + block])
                   for s in range(0, len(received), block))
    lq, lcq = math.log(params.fq), math.log1p(-params.fq)
    lp, lcp = math.log(params.fp), math.log1p(-params.fp)
    n = code.n
    scores = np.empty((len(received), len(arr)))
    for col, (xb, w) in enumerate(zip(arr, wts)):
        a = popcount(xb & ~received)
        b = popcount(received & ~xb)
        scores[:, col] = a * lq + (int(w) - a) * lcq + b * lp + (n - int(w) - b) * lcp
    winner = scores.argmax(axis=1)
    wrong = winner != tx_idx
    if len(arr) > 1:
        top2 = np.partition(scores, len(arr) - 2, axis=1)[:, -2:]
        near = (top2[:, 1] - top2[:, 0]) < _NEAR_TIE
        for t in np.nonzero(near)[0]:
            res = mld_decode(code, Word(n, int(received[t])), params)
            wrong[t] = res.is_failure or res.word.bits != int(arr[tx_idx[t]])
    return int(wrong.sum())
