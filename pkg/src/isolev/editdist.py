"""Exact generalized Levenshtein distances over rational weights.

Every distance charges ``gamma`` per insertion or deletion and ``theta`` per
substitution, and every value is an exact :class:`fractions.Fraction`.  No
floating point enters any computation; the dynamic program runs on scaled
integers and converts back at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

import numpy as np

Rat = Fraction
RatLike = Union[Rat, int, str]

ORACLE_MAX_LEN = 7

# Below this many table cells the numpy call overhead loses to the plain loop.
_NUMPY_MIN_CELLS = 2048
_INT64_SAFE = 2**62


class InputTooLong(ValueError):
    """A word is longer than the exhaustive oracle can afford."""


class LengthMismatch(ValueError):
    """Hamming distance needs equal-length words."""


class DuplicateWords(ValueError):
    """A language (or matrix labelling) contains a repeated word."""


def as_rat(value: RatLike) -> Rat:
    """Coerce ints, ``p/q`` strings and Fractions to an exact rational."""
    if isinstance(value, float):
        raise TypeError("floats are not allowed in exact computations")
    return Fraction(value)


@dataclass(frozen=True)
class Weights:
    """Positive rational edit costs: ``gamma`` per indel, ``theta`` per substitution."""

    gamma: Rat
    theta: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", as_rat(self.gamma))
        object.__setattr__(self, "theta", as_rat(self.theta))
        if self.gamma <= 0 or self.theta <= 0:
            raise ValueError(f"weights must be positive, got {self.gamma}, {self.theta}")


DEFAULT_WEIGHTS = Weights(1, 1)


@dataclass(frozen=True)
class NormalizedWeights:
    """Weights rescaled to unit indel cost, substitution capped at 2.

    ``scale * lev(u, v, Weights(1, theta_prime)) == lev(u, v, original)`` for
    all word pairs: substitutions costing more than two indels are never used
    by an optimal script, so ``theta_prime`` can be capped.
    """

    theta_prime: Rat
    scale: Rat


def normalize(w: Weights) -> NormalizedWeights:
    return NormalizedWeights(theta_prime=min(w.theta / w.gamma, Rat(2)), scale=w.gamma)


def _scaled_weights(w: Weights) -> tuple[int, int, int]:
    """Return integer costs (g, t) and the common denominator they were scaled by."""
    den = math.lcm(w.gamma.denominator, w.theta.denominator)
    return int(w.gamma * den), int(w.theta * den), den


def _lev_ints_python(u: str, v: str, g: int, t: int) -> int:
    n = len(v)
    prev = [g * j for j in range(n + 1)]
    for i, cu in enumerate(u, 1):
        cur = [g * i]
        append = cur.append
        diag = prev[0]
        run = cur[0]
        for j, cv in enumerate(v, 1):
            up = prev[j]
            best = diag if cu == cv else diag + t
            alt = up + g
            if alt < best:
                best = alt
            alt = run + g
            if alt < best:
                best = alt
            append(best)
            run = best
            diag = up
        prev = cur
    return prev[n]


def _lev_ints_numpy(u: str, v: str, g: int, t: int) -> int:
    # Row update: the vertical/diagonal moves are elementwise, and insertions
    # along the row collapse into a running minimum of (cell - g*j).
    n = len(v)
    varr = np.array([ord(c) for c in v], dtype=np.int64)
    ramp = g * np.arange(n + 1, dtype=np.int64)
    prev = ramp.copy()
    cur = np.empty(n + 1, dtype=np.int64)
    for cu in u:
        sub = np.where(varr == ord(cu), prev[:-1], prev[:-1] + t)
        np.minimum(sub, prev[1:] + g, out=cur[1:])
        cur[0] = prev[0] + g
        cur -= ramp
        np.minimum.accumulate(cur, out=cur)
        cur += ramp
        prev, cur = cur, prev
    return int(prev[n])


def lev(u: str, v: str, w: Weights = DEFAULT_WEIGHTS) -> Rat:
    """Exact minimum cost of editing ``u`` into ``v``.

    Total function over arbitrary strings; the empty word is allowed.
    """
    g, t, den = _scaled_weights(w)
    if not u or not v:
        return Rat(g * (len(u) + len(v)), den)
    cells = (len(u) + 1) * (len(v) + 1)
    bound = (g + t) * (len(u) + len(v) + 2)
    if cells >= _NUMPY_MIN_CELLS and bound < _INT64_SAFE:
        raw = _lev_ints_numpy(u, v, g, t)
    else:
        raw = _lev_ints_python(u, v, g, t)
    return Rat(raw, den)


@lru_cache(maxsize=65536)
def _fewest_mismatches(u: str, v: str) -> tuple[int, ...]:
    """For each alignment size k, the fewest mismatched pairs over all
    monotone k-alignments, found by exhaustive enumeration."""
    m, n = len(u), len(v)
    out = [0]
    for k in range(1, min(m, n) + 1):
        best = k + 1
        for left in combinations(range(m), k):
            chars = [u[i] for i in left]
            for right in combinations(range(n), k):
                mis = sum(a != v[j] for a, j in zip(chars, right))
                if mis < best:
                    best = mis
        out.append(best)
    return tuple(out)


def lev_oracle(u: str, v: str, w: Weights = DEFAULT_WEIGHTS) -> Rat:
    """Brute-force reference distance, independent of the dynamic program.

    Minimises cost over every monotone alignment of kept/substituted symbols;
    exponential, hence the length cap.
    """
    if len(u) > ORACLE_MAX_LEN or len(v) > ORACLE_MAX_LEN:
        raise InputTooLong(f"oracle words are capped at length {ORACLE_MAX_LEN}")
    mism = _fewest_mismatches(u, v)
    total = len(u) + len(v)
    return min(w.gamma * (total - 2 * k) + w.theta * mis for k, mis in enumerate(mism))


def hamming(u: str, v: str) -> int:
    """Number of positions at which two equal-length words differ."""
    if len(u) != len(v):
        raise LengthMismatch(f"words have lengths {len(u)} and {len(v)}")
    return sum(a != b for a, b in zip(u, v))


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric matrix of exact pairwise distances for an ordered word list."""

    words: tuple[str, ...]
    entries: tuple[tuple[Rat, ...], ...]

    @property
    def n(self) -> int:
        return len(self.words)

    def entry(self, i: int, j: int) -> Rat:
        return self.entries[i][j]

    def validate(self) -> None:
        """Check the metric axioms exactly; raise ValueError on any violation."""
        n = self.n
        if len(set(self.words)) != n:
            raise DuplicateWords("matrix labels are not distinct")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("entries are not an n-by-n table")
        for i in range(n):
            if self.entries[i][i] != 0:
                raise ValueError(f"nonzero diagonal at {i}")
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"asymmetric entries at ({i}, {j})")
                if self.entries[i][j] <= 0:
                    raise ValueError(f"non-positive off-diagonal at ({i}, {j})")
        for i in range(n):
            row_i = self.entries[i]
            for j in range(i + 1, n):
                dij = row_i[j]
                row_j = self.entries[j]
                for k in range(n):
                    if dij > row_i[k] + row_j[k]:
                        raise ValueError(f"triangle inequality fails at ({i}, {j}, {k})")


def distance_matrix(words: Iterable[str], w: Weights = DEFAULT_WEIGHTS) -> DistanceMatrix:
    """Pairwise `lev` distances for distinct words, in the given order."""
    labels = tuple(words)
    if len(set(labels)) != len(labels):
        raise DuplicateWords("distance matrix needs distinct words")
    n = len(labels)
    rows = [[Rat(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = lev(labels[i], labels[j], w)
            rows[i][j] = d
            rows[j][i] = d
    matrix = DistanceMatrix(labels, tuple(tuple(row) for row in rows))
    matrix.validate()
    return matrix
