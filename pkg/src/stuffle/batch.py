"""Vectorized stuffle products over many word pairs of one shape.

Exhaustive checks over every pair of words with given lengths and bounded
letters involve hundreds of thousands of products, too many for the scalar
routines.  The functions here take a ``(B, n)`` array of first words and a
``(B, m)`` array of second words and compute all ``B`` products at once with
numpy, one row per pair.

Two independent routes are provided, mirroring the scalar ones:

* :func:`recursion_batch` unrolls the three-term defining recursion;
* :func:`oracle_batch` sums over merge patterns.

Both return a :class:`BatchResult`: the product of each row collected into
``(row, key, coeff)`` triples sorted by row then key, zero coefficients
removed.  A word is encoded as the integer ``sum_t w_t * base**t``; letters
lie in ``1..base-1`` so the encoding is injective across lengths.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import LinComb, pattern_fibers


@dataclass(frozen=True)
class BatchResult:
    rows: np.ndarray
    keys: np.ndarray
    coeffs: np.ndarray
    base: int
    nrows: int

    def __eq__(self, other) -> bool:
        if not isinstance(other, BatchResult):
            return NotImplemented
        return (
            self.base == other.base
            and self.nrows == other.nrows
            and np.array_equal(self.rows, other.rows)
            and np.array_equal(self.keys, other.keys)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def row(self, r: int) -> LinComb:
        lo, hi = np.searchsorted(self.rows, [r, r + 1])
        return LinComb(
            (decode(int(k), self.base), int(c)) for k, c in zip(self.keys[lo:hi], self.coeffs[lo:hi])
        )

    def lengths(self) -> np.ndarray:
        out = np.zeros_like(self.keys)
        k = self.keys.copy()
        while np.any(k):
            out += k > 0
            k //= self.base
        return out


def decode(key: int, base: int) -> tuple:
    w = []
    while key:
        key, d = divmod(key, base)
        w.append(d)
    return tuple(w)


def _check(U: np.ndarray, V: np.ndarray, base: int):
    U = np.asarray(U, dtype=np.int64)
    V = np.asarray(V, dtype=np.int64)
    if U.ndim != 2 or V.ndim != 2 or U.shape[0] != V.shape[0]:
        raise ValueError("expected arrays of shape (B, n) and (B, m)")
    if U.size and U.min() < 1 or V.size and V.min() < 1:
        raise ValueError("letters must be >= 1")
    top = (U.max(initial=0) if U.size else 0) + (V.max(initial=0) if V.size else 0)
    if top >= base:
        raise ValueError(f"base {base} too small for merged letters up to {top}")
    if (U.shape[1] + V.shape[1]) * np.log2(base) + np.log2(max(U.shape[0], 1)) >= 62:
        raise ValueError("words too long to encode in 64-bit keys")
    return U, V


def _collect(keys: list, signs: list, nrows: int, base: int) -> BatchResult:
    K = np.stack(keys, axis=1)  # (B, T)
    S = np.broadcast_to(np.asarray(signs, dtype=np.int64), K.shape)
    span = int(K.max()) + 1 if K.size else 1
    glob = (np.arange(nrows, dtype=np.int64)[:, None] * span + K).ravel()
    uniq, inv = np.unique(glob, return_inverse=True)
    coeff = np.bincount(inv, weights=S.ravel(), minlength=len(uniq)).astype(np.int64)
    keep = coeff != 0
    uniq, coeff = uniq[keep], coeff[keep]
    return BatchResult(uniq // span, uniq % span, coeff, base, nrows)


def recursion_batch(U, V, signed: bool = False, base: int = 16) -> BatchResult:
    """Products of row pairs by the recursion z_k u * z_l v = z_k(u * z_l v) + z_l(z_k u * v) +/- z_{k+l}(u * v)."""
    U, V = _check(U, V, base)
    B, n = U.shape
    m = V.shape[1]
    merge = -1 if signed else 1

    def word_key(cols: np.ndarray) -> np.ndarray:
        key = np.zeros(B, dtype=np.int64)
        for t in range(cols.shape[1] - 1, -1, -1):
            key = key * base + cols[:, t]
        return key

    memo: dict = {}

    def rec(i: int, j: int) -> list:
        # terms of U[:, i:] * V[:, j:] as (key, sign) pairs
        if (i, j) in memo:
            return memo[i, j]
        if i == n:
            out = [(word_key(V[:, j:]), 1)]
        elif j == m:
            out = [(word_key(U[:, i:]), 1)]
        else:
            a, b = U[:, i], V[:, j]
            out = [(a + base * k, s) for k, s in rec(i + 1, j)]
            out += [(b + base * k, s) for k, s in rec(i, j + 1)]
            out += [(a + b + base * k, merge * s) for k, s in rec(i + 1, j + 1)]
        memo[i, j] = out
        return out

    terms = rec(0, 0)
    return _collect([k for k, _ in terms], [s for _, s in terms], B, base)


def oracle_batch(U, V, signed: bool = False, base: int = 16) -> BatchResult:
    """Products of row pairs as sums over merge patterns."""
    U, V = _check(U, V, base)
    B, n = U.shape
    m = V.shape[1]
    X = np.concatenate([U, V], axis=1)
    keys, signs = [], []
    for i, fibers in pattern_fibers(n, m):
        key = np.zeros(B, dtype=np.int64)
        for f in reversed(fibers):
            key = key * base + X[:, list(f)].sum(axis=1)
        keys.append(key)
        signs.append(-1 if (signed and i % 2) else 1)
    return _collect(keys, signs, B, base)


def all_words(n: int, max_letter: int) -> np.ndarray:
    """Every word of length n with letters in 1..max_letter, one per row."""
    grids = np.meshgrid(*[np.arange(1, max_letter + 1)] * n, indexing="ij")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def all_pairs(n: int, m: int, max_letter: int, chunk: int = 8192):
    """Yield ``(U, V)`` chunks covering every pair of words of lengths n and m."""
    A, Bw = all_words(n, max_letter), all_words(m, max_letter)
    ia, ib = np.meshgrid(np.arange(len(A)), np.arange(len(Bw)), indexing="ij")
    ia, ib = ia.ravel(), ib.ravel()
    for lo in range(0, len(ia), chunk):
        yield A[ia[lo : lo + chunk]], Bw[ib[lo : lo + chunk]]
