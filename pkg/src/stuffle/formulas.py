"""Expansion formulas for stuffle products of words built from strings of z_p.

Every function here returns a :class:`~stuffle.algebra.LinComb` and is an
executable transcription of a closed or recursive formula.  None of them
call the definitional recursion in :mod:`stuffle.algebra`; the test-suite
compares each against it.

Conventions used throughout: ``z_p^0 = 1`` and ``z_p^e = 0`` for ``e < 0``,
so a summand containing ``z_p^{i-1}`` vanishes at ``i = 0``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, NamedTuple, Optional

from .algebra import DomainError, LinComb, Word, as_lincomb, check_word, sort_key, word_power


class GWordSet(NamedTuple):
    """Words with ``a`` letters z_p and ``b`` letters z_{2p}."""

    p: int
    a: int
    b: int

    def words(self) -> list:
        return enumerate_G(self.p, self.a, self.b)

    def __len__(self) -> int:
        return comb(self.a + self.b, self.b)


def enumerate_G(p: int, a: int, b: int) -> list:
    """All arrangements of ``a`` copies of z_p and ``b`` copies of z_{2p}."""
    if p < 1 or a < 0 or b < 0:
        raise DomainError(f"need p >= 1 and a, b >= 0; got p={p}, a={a}, b={b}")
    n = a + b
    out = []
    for doubles in itertools.combinations(range(n), b):
        w = [p] * n
        for t in doubles:
            w[t] = 2 * p
        out.append(tuple(w))
    return sorted(out, key=sort_key)


@lru_cache(maxsize=4096)
def _simple_closed(p: int, m: int, n: int, signed: bool) -> LinComb:
    terms = {}
    for i in range(min(m, n) + 1):
        c = comb(m + n - 2 * i, m - i)
        if signed and i % 2:
            c = -c
        for w in enumerate_G(p, m + n - 2 * i, i):
            terms[w] = c
    return LinComb(terms)


def simple_product_closed(p: int, m: int, n: int, signed: bool = False) -> LinComb:
    """z_p^m * z_p^n by the binomial closed form.

    The coefficient of a word with ``i`` letters z_{2p} and ``m + n - 2i``
    letters z_p is ``C(m+n-2i, m-i)``, times ``(-1)^i`` for the signed product.
    """
    if p < 1 or m < 0 or n < 0:
        raise DomainError(f"need p >= 1 and m, n >= 0; got p={p}, m={m}, n={n}")
    return _simple_closed(p, m, n, bool(signed))


def _sp(p: int, m: int, n: int, signed: bool) -> LinComb:
    # simple product with the z_p^{-1} = 0 convention
    if m < 0 or n < 0:
        return LinComb.zero()
    return simple_product_closed(p, m, n, signed)


def _z(*letters: int) -> LinComb:
    return LinComb.of(tuple(letters))


def recursive_expand(
    w1: Word,
    w2: Word,
    j: int,
    signed: bool = False,
    product: Optional[Callable[[Word, Word], LinComb]] = None,
) -> LinComb:
    """Expand ``w1 * w2`` around the j-th letter of ``w1`` (1-based).

    Writing ``w1 = A z_{k_j} C`` and ``w2 = l_1 ... l_n``::

        w1 * w2 = sum_{i=0}^{n} [ (A * l_1..l_i) z_{k_j}
                                 +/- (A * l_1..l_{i-1}) z_{k_j + l_i} ]
                                (C * l_{i+1}..l_n)

    The merge term is absent at ``i = 0`` and carries a minus sign for the
    signed product.  Inner products use ``product`` (defaulting to the
    definitional recursion).
    """
    check_word(w1)
    check_word(w2)
    if not 1 <= j <= len(w1):
        raise DomainError(f"position j={j} outside 1..{len(w1)}")
    if product is None:
        from .algebra import product as _definitional

        def product(u, v):
            return _definitional(u, v, signed)

    head, letter, tail = w1[: j - 1], w1[j - 1], w1[j:]
    sign = -1 if signed else 1
    out = LinComb.zero()
    for i in range(len(w2) + 1):
        left = product(head, w2[:i]) @ _z(letter)
        if i >= 1:
            left = left + sign * (product(head, w2[: i - 1]) @ _z(letter + w2[i - 1]))
        out = out + left @ product(tail, w2[i:])
    return out


def cor_1_1_expand(k: int, l: int, p: int, m: int, n: int, signed: bool = False) -> LinComb:
    """z_k z_p^m * z_l z_p^n in terms of simple products z_p^a * z_p^b."""
    s = -1 if signed else 1
    out = LinComb.zero()
    for i in range(1, m + 1):
        inner = word_power(p, i) @ _z(l) + s * (word_power(p, i - 1) @ _z(p + l))
        out = out + _z(k) @ inner @ _sp(p, m - i, n, signed)
    for i in range(1, n + 1):
        inner = word_power(p, i) @ _z(k) + s * (word_power(p, i - 1) @ _z(p + k))
        out = out + _z(l) @ inner @ _sp(p, n - i, m, signed)
    head = _z(k, l) + _z(l, k) + s * _z(k + l)
    return out + head @ _sp(p, m, n, signed)


def _fork(p: int, lead: int, other: int, i: int, s: int) -> LinComb:
    # z_p^i z_other +/- z_p^{i-1} z_{p+other}, prefixed by z_lead when lead > 0
    body = word_power(p, i) @ _z(other) + s * (word_power(p, i - 1) @ _z(p + other))
    return _z(lead) @ body if lead else body


def _bracket(p: int, a: int, b: int, letter: int, s: int, signed: bool) -> LinComb:
    # (z_p^a * z_p^b) z_letter +/- (z_p^{a-1} * z_p^b) z_{p+letter}
    return _sp(p, a, b, signed) @ _z(letter) + s * (_sp(p, a - 1, b, signed) @ _z(p + letter))


def cor_1_2_expand(
    k: int, l1: int, l2: int, p: int, m: int, n1: int, n2: int, signed: bool = False
) -> LinComb:
    """z_k z_p^m * z_{l1} z_p^{n1} z_{l2} z_p^{n2} as a five-group sum."""
    s = -1 if signed else 1
    out = LinComb.zero()
    # z_k stays in front
    for i2 in range(m + 1):
        tail = _sp(p, m - i2, n2, signed)
        for i1 in range(i2 + 1):
            out = out + (
                _fork(p, k, l1, i1, s) @ _bracket(p, i2 - i1, n1, l2, s, signed) @ tail
            )
    # z_{l1} in front, z_k lands inside the first string of z_p
    for i1 in range(n1 + 1):
        for i2 in range(m + 1):
            out = out + (
                _fork(p, l1, k, i1, s)
                @ _bracket(p, i2, n1 - i1, l2, s, signed)
                @ _sp(p, m - i2, n2, signed)
            )
    prefix = _z(l1) @ word_power(p, n1)
    # z_k merges with z_{l2}
    out = out + s * (prefix @ _z(k + l2) @ _sp(p, m, n2, signed))
    # z_k lands inside the second string of z_p
    for i in range(n2 + 1):
        out = out + prefix @ _z(l2) @ _fork(p, 0, k, i, s) @ _sp(p, m, n2 - i, signed)
    # z_k merges with z_{l1}
    for i in range(m + 1):
        out = out + s * (
            _z(k + l1) @ _bracket(p, i, n1, l2, s, signed) @ _sp(p, m - i, n2, signed)
        )
    return out


def lemma_0_2_expand(p: int, l: int, m: int, n1: int, n2: int, signed: bool = False) -> LinComb:
    """z_p^m * z_p^{n1} z_l z_p^{n2}."""
    s = -1 if signed else 1
    out = LinComb.zero()
    for i in range(m + 1):
        out = out + _bracket(p, i, n1, l, s, signed) @ _sp(p, m - i, n2, signed)
    return out


def lemma_0_22_expand(
    p: int, l1: int, l2: int, m: int, n1: int, n2: int, signed: bool = False
) -> LinComb:
    """z_p^m * z_{l1} z_p^{n1} z_{l2} z_p^{n2}, summed over 0 <= i1 <= i2 <= m."""
    s = -1 if signed else 1
    out = LinComb.zero()
    for i2 in range(m + 1):
        tail = _sp(p, m - i2, n2, signed)
        for i1 in range(i2 + 1):
            out = out + (
                _fork(p, 0, l1, i1, s) @ _bracket(p, i2 - i1, n1, l2, s, signed) @ tail
            )
    return out


# -- general products --------------------------------------------------------


@dataclass(frozen=True)
class GeneralProductSpec:
    """z_{k_1} z_p^{m_1} ... z_{k_r} z_p^{m_r}  (*)  z_{l_1} z_p^{n_1} ... z_{l_s} z_p^{n_s}.

    ``left`` and ``right`` are sequences of (letter, power) pairs.
    """

    p: int
    left: tuple
    right: tuple
    signed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(tuple(b) for b in self.left))
        object.__setattr__(self, "right", tuple(tuple(b) for b in self.right))
        if self.p < 1:
            raise DomainError(f"p must be >= 1, got {self.p}")
        for letter, power in self.left + self.right:
            if letter < 1 or power < 0:
                raise DomainError(f"bad block ({letter}, {power}): need letter >= 1, power >= 0")

    @staticmethod
    def _expand(p: int, blocks: tuple) -> Word:
        w: list = []
        for letter, power in blocks:
            w.append(letter)
            w.extend([p] * power)
        return tuple(w)

    def left_word(self) -> Word:
        return self._expand(self.p, self.left)

    def right_word(self) -> Word:
        return self._expand(self.p, self.right)


@dataclass
class ReductionStats:
    """Instrumentation for :func:`reduce_general`."""

    simple_calls: int = 0
    expansions: int = 0
    positions: list = field(default_factory=list)


def reduce_general(spec: GeneralProductSpec, stats: Optional[ReductionStats] = None) -> LinComb:
    """Expand a general product down to simple products z_p^a * z_p^b.

    Each step applies :func:`recursive_expand` at the first letter of the left
    factor that is not z_p: j = 1 peels z_{k_1}, and later steps use
    j = m_1 + 1 on factors of the form z_p^{m_1} z_{k_2} ....  When the left
    factor is a pure power of z_p the factors are swapped (the product is
    commutative); when both are pure powers the closed form is used.  Each
    step strictly lowers the total number of non-z_p letters in the factors,
    so the recursion terminates.
    """
    if stats is None:
        stats = ReductionStats()
    p, signed = spec.p, spec.signed
    memo: dict = {}

    def first_marker(w: Word) -> int:
        for t, letter in enumerate(w):
            if letter != p:
                return t
        return -1

    def reduce(u: Word, v: Word) -> LinComb:
        key = (u, v) if (u, v) <= (v, u) else (v, u)
        if key in memo:
            return memo[key]
        t = first_marker(u)
        if t < 0:
            if first_marker(v) < 0:
                stats.simple_calls += 1
                result = simple_product_closed(p, len(u), len(v), signed)
            else:
                result = reduce(v, u)
        else:
            stats.expansions += 1
            stats.positions.append(t + 1)
            result = recursive_expand(u, v, t + 1, signed, product=reduce)
        memo[key] = result
        return result

    return reduce(spec.left_word(), spec.right_word())


# -- zeta-index form ---------------------------------------------------------


class AdmissibilityError(DomainError):
    """An index (or word) does not start with an entry >= 2."""


def zeta_stuffle_formula_1_1(
    k: int, l: int, p: int, m: int, n: int, star: bool = False
) -> LinComb:
    """zeta(k, {p}^m) zeta(l, {p}^n) as a combination of zeta indices.

    Returns the index combination (indices stored like words) of the
    explicit binomial formula; with ``star=True`` the zeta-star version,
    whose terms carry ``(-1)^j`` and a minus sign on each merged entry.
    """
    if k < 2 or l < 2:
        raise AdmissibilityError(f"need k, l >= 2 for convergence; got k={k}, l={l}")
    if p < 1 or m < 0 or n < 0:
        raise DomainError(f"need p >= 1 and m, n >= 0; got p={p}, m={m}, n={n}")
    s = -1 if star else 1
    P = (p,)
    terms: dict = {}

    def emit(idx: tuple, c: int) -> None:
        if idx[0] < 2:
            raise AdmissibilityError(f"emitted non-admissible index {idx}")
        terms[idx] = terms.get(idx, 0) + c

    for i in range(1, m + 1):
        for j in range(min(m - i, n) + 1):
            size = m + n - i - 2 * j
            c = comb(size, n - j) * (s**j)
            for kk in enumerate_G(p, size, j):
                emit((k,) + P * i + (l,) + kk, c)
                emit((k,) + P * (i - 1) + (p + l,) + kk, s * c)
    for i in range(1, n + 1):
        for j in range(min(m, n - i) + 1):
            size = m + n - i - 2 * j
            c = comb(size, m - j) * (s**j)
            for kk in enumerate_G(p, size, j):
                emit((l,) + P * i + (k,) + kk, c)
                emit((l,) + P * (i - 1) + (p + k,) + kk, s * c)
    for j in range(min(m, n) + 1):
        size = m + n - 2 * j
        c = comb(size, m - j) * (s**j)
        for kk in enumerate_G(p, size, j):
            emit((k, l) + kk, c)
            emit((l, k) + kk, c)
            emit((k + l,) + kk, s * c)
    return LinComb(terms)


def index_image(c) -> LinComb:
    """The zeta-index combination of an admissible word combination.

    Words and indices share a representation, so this only checks that
    every word with a nonzero coefficient is admissible.
    """
    c = as_lincomb(c)
    bad = [w for w in c.words() if w and w[0] < 2]
    if bad:
        raise AdmissibilityError(f"non-admissible words: {bad}")
    return c
