"""Words over the alphabet {z_k}, integer linear combinations of words, and
the two stuffle products.

A word z_{k_1} z_{k_2} ... z_{k_n} is stored as the tuple ``(k_1, ..., k_n)``;
the empty tuple is the unit word 1.  A :class:`LinComb` is a sparse map from
words to nonzero Python integers.

The harmonic product ``*`` and its signed variant (used for zeta-star values)
are computed by the defining three-term recursion, memoized on word pairs.
:func:`oracle_product` recomputes the same products by enumerating merge
patterns (surjections increasing on both blocks) and shares no code with the
recursion.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Word = tuple  # tuple[int, ...]

EMPTY: Word = ()


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def word(*letters: int) -> Word:
    """Build a validated word from letter indices: ``word(2, 1, 1)`` is z2z1z1."""
    w = tuple(int(k) for k in letters)
    check_word(w)
    return w


def check_word(w) -> None:
    if not isinstance(w, tuple):
        raise TypeError(f"a word is a tuple of positive ints, got {type(w).__name__}")
    for k in w:
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise DomainError(f"letter indices must be integers >= 1, got {k!r} in {w!r}")


def weight(w: Word) -> int:
    return sum(w)


def length(w: Word) -> int:
    return len(w)


def sort_key(w: Word):
    """Canonical term order: weight, then longer words first, then letters."""
    return (sum(w), -len(w), w)


class LinComb:
    """Finite formal sum of words with integer coefficients.

    Instances are immutable.  Zero coefficients are dropped on construction,
    so two combinations are equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                if not isinstance(w, tuple):
                    w = tuple(w)
                acc[w] = acc.get(w, 0) + int(c)
        self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LinComb":
        # trusted constructor: terms already pruned
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def of(cls, w: Word, coeff: int = 1) -> "LinComb":
        check_word(w)
        return cls._raw({w: coeff} if coeff else {})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LinComb":
        return cls._raw({EMPTY: 1})

    # -- container protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words())

    def __contains__(self, w) -> bool:
        return w in self._terms

    def __getitem__(self, w: Word) -> int:
        return self._terms.get(w, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, w: Word) -> int:
        return self._terms.get(w, 0)

    def words(self) -> list:
        return sorted(self._terms, key=sort_key)

    def items(self) -> list:
        """(word, coefficient) pairs in canonical order."""
        return [(w, self._terms[w]) for w in self.words()]

    def as_dict(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def weights(self) -> set:
        return {sum(w) for w in self._terms}

    def weight(self):
        """Common weight of all terms, or None if empty or inhomogeneous."""
        ws = self.weights()
        return ws.pop() if len(ws) == 1 else None

    # -- arithmetic ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, tuple):
            return self._terms == {other: 1}
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == ({EMPTY: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "LinComb":
        other = as_lincomb(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return LinComb._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LinComb":
        return LinComb._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "LinComb":
        return self + (-as_lincomb(other))

    def __rsub__(self, other) -> "LinComb":
        return as_lincomb(other) + (-self)

    def __mul__(self, scalar: int) -> "LinComb":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return LinComb.zero()
        return LinComb._raw({w: c * scalar for w, c in self._terms.items()})

    __rmul__ = __mul__

    def concat(self, other) -> "LinComb":
        """Concatenation product, extended bilinearly."""
        other = as_lincomb(other)
        out: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                out[w] = out.get(w, 0) + a * b
        return LinComb._raw({w: c for w, c in out.items() if c})

    __matmul__ = concat

    def __rmatmul__(self, other) -> "LinComb":
        return as_lincomb(other).concat(self)

    def map_words(self, f) -> "LinComb":
        return LinComb((f(w), c) for w, c in self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        return f"LinComb({to_text(self)})"


def as_lincomb(x) -> LinComb:
    """Coerce a word, an integer scalar, or a LinComb to a LinComb."""
    if isinstance(x, LinComb):
        return x
    if isinstance(x, tuple):
        return LinComb.of(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return LinComb._raw({EMPTY: x} if x else {})
    raise TypeError(f"cannot interpret {type(x).__name__} as a linear combination of words")


def word_power(p: int, e: int) -> LinComb:
    """z_p^e, with z_p^0 = 1 and z_p^e = 0 for negative e."""
    if e < 0:
        return LinComb.zero()
    return LinComb.of((p,) * e)


def to_text(c: LinComb) -> str:
    parts = []
    for w, k in c.items():
        body = "".join(f"z{x}" for x in w)
        if not body:
            term = str(abs(k))
        elif abs(k) == 1:
            term = body
        else:
            term = f"{abs(k)} {body}"
        if not parts:
            parts.append(term if k > 0 else f"-{term}")
        else:
            parts.append(("+ " if k > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


# -- definitional products -------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _stuffle_words(u: Word, v: Word, sign: int) -> dict:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    k, l = u[0], v[0]
    out: dict = {}
    for head, sub, s in (
        (k, _stuffle_words(u[1:], v, sign), 1),
        (l, _stuffle_words(u, v[1:], sign), 1),
        (k + l, _stuffle_words(u[1:], v[1:], sign), sign),
    ):
        for w, c in sub.items():
            key = (head,) + w
            out[key] = out.get(key, 0) + s * c
    return {w: c for w, c in out.items() if c}


def _bilinear(a, b, sign: int) -> LinComb:
    a, b = as_lincomb(a), as_lincomb(b)
    for x in (a, b):
        for w in x._terms:
            check_word(w)
    out: dict = {}
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            for w, c in _stuffle_words(u, v, sign).items():
                out[w] = out.get(w, 0) + cu * cv * c
    return LinComb._raw({w: c for w, c in out.items() if c})


def stuffle(a, b) -> LinComb:
    """Harmonic product: z_k u * z_l v = z_k(u * z_l v) + z_l(z_k u * v) + z_{k+l}(u * v).

    >>> stuffle((2,), (3,))
    LinComb(z2z3 + z3z2 + z5)
    """
    return _bilinear(a, b, 1)


def stuffle_star(a, b) -> LinComb:
    """Signed harmonic product, as :func:`stuffle` but with ``-z_{k+l}(u * v)``."""
    return _bilinear(a, b, -1)


def product(a, b, signed: bool = False) -> LinComb:
    return _bilinear(a, b, -1 if signed else 1)


# -- merge patterns --------------------------------------------------------


class SurjectionPattern(NamedTuple):
    """A surjection {1..n+m} -> {1..n+m-i}, increasing on {1..n} and {n+1..n+m}.

    ``assignment[t]`` is the image of ``t + 1``; images are 1-based.
    """

    n: int
    m: int
    i: int
    assignment: tuple

    def fibers(self) -> list:
        """Preimage of each target slot, as sorted tuples of 1-based sources."""
        out = [[] for _ in range(self.n + self.m - self.i)]
        for src, dst in enumerate(self.assignment, start=1):
            out[dst - 1].append(src)
        return [tuple(f) for f in out]

    def is_valid(self) -> bool:
        n, m, i, a = self.n, self.m, self.i, self.assignment
        if len(a) != n + m or not 0 <= i <= min(n, m):
            return False
        first, second = a[:n], a[n:]
        if any(x >= y for x, y in zip(first, first[1:])):
            return False
        if any(x >= y for x, y in zip(second, second[1:])):
            return False
        if set(a) != set(range(1, n + m - i + 1)):
            return False
        fibers = self.fibers()
        doubles = [f for f in fibers if len(f) == 2]
        return len(doubles) == i and all(f[0] <= n < f[1] for f in doubles)


def pattern_count(n: int, m: int, i: int) -> int:
    """|S_{n,m,i}| = C(n+m-i, i) * C(n+m-2i, n-i)."""
    if not 0 <= i <= min(n, m):
        return 0
    return comb(n + m - i, i) * comb(n + m - 2 * i, n - i)


def enumerate_patterns(n: int, m: int, i: int) -> list:
    """All merge patterns with ``i`` coincidences.

    Patterns are built directly: choose which ``i`` letters of each word merge
    (order-compatibly, so the j-th chosen letter of the first word merges with
    the j-th chosen letter of the second), then interleave the resulting
    segments.
    """
    if min(n, m, i) < 0 or i > min(n, m):
        raise DomainError(f"need 0 <= i <= min(n, m); got n={n}, m={m}, i={i}")
    out = []
    total = n + m - i
    for left in itertools.combinations(range(n), i):
        for right in itertools.combinations(range(m), i):
            # Between consecutive merge points the unmerged letters of the two
            # words form independent gaps; each gap is interleaved freely.
            lcuts = (-1,) + left + (n,)
            rcuts = (-1,) + right + (m,)
            gaps = [
                (lcuts[g + 1] - lcuts[g] - 1, rcuts[g + 1] - rcuts[g] - 1)
                for g in range(i + 1)
            ]
            choices = [
                list(itertools.combinations(range(a + b), a)) for a, b in gaps
            ]
            for picks in itertools.product(*choices):
                assignment = [0] * (n + m)
                slot = 1
                li, ri = 0, 0
                for g, ((a, b), chosen) in enumerate(zip(gaps, picks)):
                    chosen = set(chosen)
                    for pos in range(a + b):
                        if pos in chosen:
                            assignment[li] = slot
                            li += 1
                        else:
                            assignment[n + ri] = slot
                            ri += 1
                        slot += 1
                    if g < i:
                        assignment[li] = slot
                        assignment[n + ri] = slot
                        li += 1
                        ri += 1
                        slot += 1
                assert slot == total + 1
                out.append(SurjectionPattern(n, m, i, tuple(assignment)))
    return out


@lru_cache(maxsize=256)
def pattern_fibers(n: int, m: int) -> tuple:
    """``(i, fibers)`` for every pattern of shape (n, m), fibers 0-based."""
    out = []
    for i in range(min(n, m) + 1):
        for pat in enumerate_patterns(n, m, i):
            out.append((i, tuple(tuple(s - 1 for s in f) for f in pat.fibers())))
    return tuple(out)


def oracle_product(u: Word, v: Word, signed: bool = False) -> LinComb:
    """Stuffle product computed as a sum over all merge patterns.

    A slot hit by one letter z_k contributes z_k; a slot hit by z_k and z_l
    contributes z_{k+l}, negated when ``signed`` is true.
    """
    check_word(u)
    check_word(v)
    letters = u + v
    out: dict = {}
    for i, fibers in pattern_fibers(len(u), len(v)):
        w = tuple(sum(letters[s] for s in f) for f in fibers)
        out[w] = out.get(w, 0) + (-1 if (signed and i % 2) else 1)
    return LinComb(out)


def words_up_to(max_len: int, max_letter: int, min_len: int = 0) -> Iterator[Word]:
    """All words with length in [min_len, max_len] and letters in 1..max_letter."""
    for n in range(min_len, max_len + 1):
        yield from itertools.product(range(1, max_letter + 1), repeat=n)


def compositions(total: int) -> Iterator[Word]:
    """All words of the given weight."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest
