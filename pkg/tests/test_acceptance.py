"""Acceptance criteria.  Each test prints one PASS/FAIL line in the summary.

Run alone with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""
import itertools
import time

import numpy as np
import pytest

import stuffle.algebra as algebra
from stuffle.algebra import oracle_product, product
from stuffle.batch import all_pairs, oracle_batch, recursion_batch
from stuffle.formulas import (
    GeneralProductSpec,
    ReductionStats,
    cor_1_1_expand,
    cor_1_2_expand,
    index_image,
    lemma_0_2_expand,
    lemma_0_22_expand,
    recursive_expand,
    reduce_general,
    simple_product_closed,
    zeta_stuffle_formula_1_1,
)
from stuffle.numeval import EvalConfig, apply_Z

SIGNS = (False, True)
M = 20_000
REL_TOL = 1e-3
CFG = EvalConfig(cutoff=M, tail_mode="integral", tolerance=REL_TOL)


def pw(p, e):
    return (p,) * e


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def shapes(max_total):
    return [(n, m) for n in range(max_total + 1) for m in range(max_total + 1 - n)]


def test_c1_oracle_equals_definitional_product():
    """C1 surjection oracle == recursion, len1+len2 <= 8, letters <= 4, exact, < 60 s"""
    pairs = 0
    with Timer() as t:
        for n, m in shapes(8):
            for U, V in all_pairs(n, m, 4):
                for signed in SIGNS:
                    assert oracle_batch(U, V, signed) == recursion_batch(U, V, signed), (n, m, signed)
                pairs += len(U)
    assert pairs == sum(4 ** (n + m) for n, m in shapes(8))
    assert t.elapsed < 60, t.elapsed


def test_c1_scalar_routes_on_every_shape():
    """C1 scalar oracle_product / stuffle agree with the batch routes on sampled rows of every shape"""
    rng = np.random.default_rng(0)
    for n, m in shapes(8):
        for U, V in all_pairs(n, m, 4, chunk=1 << 20):
            rows = rng.choice(len(U), size=min(len(U), 12), replace=False)
            for signed in SIGNS:
                batch = recursion_batch(U[rows], V[rows], signed)
                for r, idx in enumerate(rows):
                    u, v = tuple(map(int, U[idx])), tuple(map(int, V[idx]))
                    assert oracle_product(u, v, signed) == product(u, v, signed) == batch.row(r)


def test_c2_simple_product_closed_form():
    """C2 closed form z_p^m * z_p^n, p <= 3, m+n <= 8, both signs, exact, < 10 s"""
    with Timer() as t:
        for p in (1, 2, 3):
            for m in range(9):
                for n in range(9 - m):
                    for signed in SIGNS:
                        assert simple_product_closed(p, m, n, signed) == product(pw(p, m), pw(p, n), signed)
    assert t.elapsed < 10, t.elapsed


def test_c3_recursive_formula_every_position():
    """C3 recursive expansion, len1+len2 <= 6, letters <= 3, every j, exact, < 60 s"""
    with Timer() as t:
        for n1 in range(1, 7):
            for n2 in range(0, 7 - n1):
                for u in itertools.product(range(1, 4), repeat=n1):
                    for v in itertools.product(range(1, 4), repeat=n2):
                        for signed in SIGNS:
                            want = product(u, v, signed)
                            expansions = [recursive_expand(u, v, j, signed) for j in range(1, n1 + 1)]
                            assert all(e == want for e in expansions), (u, v, signed)
                            assert all(a == b for a, b in itertools.combinations(expansions, 2))
    assert t.elapsed < 60, t.elapsed


def _full_grid(nletters, ncounts, max_weight=10):
    """Every (p, letters, counts) with all letters, p >= 1 and weight <= max_weight."""
    for p in range(1, max_weight + 1):
        for letters in itertools.product(range(1, max_weight + 1), repeat=nletters):
            rest = max_weight - sum(letters)
            if rest < 0:
                continue
            for counts in itertools.product(range(rest // p + 1), repeat=ncounts):
                if sum(letters) + p * sum(counts) <= max_weight:
                    yield p, letters, counts


def test_c4_corollaries_and_lemmas():
    """C4 two-string corollaries and both lemmas on full grids of weight <= 10, exact, < 60 s"""
    cases = 0
    with Timer() as t:
        for p, (k, l), (m, n) in _full_grid(2, 2):
            for signed in SIGNS:
                assert cor_1_1_expand(k, l, p, m, n, signed) == product((k,) + pw(p, m), (l,) + pw(p, n), signed)
                cases += 1
        for p, (k, l1, l2), (m, n1, n2) in _full_grid(3, 3):
            for signed in SIGNS:
                right = (l1,) + pw(p, n1) + (l2,) + pw(p, n2)
                assert cor_1_2_expand(k, l1, l2, p, m, n1, n2, signed) == product((k,) + pw(p, m), right, signed)
                cases += 1
        for p, (l,), (m, n1, n2) in _full_grid(1, 3):
            for signed in SIGNS:
                right = pw(p, n1) + (l,) + pw(p, n2)
                assert lemma_0_2_expand(p, l, m, n1, n2, signed) == product(pw(p, m), right, signed)
                cases += 1
        for p, (l1, l2), (m, n1, n2) in _full_grid(2, 3):
            for signed in SIGNS:
                right = (l1,) + pw(p, n1) + (l2,) + pw(p, n2)
                assert lemma_0_22_expand(p, l1, l2, m, n1, n2, signed) == product(pw(p, m), right, signed)
                cases += 1
    assert cases > 1000
    assert t.elapsed < 60, t.elapsed


def _specs():
    for p in (1, 2):
        for r in range(3):
            for s in range(3):
                for ks in itertools.product((1, 2, 3), repeat=r):
                    for ls in itertools.product((1, 2, 3), repeat=s):
                        for powers in itertools.product(range(5), repeat=r + s):
                            if sum(powers) > 4:
                                continue
                            for signed in SIGNS:
                                yield GeneralProductSpec(p, tuple(zip(ks, powers[:r])), tuple(zip(ls, powers[r:])), signed)


def test_c5_general_reducer(monkeypatch):
    """C5 reducer == definitional product, r,s <= 2, p <= 2, sum m+n <= 4, k,l <= 3, both signs; simple products only; < 120 s"""
    specs = list(_specs())
    expected = [product(s.left_word(), s.right_word(), s.signed) for s in specs]

    definitional_calls = 0
    real = algebra._stuffle_words

    def counting(*args):
        nonlocal definitional_calls
        definitional_calls += 1
        return real(*args)

    monkeypatch.setattr(algebra, "_stuffle_words", counting)
    total = ReductionStats()
    with Timer() as t:
        for spec, want in zip(specs, expected):
            stats = ReductionStats()
            assert reduce_general(spec, stats) == want, spec
            total.simple_calls += stats.simple_calls
            total.expansions += stats.expansions
            if spec.left or spec.right:
                assert stats.simple_calls >= 1
    assert definitional_calls == 0
    assert total.simple_calls > 0 and total.expansions > 0
    assert t.elapsed < 120, t.elapsed


def test_c6_zeta_products_via_expansion():
    """C6 Z(two-string expansion) == Z(left) Z(right) within bound + 1e-3 rel at M=20000; zeta formula == index image"""
    checked = 0
    for p in (1, 2):
        for k, l1, l2 in itertools.product((2, 3), (2, 3), (1, 2, 3)):
            for m, n1, n2 in itertools.product(range(5), repeat=3):
                if m + n1 + n2 > 4:
                    continue
                left = (k,) + pw(p, m)
                right = (l1,) + pw(p, n1) + (l2,) + pw(p, n2)
                for star in SIGNS:
                    lhs = apply_Z(cor_1_2_expand(k, l1, l2, p, m, n1, n2, star), star, CFG)
                    rhs = apply_Z(left, star, CFG) * apply_Z(right, star, CFG)
                    allowed = lhs.error + rhs.error + REL_TOL * abs(rhs.value)
                    assert abs(lhs.value - rhs.value) <= allowed, (k, l1, l2, p, m, n1, n2, star)
                    checked += 1
    assert checked > 0
    for p in (1, 2):
        for k, l in itertools.product((2, 3, 4), repeat=2):
            for m, n in itertools.product(range(5), repeat=2):
                if m + n > 4:
                    continue
                for star in SIGNS:
                    assert zeta_stuffle_formula_1_1(k, l, p, m, n, star) == index_image(
                        cor_1_1_expand(k, l, p, m, n, star)
                    )


def test_c7_worked_identity():
    """C7 zeta(2)zeta(3) = zeta(2,3)+zeta(3,2)+zeta(5) and star analog, bound + 1e-3 rel at M=20000, < 5 s"""
    with Timer() as t:
        for star, merge in ((False, 1), (True, -1)):
            lhs = apply_Z(algebra.LinComb({(2, 3): 1, (3, 2): 1, (5,): merge}), star, CFG)
            rhs = apply_Z((2,), star, CFG) * apply_Z((3,), star, CFG)
            assert abs(lhs.value - rhs.value) <= lhs.error + rhs.error + REL_TOL * abs(rhs.value)
    assert t.elapsed < 5, t.elapsed


def test_c8_sign_law():
    """C8 every signed-product coefficient has sign (-1)^(len1+len2-len), grid of C1, exact"""
    for n, m in shapes(8):
        for U, V in all_pairs(n, m, 4):
            res = recursion_batch(U, V, signed=True)
            expected = np.where((n + m - res.lengths()) % 2 == 0, 1, -1)
            assert np.array_equal(np.sign(res.coeffs), expected), (n, m)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
