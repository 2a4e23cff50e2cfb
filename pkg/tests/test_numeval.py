import itertools
import math

import pytest

from stuffle.algebra import LinComb, stuffle, stuffle_star
from stuffle.formulas import AdmissibilityError
from stuffle.numeval import (
    EvalConfig,
    Estimate,
    ZetaIndex,
    apply_Z,
    eval_zeta,
    eval_zeta_star,
    homomorphism_residual,
)


def brute_nested(idx, M, star):
    """Direct nested loops over all index tuples with entries <= M."""
    n = len(idx)
    total = []
    for ms in itertools.product(range(1, M + 1), repeat=n):
        ok = all(a >= b if star else a > b for a, b in zip(ms, ms[1:]))
        if ok:
            total.append(math.prod(m ** (-k) for m, k in zip(ms, idx)))
    return math.fsum(total)


@pytest.mark.parametrize("idx", [(2,), (3, 1), (2, 2), (2, 1, 1), (4, 1, 2)])
@pytest.mark.parametrize("star", [False, True])
def test_dynamic_programme_matches_nested_loops(idx, star):
    cfg = EvalConfig(cutoff=30)
    ev = eval_zeta_star if star else eval_zeta
    assert ev(idx, cfg).value == pytest.approx(brute_nested(idx, 30, star), rel=1e-13)


def test_zeta2_with_tail_bound():
    cfg = EvalConfig(cutoff=10_000)
    est = eval_zeta((2,), cfg)
    assert est.value == pytest.approx(math.fsum(m**-2.0 for m in range(1, 10_001)), rel=1e-14)
    assert round(est.value, 3) == 1.645
    assert est.error <= 1e-4
    # the omitted tail, estimated from a much longer partial sum, fits inside the bound
    far = eval_zeta((2,), EvalConfig(cutoff=1_000_000)).value
    assert 0 < far - est.value <= est.error


@pytest.mark.parametrize("idx", [(2, 1), (3, 1, 1), (2, 1, 1, 1), (2, 2, 1), (5, 1)])
@pytest.mark.parametrize("star", [False, True])
def test_tail_bound_covers_longer_sums(idx, star):
    ev = eval_zeta_star if star else eval_zeta
    short = ev(idx, EvalConfig(cutoff=200))
    long = ev(idx, EvalConfig(cutoff=100_000))
    assert long.value >= short.value
    assert long.value - short.value <= short.error


def test_large_weight_bracket():
    for k in (8, 12, 20):
        v = eval_zeta((k,), EvalConfig(cutoff=50)).value
        assert 1 < v < 1 + 2 ** (1 - k) * 2


def test_monotone_in_cutoff():
    values = [eval_zeta((3, 1), EvalConfig(cutoff=M)).value for M in (1, 2, 5, 10, 100, 1000)]
    assert values == sorted(values)


def test_star_depth_one_identical():
    for k in (2, 3, 5):
        assert eval_zeta_star((k,)) == eval_zeta((k,))


def test_star_dominates():
    assert eval_zeta_star((2, 1)).value >= eval_zeta((2, 1)).value


def test_star_worked_identity():
    lhs = eval_zeta_star((2, 3)).value + eval_zeta_star((3, 2)).value - eval_zeta_star((5,)).value
    rhs = eval_zeta_star((2,)).value * eval_zeta_star((3,)).value
    assert lhs == pytest.approx(rhs, rel=1e-3)


def test_admissibility():
    with pytest.raises(AdmissibilityError):
        eval_zeta((1, 2))
    with pytest.raises(AdmissibilityError):
        ZetaIndex(())
    with pytest.raises(AdmissibilityError):
        apply_Z(stuffle((1,), (2,)))


def test_apply_Z_unit_and_linearity():
    assert apply_Z(LinComb.one()) == Estimate(1.0, 0.0)
    c = LinComb({(2,): 3, (3,): -2, (): 1})
    est = apply_Z(c)
    z2, z3 = eval_zeta((2,)), eval_zeta((3,))
    assert est.value == pytest.approx(3 * z2.value - 2 * z3.value + 1)
    assert est.error == pytest.approx(3 * z2.error + 2 * z3.error)


def test_homomorphism_examples():
    lhs = apply_Z(stuffle((2,), (3,)))
    rhs = apply_Z((2,)) * apply_Z((3,))
    assert abs(lhs.value - rhs.value) <= lhs.error + rhs.error + 1e-3 * rhs.value
    r, allowed = homomorphism_residual((2, 2), (3,), star=True)
    assert r <= allowed
    lhs = apply_Z(stuffle_star((2, 2), (3,)), star=True)
    assert lhs.value == pytest.approx(eval_zeta_star((2, 2)).value * eval_zeta((3,)).value, rel=1e-3)


def test_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(cutoff=0)
    with pytest.raises(ValueError):
        EvalConfig(tolerance=0)
    with pytest.raises(ValueError):
        EvalConfig(tail_mode="euler")
    assert eval_zeta((2,), EvalConfig(tail_mode="none")).error == 0.0
