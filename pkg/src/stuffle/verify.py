"""Self-check suites run by ``stuffle verify``.

Each suite enumerates every case up to a weight bound and checks one family
of identities.  A case is a ``(label, check)`` pair where ``check()`` returns
``None`` on success or a dict describing the counterexample.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import formulas as F
from .algebra import as_lincomb, compositions, oracle_product, product
from .numeval import DEFAULT, EvalConfig, homomorphism_residual
from .syntax import to_json_obj

SUITES = ("core", "thm1", "thm2", "cor", "lemmas", "reduce", "zeta")


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        if self.passed:
            return f"{self.name}: PASS ({self.cases} cases)"
        return f"{self.name}: FAIL ({len(self.failures)} of {self.cases} cases)"


def _mismatch(label, got, want, **info):
    if got == want:
        return None
    return {
        "case": label,
        **info,
        "got": to_json_obj(got, label),
        "expected": to_json_obj(want, label),
    }


def _words_by_weight(max_weight: int):
    for w in range(max_weight + 1):
        yield from compositions(w)


def _pairs(max_weight: int):
    for total in range(max_weight + 1):
        for a in range(total + 1):
            for u in compositions(a):
                for v in compositions(total - a):
                    yield u, v


def _random_pairs(rng: random.Random, count: int, max_len: int = 5, max_letter: int = 4):
    for _ in range(count):
        u = tuple(rng.randint(1, max_letter) for _ in range(rng.randint(0, max_len)))
        v = tuple(rng.randint(1, max_letter) for _ in range(rng.randint(0, max_len)))
        yield u, v


def core_cases(max_weight: int, rng: random.Random, samples: int):
    pairs = list(_pairs(max_weight)) + list(_random_pairs(rng, samples))
    for u, v in pairs:
        for signed in (False, True):

            def check(u=u, v=v, signed=signed):
                uv = product(u, v, signed)
                if uv != product(v, u, signed):
                    return _mismatch("commutativity", uv, product(v, u, signed), u=u, v=v, signed=signed)
                for w, c in uv.items():
                    if sum(w) != sum(u) + sum(v) or not max(len(u), len(v)) <= len(w) <= len(u) + len(v):
                        return {"case": "grading", "u": u, "v": v, "signed": signed, "word": w}
                    merges = len(u) + len(v) - len(w)
                    expected_sign = -1 if (signed and merges % 2) else 1
                    if c * expected_sign <= 0:
                        return {"case": "sign", "u": u, "v": v, "signed": signed, "word": w, "coeff": c}
                return _mismatch("oracle", oracle_product(u, v, signed), uv, u=u, v=v, signed=signed)

            yield f"pair {u} {v} signed={signed}", check
    for w in _words_by_weight(max_weight):
        for signed in (False, True):
            yield f"unit {w}", (
                lambda w=w, signed=signed: _mismatch("unit", product((), w, signed), product(w, (), signed), w=w)
                or _mismatch("unit", product(w, (), signed), as_lincomb(w), w=w)
            )
    for total in range(max_weight + 1):
        for a, b in itertools.product(range(total + 1), repeat=2):
            if a + b > total:
                continue
            for x in compositions(a):
                for y in compositions(b):
                    for z in compositions(total - a - b):
                        for signed in (False, True):

                            def check(x=x, y=y, z=z, signed=signed):
                                lhs = product(product(x, y, signed), z, signed)
                                rhs = product(x, product(y, z, signed), signed)
                                return _mismatch("associativity", lhs, rhs, a=x, b=y, c=z, signed=signed)

                            yield f"assoc {x} {y} {z}", check


def thm1_cases(max_weight: int, *_):
    for p in range(1, max_weight + 1):
        for m in range(max_weight // p + 1):
            for n in range(max_weight // p - m + 1):
                for signed in (False, True):
                    yield f"simple p={p} m={m} n={n}", (
                        lambda p=p, m=m, n=n, signed=signed: _mismatch(
                            "thm1",
                            F.simple_product_closed(p, m, n, signed),
                            product((p,) * m, (p,) * n, signed),
                            p=p, m=m, n=n, signed=signed,
                        )
                    )


def thm2_cases(max_weight: int, rng: random.Random, samples: int):
    pairs = list(_pairs(max_weight)) + list(_random_pairs(rng, samples, max_len=4, max_letter=3))
    for u, v in pairs:
        if not u:
            continue
        for signed in (False, True):

            def check(u=u, v=v, signed=signed):
                want = product(u, v, signed)
                for j in range(1, len(u) + 1):
                    bad = _mismatch("thm2", F.recursive_expand(u, v, j, signed), want, u=u, v=v, j=j, signed=signed)
                    if bad:
                        return bad
                return None

            yield f"recursive {u} {v}", check


def _grid(max_weight: int, nletters: int, ncounts: int):
    for p in (1, 2):
        for letters in itertools.product(range(1, 4), repeat=nletters):
            for counts in itertools.product(range(max_weight + 1), repeat=ncounts):
                if sum(letters) + p * sum(counts) <= max_weight:
                    yield p, letters, counts


def cor_cases(max_weight: int, *_):
    for p, (k, l), (m, n) in _grid(max_weight, 2, 2):
        for signed in (False, True):
            yield f"cor11 {k},{l},{p},{m},{n}", (
                lambda k=k, l=l, p=p, m=m, n=n, signed=signed: _mismatch(
                    "cor11",
                    F.cor_1_1_expand(k, l, p, m, n, signed),
                    product((k,) + (p,) * m, (l,) + (p,) * n, signed),
                    params=[k, l, p, m, n], signed=signed,
                )
            )
    for p, (k, l1, l2), (m, n1, n2) in _grid(max_weight, 3, 3):
        for signed in (False, True):
            yield f"cor12 {k},{l1},{l2},{p},{m},{n1},{n2}", (
                lambda k=k, l1=l1, l2=l2, p=p, m=m, n1=n1, n2=n2, signed=signed: _mismatch(
                    "cor12",
                    F.cor_1_2_expand(k, l1, l2, p, m, n1, n2, signed),
                    product((k,) + (p,) * m, (l1,) + (p,) * n1 + (l2,) + (p,) * n2, signed),
                    params=[k, l1, l2, p, m, n1, n2], signed=signed,
                )
            )


def lemma_cases(max_weight: int, *_):
    for p, (l,), (m, n1, n2) in _grid(max_weight, 1, 3):
        yield f"lemma02 {p},{l},{m},{n1},{n2}", (
            lambda p=p, l=l, m=m, n1=n1, n2=n2: _mismatch(
                "lemma02",
                F.lemma_0_2_expand(p, l, m, n1, n2),
                product((p,) * m, (p,) * n1 + (l,) + (p,) * n2),
                params=[p, l, m, n1, n2],
            )
        )
    for p, (l1, l2), (m, n1, n2) in _grid(max_weight, 2, 3):
        yield f"lemma022 {p},{l1},{l2},{m},{n1},{n2}", (
            lambda p=p, l1=l1, l2=l2, m=m, n1=n1, n2=n2: _mismatch(
                "lemma022",
                F.lemma_0_22_expand(p, l1, l2, m, n1, n2),
                product((p,) * m, (l1,) + (p,) * n1 + (l2,) + (p,) * n2),
                params=[p, l1, l2, m, n1, n2],
            )
        )


def general_specs(max_r: int = 2, max_s: int = 2, max_p: int = 2, max_power: int = 4, max_letter: int = 3):
    """All GeneralProductSpec inputs on a grid (both signs)."""
    for p in range(1, max_p + 1):
        for r in range(max_r + 1):
            for s in range(max_s + 1):
                for ks in itertools.product(range(1, max_letter + 1), repeat=r):
                    for ls in itertools.product(range(1, max_letter + 1), repeat=s):
                        for powers in itertools.product(range(max_power + 1), repeat=r + s):
                            if sum(powers) > max_power:
                                continue
                            left = tuple(zip(ks, powers[:r]))
                            right = tuple(zip(ls, powers[r:]))
                            for signed in (False, True):
                                yield F.GeneralProductSpec(p, left, right, signed)


def reduce_cases(max_weight: int, *_):
    for spec in general_specs():
        lw, rw = spec.left_word(), spec.right_word()
        if sum(lw) + sum(rw) > max_weight:
            continue
        yield f"reduce {spec}", (
            lambda spec=spec, lw=lw, rw=rw: _mismatch(
                "reduce",
                F.reduce_general(spec),
                product(lw, rw, spec.signed),
                left=list(lw), right=list(rw), signed=spec.signed,
            )
        )


def zeta_cases(max_weight: int, rng: random.Random, samples: int, cfg: EvalConfig = DEFAULT):
    admissible = [w for w in _words_by_weight(max_weight) if w and w[0] >= 2]
    for u, v in itertools.combinations_with_replacement(admissible, 2):
        if sum(u) + sum(v) > max_weight:
            continue
        for star in (False, True):

            def check(u=u, v=v, star=star):
                residual, allowed = homomorphism_residual(u, v, star, cfg)
                if residual <= allowed:
                    return None
                return {"case": "homomorphism", "u": u, "v": v, "star": star,
                        "residual": residual, "allowed": allowed}

            yield f"Z {u} {v} star={star}", check
    for p, (k, l), (m, n) in _grid(max_weight, 2, 2):
        if k < 2 or l < 2:
            continue
        for star in (False, True):
            yield f"zeta11 {k},{l},{p},{m},{n}", (
                lambda k=k, l=l, p=p, m=m, n=n, star=star: _mismatch(
                    "zeta11",
                    F.zeta_stuffle_formula_1_1(k, l, p, m, n, star),
                    F.index_image(F.cor_1_1_expand(k, l, p, m, n, star)),
                    params=[k, l, p, m, n], star=star,
                )
            )


_CASES = {
    "core": core_cases,
    "thm1": thm1_cases,
    "thm2": thm2_cases,
    "cor": cor_cases,
    "lemmas": lemma_cases,
    "reduce": reduce_cases,
    "zeta": zeta_cases,
}


def run_suite(name: str, max_weight: int, seed: int = 0, samples: int = 25) -> SuiteReport:
    if name not in _CASES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    rng = random.Random(seed)
    report = SuiteReport(name)
    for _label, check in _CASES[name](max_weight, rng, samples):
        report.cases += 1
        bad = check()
        if bad is not None:
            report.failures.append(bad)
    return report
