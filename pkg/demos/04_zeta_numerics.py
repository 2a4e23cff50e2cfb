"""
Truncated multiple zeta values
==============================

Sums are cut at M terms and a rigorous bound on the neglected tail is
carried along.  Products of values should match the value of the stuffle
product, up to those bounds.
"""
import numpy as np

from stuffle import EvalConfig, apply_Z, eval_zeta, stuffle, stuffle_star, zeta_stuffle_formula_1_1
from stuffle.syntax import format_text

cfg = EvalConfig(cutoff=20000)
z2 = eval_zeta((2,), cfg)
print("zeta(2) =", z2.value, "+/-", z2.error, " (pi^2/6 =", np.pi**2 / 6, ")")

for star, prod in ((False, stuffle), (True, stuffle_star)):
    lhs = apply_Z((2,), star, cfg) * apply_Z((3,), star, cfg)
    rhs = apply_Z(prod((2,), (3,)), star, cfg)
    print("star" if star else "plain", lhs.value - rhs.value, "allowed", lhs.error + rhs.error)

# the explicit formula for zeta(2,{1}^1) zeta(3)
c = zeta_stuffle_formula_1_1(2, 3, 1, 1, 0)
print(format_text(c, zeta=True))

# the bound shrinks as the cutoff grows
for M in (10**3, 10**4, 10**5):
    e = eval_zeta((2, 1), EvalConfig(cutoff=M))
    print(M, e.value, e.error)
