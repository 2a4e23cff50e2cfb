"""
Stuffle products of words
=========================

Words are tuples of positive integers; (2, 3) stands for z2z3.
"""
from stuffle import LinComb, oracle_product, pattern_count, stuffle, stuffle_star
from stuffle.syntax import format_latex, format_text

# the product behind zeta(2) zeta(3)
c = stuffle((2,), (3,))
print(format_text(c))

# the signed variant flips the sign of every merged letter
print(format_text(stuffle_star((1,), (1,))))

# products extend bilinearly to combinations
a = LinComb({(1,): 2, (2,): -1})
print(format_text(stuffle(a, (1,))))

# an independent route: sum over merge patterns
u, v = (2, 1, 1), (3, 1)
assert oracle_product(u, v) == stuffle(u, v)
print("patterns with 0, 1, 2 merges:", [pattern_count(3, 2, i) for i in range(3)])

print(format_latex(stuffle_star(u, v)))
