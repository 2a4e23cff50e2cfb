"""
Closed forms for products with repeated letters
================================================

A power of one letter times another power, and products with one or two
different letters in front, expand without running the recursion.
"""
from stuffle import (
    GWordSet,
    cor_1_1_expand,
    cor_1_2_expand,
    simple_product_closed,
    stuffle,
    word_power,
)
from stuffle.syntax import format_text

# z1^2 * z1, written with words that contain only z1 and z2
print(format_text(simple_product_closed(1, 2, 1)))
print("p=2, two z2 and one z4:", GWordSet(2, 2, 1).words())

# z2 z1^2 * z3 z1
lhs = cor_1_1_expand(2, 3, 1, 2, 1)
assert lhs == stuffle((2, 1, 1), (3, 1))
print(len(lhs), "terms, weight", lhs.weight())

# z2 z1 * z3 z1 z2, signed
c = cor_1_2_expand(2, 3, 2, 1, 1, 1, 0, signed=True)
print(format_text(c))

# the simple product grows fast
for n in range(1, 7):
    print(n, len(simple_product_closed(1, n, n)), sum(k for _, k in simple_product_closed(1, n, n).items()))

print(format_text(word_power(3, 2)))
