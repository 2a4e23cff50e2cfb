"""
Reducing a general product to simple ones
==========================================

Each word is a list of blocks (letter, power): (2, 1) means z2 z_p.  The
reducer peels letters off with the recursive expansion and only ever
multiplies pure powers of z_p directly.
"""
from stuffle import GeneralProductSpec, ReductionStats, reduce_general, stuffle_star

spec = GeneralProductSpec(p=1, left=((2, 1), (3, 0)), right=((2, 0), (2, 1)), signed=True)
print(spec.left_word(), "*", spec.right_word())

stats = ReductionStats()
result = reduce_general(spec, stats)
assert result == stuffle_star(spec.left_word(), spec.right_word())
print("terms:", len(result))
print("simple products used:", stats.simple_calls)
print("expansion steps:", stats.expansions, "at positions", stats.positions)
