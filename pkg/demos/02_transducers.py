"""
Transducers for base conversion and carrying
============================================

A transducer reads digits least significant first and writes a digit per
step.  After the input runs out it keeps reading zeros until it reaches a
state where zeros only ever give zeros.
"""

from negaxor import (conv_n_to_negabase, conv_neg_n_to_negabase,
                     mult_by_b_plus_1, ominus_mult_machine, render, run,
                     to_base)
from negaxor.serialize import to_dot, to_text

b = 3
convert = conv_n_to_negabase(b)
print(to_text(convert))

for n in (5, 12, 40):
    res = run(convert, to_base(n, b))
    print(f"n={n}: base {b} {render(to_base(n, b))} -> base -{b} "
          f"{render(res.output)} ({res.padded_steps} zero(s) of padding)")

###############################################################################
# The same machine with parity swapped produces -n instead.

negate = conv_neg_n_to_negabase(b)
print()
for n in (5, 12, 40):
    print(f"-{n} in base -{b}: {render(run(negate, to_base(n, b)).output)}")

###############################################################################
# Multiplication by b+1: the state is the carry, which never exceeds b.

mult = mult_by_b_plus_1(b)
print()
print("states:", mult.labels)
print("4 * 25 =", mult(25))

###############################################################################
# Subtracting the input digit from each output digit leaves only the carry.

print()
print(to_text(ominus_mult_machine(b)))

###############################################################################
# Graphviz source; pipe into ``dot -Tsvg`` to draw it.

print(to_dot(convert, merge_edges=True, name="n to base -3"), end="")
