"""
The identity as a machine isomorphism
=====================================

Run both negabase converters in parallel and add their digits mod b.  The
product has 6 reachable states; minimizing leaves 3.  The machine for the
other side (multiply by b+1, subtract, clamp digits) also minimizes to 3
states, and the two are the same machine up to relabeling.  Since the
machines agree on every input, the identity holds for every n at that b.
"""

from negaxor import (figure1_product, isomorphic, lemma1_machine, minimize,
                     theorem_machine)
from negaxor.serialize import to_text
from negaxor.verify import check_identity, prove_range

b = 4
prod = figure1_product(b)
print(to_text(prod))
small = minimize(prod)
print(to_text(small))

witness = isomorphic(small, theorem_machine(b))
print("isomorphic to the theorem machine:", bool(witness))
for p, q in enumerate(witness.mapping):
    print(f"  {small.labels[p]:>30}  <->  {theorem_machine(b).labels[q]}")
print("isomorphic to the 3-state lemma machine:",
      bool(isomorphic(small, lemma1_machine(b))))

###############################################################################
# Every radix up to 16 at once.

print()
print(prove_range(16).render())

###############################################################################
# And the brute-force check that shares none of the transducer code.

print()
print(check_identity(6, 5000).render())
