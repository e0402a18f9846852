"""
Base -b expansions and the digit-wise operators
===============================================

Every integer, negative or not, has exactly one expansion in base -b with
digits 0..b-1.  The operators below work digit by digit on such expansions.
"""

from negaxor import (double_bar, from_negabase, ominus, oplus_neg, render,
                     to_base, to_negabase)

# -14 in base -2: -32 + 16 + 4 - 2
digits = to_negabase(-14, 2)
print("-14 in base -2:", render(digits), " digits LSB first:", list(digits))
print("evaluates back to", from_negabase(digits))

# Positive and negative numbers need no sign in base -b.
for z in (10, -10, 7, -7):
    print(f"{z:>4} -> base -3: {render(to_negabase(z, 3))}")

###############################################################################
# In base 2, subtracting digits mod 2 is XOR.  The negabase operator adds
# the base -b digits of its arguments mod b and reads the result in base +b.

print()
print("ominus(30, 10, 2) =", ominus(30, 10, 2), "=", 30 ^ 10)
print("oplus_neg(10, -10, 2) =", oplus_neg(10, -10, 2))

###############################################################################
# The double bar clamps every base-b digit to 0 or 1.

n, b = 17, 3
print()
print(f"{n} in base {b}: {render(to_base(n, b))}; "
      f"double bar -> {render(to_base(double_bar(n, b), b))}")

###############################################################################
# The identity, checked as integers for a handful of cases:
#     double_bar(((b+1)n) ominus n) == n oplus_neg (-n)

print()
for b in (2, 3, 7):
    row = []
    for n in range(1, 9):
        left = double_bar(ominus((b + 1) * n, n, b), b)
        right = oplus_neg(n, -n, b)
        assert left == right
        row.append(right)
    print(f"b={b}:", row)
