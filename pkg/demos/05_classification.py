# Divisor sequences, supernatural numbers and the matching K0 orders.
import random

from fockshift import (d_divides_iff, expansion_witness, k0_isomorphic, k0_order,
                       supernatural_eq, supernatural_from_sequence)

for seq in [(2, 4, 8), (6, 12, 36), (1,), (3, 15, 45, 90)]:
    print(seq, "->", supernatural_from_sequence(seq))

print()
print("d(N,n) | d(N,m) versus n | m, N=3:")
for n in range(1, 5):
    row = [d_divides_iff(3, n, m) for m in range(1, 9)]
    print(f"  n={n}:", "".join("x" if a else "." for a, _ in row), all(a == b for a, b in row))

print("witness digits (2, 2, 8):", expansion_witness(2, 2, 8))
print("witness digits (3, 2, 6):", expansion_witness(3, 2, 6))
print("K0 order for N=2, k=5:", k0_order(2, 5).order)

rng = random.Random(3)


def chain():
    terms = [rng.randint(1, 6)]
    while len(terms) < 4 and terms[-1] * 4 <= 64:
        terms.append(terms[-1] * rng.choice([2, 3, 4]))
    return tuple(terms)


agree = equal = 0
for _ in range(100):
    a, b = chain(), chain()
    equal += supernatural_eq(a, b)
    agree += supernatural_eq(a, b) == k0_isomorphic(2, a, b)
print(f"agreement on 100 random pairs: {agree} ({equal} equal)")
