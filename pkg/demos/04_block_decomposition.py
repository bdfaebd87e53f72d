# Conjugating a period-2 shift into a 3 x 3 grid of operators on the 4-letter Fock space.
import random

import numpy as np

from fockshift import (FockSpace, aligned_length, build_shift, build_unitaries, conjugate_shift,
                       example_top, periodic_weight, random_top, subspace_partition, verify_theorem)

n, k, m = 2, 2, 1
L = aligned_length(k, m)
space = FockSpace(n, L)
print(f"N={n}, k={k}, m={m}: truncate at L={L}, dimension {space.dimension}")

part = subspace_partition(n, k, L)
for w, block in part.blocks.items():
    print(f"  K_{w}:", [str(space.word(j)) for j in block])

un = build_unitaries(n, k, m)
T1, T2 = build_shift(periodic_weight(example_top()), space)
for name, t in [("T_1", T1), ("T_2", T2)]:
    bm = conjugate_shift(t, un)
    print(name)
    for (row, col), op in sorted(bm.blocks.items()):
        if op.entries:
            print(f"  block ({row},{col}):")
            print(np.array2string(op.to_float().real, precision=4, suppress_small=True))

print("example, m=1:", verify_theorem(example_top(), 1).passed)
print("example, m=2:", verify_theorem(example_top(), 2).passed)

rng = random.Random(1)
for setting in [(2, 2, 1), (2, 3, 1), (3, 2, 1)]:
    top = random_top(setting[0], setting[1], rng)
    rep = verify_theorem(top, setting[2])
    print(setting, rep.passed, rep.compared_levels)
