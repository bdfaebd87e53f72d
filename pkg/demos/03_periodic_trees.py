# Period-k weights, detecting the period, and the weighted tree.
import random

from fockshift import (WeightFunction, detect_period, distinct_path_tuples, example_top,
                       export_tree, periodic_weight, random_top, verify_containment, Word)
from fockshift.periodicity import path_tuples

top = example_top()
lam = periodic_weight(top)
for i, w in [(1, "21"), (1, "212"), (2, "e"), (2, "1121")]:
    print(f"lambda_({i},{w}) =", lam(i, Word.parse(w, 2)))

print("detected period:", detect_period(lam, 3))
harmonic = WeightFunction.from_function(2, lambda i, w: 1 / (len(w) + 1), depth=6)
print("harmonic weights, period <= 3:", detect_period(harmonic, 3))

rng = random.Random(0)
for n1, n2 in [(1, 5), (2, 4), (3, 6)]:
    print(f"period {n1} top also has period {n2}:", verify_containment(random_top(2, n1, rng), n2))

for word, tup in path_tuples(top).items():
    print("path to", word, "->", [str(x) for x in tup])
print("all path tuples distinct:", distinct_path_tuples(top))

print(export_tree(lam, 2).to_dot())
