# Weighted shifts: phase normalization, weight operators, norms, recovery.
from fockshift import (FockSpace, Gaussian, WeightFunction, build_shift, example_top,
                       is_bounded_below, normalize_weights, periodic_weight, recover_creation,
                       row_norm, shift_norm, weight_operator, Word)

# complex weights with rational moduli
raw = WeightFunction.from_function(2, lambda i, w: Gaussian(3, 4) if i == 1 else Gaussian(0, -2), depth=2)
norm = normalize_weights(raw, 2)
print("exact normalization:", norm.exact)
for w in ["e", "1", "2", "11", "21"]:
    print(f"  mu_{w} =", norm.unitary[Word.parse(w, 2)])
print("canonical weights:", sorted({v for _, v in norm.canonical.items(2)}))

weights = periodic_weight(example_top())
space = FockSpace(2, 4)
T1, T2 = build_shift(weights, space)
W1 = weight_operator(T1, 1)
print("diagonal of W_1 on the first 7 words:", [str(x) for x in W1.diagonal()[:7]])
print("||T_1|| =", shift_norm(weights, 1).value, " ||T_2|| =", shift_norm(weights, 2).value)
print("row norm =", row_norm(weights).value)

bb = is_bounded_below(weights)
print("bounded below:", bool(bb), "smallest weight", bb.minimum)
L1 = recover_creation(T1, 1)
print("recovered L_1 sends xi_2 to", space.word(next(iter(L1.column(2)))))

print("a single zero weight breaks recovery:")
try:
    recover_creation(build_shift(periodic_weight(example_top().replace({(2, "1"): 0})), space)[1], 2)
except Exception as exc:
    print("  ", exc)
