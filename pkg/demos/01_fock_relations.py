# Creation operators on a truncated Fock space, and the relations they satisfy.
from fockshift import FockSpace, check_ct_relations, creation_operators, vacuum_projection, identity
from fockshift.fock import equality_on_subspace

space = FockSpace(2, 3)
print("basis:", [str(w) for w in space.words()])
print("dimension:", space.dimension)

L1, L2 = creation_operators(space)
print("L_1 L_2 xi_e =", space.word(next(iter((L1 @ L2).column(0)))))

report = check_ct_relations([L1, L2])
print("relations hold below the top level:", report.passed)

# sum of range projections plus the vacuum is the identity, away from the top level
total = L1 @ L1.H + L2 @ L2.H + vacuum_projection(space)
print("L1 L1* + L2 L2* + P_e == I on words of length <= 2:",
      equality_on_subspace(total, identity(space), 2))
print("... and on the full truncated space:", total == identity(space))
