"""
Solving a small closest substring instance
==========================================

Four sequences of length 8 and a window length of 4. Every sequence holds
``AAAA`` somewhere, so the optimum costs nothing. Adding a fifth sequence
made only of ``B`` changes the answer.
"""

from cspreopt import Instance, realign, serialize_solution, solve_exact_patterns, solve_exact_tuples

base = Instance(("AAAABBBB", "BBBBAAAA", "AAAABBBA", "BBBBAAAA"), 4)
print(base.t, "sequences,", base.num_windows, "windows each")

# %%
# The tuple search scores every choice of one window per sequence against
# that choice's own column-majority consensus.
res = solve_exact_tuples(base)
print("cost", res.cost, "pattern", res.pattern, "positions", res.solution.positions)

# %%
# Searching over patterns instead (every string of length 4) and picking the
# closest window in each sequence lands on the same cost.
print("pattern search:", solve_exact_patterns(base).cost)

# %%
# Now append BBBBBBBB. AAAA is 4 away from it, while BBBB can be matched
# within distance 1 in the other sequences.
merged = base.with_sequences(("BBBBBBBB",))
for v in ("AAAA", "BBBB"):
    print(v, "->", realign(merged, v).cost)

best = solve_exact_tuples(merged)
print(serialize_solution(best.costed))

# %%
# Branch and bound prunes prefixes whose partial cost already reaches the
# incumbent. Same answer, fewer nodes.
pruned = solve_exact_tuples(merged, prune=True)
print("nodes:", best.nodes_explored, "exhaustive vs", pruned.nodes_explored, "pruned")
