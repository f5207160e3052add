"""
Reusing an optimum after new sequences arrive
=============================================

Given an optimal solution for some sequences, we add k more. The cheap
option keeps the old consensus and aligns it against the newcomers. The
sampling option reuses the old solution as one candidate and only sweeps
samples that touch a new sequence.
"""

from cspreopt import (
    Instance,
    ModifiedInstance,
    ReoptInput,
    additive_gap,
    k_best_align,
    ptas_solve,
    reopt_ptas,
    solve_exact_tuples,
)
from cspreopt.bench import reopt_case

base = Instance(("AAAABBBB", "BBBBAAAA", "AAAABBBA", "BBBBAAAA"), 4)
opt = solve_exact_tuples(base).costed
inp = ReoptInput(ModifiedInstance(base, ("BBBBBBBB",)), opt)

# %%
# Extending with the fixed pattern AAAA costs 4. The true optimum is 1, so the
# gap is 3, inside the k*l = 4 allowance.
greedy = k_best_align(inp)
print("extension:", greedy.cost, "gap/bound:", additive_gap(inp, greedy))

# %%
# The sampling variant uses r equal to the old sequence count. It compares
# the realigned old solution (branch A) against the best new sample
# (branch B), and skips the 5^4 - 1 samples that lie entirely in the old part.
res = reopt_ptas(inp)
scratch = ptas_solve(inp.modified.merged, base.t)
print(res.branch, res.cost, res.pattern, "samples", res.samples, "vs", scratch.samples)

# %%
# The extension gap grows with k but never beyond k*l.
full = reopt_case("random", 11, base_t=4, k=4, n=9, l=4, sigma=2)
opt = solve_exact_tuples(full.base).costed
for k in range(1, 5):
    mod = ModifiedInstance(full.base, full.added[:k])
    step = ReoptInput(mod, opt, verify=False)
    print(k, additive_gap(step, k_best_align(step)))
