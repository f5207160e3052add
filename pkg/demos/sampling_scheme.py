"""
The r-sampling approximation scheme
===================================

Pick ``r`` windows from ``r`` different sequences, take their consensus,
and realign it against every sequence. Trying every such sample and keeping
the cheapest pattern gives a guaranteed ratio that shrinks as ``r`` grows.
"""

from cspreopt import UnboundedRatio, gen_random, ptas_solve, ratio_bound, sample_count, solve_exact_tuples

# %%
# The guarantee depends on r and the alphabet size. For r <= 2 the formula
# has no finite value.
for r in (2, 3, 4, 6, 10, 50):
    try:
        print(r, [round(ratio_bound(r, s), 3) for s in (2, 4, 20)])
    except UnboundedRatio as exc:
        print(r, "unbounded:", exc)

# %%
# The number of samples is C(t, r) * (n - l + 1)^r, which is what makes large r
# expensive.
print([sample_count(6, 8, r) for r in range(1, 7)])

# %%
# On random instances the observed ratio sits far below the bound. With r = t
# one of the samples is the optimal tuple itself, so the scheme is exact.
worst = {3: 1.0, 4: 1.0, 5: 1.0}
for seed in range(30):
    inst = gen_random(5, 10, 4, 4, seed)
    opt = solve_exact_tuples(inst).cost
    for r in worst:
        cost = ptas_solve(inst, r).cost
        if opt:
            worst[r] = max(worst[r], cost / opt)
print("worst observed ratios:", worst)

# %%
# Sampling with repetition (the same sequence may be picked twice) is also
# available; it explores a superset of samples.
inst = gen_random(4, 9, 3, 2, 3)
a, b = ptas_solve(inst, 3), ptas_solve(inst, 3, mode="multiset")
print(a.cost, a.samples, "|", b.cost, b.samples)
