"""
Discovering descriptive queries
===============================

Given a sample and a support threshold, discovery starts from the most
general query and specialises one variable at a time while the support
stays above the threshold.
"""

# %%
# Typeset candidates
# ------------------

from tracequery import DiscoveryParams, compute_delta, discover_run, local_gaps, make_sample
from tracequery.oracle import is_descriptive

sample = make_sample(["a b b", "a c c"])
delta = compute_delta(sample, threshold=1, k=2)
for i in sorted(delta.layers):
    print(i, [sorted(d) for d in delta.layer(i)])

# %%
# A run
# -----
#
# Each step records the variable visited and its replacement (None when
# nothing keeps the support high enough).

params = DiscoveryParams(length=3, window=3, constraints=local_gaps([(0, 0), (0, 0)]), k=2)
run = discover_run(sample, 1, params)
for var, chosen in run.steps:
    print(var, "->", sorted(chosen) if isinstance(chosen, frozenset) else chosen)
print(run.result)

# %%
# The result cannot be specialised further without losing support.

print(is_descriptive(run.result, sample, 1, params))

# %%
# Random visiting orders give descriptive results too.

for seed in range(3):
    p = DiscoveryParams(3, 3, params.constraints, k=2, order=f"seed:{seed}")
    print(seed, discover_run(sample, 1, p).result)
