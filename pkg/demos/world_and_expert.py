"""
The sorting world and its expert
================================

A walk through the planar block-sorting world, the cycle-sort expert that
solves it, and the demonstration datasets the planners are trained on.

    python demos/world_and_expert.py
"""

# %%
# A world with three blocks and four slots (the last slot is the buffer).
# Block ``i`` starts in slot ``permutation[i]``; the task is to move every
# block into the slot with its own index.
from collections import Counter

from hybrid_diffusion.expert import (TaskConfig, build_vocabulary, cycle_sort_plan,
                                     generate_dataset, horizons, make_demonstration,
                                     plan_tokens, validate_demonstration)
from hybrid_diffusion.evaluation import grammar_check
from hybrid_diffusion.rngcore import SeedTree
from hybrid_diffusion.sortworld import WorldConfig, reset, reward, rollout

world = WorldConfig(n_blocks=3)
print("slot centers:\n", world.slot_centers)

perm = (1, 2, 0)  # A in slot 1, B in slot 2, C in slot 0
rng = SeedTree(0).derive("demo").numpy()
state, obs = reset(world, perm, rng)
print("observation (blocks then gripper, scaled to [-1, 1]):", obs.round(3))
print("reward at the start:", reward(state, world))

# %%
# The expert sorts one cycle at a time. It parks one block of the cycle in
# the buffer, fills the freed slot repeatedly, then returns the parked block.
ops = cycle_sort_plan(perm)
for op in ops:
    print(op)

# %%
# Symbolic plans are token sequences padded to a fixed horizon; continuous
# plans are (x, y, grip) waypoints, three per operation.
task = TaskConfig(world)
h_c, h_d = horizons(task)
vocab = build_vocabulary(3)
print("vocabulary:", vocab.symbols)
tokens = plan_tokens(ops, vocab, h_d)
print("tokens:", vocab.decode(tokens.tolist()))
print("grammatical:", grammar_check(tokens, vocab)[0])

demo = make_demonstration(task, perm, rng)
print("continuous plan shape:", demo.continuous.shape)
final = rollout(demo.initial_state(world), demo.continuous, world)
print("reward after executing the continuous plan:", reward(final, world))
print("demonstration validates:", validate_demonstration(demo, task))

# %%
# A dataset is a header (task, horizons, vocabulary, normalizer) plus
# demonstrations, generated from one seed and byte-identical on regeneration.
ds = generate_dataset(task, 20, seed=0)
arrays = ds.arrays()
for k, v in arrays.items():
    print(f"{k:8s} {tuple(v.shape)} {v.dtype}")
print("demonstrations by number of ops:", dict(sorted(Counter(d.n_ops for d in ds.demos).items())))
