"""The 253-word two-distance code from the binary Golay code."""
# %%
from fewdist import best_bounds, construct_golay_blocks, distance_set_of
from fewdist.constructions import golay_weight_distribution

# %%
print("weight distribution:", dict(sorted(golay_weight_distribution().items())))

# %%
blocks = construct_golay_blocks()
D = distance_set_of(blocks)
print(len(blocks), "blocks of length", blocks.n, "with distances", D.distances)

# %% [markdown]
# The two-distance bound C(23,2)+1 = 254 is one more than the design gives.

# %%
bb = best_bounds(23, D)
print("best bound", bb.minimum, "from", bb.best_names())
