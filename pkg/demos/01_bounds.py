"""Upper bounds on A2(n, D) side by side.

Run with ``python demos/01_bounds.py``.
"""
# %%
from fewdist import DistanceSet, best_bounds, bound_theorem1, bound_theorem2

# %% [markdown]
# The two dimension-count bounds depend only on n and s = |D|.
# theorem2 subtracts the monomials that collapse onto permutation classes.

# %%
print(" n   s  theorem1  theorem2")
for n in (6, 10, 20):
    for s in (2, 3, 4):
        print(f"{n:2d}  {s:2d}  {bound_theorem1(n, s):8d}  {bound_theorem2(n, s):8d}")

# %% [markdown]
# The older bounds each come with a gate. At (6, {2,4}) three of them agree on 16,
# which is attained.

# %%
for n, ds in [(6, (2, 4)), (6, (4, 6)), (5, (2, 4)), (23, (8, 12)), (10, (3, 5, 7))]:
    bb = best_bounds(n, DistanceSet(ds))
    print(f"\nn={n} D={set(ds)}  min={bb.minimum}")
    for r in bb.reports:
        value = r.value if r.applicable else "-"
        print(f"  {r.name:17s} {str(value):>6s}  {r.notes}")
