"""Expanding the annihilator of D in the Krawtchouk basis, exactly."""
# %%
from fewdist import DistanceSet, annihilator_eval, expand_in_krawtchouk, krawtchouk_eval

# %%
n = 6
for k in range(n + 1):
    print(f"phi_{k}:", [krawtchouk_eval(n, k, x) for x in range(n + 1)])

# %% [markdown]
# f(t) = (2 - t)(4 - t)/8 expands with a coefficient that is exactly zero.
# A floating-point solve could turn it into +1e-17, and the bound would then
# wrongly include C(6,1).

# %%
D = DistanceSet.of(2, 4)
exp = expand_in_krawtchouk(n, D)
print("f_k =", [str(f) for f in exp.coefficients], "signs", exp.signs())
print("check:", all(exp(t) == annihilator_eval(D, t) for t in range(n + 1)))

# %%
for ds in [(1,), (3,), (6,), (1, 2), (3, 5), (2, 3, 5)]:
    e = expand_in_krawtchouk(n, DistanceSet(ds))
    print(f"D={set(ds)!s:12s} f = {', '.join(map(str, e.coefficients))}")
