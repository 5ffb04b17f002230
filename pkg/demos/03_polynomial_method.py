"""The polynomials P_v on a concrete extremal code."""
# %%
from fewdist import (DistanceSet, Word, build_P, construct_constant_weight, evaluation_matrix,
                     even_coefficient_formula, symmetrized_even_span_check,
                     verify_linear_independence)

# %% [markdown]
# All weight-2 words of length 6 plus the zero word: 16 words, distances {2, 4}.

# %%
code = construct_constant_weight(6, 2, adjoin_zero=True)
D = DistanceSet.of(2, 4)
M = evaluation_matrix(code, D)
print("diagonal values:", {M[i][i] for i in range(len(M))})
print("off-diagonal nonzeros:", sum(1 for i in range(16) for j in range(16) if i != j and M[i][j]))

# %%
res = verify_linear_independence(code, D)
print(f"rank {res.rank} of {res.size} inside a space of dimension {res.dimension}")

# %% [markdown]
# Expand one polynomial and compare an even coefficient with the closed form.

# %%
v = Word.from_str("110000")
p = build_P(v, D)
for e, c in p.sorted_terms()[:10]:
    print(e, c)
print("x1^2 coefficient:", p.coefficient((2, 0, 0, 0, 0, 0)),
      "formula:", even_coefficient_formula(2, D, (1, 0, 0, 0, 0, 0)))
print("even monomials symmetric:", symmetrized_even_span_check(v, D, poly=p))
