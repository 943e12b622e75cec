"""Cohomology of descended complexes from Betti numbers and cup products.

On CP^n with its Kaehler form the long exact sequence kills everything
except the two ends.  On a closed surface with exact symplectic class
nothing cancels.  Each answer is compared against an explicit cochain
model with scrambled bases.
"""

from pcsbgg import (CohomologyProfile, contractible_profile, cpn_profile, descended_cohomology,
                    les_oracle)

for n in (2, 3, 4):
    prof = cpn_profile(n, 3)
    dims = descended_cohomology(prof).dims
    print(f"CP^{n}, dim W_1 = 3:", dims, "oracle agrees:", les_oracle(prof, seed=n).dims == dims)

print("ball of dimension 6:", descended_cohomology(contractible_profile(6, 2)).dims)

torus = CohomologyProfile(dim_M=2, betti=(1, 2, 1), lefschetz_ranks=(0,), w1=2)
print("torus, zero cup product:", descended_cohomology(torus).dims)
torus = CohomologyProfile(dim_M=2, betti=(1, 2, 1), lefschetz_ranks=(1,), w1=2)
print("torus, symplectic class:", descended_cohomology(torus).dims)
