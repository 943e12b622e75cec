import random

import pytest
from hypothesis import given, settings, strategies as st

from pcsbgg import _linalg
from pcsbgg.descent import (CohomologyProfile, contractible_profile, cpn_profile,
                            descended_cohomology, les_oracle)
from pcsbgg.errors import InputError


def test_cpn_profile():
    p = cpn_profile(2, 1)
    assert p.betti == (1, 0, 1, 0, 1) and p.lefschetz_ranks == (1, 0, 1)
    with pytest.raises(InputError):
        cpn_profile(1, 1)


def test_cpn_three_sizes():
    # H^0 .. H^6 of CP^3, and the descended complex lives in degrees 0 .. 7
    p = cpn_profile(3, 2)
    assert p.betti == (1, 0, 1, 0, 1, 0, 1)
    assert len(descended_cohomology(p).dims) == 8


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("w1", [0, 1, 3, 7])
def test_cpn_dims(n, w1):
    dims = descended_cohomology(cpn_profile(n, w1)).dims
    assert dims == (w1,) + (0,) * (2 * n) + (w1,)


@pytest.mark.parametrize("dim_m", [2, 4, 6])
def test_contractible_dims(dim_m):
    dims = descended_cohomology(contractible_profile(dim_m, 5)).dims
    assert dims == (5, 5) + (0,) * dim_m


def test_oracle_examples():
    assert les_oracle(cpn_profile(2, 3), seed=11).dims == (3, 0, 0, 0, 0, 3)
    torus = CohomologyProfile(2, (1, 2, 1), (0,), 2)
    assert les_oracle(torus, seed=3).dims == descended_cohomology(torus).dims == (2, 6, 6, 2)
    full = CohomologyProfile(6, (2, 1, 3, 1, 2, 0, 1), (2, 0, 2, 0, 1), 1)
    assert les_oracle(full).dims == descended_cohomology(full).dims


@pytest.mark.parametrize("kwargs", [
    dict(dim_M=3, betti=(1,)), dict(dim_M=0, betti=()), dict(dim_M=2, betti=(1, 0, 1, 1)),
    dict(dim_M=2, betti=(1,), lefschetz_ranks=(1,)), dict(dim_M=2, betti=(-1,)),
    dict(dim_M=2, betti=(1,), w1=-1), dict(dim_M=2, betti=(1, 0, 1), lefschetz_ranks=(1, 0)),
])
def test_profile_validation(kwargs):
    with pytest.raises(InputError):
        CohomologyProfile(**kwargs)


def test_from_dict_defaults_ranks():
    p = CohomologyProfile.from_dict({"dim_M": 4, "betti": [1, 0, 1, 0, 1], "w1": 2})
    assert p.lefschetz_ranks == (0, 0, 0)
    with pytest.raises(InputError):
        CohomologyProfile.from_dict({"dim_M": 4})


def test_bareiss_rank_matches_fraction_elimination():
    from fractions import Fraction
    rng = random.Random(5)
    for _ in range(50):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.choice([0, 0, 1, -1, 2, Fraction(1, 3)]) for _ in range(cols)] for _ in range(rows)]
        a = [[Fraction(x) for x in row] for row in m]
        r = 0
        for c in range(cols):
            piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            for i in range(rows):
                if i != r and a[i][c]:
                    f = a[i][c] / a[r][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            r += 1
        assert _linalg.rank(m) == r


# ---------------------------------------------------------------------------
# properties

@st.composite
def profiles(draw, max_dim=12):
    dim_m = 2 * draw(st.integers(1, max_dim // 2))
    betti = draw(st.lists(st.integers(0, 5), min_size=dim_m + 1, max_size=dim_m + 1))
    ranks = [draw(st.integers(0, min(betti[j], betti[j + 2]))) for j in range(dim_m - 1)]
    w1 = draw(st.integers(0, 4))
    return CohomologyProfile(dim_m, tuple(betti), tuple(ranks), w1)


@settings(max_examples=80, deadline=None)
@given(profiles())
def test_alternating_sum_and_degree_zero(profile):
    dims = descended_cohomology(profile).dims
    assert len(dims) == profile.dim_M + 2
    assert sum((-1) ** k * d for k, d in enumerate(dims)) == 0
    assert dims[0] == profile.b(0) * profile.w1
    assert all(d >= 0 for d in dims)


@settings(max_examples=80, deadline=None)
@given(profiles(), st.data())
def test_monotone_in_lefschetz_ranks(profile, data):
    j = data.draw(st.integers(0, profile.dim_M - 2))
    if profile.r(j) >= min(profile.b(j), profile.b(j + 2)):
        return
    ranks = list(profile.lefschetz_ranks)
    ranks[j] += 1
    bigger = CohomologyProfile(profile.dim_M, profile.betti, tuple(ranks), profile.w1)
    before, after = descended_cohomology(profile).dims, descended_cohomology(bigger).dims
    assert all(b >= a for a, b in zip(after, before))


@settings(max_examples=25, deadline=None)
@given(profiles(max_dim=8), st.integers(0, 1000))
def test_formula_matches_oracle(profile, seed):
    assert les_oracle(profile, seed).dims == descended_cohomology(profile).dims
