"""Cohomology dimensions of descended BGG complexes on PCS-quotients of the homogeneous model.

The cohomology of the descended complex ``A`` sits in a long exact sequence

    ... -> H^k(K) -> H^k(A) -> H^{k-1}(C) -> H^{k+1}(K) -> ...

where ``H^k(K) = H^k(C) = H^k(M) (x) W_1`` and the connecting map is the cup
product with the class of the 2-form ``omega``.  Only ranks enter, so all
that is needed is the Betti numbers of M, the ranks of ``[omega] u -`` and
``dim W_1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import _linalg
from .errors import InputError


@dataclass(frozen=True)
class CohomologyProfile:
    dim_M: int
    betti: tuple
    lefschetz_ranks: tuple = field(default=())
    w1: int = 1

    def __post_init__(self):
        if not isinstance(self.dim_M, int) or self.dim_M <= 0 or self.dim_M % 2:
            raise InputError(f"dim_M must be a positive even integer, got {self.dim_M!r}")
        betti = tuple(self.betti)
        ranks = tuple(self.lefschetz_ranks)
        if len(betti) > self.dim_M + 1:
            raise InputError(f"at most {self.dim_M + 1} Betti numbers for dim_M = {self.dim_M}")
        if len(ranks) > self.dim_M - 1:
            raise InputError(f"at most {self.dim_M - 1} Lefschetz ranks for dim_M = {self.dim_M}")
        for v in betti + ranks + (self.w1,):
            if not isinstance(v, int) or v < 0:
                raise InputError(f"profile entries must be non-negative integers, got {v!r}")
        object.__setattr__(self, "betti", betti + (0,) * (self.dim_M + 1 - len(betti)))
        object.__setattr__(self, "lefschetz_ranks", ranks + (0,) * (self.dim_M - 1 - len(ranks)))
        for j, r in enumerate(self.lefschetz_ranks):
            if r > min(self.b(j), self.b(j + 2)):
                raise InputError(f"Lefschetz rank r_{j} = {r} exceeds min(b_{j}, b_{j + 2})")

    def b(self, j) -> int:
        return self.betti[j] if 0 <= j < len(self.betti) else 0

    def r(self, j) -> int:
        return self.lefschetz_ranks[j] if 0 <= j < len(self.lefschetz_ranks) else 0

    @property
    def top_degree(self) -> int:
        return self.dim_M + 1

    @classmethod
    def from_dict(cls, doc: dict) -> "CohomologyProfile":
        try:
            return cls(doc["dim_M"], tuple(doc["betti"]),
                       tuple(doc.get("lefschetz_ranks", ())), doc["w1"])
        except KeyError as exc:
            raise InputError(f"profile is missing key {exc}") from None
        except TypeError as exc:
            raise InputError(f"malformed profile: {exc}") from None


@dataclass(frozen=True)
class CohomologyResult:
    dims: tuple


def descended_cohomology(profile: CohomologyProfile) -> CohomologyResult:
    """dims[k] = dim coker(delta into H^k(K)) + dim ker(delta out of H^{k-1}(C))."""
    b, r, w = profile.b, profile.r, profile.w1
    dims = tuple(w * (b(k) - r(k - 2)) + w * (b(k - 1) - r(k - 1))
                 for k in range(profile.top_degree + 1))
    return CohomologyResult(dims)


def cpn_profile(n: int, w1: int) -> CohomologyProfile:
    """CP^n: b_{2j} = 1, cup with the Kaehler class injective below the top."""
    if not isinstance(n, int) or n < 2:
        raise InputError(f"cpn_profile needs n >= 2, got {n!r}")
    betti = tuple(1 - j % 2 for j in range(2 * n + 1))
    ranks = tuple(1 - j % 2 for j in range(2 * n - 1))
    return CohomologyProfile(2 * n, betti, ranks, w1)


def contractible_profile(dim_M: int, w1: int) -> CohomologyProfile:
    return CohomologyProfile(dim_M, (1,), (), w1)


# ---------------------------------------------------------------------------
# explicit-matrix oracle

def _unimodular(rng, n):
    """Random integer matrix of determinant 1 together with its integer inverse."""
    m = [list(row) for row in _linalg.identity(n)]
    inv = [list(row) for row in _linalg.identity(n)]
    for _ in range(2 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        # row_i += c row_j on m; column_j -= c column_i on the inverse
        m[i] = [x + c * y for x, y in zip(m[i], m[j])]
        for row in inv:
            row[j] -= c * row[i]
    return m, inv


def _rank_matrix(rng, rows, cols, r):
    """Random integer rows x cols matrix of rank exactly r."""
    core = [[int(i == j and i < r) for j in range(cols)] for i in range(rows)]
    left, _ = _unimodular(rng, rows)
    right, _ = _unimodular(rng, cols)
    if not rows or not cols:
        return [[0] * cols for _ in range(rows)]
    return [list(x) for x in _linalg.matmul(_linalg.matmul(left, core), right)]


def _block(rows, cols, placements):
    out = [[0] * cols for _ in range(rows)]
    for r0, c0, mat in placements:
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                out[r0 + i][c0 + j] = x
    return out


def les_oracle(profile: CohomologyProfile, seed=0) -> CohomologyResult:
    """Recompute the dimensions from an explicit cochain model.

    ``A`` is built as the mapping cone of a cochain map ``phi: C[-2] -> K``
    whose induced map on cohomology has the prescribed ranks: ``A^k = K^k +
    C^{k-1}`` with ``d(x, y) = (d x + phi y, -d y)``.  ``K`` and ``C`` carry the
    cohomology ``H^k(M) (x) W_1`` plus random acyclic padding, and every
    cochain group is scrambled by a random change of basis.  Cohomology of
    ``A`` is then read off from ranks by row reduction; nothing here uses
    the closed formula.
    """
    rng = random.Random(seed)
    top = profile.top_degree
    w = profile.w1
    h = [w * profile.b(k) for k in range(top + 1)]

    # K and C: harmonic part h[k] plus a contractible pair E^k -> E^{k+1}
    def make_complex():
        pad = [rng.randint(0, 2) for _ in range(top + 1)]
        pad[top] = pad[top - 1] = 0  # keep the complex inside degrees 0..top
        size = [h[k] + pad[k] + (pad[k - 1] if k else 0) for k in range(top + 1)]
        # layout of degree k: [harmonic h_k | source pad_k | target pad_{k-1}]
        d = []
        for k in range(top + 1):
            rows = size[k + 1] if k < top else 0
            mat = [[0] * size[k] for _ in range(rows)]
            if k < top:
                for t in range(pad[k]):
                    mat[h[k + 1] + pad[k + 1] + t][h[k] + t] = 1
            d.append(mat)
        return size, d

    ksize, kd = make_complex()
    csize, cd = make_complex()

    # phi_k: C^{k-1} -> K^{k+1}, rank w * r_{k-1}, acting on harmonic parts only
    def phi(k):
        rows = ksize[k + 1] if k + 1 <= top else 0
        cols = csize[k - 1] if k >= 1 else 0
        if not rows or not cols:
            return [[0] * cols for _ in range(rows)]
        core = _rank_matrix(rng, h[k + 1], h[k - 1], w * profile.r(k - 1))
        return _block(rows, cols, [(0, 0, core)])

    asize = [ksize[k] + (csize[k - 1] if k else 0) for k in range(top + 1)]
    ad = []
    for k in range(top + 1):
        rows = asize[k + 1] if k < top else 0
        if not rows:
            ad.append([])
            continue
        ck = csize[k - 1] if k else 0
        neg_cd = [[-x for x in row] for row in cd[k - 1]] if k else []
        ad.append(_block(rows, asize[k], [
            (0, 0, kd[k]),
            (0, ksize[k], phi(k) if k else []),
            (ksize[k + 1], ksize[k], neg_cd if ck else []),
        ]))

    # scramble bases: d'_k = g_{k+1} d_k g_k^{-1}
    gs = [_unimodular(rng, n) for n in asize]
    scrambled = []
    for k in range(top + 1):
        if k == top or not ad[k]:
            scrambled.append(ad[k])
            continue
        g_next, _ = gs[k + 1]
        _, g_inv = gs[k]
        scrambled.append(_linalg.matmul(_linalg.matmul(g_next, ad[k]), g_inv))

    ranks = [_linalg.rank(m) if m and m[0] else 0 for m in scrambled]
    for k in range(top):
        if scrambled[k] and k + 1 < top and scrambled[k + 1]:
            sq = _linalg.matmul(scrambled[k + 1], scrambled[k])
            if any(any(row) for row in sq):
                raise AssertionError("oracle complex is not a complex")
    dims = tuple(asize[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(top + 1))
    return CohomologyResult(dims)
