"""Dimensions, weight multiplicities and central characters of irreducible representations."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import lattice
from .errors import InputError, ResourceGuardError
from .lattice import RootSystem

FREUDENTHAL_DIM_GUARD = 10**5


def _require_dominant_integral(lam, nodes=None, what="weight"):
    if not lattice.is_integral(lam, nodes) or not lattice.is_dominant(lam, nodes):
        where = "" if nodes is None else f" at nodes {tuple(nodes)}"
        raise InputError(f"{what} {_fmt(lam)} is not dominant integral{where}")


def _fmt(lam):
    return "(" + ", ".join(str(Fraction(x)) for x in lam) + ")"


def _dim_over(rs, roots, lam):
    shifted = tuple(Fraction(x) + 1 for x in lam)
    num = den = Fraction(1)
    for alpha in roots:
        num *= lattice.root_inner(rs, shifted, alpha)
        den *= lattice.root_inner(rs, rs.rho, alpha)
    value = num / den
    assert value.denominator == 1 and value > 0, value
    return int(value)


def weyl_dim(rs: RootSystem, lam) -> int:
    """Weyl dimension formula: product over positive roots of (lam+rho, a)/(rho, a)."""
    lam = lattice.as_weight(lam)
    lattice._check_len(rs, lam)
    _require_dominant_integral(lam)
    return _dim_over(rs, rs.positive_roots, lam)


def levi_dim(p, mu) -> int:
    """Dimension of the irreducible Levi representation with highest weight ``mu``.

    Only the coefficients at uncrossed nodes matter; crossed coefficients may
    be arbitrary rationals.
    """
    mu = lattice.as_weight(mu)
    lattice._check_len(p.rs, mu)
    _require_dominant_integral(mu, p.levi_simples, "Levi weight")
    return _dim_over(p.rs, p.levi_roots, mu)


@dataclass(frozen=True)
class MultiplicityTable:
    highest_weight: tuple
    weight_to_mult: dict  # weight tuple -> multiplicity
    rs: RootSystem = field(default=None, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return sum(self.weight_to_mult.values())

    def __getitem__(self, mu):
        return self.weight_to_mult.get(tuple(Fraction(x) for x in mu), 0)

    def sorted_items(self):
        """Weights by increasing depth below the highest weight, then descending coordinates."""
        def key(kv):
            mu = kv[0]
            depth = 0
            if self.rs is not None:
                diff = tuple(a - b for a, b in zip(self.highest_weight, mu))
                depth = sum(lattice.weight_to_root_basis(self.rs, diff))
            return depth, tuple(-x for x in mu)
        return sorted(self.weight_to_mult.items(), key=key)


def _dominant_weights_below(rs, lam):
    """Dominant mu with lam - mu a non-negative root combination.

    Any two comparable dominant weights are joined by a chain of dominant
    weights differing by positive roots, so a search over such steps is complete.
    """
    roots_w = [lattice.root_to_weight(rs, a) for a in rs.positive_roots]
    found = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in roots_w:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in found and all(x >= 0 for x in nu):
                found.add(nu)
                queue.append(nu)
    return found


def _orbit(rs, mu):
    seen = {mu}
    queue = deque([mu])
    while queue:
        v = queue.popleft()
        for i in range(rs.rank):
            if v[i] == 0:
                continue
            w = tuple(v[r] - v[i] * rs.cartan[i][r] for r in range(rs.rank))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def freudenthal(rs: RootSystem, lam, form_scale=1) -> MultiplicityTable:
    """All weight multiplicities of the irreducible representation of highest weight ``lam``.

    Multiplicities are computed on dominant weights only, in order of
    increasing depth below ``lam``; any other weight is looked up through its
    dominant representative.  ``form_scale`` rescales the invariant form and
    must not change the result.
    """
    lam = lattice.as_weight(lam)
    lattice._check_len(rs, lam)
    _require_dominant_integral(lam)
    dim = weyl_dim(rs, lam)
    if dim > FREUDENTHAL_DIM_GUARD:
        raise ResourceGuardError(f"dim V({_fmt(lam)}) = {dim} exceeds {FREUDENTHAL_DIM_GUARD}")
    scale = Fraction(form_scale)
    if scale <= 0:
        raise InputError("form_scale must be positive")

    def ip(x, y):
        return scale * lattice.inner_product(rs, x, y)

    dominant = _dominant_weights_below(rs, lam)
    depth = {mu: sum(lattice.weight_to_root_basis(rs, tuple(a - b for a, b in zip(lam, mu))))
             for mu in dominant}
    roots_w = [lattice.root_to_weight(rs, a) for a in rs.positive_roots]
    lam_rho = tuple(x + 1 for x in lam)
    top = ip(lam_rho, lam_rho)
    mult = {}
    for mu in sorted(dominant, key=lambda m: (depth[m], tuple(-x for x in m))):
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for a in roots_w:
            j = 1
            while True:
                nu = tuple(x + j * y for x, y in zip(mu, a))
                m = mult.get(lattice.dominant_representative(rs, nu), 0)
                if not m:
                    break
                total += m * ip(nu, a)
                j += 1
        mu_rho = tuple(x + 1 for x in mu)
        value = 2 * total / (top - ip(mu_rho, mu_rho))
        assert value.denominator == 1, value
        mult[mu] = int(value)
    table = {}
    for mu, m in mult.items():
        if m:
            for nu in _orbit(rs, mu):
                table[nu] = m
    return MultiplicityTable(lam, table, rs)


@dataclass(frozen=True)
class CartanElement:
    """Element of the Cartan subalgebra, given by its values on omega coordinates."""
    pairing: tuple

    def __call__(self, mu) -> Fraction:
        return sum((Fraction(c) * x for c, x in zip(self.pairing, mu)), Fraction(0))


def kernel_dim(rs: RootSystem, lam, X) -> int:
    """dim {v in V(lam) : X v = 0} for a Cartan element X.

    X acts diagonally, so its kernel is the sum of the weight spaces on
    which it vanishes and meets its image trivially.
    """
    if not isinstance(X, CartanElement):
        X = CartanElement(tuple(Fraction(c) for c in X))
    if len(X.pairing) != rs.rank:
        raise InputError(f"Cartan element needs {rs.rank} coordinates, got {len(X.pairing)}")
    table = freudenthal(rs, lam)
    return sum(m for mu, m in table.weight_to_mult.items() if X(mu) == 0)


@dataclass(frozen=True)
class CenterCharacter:
    residue: int
    modulus: int
    integrable: bool


def parse_group(tag):
    """Normalise a group tag: ``"adjoint-C"``, ``"adjoint-A-even"``, ``"su-center:m"``."""
    if isinstance(tag, tuple):
        return tag
    if tag in ("adjoint-C", "adjoint-A-even"):
        return (tag,)
    m = re.fullmatch(r"su-center[:(](\d+)\)?", str(tag))
    if m:
        return ("su-center", int(m.group(1)))
    raise InputError(f"unknown group tag {tag!r}")


def center_character(rs: RootSystem, lam, group) -> CenterCharacter:
    """Action of the relevant central subgroup on V(lam), as a residue.

    * ``adjoint-C``: -1 in Sp(2n) acts by (-1)^(sum of odd-indexed coefficients).
    * ``adjoint-A-even``: same sign for -1 in SL(N) with N even.
    * ``su-center:m``: a generator of Z_m in SU(p+1, q+1), m = p+q+2, acts by
      exp(2 pi i (sum_i i a_i) / m).
    """
    g = parse_group(group)
    lam = lattice.as_weight(lam)
    lattice._check_len(rs, lam)
    if not lattice.is_integral(lam):
        raise InputError(f"weight {_fmt(lam)} is not integral")
    s, n = rs.type.series, rs.rank
    a = [int(x) for x in lam]
    if g[0] == "adjoint-C":
        if s != "C":
            raise InputError(f"adjoint-C needs a type C algebra, got {rs}")
        res, mod = sum(a[i] for i in range(0, n, 2)) % 2, 2
    elif g[0] == "adjoint-A-even":
        if s != "A" or (n + 1) % 2:
            raise InputError(f"adjoint-A-even needs A_r with r + 1 even, got {rs}")
        res, mod = sum(a[i] for i in range(0, n, 2)) % 2, 2
    else:
        mod = g[1]
        if s != "A" or mod != n + 1:
            raise InputError(f"su-center:{mod} needs type A{mod - 1}, got {rs}")
        res = sum((i + 1) * a[i] for i in range(n)) % mod
    return CenterCharacter(res, mod, res == 0)


def cartan_product(lam, mu) -> tuple:
    """Highest weight of the Cartan product: highest weights add."""
    if len(lam) != len(mu):
        raise InputError("weights of different lengths")
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(lam, mu))
