"""Root systems, weights and Weyl group elements in exact arithmetic.

Conventions
-----------
* Simple roots and nodes are numbered 1..rank following Bourbaki.
* Row ``i`` of the Cartan matrix is the simple root ``alpha_i`` written in
  fundamental-weight coordinates, i.e. ``A[i][j] = <alpha_i, alpha_j^vee>``.
* Weights are tuples of :class:`fractions.Fraction` in the basis of
  fundamental weights; roots are integer tuples in the basis of simple roots.
* A Weyl group element acts on weight coordinates through an integer matrix;
  two elements are equal exactly when their matrices are.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg
from .errors import InputError, ResourceGuardError

SERIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

Weight = tuple  # tuple[Fraction, ...] in the omega basis
Root = tuple  # tuple[int, ...] in the alpha basis


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise InputError(f"unsupported series {self.series!r}; expected one of {SERIES}")
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.series]:
            raise InputError(
                f"{self.series}{self.rank}: rank must be >= {_MIN_RANK[self.series]}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse ``"C3"``, ``"a4"``, ``"D_4"``."""
        m = re.fullmatch(r"\s*([A-Za-z])_?(\d+)\s*", text)
        if not m:
            raise InputError(f"cannot parse algebra {text!r}; expected e.g. 'C3'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def as_weight(coeffs) -> Weight:
    """Coerce ints, Fractions or strings like ``"1/2"`` to an exact weight tuple."""
    try:
        return tuple(Fraction(c) for c in coeffs)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad weight coefficients {coeffs!r}: {exc}") from None


def _cartan_matrix(series, n):
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    chain = n - 1 if series == "D" else n
    for i in range(chain - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if series == "B":
        # alpha_n short
        a[n - 2][n - 1], a[n - 1][n - 2] = -2, -1
    elif series == "C":
        # alpha_n long
        a[n - 2][n - 1], a[n - 1][n - 2] = -1, -2
    elif series == "D":
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(series, n):
    # d_i proportional to 1 / |alpha_i|^2
    if series == "B":
        return (1,) * (n - 1) + (2,)
    if series == "C":
        return (2,) * (n - 1) + (1,)
    return (1,) * n


@dataclass(frozen=True)
class RootSystem:
    type: LieType
    cartan: tuple
    symmetrizer: tuple
    positive_roots: tuple
    rho: Weight
    # derived data, kept out of equality/repr
    inverse_cartan: tuple = field(repr=False, compare=False)
    half_lengths: tuple = field(repr=False, compare=False)
    form: tuple = field(repr=False, compare=False)
    # integer rows r with r . v = (lcm of symmetrizer) * (v, alpha) for v in omega coords
    root_pairings: tuple = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def simple_roots(self) -> tuple:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    def __str__(self):
        return str(self.type)


def build_root_system(type) -> RootSystem:
    """Construct the root datum of a classical simple Lie algebra.

    ``type`` may be a :class:`LieType` or a string such as ``"C3"``.
    Positive roots are ordered by height, then by descending coefficient
    tuple, so the simple roots come first as alpha_1, ..., alpha_n.
    """
    if isinstance(type, str):
        type = LieType.parse(type)
    n = type.rank
    cartan = _cartan_matrix(type.series, n)
    sym = _symmetrizer(type.series, n)
    half = tuple(Fraction(1, d) for d in sym)  # (alpha_j, alpha_j) / 2
    inv = _linalg.inverse(cartan)
    # (omega_i, omega_j) = (A^-1)_ij * |alpha_j|^2 / 2
    form = tuple(tuple(inv[i][j] * half[j] for j in range(n)) for i in range(n))
    roots = _positive_roots(cartan)
    rho = tuple(Fraction(1) for _ in range(n))
    big = 1
    for d in sym:
        big = big * d // _gcd(big, d)
    pairings = tuple(tuple(r[j] * big // sym[j] for j in range(n)) for r in roots)
    return RootSystem(type, cartan, sym, roots, rho, inv, half, form, pairings)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _positive_roots(cartan):
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: p - q = <beta, alpha_i^vee>
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), tuple(-c for c in r))))


def _check_len(rs, *vecs):
    for v in vecs:
        if len(v) != rs.rank:
            raise InputError(f"expected {rs.rank} coordinates, got {len(v)}")


def root_to_weight(rs: RootSystem, root) -> Weight:
    """Express a root-lattice vector (alpha basis) in omega coordinates."""
    _check_len(rs, root)
    return tuple(Fraction(sum(root[i] * rs.cartan[i][j] for i in range(rs.rank)))
                 for j in range(rs.rank))


def weight_to_root_basis(rs: RootSystem, lam) -> tuple:
    """Coordinates ``c`` with ``lam = sum c_i alpha_i``."""
    _check_len(rs, lam)
    inv = rs.inverse_cartan
    return tuple(sum(Fraction(lam[i]) * inv[i][j] for i in range(rs.rank))
                 for j in range(rs.rank))


def inner_product(rs: RootSystem, x, y) -> Fraction:
    """Weyl-invariant form on omega coordinates, normalised by (alpha_i, omega_j) = delta_ij |alpha_i|^2/2."""
    _check_len(rs, x, y)
    n = rs.rank
    return sum((Fraction(x[i]) * rs.form[i][j] * y[j] for i in range(n) for j in range(n)
                if x[i] and y[j]), Fraction(0))


def root_inner(rs: RootSystem, lam, root) -> Fraction:
    """(lam, root) with lam in omega coordinates and root in alpha coordinates."""
    return sum((Fraction(lam[j]) * root[j] * rs.half_lengths[j] for j in range(rs.rank)),
               Fraction(0))


def root_norm2(rs: RootSystem, root) -> Fraction:
    return root_inner(rs, root_to_weight(rs, root), root)


def coroot_pairing(rs: RootSystem, lam, root) -> Fraction:
    """<lam, root^vee> = 2 (lam, root) / (root, root)."""
    return 2 * root_inner(rs, lam, root) / root_norm2(rs, root)


# ---------------------------------------------------------------------------
# Weyl group

@dataclass(frozen=True, eq=False)
class WeylElement:
    rs: RootSystem = field(repr=False)
    word: tuple
    action: tuple
    length: int
    inversion_set: frozenset = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __call__(self, lam) -> Weight:
        """Linear action on omega coordinates."""
        return tuple(Fraction(x) for x in _linalg.matvec(self.action, lam))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return element_from_matrix(self.rs, _linalg.matmul(self.action, other.action))

    def inverse(self) -> "WeylElement":
        return element_from_word(self.rs, tuple(reversed(self.word)))

    def apply_root(self, root) -> Root:
        """Image of a root (alpha coordinates) under the element."""
        img = self(root_to_weight(self.rs, root))
        return tuple(int(c) for c in weight_to_root_basis(self.rs, img))


def simple_reflection_matrix(rs: RootSystem, i: int) -> tuple:
    """Matrix of s_i (1-indexed) on omega coordinates: x -> x - x_i alpha_i."""
    n = rs.rank
    a = rs.cartan[i - 1]
    return tuple(tuple(int(r == c) - (a[r] if c == i - 1 else 0) for c in range(n))
                 for r in range(n))


def reflection_matrix(rs: RootSystem, root) -> tuple:
    """Matrix of the reflection s_beta for a positive root beta (alpha coordinates)."""
    n = rs.rank
    beta_w = root_to_weight(rs, root)
    norm = root_norm2(rs, root) / 2
    cor = [root[c] * rs.half_lengths[c] / norm for c in range(n)]
    return tuple(tuple(int(int(r == c) - cor[c] * beta_w[r]) for c in range(n))
                 for r in range(n))


def element_from_matrix(rs: RootSystem, action) -> WeylElement:
    """Wrap an action matrix, deriving the lexicographically least reduced word."""
    action = tuple(tuple(int(x) for x in row) for row in action)
    v = [sum(row) for row in action]  # w(rho)
    inv = frozenset(r for r, pr in zip(rs.positive_roots, rs.root_pairings)
                    if sum(a * b for a, b in zip(pr, v)) < 0)
    word = []
    while True:
        # left descents of w are the i with (w rho)_i < 0
        i = next((k for k in range(rs.rank) if v[k] < 0), None)
        if i is None:
            break
        word.append(i + 1)
        vi = v[i]
        v = [v[r] - vi * rs.cartan[i][r] for r in range(rs.rank)]
        if len(word) > len(rs.positive_roots):
            raise InputError("matrix is not a Weyl group element")
    if any(x != 1 for x in v):
        raise InputError("matrix is not a Weyl group element")
    return WeylElement(rs, tuple(word), action, len(word), inv)


def identity_element(rs: RootSystem) -> WeylElement:
    return element_from_matrix(rs, _linalg.identity(rs.rank))


def element_from_word(rs: RootSystem, word) -> WeylElement:
    """Compose simple reflections; ``(1, 2)`` means s_1 after s_2 (s_2 acts first)."""
    m = _linalg.identity(rs.rank)
    for i in word:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise InputError(f"reflection index {i!r} out of range 1..{rs.rank}")
        m = _linalg.matmul(m, simple_reflection_matrix(rs, i))
    return element_from_matrix(rs, m)


def affine_act(rs: RootSystem, w: WeylElement, lam) -> Weight:
    """Dot action w.lam = w(lam + rho) - rho."""
    _check_len(rs, lam)
    shifted = tuple(Fraction(x) + r for x, r in zip(lam, rs.rho))
    return tuple(x - r for x, r in zip(w(shifted), rs.rho))


def weyl_group_order(rs: RootSystem) -> int:
    n = rs.rank
    s = rs.type.series
    fact = 1
    for k in range(2, n + 2 if s == "A" else n + 1):
        fact *= k
    if s == "A":
        return fact
    if s in "BC":
        return 2 ** n * fact
    return 2 ** (n - 1) * fact


def weyl_group(rs: RootSystem, generators=None, limit=10**6) -> list:
    """All elements generated by the given simple reflections (default: all).

    Enumerated as the orbit of rho, which the group acts on simply
    transitively; sorted by length then word.
    """
    gens = list(range(1, rs.rank + 1)) if generators is None else sorted(generators)
    if generators is None and weyl_group_order(rs) > limit:
        raise ResourceGuardError(f"|W({rs})| = {weyl_group_order(rs)} exceeds {limit}")
    mats = {i: simple_reflection_matrix(rs, i) for i in gens}
    start = _linalg.identity(rs.rank)
    seen = {tuple(rs.rho): start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for i in gens:
            m2 = _linalg.matmul(mats[i], m)
            key = _linalg.matvec(m2, rs.rho)
            if key not in seen:
                if len(seen) >= limit:
                    raise ResourceGuardError(f"group enumeration exceeded {limit} elements")
                seen[key] = m2
                queue.append(m2)
    elems = [element_from_matrix(rs, m) for m in seen.values()]
    elems.sort(key=lambda w: (w.length, w.word))
    return elems


def is_dominant(lam, nodes=None) -> bool:
    idx = range(len(lam)) if nodes is None else [i - 1 for i in nodes]
    return all(lam[i] >= 0 for i in idx)


def is_integral(lam, nodes=None) -> bool:
    idx = range(len(lam)) if nodes is None else [i - 1 for i in nodes]
    return all(Fraction(lam[i]).denominator == 1 for i in idx)


def dominant_representative(rs: RootSystem, lam) -> Weight:
    """The unique dominant weight in the W-orbit of an integral weight."""
    v = list(lam)
    while True:
        i = next((k for k in range(rs.rank) if v[k] < 0), None)
        if i is None:
            return tuple(v)
        vi = v[i]
        v = [v[r] - vi * rs.cartan[i][r] for r in range(rs.rank)]
