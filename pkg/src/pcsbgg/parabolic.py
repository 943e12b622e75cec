"""Parabolic subalgebras given by crossed Dynkin nodes, and their Hasse diagrams.

An element ``w`` of the Weyl group belongs to the Hasse diagram of a
parabolic exactly when every positive root that ``w^-1`` makes negative is
a root of the nilradical.  These are the minimal-length representatives of
the cosets ``W_levi w``; under the dot action they carry dominant weights
to weights that are dominant for the Levi factor.

Edges are Bruhat covers ``w -> s_beta w`` (left multiplication by the
reflection in a positive root ``beta``) raising the length by one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg, lattice
from .errors import InputError, ResourceGuardError
from .lattice import RootSystem, WeylElement


@dataclass(frozen=True)
class Parabolic:
    rs: RootSystem
    crossed: tuple
    p_plus_roots: tuple
    levi_simples: tuple

    def grading(self, lam) -> Fraction:
        """Value of the grading element on a root-lattice weight (omega coordinates)."""
        c = lattice.weight_to_root_basis(self.rs, lam)
        return sum((c[i - 1] for i in self.crossed), Fraction(0))

    def root_grade(self, root) -> int:
        return sum(root[i - 1] for i in self.crossed)

    @property
    def grading_element(self) -> tuple:
        """E as a functional on alpha coordinates: E(alpha_i) = 1 on crossed nodes."""
        return tuple(int(i + 1 in self.crossed) for i in range(self.rs.rank))

    @property
    def levi_roots(self) -> tuple:
        return tuple(r for r in self.rs.positive_roots if self.root_grade(r) == 0)

    def __str__(self):
        return f"{self.rs}/{{{','.join(map(str, self.crossed))}}}"


def make_parabolic(rs: RootSystem, crossed) -> Parabolic:
    crossed = tuple(sorted(set(crossed)))
    if not crossed:
        raise InputError("crossed node set must be non-empty (cross every node for the Borel)")
    for i in crossed:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise InputError(f"crossed node {i!r} out of range 1..{rs.rank}")
    plus = tuple(r for r in rs.positive_roots if any(r[i - 1] > 0 for i in crossed))
    levi = tuple(i for i in range(1, rs.rank + 1) if i not in crossed)
    return Parabolic(rs, crossed, plus, levi)


def is_contact_grading(p: Parabolic) -> bool:
    grades = [p.root_grade(r) for r in p.rs.positive_roots]
    return max(grades) == 2 and grades.count(2) == 1


@dataclass(frozen=True)
class HasseEdge:
    source: WeylElement
    target: WeylElement
    root: tuple


@dataclass(frozen=True)
class HasseDiagram:
    elements: tuple  # sorted by (length, word)
    edges: tuple  # sorted by (source index, target index)

    def by_length(self) -> dict:
        out = {}
        for w in self.elements:
            out.setdefault(w.length, []).append(w)
        return out

    def length_counts(self) -> list:
        top = max(w.length for w in self.elements)
        counts = [0] * (top + 1)
        for w in self.elements:
            counts[w.length] += 1
        return counts

    def index(self, w) -> int:
        return self.elements.index(w)

    def edge_indices(self) -> list:
        pos = {w: k for k, w in enumerate(self.elements)}
        return [(pos[e.source], pos[e.target], e.root) for e in self.edges]


def _assemble(rs, elements, roots):
    """Sort elements and attach every cover edge s_beta w for beta in ``roots``."""
    elements = sorted(set(elements), key=lambda w: (w.length, w.word))
    members = {w.action: w for w in elements}
    refl = [(beta, lattice.reflection_matrix(rs, beta)) for beta in roots]
    pos = {w: k for k, w in enumerate(elements)}
    edges = []
    for w in elements:
        for beta, s in refl:
            t = members.get(_linalg.matmul(s, w.action))
            if t is not None and t.length == w.length + 1:
                edges.append(HasseEdge(w, t, beta))
    edges.sort(key=lambda e: (pos[e.source], pos[e.target]))
    return HasseDiagram(tuple(elements), tuple(edges))


def _lower_set(rs, generators, allowed):
    """Elements of <s_i : i in generators> whose inversion sets lie in ``allowed``.

    Members have no left descents in the Levi factor, so the set is closed
    under dropping the last letter of a reduced word and a breadth-first
    search by right multiplication reaches all of it.
    """
    allowed = frozenset(allowed)
    e = lattice.identity_element(rs)
    found = {e}
    frontier = deque([e])
    mats = {i: lattice.element_from_word(rs, (i,)) for i in generators}
    while frontier:
        w = frontier.popleft()
        for i in generators:
            v = w * mats[i]
            if v.length == w.length + 1 and v not in found and v.inversion_set <= allowed:
                found.add(v)
                frontier.append(v)
    return found


def hasse_diagram(p: Parabolic) -> HasseDiagram:
    rs = p.rs
    elems = _lower_set(rs, range(1, rs.rank + 1), p.p_plus_roots)
    return _assemble(rs, elems, rs.positive_roots)


def brute_force_hasse(p: Parabolic, limit=10**6) -> HasseDiagram:
    """Independent check of :func:`hasse_diagram`: filter the whole Weyl group.

    Cover edges are found by testing every pair of adjacent lengths for a
    reflection quotient, without reusing the reflection list of the fast path.
    """
    rs = p.rs
    if lattice.weyl_group_order(rs) > limit:
        raise ResourceGuardError(
            f"|W({rs})| = {lattice.weyl_group_order(rs)} exceeds guard {limit}")
    allowed = frozenset(p.p_plus_roots)
    elems = [w for w in lattice.weyl_group(rs, limit=limit) if w.inversion_set <= allowed]
    elems.sort(key=lambda w: (w.length, w.word))
    pos = {w: k for k, w in enumerate(elems)}
    edges = []
    for u in elems:
        u_inv = u.inverse()
        for v in elems:
            if v.length != u.length + 1:
                continue
            q = v * u_inv
            beta = _reflection_root(rs, q)
            if beta is not None:
                edges.append(HasseEdge(u, v, beta))
    edges.sort(key=lambda e: (pos[e.source], pos[e.target]))
    return HasseDiagram(tuple(elems), tuple(edges))


def _reflection_root(rs, q):
    """The positive root beta with q = s_beta, or None when q is not a reflection."""
    # A reflection fixes a hyperplane: q - 1 has rank one and q^2 = 1.
    n = rs.rank
    diff = [[q.action[r][c] - int(r == c) for c in range(n)] for r in range(n)]
    if q.length == 0 or (q * q).length != 0:
        return None
    if _linalg.rank(diff) != 1:
        return None
    # q(rho) = rho - <rho, beta^vee> beta, so rho - q(rho) is a positive multiple of beta
    moved = [Fraction(1) - x for x in q(rs.rho)]
    c = lattice.weight_to_root_basis(rs, moved)
    g = 0
    for x in c:
        g = _gcd(g, abs(int(x)))
    return tuple(int(x) // g for x in c)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def relative_hasse(p: Parabolic, q: Parabolic) -> HasseDiagram:
    """Hasse diagram of q inside the Levi factor of p, embedded in the ambient group.

    Requires ``p.crossed`` to be a proper subset of ``q.crossed``, so that
    g contains p which contains q.
    """
    if p.rs != q.rs:
        raise InputError("parabolics live in different root systems")
    if not set(p.crossed) < set(q.crossed):
        raise InputError(
            f"crossed nodes {p.crossed} must be a proper subset of {q.crossed}")
    rs = p.rs
    levi = set(p.levi_simples)
    in_levi = [r for r in rs.positive_roots
               if all(r[i - 1] == 0 for i in range(1, rs.rank + 1) if i not in levi)]
    inner_crossed = set(q.crossed) - set(p.crossed)
    allowed = [r for r in in_levi if any(r[i - 1] > 0 for i in inner_crossed)]
    elems = _lower_set(rs, sorted(levi), allowed)
    return _assemble(rs, elems, in_levi)
