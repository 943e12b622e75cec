"""Weights of the Lie algebra homology of a nilradical with coefficients in V(lam).

For a dominant integral ``lam``, degree ``k`` homology splits into
irreducible Levi representations whose weights are ``w . lam`` for the
length-``k`` elements ``w`` of the Hasse diagram.  The weights reported are
these dot-action images.  Labelling representations by the negatives of
their lowest weights, as is common for parabolic geometries, gives the same
numbers, so no conversion happens here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice, parabolic, repinfo
from .errors import InputError


@dataclass(frozen=True)
class HomologyEntry:
    weight: tuple
    word: tuple
    dim: int
    element: lattice.WeylElement


@dataclass(frozen=True)
class HomologyTable:
    degree_to_entries: dict  # degree -> list[HomologyEntry]

    @property
    def degrees(self):
        return sorted(self.degree_to_entries)

    def entries(self):
        for k in self.degrees:
            yield from ((k, e) for e in self.degree_to_entries[k])

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * e.dim for k, e in self.entries())


def _table(p_levi, diagram, lam):
    rs = p_levi.rs
    out = {}
    for w in diagram.elements:
        mu = lattice.affine_act(rs, w, lam)
        out.setdefault(w.length, []).append(
            HomologyEntry(mu, w.word, repinfo.levi_dim(p_levi, mu), w))
    return HomologyTable(out)


def homology_weights(p: parabolic.Parabolic, lam) -> HomologyTable:
    lam = lattice.as_weight(lam)
    lattice._check_len(p.rs, lam)
    if not (lattice.is_integral(lam) and lattice.is_dominant(lam)):
        raise InputError("homology weights need a dominant integral weight, got "
                         + repinfo._fmt(lam))
    return _table(p, parabolic.hasse_diagram(p), lam)


def relative_homology_weights(p: parabolic.Parabolic, q: parabolic.Parabolic, lam) -> HomologyTable:
    """Weights of H_*(q_+/p_+, V) for an irreducible p-representation V.

    ``lam`` may carry arbitrary rational coefficients at the nodes crossed
    for ``p``; every other coefficient must be a non-negative integer.  The
    dot action uses the rho of the whole algebra.  Dimensions are over the
    Levi factor of ``q``.
    """
    diagram = parabolic.relative_hasse(p, q)  # validates nesting
    lam = lattice.as_weight(lam)
    lattice._check_len(p.rs, lam)
    if not (lattice.is_integral(lam, p.levi_simples) and lattice.is_dominant(lam, p.levi_simples)):
        raise InputError(f"weight {repinfo._fmt(lam)} must be dominant integral at nodes "
                         f"{p.levi_simples}")
    return _table(q, diagram, lam)
