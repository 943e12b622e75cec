"""Weight-level BGG diagrams: bundles as homology weights, operators as Hasse covers.

The order attached to an edge ``w -> w'`` is the drop in weighted
homogeneity, ``E(w.lam - w'.lam)``, for the grading element ``E`` of the
parabolic.  For the first operators of the contact gradings this is the
usual order (``k+1``, ``l+1``).  Past the middle of a contact sequence the
number counts the 2-graded direction twice and is a weighted order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import kostant, lattice, parabolic, repinfo
from .errors import InputError
from .lattice import LieType, build_root_system


@dataclass(frozen=True)
class BGGNode:
    degree: int
    weight: tuple
    dim: int
    word: tuple


@dataclass(frozen=True)
class BGGEdge:
    source: int
    target: int
    order: int
    root: tuple


@dataclass(frozen=True)
class BGGDiagram:
    algebra: str
    crossed: tuple
    weight: tuple
    nodes: tuple
    edges: tuple
    integrable: bool | None = None
    residue: int | None = None
    group: str | None = None
    relative: bool = False
    crossed_q: tuple | None = None

    def degree_counts(self) -> list:
        top = max(n.degree for n in self.nodes)
        counts = [0] * (top + 1)
        for n in self.nodes:
            counts[n.degree] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** n.degree * n.dim for n in self.nodes)


def operator_order(p: parabolic.Parabolic, lam, edge) -> int:
    """Weighted order of the operator attached to a cover ``edge = (w, w')``."""
    w, w2 = edge
    rs = p.rs
    if w2.length != w.length + 1 or parabolic._reflection_root(rs, w2 * w.inverse()) is None:
        raise InputError(f"{w2.word} does not cover {w.word}")
    a = lattice.affine_act(rs, w, lam)
    b = lattice.affine_act(rs, w2, lam)
    order = p.grading(tuple(x - y for x, y in zip(a, b)))
    if order.denominator != 1 or order <= 0:
        raise InputError(f"edge {w.word} -> {w2.word} has non-positive order {order}")
    return int(order)


def _assemble(p_grading, table, diagram, lam, **meta):
    nodes = []
    index = {}
    for k, entry in table.entries():
        index[entry.element] = len(nodes)
        nodes.append(BGGNode(k, entry.weight, entry.dim, entry.word))
    edges = []
    for e in diagram.edges:
        order = operator_order(p_grading, lam, (e.source, e.target))
        edges.append(BGGEdge(index[e.source], index[e.target], order, e.root))
    edges.sort(key=lambda e: (e.source, e.target))
    return BGGDiagram(nodes=tuple(nodes), edges=tuple(edges), weight=tuple(lam), **meta)


def build_bgg(p: parabolic.Parabolic, lam, group=None) -> BGGDiagram:
    """BGG diagram for the dominant integral weight ``lam``.

    With a ``group`` tag the diagram records whether V(lam) descends to the
    corresponding quotient group; non-integrable weights still get a diagram.
    """
    lam = lattice.as_weight(lam)
    if not parabolic.is_contact_grading(p):
        warnings.warn(f"{p} is not a contact grading; building the diagram anyway",
                      stacklevel=2)
    table = kostant.homology_weights(p, lam)
    integrable = residue = None
    if group is not None:
        ch = repinfo.center_character(p.rs, lam, group)
        integrable, residue = ch.integrable, ch.residue
        group = ":".join(map(str, repinfo.parse_group(group)))
    return _assemble(p, table, parabolic.hasse_diagram(p), lam,
                     algebra=str(p.rs), crossed=p.crossed, integrable=integrable,
                     residue=residue, group=group)


def build_relative_bgg(p: parabolic.Parabolic, q: parabolic.Parabolic, lam) -> BGGDiagram:
    lam = lattice.as_weight(lam)
    table = kostant.relative_homology_weights(p, q, lam)
    return _assemble(q, table, parabolic.relative_hasse(p, q), lam,
                     algebra=str(p.rs), crossed=p.crossed, crossed_q=q.crossed,
                     relative=True)


# ---------------------------------------------------------------------------
# presets for the three families

@dataclass(frozen=True)
class Preset:
    name: str
    p: parabolic.Parabolic
    weight: tuple
    group: str | None = None
    q: parabolic.Parabolic | None = None

    def build(self) -> BGGDiagram:
        if self.q is not None:
            return build_relative_bgg(self.p, self.q, self.weight)
        return build_bgg(self.p, self.weight, self.group)


PRESETS = ("ricci-type", "bilagrangean", "relative-parakahler")


def _nonneg_ints(values, what):
    out = []
    for v in values:
        f = _rational(v)
        if f.denominator != 1 or f < 0:
            raise InputError(f"{what} must be non-negative integers, got {v!r}")
        out.append(int(f))
    return out


def _rational(v):
    try:
        return Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f"not a rational number: {v!r}") from None


def _pad(levi, size, what):
    if len(levi) > size:
        raise InputError(f"{what}: at most {size} Levi coefficients, got {len(levi)}")
    return list(levi) + [0] * (size - len(levi))


def preset(name: str, *params) -> Preset:
    """Inputs for the three families of sequences on PCS-structures.

    * ``ricci-type(n, k, *levi)``: C_{n+1} with node 1 crossed, weight
      ``k w_1 + a_2 w_2 + ... + a_{n+1} w_{n+1}``; complexes on conformally
      Fedosov manifolds of dimension 2n whose connection is of Ricci type.
    * ``bilagrangean(n, k, l, *levi)``: A_{n+1} with nodes 1 and n+1 crossed,
      weight ``k w_1 + a_2 w_2 + ... + a_n w_n + l w_{n+1}``; para-Kaehler
      type, n >= 3.  For odd n, PGL(n+2) = SL(n+2) and no parity check applies.
    * ``relative-parakahler(n, k, a_1=0, *levi)``: A_{n+1}, p crossed {1},
      q crossed {1, n+1}, weight ``a_1 w_1 + a_2 w_2 + ... + a_n w_n + k w_{n+1}``
      with rational ``a_1``.
    """
    if name not in PRESETS:
        raise InputError(f"unknown preset {name!r}; expected one of {PRESETS}")
    if len(params) < 2:
        raise InputError(f"preset {name} needs at least n and k")
    if name == "relative-parakahler":
        n, k = _nonneg_ints(params[:2], "n, k")
        a1 = _rational(params[2]) if len(params) > 2 else Fraction(0)
        levi = _nonneg_ints(params[3:], "Levi coefficients")
    else:
        head = 3 if name == "bilagrangean" else 2
        if len(params) < head:
            raise InputError(f"preset {name} needs n, k{', l' if head == 3 else ''}")
        first = _nonneg_ints(params[:head], "preset parameters")
        n, k = first[0], first[1]
        levi = _nonneg_ints(params[head:], "Levi coefficients")

    if name == "ricci-type":
        if n < 2:
            raise InputError("ricci-type needs n >= 2")
        rs = build_root_system(LieType("C", n + 1))
        lam = [k] + _pad(levi, n, name)
        return Preset(name, parabolic.make_parabolic(rs, [1]), lattice.as_weight(lam), "adjoint-C")
    if name == "bilagrangean":
        ell = first[2]
        if n < 3:
            raise InputError("bilagrangean needs n >= 3 (dimension 2n >= 6)")
        rs = build_root_system(LieType("A", n + 1))
        lam = [k] + _pad(levi, n - 1, name) + [ell]
        group = "adjoint-A-even" if n % 2 == 0 else None
        return Preset(name, parabolic.make_parabolic(rs, [1, n + 1]), lattice.as_weight(lam), group)
    if n < 2:
        raise InputError("relative-parakahler needs n >= 2")
    rs = build_root_system(LieType("A", n + 1))
    lam = [a1] + _pad(levi, n - 1, name) + [k]
    return Preset(name, parabolic.make_parabolic(rs, [1]), lattice.as_weight(lam), None,
                  parabolic.make_parabolic(rs, [1, n + 1]))


def parse_preset(text: str) -> Preset:
    """``"ricci-type:2,0,3"`` -> preset("ricci-type", 2, 0, 3)."""
    name, _, rest = text.partition(":")
    params = [x.strip() for x in rest.split(",") if x.strip()] if rest else []
    return preset(name.strip(), *params)
