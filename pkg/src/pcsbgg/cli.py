"""Command-line front end: ``pcsbgg <subcommand> ...``.

Every subcommand prints one document on stdout in text, JSON or (for the
diagram subcommands) DOT.  Exit codes: 0 success, 1 oracle disagreement,
2 input error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bgg, descent, kostant, lattice, parabolic, repinfo
from .errors import InputError, ResourceGuardError

EXIT_OK, EXIT_ORACLE, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


# ---------------------------------------------------------------------------
# formatting helpers

def q(x) -> str:
    """Exact rational as a string: 2, -3, 1/2."""
    return str(Fraction(x))


def fmt_weight(w) -> str:
    return "(" + ", ".join(q(x) for x in w) + ")"


def fmt_word(word) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def fmt_nodes(nodes) -> str:
    return "{" + ",".join(str(i) for i in sorted(nodes)) + "}"


def fmt_root(r) -> str:
    return "(" + ",".join(str(c) for c in r) + ")"


def emit_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def emit_dot(diagram, name="hasse") -> str:
    """DOT for a HasseDiagram or BGGDiagram: nodes ranked by length/degree."""
    if isinstance(diagram, bgg.BGGDiagram):
        nodes = [(n.degree, f"{n.degree}: {fmt_weight(n.weight)}\\ndim {n.dim}")
                 for n in diagram.nodes]
        edges = [(e.source, e.target, f"order {e.order}") for e in diagram.edges]
    else:
        nodes = [(w.length, f"{w.length}: {fmt_word(w.word)}") for w in diagram.elements]
        edges = [(s, t, fmt_root(r)) for s, t, r in diagram.edge_indices()]
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
    for k, (deg, label) in enumerate(nodes):
        lines.append(f'  n{k} [label="{_dot_escape(label)}"];')
    for deg in sorted({d for d, _ in nodes}):
        members = " ".join(f"n{k};" for k, (d, _) in enumerate(nodes) if d == deg)
        lines.append(f"  {{ rank=same; {members} }}")
    for s, t, label in edges:
        lines.append(f'  n{s} -> n{t} [label="{_dot_escape(label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing helpers

def parse_int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def parse_weight(text: str) -> tuple:
    return lattice.as_weight(x.strip() for x in text.split(",") if x.strip())


def _root_system(alg):
    if alg is None:
        raise InputError("an algebra such as C3 is required")
    return lattice.build_root_system(alg)


def _parabolic(rs, text):
    if text is None:
        raise InputError("--cross is required")
    return parabolic.make_parabolic(rs, parse_int_list(text))


def _hasse_doc(rs, h):
    return {
        "algebra": str(rs),
        "elements": [{"word": list(w.word), "length": w.length} for w in h.elements],
        "edges": [{"from": s, "to": t, "root": list(r)} for s, t, r in h.edge_indices()],
    }


def _hasse_text(title, h):
    lines = [title, "length histogram: " + " ".join(map(str, h.length_counts()))]
    for k, w in enumerate(h.elements):
        lines.append(f"  [{k}] length {w.length}  {fmt_word(w.word)}")
    lines.append("edges:")
    for s, t, r in h.edge_indices():
        lines.append(f"  {s} -> {t}  root {fmt_root(r)}")
    return "\n".join(lines) + "\n"


def _same_diagram(a, b):
    return (set(a.elements) == set(b.elements)
            and a.length_counts() == b.length_counts()
            and a.edge_indices() == b.edge_indices())


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, document text)

def cmd_roots(args):
    rs = _root_system(args.algebra)
    if args.format == "json":
        return EXIT_OK, emit_json({
            "algebra": str(rs),
            "cartan": [list(r) for r in rs.cartan],
            "symmetrizer": list(rs.symmetrizer),
            "positive_roots": [list(r) for r in rs.positive_roots],
            "rho": [q(x) for x in rs.rho],
            "weyl_group_order": lattice.weyl_group_order(rs),
        })
    lines = [f"root system {rs}: {len(rs.positive_roots)} positive roots, "
             f"|W| = {lattice.weyl_group_order(rs)}", "cartan matrix:"]
    lines += ["  " + " ".join(f"{x:>2}" for x in row) for row in rs.cartan]
    lines.append("positive roots (simple-root coordinates):")
    lines += [f"  {fmt_root(r)}  height {sum(r)}" for r in rs.positive_roots]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_hasse(args):
    rs = _root_system(args.algebra)
    p = _parabolic(rs, args.cross)
    h = parabolic.hasse_diagram(p)
    verified = None
    if args.oracle:
        verified = _same_diagram(h, parabolic.brute_force_hasse(p))
    code = EXIT_ORACLE if verified is False else EXIT_OK
    if args.format == "dot":
        return code, emit_dot(h)
    if args.format == "json":
        doc = _hasse_doc(rs, h)
        doc["crossed"] = list(p.crossed)
        if verified is not None:
            doc["verified"] = verified
        return code, emit_json(doc)
    text = _hasse_text(f"Hasse diagram of {rs} with crossed nodes {fmt_nodes(p.crossed)}: "
                       f"{len(h.elements)} elements", h)
    if verified is not None:
        text += f"verified: {str(verified).lower()}\n"
    return code, text


def cmd_rel_hasse(args):
    rs = _root_system(args.algebra)
    p = _parabolic(rs, args.cross_p)
    qq = _parabolic(rs, args.cross_q)
    h = parabolic.relative_hasse(p, qq)
    if args.format == "dot":
        return EXIT_OK, emit_dot(h, "relative_hasse")
    if args.format == "json":
        doc = _hasse_doc(rs, h)
        doc.update(crossed_p=list(p.crossed), crossed_q=list(qq.crossed))
        return EXIT_OK, emit_json(doc)
    return EXIT_OK, _hasse_text(
        f"relative Hasse diagram of {rs}, crossed {fmt_nodes(p.crossed)} inside "
        f"{fmt_nodes(qq.crossed)}: {len(h.elements)} elements", h)


def cmd_kostant(args):
    rs = _root_system(args.algebra)
    p = _parabolic(rs, args.cross)
    lam = parse_weight(args.weight)
    if args.cross_q:
        table = kostant.relative_homology_weights(p, _parabolic(rs, args.cross_q), lam)
    else:
        table = kostant.homology_weights(p, lam)
    if args.format == "json":
        doc = {
            "algebra": str(rs), "crossed": list(p.crossed), "weight": [q(x) for x in lam],
            "degrees": [{"degree": k, "entries": [
                {"weight": [q(x) for x in e.weight], "word": list(e.word), "dim": e.dim}
                for e in table.degree_to_entries[k]]} for k in table.degrees],
        }
        if args.cross_q:
            doc["crossed_q"] = parse_int_list(args.cross_q)
        return EXIT_OK, emit_json(doc)
    lines = [f"homology weights for {rs}, crossed {fmt_nodes(p.crossed)}, lambda = {fmt_weight(lam)}"]
    for k, e in table.entries():
        lines.append(f"  H_{k}: {fmt_weight(e.weight)}  dim {e.dim}  [{fmt_word(e.word)}]")
    return EXIT_OK, "\n".join(lines) + "\n"


def _bgg_doc(d):
    doc = {
        "algebra": d.algebra,
        "crossed": list(d.crossed),
        "weight": [q(x) for x in d.weight],
        "relative": d.relative,
        "nodes": [{"degree": n.degree, "weight": [q(x) for x in n.weight], "dim": n.dim,
                   "word": list(n.word)} for n in d.nodes],
        "edges": [{"from": e.source, "to": e.target, "root": list(e.root), "order": e.order}
                  for e in d.edges],
        "integrable": d.integrable,
        "residue": d.residue,
        "group": d.group,
    }
    if d.crossed_q is not None:
        doc["crossed_q"] = list(d.crossed_q)
    return doc


def cmd_bgg(args):
    if args.preset:
        if args.algebra or args.cross or args.weight:
            raise InputError("--preset cannot be combined with an algebra, --cross or --weight")
        d = bgg.parse_preset(args.preset).build()
    else:
        rs = _root_system(args.algebra)
        p = _parabolic(rs, args.cross)
        if args.weight is None:
            raise InputError("--weight is required")
        lam = parse_weight(args.weight)
        if args.cross_q:
            d = bgg.build_relative_bgg(p, _parabolic(rs, args.cross_q), lam)
        else:
            d = bgg.build_bgg(p, lam, args.group)
    if args.format == "dot":
        return EXIT_OK, emit_dot(d, "bgg")
    if args.format == "json":
        return EXIT_OK, emit_json(_bgg_doc(d))
    kind = "relative BGG" if d.relative else "BGG"
    lines = [f"{kind} diagram for {d.algebra}, crossed {fmt_nodes(d.crossed)}"
             + (f" inside {fmt_nodes(d.crossed_q)}" if d.crossed_q else "")
             + f", lambda = {fmt_weight(d.weight)}",
             "bundles per degree: " + " ".join(map(str, d.degree_counts()))]
    if d.group is not None:
        lines.append(f"group {d.group}: residue {d.residue}, "
                     f"integrable {str(d.integrable).lower()}")
    for k, n in enumerate(d.nodes):
        lines.append(f"  [{k}] degree {n.degree}  {fmt_weight(n.weight)}  dim {n.dim}")
    lines.append("operators:")
    for e in d.edges:
        lines.append(f"  {e.source} -> {e.target}  order {e.order}  root {fmt_root(e.root)}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_mult(args):
    rs = _root_system(args.algebra)
    lam = parse_weight(args.weight)
    table = repinfo.freudenthal(rs, lam)
    kdim = x = None
    if args.x is not None:
        x = parse_weight(args.x)
        kdim = repinfo.kernel_dim(rs, lam, x)
    if args.format == "json":
        doc = {"algebra": str(rs), "weight": [q(c) for c in lam], "dim": table.dim,
               "multiplicities": [{"weight": [q(c) for c in mu], "mult": m}
                                  for mu, m in table.sorted_items()]}
        if x is not None:
            doc.update(x=[q(c) for c in x], kernel_dim=kdim)
        return EXIT_OK, emit_json(doc)
    lines = [f"V{fmt_weight(lam)} of {rs}: dim {table.dim}, "
             f"{len(table.weight_to_mult)} distinct weights"]
    lines += [f"  {fmt_weight(mu)}  mult {m}" for mu, m in table.sorted_items()]
    if x is not None:
        lines.append(f"kernel of X = {fmt_weight(x)}: dim {kdim}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_descend(args):
    if args.profile and args.cpn is not None:
        raise InputError("use either --profile or --cpn, not both")
    if args.profile:
        try:
            with open(args.profile) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read profile {args.profile}: {exc}") from None
        if not isinstance(doc, dict):
            raise InputError("profile JSON must be an object")
        prof = descent.CohomologyProfile.from_dict(doc)
    elif args.cpn is not None:
        if args.w1 is None:
            raise InputError("--cpn needs --w1")
        prof = descent.cpn_profile(args.cpn, args.w1)
    else:
        raise InputError("descend needs --profile FILE or --cpn N --w1 D")
    dims = descent.descended_cohomology(prof).dims
    verified = None
    if args.oracle:
        verified = descent.les_oracle(prof, args.seed).dims == dims
    code = EXIT_ORACLE if verified is False else EXIT_OK
    if args.format == "json":
        doc = {"dims": list(dims), "dim_M": prof.dim_M, "betti": list(prof.betti),
               "lefschetz_ranks": list(prof.lefschetz_ranks), "w1": prof.w1}
        if verified is not None:
            doc["verified"] = verified
        return code, emit_json(doc)
    lines = [f"descended complex over a manifold of dimension {prof.dim_M}, dim W_1 = {prof.w1}"]
    lines += [f"  H^{k}: {d}" for k, d in enumerate(dims)]
    if verified is not None:
        lines.append(f"verified: {str(verified).lower()}")
    return code, "\n".join(lines) + "\n"


def build_parser():
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "dot"), default="text")
    parser = _Parser(prog="pcsbgg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("roots", parents=[fmt], help="root system data")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_roots, dot=False)

    s = sub.add_parser("hasse", parents=[fmt], help="Hasse diagram of a parabolic")
    s.add_argument("algebra")
    s.add_argument("--cross", required=True)
    s.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    s.set_defaults(func=cmd_hasse, dot=True)

    s = sub.add_parser("rel-hasse", parents=[fmt], help="relative Hasse diagram")
    s.add_argument("algebra")
    s.add_argument("--cross-p", required=True)
    s.add_argument("--cross-q", required=True)
    s.set_defaults(func=cmd_rel_hasse, dot=True)

    s = sub.add_parser("kostant", parents=[fmt], help="homology weights")
    s.add_argument("algebra")
    s.add_argument("--cross", required=True)
    s.add_argument("--cross-q", help="larger crossed set; computes relative homology of --cross inside it")
    s.add_argument("--weight", required=True)
    s.set_defaults(func=cmd_kostant, dot=False)

    s = sub.add_parser("bgg", parents=[fmt], help="BGG diagram")
    s.add_argument("algebra", nargs="?")
    s.add_argument("--cross")
    s.add_argument("--cross-q", help="larger crossed set; builds the relative diagram of --cross inside it")
    s.add_argument("--weight")
    s.add_argument("--group", help="adjoint-C | adjoint-A-even | su-center:m")
    s.add_argument("--preset", help="ricci-type:n,k,... | bilagrangean:n,k,l,... | "
                                    "relative-parakahler:n,k,a1,...")
    s.set_defaults(func=cmd_bgg, dot=True)

    s = sub.add_parser("mult", parents=[fmt], help="weight multiplicities")
    s.add_argument("algebra")
    s.add_argument("--weight", required=True)
    s.add_argument("--x", help="Cartan element as omega-coordinate pairing; adds kernel dim")
    s.set_defaults(func=cmd_mult, dot=False)

    s = sub.add_parser("descend", parents=[fmt], help="cohomology of a descended complex")
    s.add_argument("--profile")
    s.add_argument("--cpn", type=int)
    s.add_argument("--w1", type=int)
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_descend, dot=False)
    return parser


def run(argv) -> tuple:
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(list(argv))
        if args.format == "dot" and not args.dot:
            raise InputError("--format dot is only available for hasse, rel-hasse and bgg")
        code, out = args.func(args)
        return code, out, ""
    except _UsageError as exc:
        return EXIT_INPUT, "", str(exc)
    except InputError as exc:
        return EXIT_INPUT, "", f"pcsbgg: input error: {exc}\n"
    except ResourceGuardError as exc:
        return EXIT_GUARD, "", f"pcsbgg: resource guard: {exc}\n"


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)  # argparse prints help and exits 0
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
