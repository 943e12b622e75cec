"""Lagrangean contact gradings: the Hasse diagram is a diamond.

Crossing the two end nodes of A_{n+1} gives i+1 irreducible pieces in
degree i up to the middle, then the mirror image.
"""

from pcsbgg import build_bgg, build_root_system, hasse_diagram, make_parabolic

for n in (2, 3, 4):
    p = make_parabolic(build_root_system(f"A{n + 1}"), [1, n + 1])
    print(f"A{n + 1} crossed {{1,{n + 1}}}:", hasse_diagram(p).length_counts())

p = make_parabolic(build_root_system("A3"), [1, 3])
k, ell = 1, 3
d = build_bgg(p, (k, 0, ell), "adjoint-A-even")
print()
print(f"weight ({k}, 0, {ell}), integrable on PSL(4): {d.integrable}")
for node in d.nodes:
    print(f"  degree {node.degree}: {tuple(map(str, node.weight))}  dim {node.dim}")
first = sorted(e.order for e in d.edges if d.nodes[e.source].degree == 0)
print("orders leaving degree 0:", first, "(k+1 and l+1)")
print("Euler characteristic:", d.euler_characteristic())
