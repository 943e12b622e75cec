"""Relative BGG sequence for nested parabolics in A_{n+1}.

The smaller parabolic crosses node 1, the larger one nodes 1 and n+1.
The coefficient at node 1 may be any rational number, which is what makes
the relative sequence useful on para-Kaehler type structures.
"""

from fractions import Fraction

from pcsbgg import build_relative_bgg, build_root_system, make_parabolic, relative_hasse

n = 3
rs = build_root_system(f"A{n + 1}")
p, q = make_parabolic(rs, [1]), make_parabolic(rs, [1, n + 1])
h = relative_hasse(p, q)
print("relative Hasse diagram:", [w.word for w in h.elements])

lam = (Fraction(1, 2), 1, 0, 2)
d = build_relative_bgg(p, q, lam)
for node in d.nodes:
    print(f"  degree {node.degree}: {tuple(map(str, node.weight))}  dim {node.dim}")
print("orders:", [e.order for e in d.edges])
