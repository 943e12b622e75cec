"""Contact projective BGG sequences: one bundle per degree.

Cross the first node of C_{n+1}.  The Hasse diagram is a chain, so every
homology group is irreducible and the sequence is a straight line of
operators.  We print the weights, the dimensions of the Levi
representations and the weighted orders of the operators.
"""

from pcsbgg import build_bgg, build_root_system, make_parabolic

for n in (2, 3):
    p = make_parabolic(build_root_system(f"C{n + 1}"), [1])
    k, ell = 2, 1
    lam = (k, ell) + (0,) * (n - 1)
    d = build_bgg(p, lam, "adjoint-C")
    print(f"C{n + 1}, lambda = {lam}, descends to the adjoint group: {d.integrable}")
    for node in d.nodes:
        print(f"  degree {node.degree}: weight {tuple(map(str, node.weight))}, dim {node.dim}")
    # the first two orders are k+1 and l+1; the rest mirror them
    print("  orders:", [e.order for e in d.edges])
    print()

# an odd coefficient at an odd node: the weights still make sense,
# but the representation does not integrate to the adjoint group
d = build_bgg(make_parabolic(build_root_system("C3"), [1]), (1, 0, 0), "adjoint-C")
print("C3, lambda = (1, 0, 0): integrable =", d.integrable, "residue =", d.residue)
