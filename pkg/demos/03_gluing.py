"""From D3 and the hyperbolic plane H to an odd unimodular lattice of signature (4,1).

Both discriminant groups are copies of the 9-element space V; gluing along
the graph of an anti-isometry gives an index-9 overlattice with trivial
discriminant. The same picture appears concretely inside
LAMBDA = Z[w]^5 with form diag(-1, 1, 1, 1, 1).
"""

from eisenlattice.constructions import build_glue, h_lattice, verify_explicit_embedding
from eisenlattice.finite_space import aut_group, make_V
from eisenlattice.lattice import discriminant_group

V = make_V()
print("V has", V.order(), "elements; its isometry group has order", aut_group(V).order())
print("D(H) has order", discriminant_group(h_lattice()).order())

g = build_glue()
print(f"\nglued lattice: index {g.index}, det {g.determinant}, signature {g.signature}")
print("D(D3 + H) is V + V(-1):", g.disc_is_v_plus_v_twisted)
print("Gram of the glued lattice:")
print(g.glued.gram.pretty())

rep = verify_explicit_embedding()
print("\nexplicit copy L0 of D3 inside LAMBDA")
print("  isometric to D3:", rep.witness is not None, " primitive:", rep.primitive)
print("  orthogonal complement equals M0:", rep.complement_matches_m0)
print("  Gram of M0:")
print(rep.m0_gram.pretty())
