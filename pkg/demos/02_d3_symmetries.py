"""The lattice D3 = {x in Z[w]^3 : x1 + x2 + x3 = 0 mod theta} and its symmetry groups.

Run time is a couple of seconds: the full automorphism group (order 1296)
is found by backtracking over short vectors.
"""

from eisenlattice.constructions import A1, A2, d3, triflection_in
from eisenlattice.groups import discriminant_action, full_aut_definite, to_ambient_matrix, weyl_group
from eisenlattice.io import render_vector
from eisenlattice.lattice import discriminant_group, short_vectors, signature

lat = d3()
print("Gram matrix of D3 in the basis (1,-1,0), (0,1,-1), (0,0,theta):")
print(lat.gram.pretty())
print("signature", signature(lat), " disc", lat.disc())

roots = short_vectors(lat, 2)
print(f"\n{len(roots)} vectors of norm 2, e.g. {render_vector(lat.to_ambient(roots.vectors[0]))}")

w = weyl_group(lat)
print("reflection group generated by them has order", w.order())

aut = full_aut_definite(lat)
print("full isometry group has order", aut.order())

space = discriminant_group(lat)
print("\ndiscriminant group: order", space.order(), "invariant factors",
      [str(d) for d in space.invariant_factors])
hom = discriminant_action(aut, lat)
print("image of Aut(D3) acting on it has order", hom.image().order())
print("kernel of that action equals the reflection group:",
      set(hom.kernel()) == set(w.elements))

s1 = triflection_in(lat, A1)
s2 = triflection_in(lat, A2)
print("\ntriflection in (0,0,theta), written on Z[w]^3:")
print(to_ambient_matrix(lat, s1).pretty())
print("triflection in (1,1,w) preserves D3 but not Z[w]^3; on Z[w]^3 it is")
print(to_ambient_matrix(lat, s2).pretty())
