"""A short walk through Z[w]: units, division with remainder, gcds and residues mod theta."""

from eisenlattice.ring import OMEGA, THETA, UNITS, EisensteinInt, gcd, reduce_mod_theta, xgcd, euclid_div

print("w =", OMEGA, " theta = w - w^2 =", THETA, " theta^2 =", THETA * THETA)
print("the six units, as powers of 1 + w:", ", ".join(str(u) for u in UNITS))

x, y = EisensteinInt(17, -5), EisensteinInt(3, 4)
q, r = euclid_div(x, y)
print(f"\n{x} = ({q}) * ({y}) + ({r}),  N(r) = {r.norm()} < N(y) = {y.norm()}")

a, b = EisensteinInt(12, 3), EisensteinInt(9, 9)
g, s, t = xgcd(a, b)
print(f"gcd({a}, {b}) = {g}  with  ({s})*({a}) + ({t})*({b}) = {s * a + t * b}")
print("gcd(theta, 3) =", gcd(THETA, 3), "(3 = -theta^2 up to a unit)")

print("\nreduction mod theta lands in F_3 = {0, 1, 2}:")
for z in (OMEGA, OMEGA * OMEGA, EisensteinInt(5), THETA, EisensteinInt(2, 7)):
    print(f"  {str(z):>8} -> {int(reduce_mod_theta(z))}")
