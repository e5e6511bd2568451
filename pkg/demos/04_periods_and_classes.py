"""The period point j0(tau) = tau*v1 + v2 and the three stabilizer classes.

The lattice side reads the class off the reduced point (w-corner, i, or
generic); the elliptic side reads it off j(tau). They agree everywhere on
the test grid. The Hesse pencil x^3 + y^3 + z^3 + 6 lam xyz gives a third
view of the same trichotomy.
"""

from eisenlattice.constructions import j0, stabilizer_class_lattice
from eisenlattice.modular import (
    LAMBDA_STAR,
    RHO,
    classify_lambda,
    classify_tau_elliptic,
    fundamental_grid,
    hesse_j,
    j_invariant,
)

for tau in (RHO, 1j, complex(0.2, 1.7)):
    p = j0(tau)
    print(f"tau = {tau:.4f}: norm(j0) = {p.norm:+.6f}  j = {j_invariant(tau).real:12.4f}  "
          f"class {stabilizer_class_lattice(tau).name}")

grid = fundamental_grid(40)
agree = sum(stabilizer_class_lattice(t) == classify_tau_elliptic(t) for t in grid)
print(f"\nlattice and elliptic classifiers agree on {agree}/{len(grid)} grid points")

print("\nHesse pencil:")
for lam in (0, 1, LAMBDA_STAR, 0.5):
    print(f"  lam = {lam:.6f}: j = {hesse_j(lam).real:10.4f}  class {classify_lambda(lam).name}")
try:
    classify_lambda(-0.5)
except ValueError as exc:
    print("  lam = -0.5:", exc)
