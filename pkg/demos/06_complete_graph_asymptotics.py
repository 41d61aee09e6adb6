"""The random-cluster model on the complete graph K_n with p = lam/n.

Above the critical intensity lambda_c(q) a giant cluster of density theta
appears, where theta is the largest root of a transcendental equation.  The
free energy (1/n) log Z converges to a closed-form limit eta(lam, q); the
empirical rates below are exact rational computations up to one final log.
"""

import math

from rcpotts import convergence_report, empirical_rate, eta, lambda_c, theta

for q in (1.0, 2.0, 3.0, 10.0):
    print(f"lambda_c({q}) = {lambda_c(q):.6f}")

# giant-cluster density across the transition at q = 2
for lam in (1.5, 2.0, 2.5, 3.0):
    print(f"theta(lam={lam}, q=2) = {theta(lam, 2.0):.6f}")

# the limiting free energy at (lam, q) = (1, 2) has a closed form
print(f"eta(1, 2) = {eta(1.0, 2.0):.12f}  (log 2 - 1/4 = {math.log(2) - 0.25:.12f})")

# finite-n rates converge to eta; each row is an exact K_n computation
rep = convergence_report(2, 1.0, [4, 8, 12, 14])
for row in rep["rows"]:
    print(f"n={row['n']:>2}: rate={row['rate']:.6f}, gap to eta = {row['gap']:.6f}")
print("gap decreasing:", rep["monotone"])

# q = 1 sanity: Z_RC is a probability normalization, so the rate is zero
print("q=1 rate:", empirical_rate(10, 1.0, 1))
