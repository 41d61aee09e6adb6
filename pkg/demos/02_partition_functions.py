"""Random-cluster and Potts partition functions, exactly.

All parameters are rationals, so every identity printed below is an exact
equality of fractions, not a float comparison.  The central correspondence:
with u-1 = q(1-p)/p and v-1 = p/(1-p),

    Z_RC(p, q) = (u-1) (v-1)^|V| v^(-|E|) T(u, v)

where T is evaluated at the point (u, v) itself.
"""

from fractions import Fraction

from rcpotts import (
    RCParams,
    cycle,
    potts_partition_exact,
    rc_connection_prob,
    rc_partition,
    triangle,
    tutte_rc_identity,
    tutte_rc_params,
    verify_corr_conn,
)

F = Fraction
g = triangle()
p, q = F(1, 2), F(2)

z = rc_partition(g, RCParams(p, q))
print(f"Z_RC(triangle, p={p}, q={q}) = {z}")

u, v = tutte_rc_params(p, q)
rep = tutte_rc_identity(g, p, q)
print(f"change of variables: (u, v) = ({u}, {v})")
print("identity deviation at (u, v):      ", rep["rc_deviation"])
print("deviation at the shifted (u-1, v-1):", rep["shifted_point_deviation"])

# q=2 Potts with e^beta = 1/(1-p): Z_RC = e^(-beta |E|) Z_P exactly
w = 1 / (1 - p)
z_p = potts_partition_exact(g, int(q), w)
print(f"Z_P = {z_p},  (1-p)^|E| Z_P = {(1 - p) ** g.m * z_p}  (equals Z_RC)")

# correlation equals scaled connection probability: q*tau = (q-1)*phi(x<->y)
for graph, name in [(g, "triangle"), (cycle(4), "C4")]:
    rep = verify_corr_conn(graph, p, int(q))
    conn = rc_connection_prob(graph, RCParams(p, q), 0, 1)
    print(f"{name}: phi(0 <-> 1) = {conn}, correlation identity pass = {rep['pass']}")
