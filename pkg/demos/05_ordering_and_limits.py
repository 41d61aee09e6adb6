"""Stochastic ordering, association, and the q -> 0 limit measures.

Because every probability here is an exact rational, a reported inequality
violation is a genuine counterexample: the search for positive-association
failures below q = 1 finds one on the triangle at q = 1/4.
"""

from fractions import Fraction

from rcpotts import (
    RCParams,
    comparison_check,
    cycle,
    fkg_check,
    negative_association_checks,
    q_to_zero_limit_check,
    rc_measure_table,
    triangle,
    uniform_substructure_measure,
    ust_feder_mihail_check,
)

F = Fraction
g = triangle()

# raising q at fixed p makes the measure stochastically smaller
rep = comparison_check(g, F(1, 2), F(1), F(1, 2), F(2))
print("comparison phi_{1/2,2} <= phi_{1/2,1}:", rep["checks"]["smaller"]["pass"])

# positive association holds for q >= 1 ...
print("positive association at q=2:", fkg_check(g, F(1, 2), F(2))["pass"])
# ... and genuinely fails below q = 1
rep = fkg_check(g, F(1, 2), F(1, 4), n_function_pairs=0)
print("q=1/4 violating event pair:", rep["event_violations"][0])

# spanning trees are negatively associated (edge NA and full NA)
print("uniform spanning tree NA on C4:", ust_feder_mihail_check(cycle(4))["pass"])
ust = uniform_substructure_measure(g, "spanning-tree")
rep = negative_association_checks(ust, include_doc=False)
print("triangle UST: edge NA =", rep["edge_na"], ", NA =", rep["na"])

# q -> 0 limits: three regimes, three different uniform targets
for regime in ("ucs", "usf", "ust"):
    rep = q_to_zero_limit_check(g, regime)
    print(f"{regime}: TV trace {['%.2e' % t for t in rep['tv']]}, monotone={rep['monotone']}")
