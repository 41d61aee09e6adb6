"""Exact random-cluster and Potts measures on small graphs.

Everything theorem-shaped here runs in exact rational arithmetic: p and q
are Fractions and e^(-beta) is identified with 1-p, so identity checks can
assert literal equality instead of float closeness.  Operations that need a
free real beta (the zero-temperature limit) use floats with stated
tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .graphs import Multigraph, component_count, is_connected
from .polynomials import (
    BivariatePolynomial,
    EnumerationCapExceeded,
    TutteCache,
    eval_poly,
    tutte_poly,
)

DEFAULT_SPIN_CAP = 10**7
DEFAULT_BOND_CAP = 20


@dataclass(frozen=True)
class RCParams:
    p: Fraction
    q: Fraction

    def __post_init__(self):
        if not (0 < self.p < 1):
            raise ValueError("p must lie in (0,1)")
        if not self.q > 0:
            raise ValueError("q must be positive")


@dataclass(frozen=True)
class PottsParams:
    """Potts model parameters; couplings default to +1 on every edge and
    fields default to zero.  ``fields[x][j]`` is the field felt by vertex x
    in spin state j (states are 0-based internally)."""

    beta: float
    q: int
    couplings: tuple | None = None
    fields: tuple | None = None

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be an integer >= 2")
        if self.couplings is not None and any(j == 0 for j in self.couplings):
            raise ValueError("couplings must be nonzero")


@dataclass
class MeasureTable:
    """Explicit probability table over a finite configuration space.

    ``space`` records what configurations mean: ("bond", m) for bitmasks over
    m edges, ("spin", n, q) for tuples in {0..q-1}^n, ("joint", n, q, m) for
    (spin-tuple, bitmask) pairs.  Probabilities are exact Fractions.
    """

    space: tuple
    probs: dict

    def __post_init__(self):
        total = sum(self.probs.values())
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")
        if any(p < 0 for p in self.probs.values()):
            raise ValueError("negative probability")

    def prob(self, event) -> Fraction:
        """Probability of an event given as an iterable of configurations or
        a predicate over configurations."""
        if callable(event):
            return sum(
                (p for cfg, p in self.probs.items() if event(cfg)), Fraction(0)
            )
        return sum((self.probs.get(cfg, Fraction(0)) for cfg in set(event)), Fraction(0))

    def expectation(self, f):
        return sum(f(cfg) * p for cfg, p in self.probs.items())


def _spin_configs(n: int, q: int):
    return product(range(q), repeat=n)


def rc_weight(g: Multigraph, p: Fraction, q: Fraction, a: int) -> Fraction:
    na = bin(a).count("1")
    return p**na * (1 - p) ** (g.m - na) * q ** component_count(g, a)


def rc_partition(g: Multigraph, params: RCParams, cap: int = 24) -> Fraction:
    """Random-cluster partition function by subset enumeration, exact."""
    if g.m > cap:
        raise EnumerationCapExceeded(f"{g.m} edges above cap {cap}")
    return sum(rc_weight(g, params.p, params.q, a) for a in range(1 << g.m))


def rc_measure_table(g: Multigraph, params: RCParams, cap: int = DEFAULT_BOND_CAP) -> MeasureTable:
    if g.m > cap:
        raise EnumerationCapExceeded(f"{g.m} edges above cap {cap}")
    z = rc_partition(g, params, cap)
    return MeasureTable(
        ("bond", g.m),
        {a: rc_weight(g, params.p, params.q, a) / z for a in range(1 << g.m)},
    )


def connected_in(g: Multigraph, a: int, x: int, y: int) -> bool:
    """True iff x and y lie in the same open cluster of the subset a."""
    if x == y:
        return True
    seen = {x}
    stack = [x]
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if a >> i & 1:
            adj[u].append(v)
            adj[v].append(u)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v == y:
                return True
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def rc_connection_prob(g: Multigraph, params: RCParams, x: int, y: int, cap: int = 24) -> Fraction:
    """phi_{p,q}(x <-> y), exact."""
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("vertex out of range")
    if x == y:
        return Fraction(1)
    if g.m > cap:
        raise EnumerationCapExceeded(f"{g.m} edges above cap {cap}")
    z = Fraction(0)
    hit = Fraction(0)
    for a in range(1 << g.m):
        w = rc_weight(g, params.p, params.q, a)
        z += w
        if connected_in(g, a, x, y):
            hit += w
    return hit / z


# ---------------------------------------------------------------------------
# Potts side.  The exact route takes w = e^beta as a Fraction so that the
# Boltzmann weight of a configuration is w^(weighted agreement count).

def _potts_weight_exact(g: Multigraph, sigma, w: Fraction, couplings) -> Fraction:
    weight = Fraction(1)
    for i, (u, v) in enumerate(g.edges):
        if sigma[u] == sigma[v]:
            j = 1 if couplings is None else couplings[i]
            weight *= w**j
    return weight


def potts_partition_exact(
    g: Multigraph, q: int, w: Fraction, couplings=None, cap: int = DEFAULT_SPIN_CAP
) -> Fraction:
    """Z_P with e^beta = w exact; integer couplings only (default all +1)."""
    if q**g.n > cap:
        raise EnumerationCapExceeded(f"{q}^{g.n} spin states above cap {cap}")
    return sum(
        _potts_weight_exact(g, s, w, couplings) for s in _spin_configs(g.n, q)
    )


def potts_measure_table(
    g: Multigraph, q: int, w: Fraction, couplings=None, cap: int = DEFAULT_SPIN_CAP
) -> MeasureTable:
    z = potts_partition_exact(g, q, w, couplings, cap)
    return MeasureTable(
        ("spin", g.n, q),
        {
            s: _potts_weight_exact(g, s, w, couplings) / z
            for s in _spin_configs(g.n, q)
        },
    )


def _potts_weight_float(g: Multigraph, sigma, params: PottsParams) -> float:
    h = 0.0
    for i, (u, v) in enumerate(g.edges):
        if sigma[u] == sigma[v]:
            h -= 1.0 if params.couplings is None else params.couplings[i]
    if params.fields is not None:
        for x in range(g.n):
            h -= params.fields[x][sigma[x]]
    return math.exp(-params.beta * h)


def potts_partition(g: Multigraph, params: PottsParams, cap: int = DEFAULT_SPIN_CAP) -> float:
    """Z_P for real beta, general couplings and external fields (floats)."""
    if params.q**g.n > cap:
        raise EnumerationCapExceeded(f"{params.q}^{g.n} spin states above cap {cap}")
    return sum(_potts_weight_float(g, s, params) for s in _spin_configs(g.n, params.q))


def potts_two_point(g: Multigraph, params: PottsParams, x: int, y: int, cap: int = DEFAULT_SPIN_CAP) -> float:
    """tau(x,y) = pi(sigma_x = sigma_y) - 1/q, floating point."""
    z = 0.0
    agree = 0.0
    for s in _spin_configs(g.n, params.q):
        w = _potts_weight_float(g, s, params)
        z += w
        if s[x] == s[y]:
            agree += w
    return agree / z - 1.0 / params.q


def potts_two_point_exact(g: Multigraph, q: int, w: Fraction, x: int, y: int) -> Fraction:
    z = Fraction(0)
    agree = Fraction(0)
    for s in _spin_configs(g.n, q):
        wt = _potts_weight_exact(g, s, w, None)
        z += wt
        if s[x] == s[y]:
            agree += wt
    return agree / z - Fraction(1, q)


# ---------------------------------------------------------------------------
# Theorem checks.  Each returns a plain-dict report suitable for JSON output.

def verify_corr_conn(g: Multigraph, p: Fraction, q: int) -> dict:
    """Check tau(x,y) = (1 - 1/q) phi(x <-> y) for every vertex pair, with
    e^(-beta) = 1 - p so both sides are exact rationals."""
    w = 1 / (1 - Fraction(p))  # e^beta
    params = RCParams(Fraction(p), Fraction(q))
    max_dev = Fraction(0)
    instances = 0
    for x in range(g.n):
        for y in range(g.n):
            tau = potts_two_point_exact(g, q, w, x, y)
            conn = rc_connection_prob(g, params, x, y)
            dev = abs(tau - (1 - Fraction(1, q)) * conn)
            max_dev = max(max_dev, dev)
            instances += 1
    return {
        "identity": "corr-conn",
        "instances": instances,
        "max_abs_deviation": str(max_dev),
        "pass": max_dev == 0,
    }


def verify_partition_identity(g: Multigraph, p: Fraction, q: int) -> dict:
    """Check Z_RC(p,q) = (1-p)^|E| Z_P(beta,q) with e^(-beta) = 1-p, exact."""
    p = Fraction(p)
    w = 1 / (1 - p)
    z_rc = rc_partition(g, RCParams(p, Fraction(q)))
    z_p = potts_partition_exact(g, q, w)
    dev = abs(z_rc - (1 - p) ** g.m * z_p)
    return {
        "identity": "partition",
        "instances": 1,
        "max_abs_deviation": str(dev),
        "pass": dev == 0,
    }


def tutte_rc_params(p: Fraction, q: Fraction) -> tuple[Fraction, Fraction]:
    """The change of variables u-1 = q(1-p)/p, v-1 = p/(1-p)."""
    p, q = Fraction(p), Fraction(q)
    return 1 + q * (1 - p) / p, 1 + p / (1 - p)


def tutte_rc_identity(
    g: Multigraph, p: Fraction, q: Fraction, cache: TutteCache | None = None
) -> dict:
    """Check Z_RC = (u-1)(v-1)^|V| v^(-|E|) T(u, v) on a connected graph,
    and, for integer q, Z_P = (u-1)(v-1)^|V| T(u, v) with e^(-beta) = 1-p.

    The evaluation point is (u, v) itself; the brute-force partition sum is
    the ground truth for that choice.  A sometimes-quoted variant evaluates T
    at the shifted point (u-1, v-1) instead; its deviation is included in the
    report so the two conventions can be told apart at a glance.
    """
    if not is_connected(g):
        raise ValueError("identity is checked on connected graphs only")
    p, q = Fraction(p), Fraction(q)
    u, v = tutte_rc_params(p, q)
    t = tutte_poly(g, cache)
    t_val = eval_poly(t, u, v)
    z_rc = rc_partition(g, RCParams(p, q))
    prefactor = (u - 1) * (v - 1) ** g.n * v ** (-g.m)
    dev_rc = abs(z_rc - prefactor * t_val)
    shifted_dev = abs(z_rc - prefactor * eval_poly(t, u - 1, v - 1))
    report = {
        "identity": "tutte-rcm",
        "evaluation_point": [str(u), str(v)],
        "z_rc": str(z_rc),
        "rc_deviation": str(dev_rc),
        "shifted_point": [str(u - 1), str(v - 1)],
        "shifted_point_deviation": str(shifted_dev),
        "pass": dev_rc == 0,
        "instances": 1,
    }
    if q.denominator == 1 and q >= 2:
        w = 1 / (1 - p)
        z_p = potts_partition_exact(g, int(q), w)
        rhs_p = (u - 1) * (v - 1) ** g.n * t_val
        dev_p = abs(z_p - rhs_p)
        report["potts_deviation"] = str(dev_p)
        report["pass"] = report["pass"] and dev_p == 0
        report["instances"] = 2
    return report


def ground_states(g: Multigraph, q: int, couplings) -> tuple[list, bool]:
    """All colourings agreeing across positive couplings and disagreeing
    across negative ones; the second return value flags frustration."""
    couplings = list(couplings)
    if len(couplings) != g.m:
        raise ValueError("need one coupling per edge")
    states = []
    for s in _spin_configs(g.n, q):
        ok = True
        for i, (u, v) in enumerate(g.edges):
            if couplings[i] > 0 and s[u] != s[v]:
                ok = False
                break
            if couplings[i] < 0 and s[u] == s[v]:
                ok = False
                break
        if ok:
            states.append(s)
    return states, not states


def zero_temperature_check(g: Multigraph, q: int, beta_schedule, rel_tol: float = 1e-6) -> dict:
    """Purely antiferromagnetic (J = -1 everywhere) zero-temperature limit:
    Z_P(beta, q) should approach the chromatic value chi(q) monotonically as
    beta grows."""
    from .polynomials import chromatic_poly

    chi = float(eval_poly(chromatic_poly(g), Fraction(q), Fraction(0)))
    couplings = tuple([-1] * g.m)
    values = [
        potts_partition(g, PottsParams(beta=b, q=q, couplings=couplings))
        for b in beta_schedule
    ]
    gaps = [abs(v - chi) for v in values]
    monotone = all(g2 <= g1 + 1e-12 for g1, g2 in zip(gaps, gaps[1:]))
    final_ok = gaps[-1] <= abs(chi) * rel_tol + rel_tol
    return {
        "identity": "zero-temperature",
        "chi": chi,
        "z_values": values,
        "monotone": monotone,
        "pass": monotone and final_ok,
        "instances": len(values),
    }
