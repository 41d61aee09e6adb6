"""Edwards-Sokal spin/bond coupling: exact joint table, the two conditional
kernels, and a Swendsen-Wang alternating sampler.

Sampling uses numpy's Philox counter-based generator.  A master seed is fed
to ``numpy.random.SeedSequence``; parallel chains use ``spawn`` so streams
are independent and reproducible regardless of scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .graphs import Multigraph, component_count
from .measures import MeasureTable, connected_in
from .polynomials import EnumerationCapExceeded


@dataclass(frozen=True)
class JointConfig:
    spins: tuple
    bonds: int


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    burn_in: int = 1000
    samples: int = 10000
    thinning: int = 1

    def __post_init__(self):
        if self.samples <= 0 or self.thinning <= 0 or self.burn_in < 0:
            raise ValueError("sampler counts must be positive")


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Philox generator on the given sub-stream of a master seed."""
    seq = np.random.SeedSequence(seed)
    if stream:
        seq = seq.spawn(stream + 1)[stream]
    return np.random.Generator(np.random.Philox(seq))


def satisfies_coupling_event(g: Multigraph, spins, bonds: int) -> bool:
    """The event F: spins constant across every open edge."""
    return all(
        spins[u] == spins[v] for i, (u, v) in enumerate(g.edges) if bonds >> i & 1
    )


def joint_table(g: Multigraph, p: Fraction, q: int, cap: int = 1 << 20) -> MeasureTable:
    """Exact Edwards-Sokal joint measure: uniform spins times density-p bond
    percolation, conditioned on spins being constant on open clusters."""
    p = Fraction(p)
    if q**g.n * (1 << g.m) > cap:
        raise EnumerationCapExceeded("joint space above cap")
    weights = {}
    for spins in product(range(q), repeat=g.n):
        for bonds in range(1 << g.m):
            if satisfies_coupling_event(g, spins, bonds):
                nb = bin(bonds).count("1")
                weights[JointConfig(spins, bonds)] = (
                    p**nb * (1 - p) ** (g.m - nb)
                )
    z = sum(weights.values())
    return MeasureTable(
        ("joint", g.n, q, g.m), {cfg: w / z for cfg, w in weights.items()}
    )


def open_clusters(g: Multigraph, bonds: int) -> list[int]:
    """Cluster label per vertex under the open edges of ``bonds``."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (u, v) in enumerate(g.edges):
        if bonds >> i & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
    return [find(x) for x in range(g.n)]


def spins_given_bonds(g: Multigraph, bonds: int, q: int, rng: np.random.Generator) -> tuple:
    """Uniform independent spin per open cluster, constant on clusters."""
    labels = open_clusters(g, bonds)
    roots = sorted(set(labels))
    draw = {r: int(s) for r, s in zip(roots, rng.integers(0, q, size=len(roots)))}
    return tuple(draw[l] for l in labels)


def bonds_given_spins(g: Multigraph, spins, p: float, rng: np.random.Generator) -> int:
    """Close every disagreeing edge; open agreeing edges independently with
    probability p."""
    bonds = 0
    unif = rng.random(g.m)
    for i, (u, v) in enumerate(g.edges):
        if spins[u] == spins[v] and unif[i] < p:
            bonds |= 1 << i
    return bonds


def sw_sample(g: Multigraph, p: float, q: int, cfg: SamplerConfig, stream: int = 0):
    """Swendsen-Wang chain: alternate the two conditional kernels.

    Yields ``cfg.samples`` joint configurations after burn-in, one every
    ``cfg.thinning`` sweeps.  Deterministic given (seed, stream).
    """
    if not (0 < p < 1):
        raise ValueError("p must lie in (0,1)")
    if q < 2:
        raise ValueError("q must be an integer >= 2")
    rng = make_rng(cfg.seed, stream)
    spins = tuple(int(s) for s in rng.integers(0, q, size=g.n))
    bonds = 0

    def sweep(spins):
        b = bonds_given_spins(g, spins, p, rng)
        s = spins_given_bonds(g, b, q, rng)
        return s, b

    for _ in range(cfg.burn_in):
        spins, bonds = sweep(spins)
    for _ in range(cfg.samples):
        for _ in range(cfg.thinning):
            spins, bonds = sweep(spins)
        yield JointConfig(spins, bonds)


def batch_means(values, n_batches: int = 32) -> tuple[float, float]:
    """Sample mean and batch-means standard error."""
    values = np.asarray(values, dtype=float)
    mean = float(values.mean())
    n_batches = min(n_batches, len(values))
    if n_batches < 2:
        return mean, 0.0
    usable = len(values) - len(values) % n_batches
    batches = values[:usable].reshape(n_batches, -1).mean(axis=1)
    se = float(batches.std(ddof=1) / math.sqrt(n_batches))
    return mean, se


def estimate_two_point(g: Multigraph, samples, x: int, y: int, q: int) -> dict:
    """Monte Carlo two-point estimates from a stream of joint configs.

    Returns the correlation estimate tau_hat = mean(indicator(sigma_x =
    sigma_y)) - 1/q and the bond-connection estimate, each with a
    batch-means standard error.
    """
    agree = []
    conn = []
    for cfg in samples:
        agree.append(1.0 if cfg.spins[x] == cfg.spins[y] else 0.0)
        conn.append(1.0 if connected_in(g, cfg.bonds, x, y) else 0.0)
    if not agree:
        raise ValueError("empty sample stream")
    tau_mean, tau_se = batch_means(agree)
    conn_mean, conn_se = batch_means(conn)
    return {
        "tau": tau_mean - 1.0 / q,
        "tau_se": tau_se,
        "conn": conn_mean,
        "conn_se": conn_se,
        "n": len(agree),
    }


def kernel_step_distribution(g: Multigraph, table: MeasureTable, p: Fraction, q: int) -> MeasureTable:
    """Apply one exact round of both conditional kernels to a joint table.

    Used to verify stationarity: the Edwards-Sokal table must map to itself.
    Works on joint spaces of at most a few hundred states.
    """
    p = Fraction(p)
    out: dict = {}
    for cfg, prob in table.probs.items():
        # bonds given spins: product over edges
        spins = cfg.spins
        agreeing = [i for i, (u, v) in enumerate(g.edges) if spins[u] == spins[v]]
        for sub in range(1 << len(agreeing)):
            bonds = 0
            w_b = Fraction(1)
            for pos, i in enumerate(agreeing):
                if sub >> pos & 1:
                    bonds |= 1 << i
                    w_b *= p
                else:
                    w_b *= 1 - p
            # spins given bonds: uniform per cluster
            labels = open_clusters(g, bonds)
            k = len(set(labels))
            w_s = Fraction(1, q**k)
            for new_spins in product(range(q), repeat=k):
                roots = sorted(set(labels))
                lut = dict(zip(roots, new_spins))
                s2 = tuple(lut[l] for l in labels)
                key = JointConfig(s2, bonds)
                out[key] = out.get(key, Fraction(0)) + prob * w_b * w_s
    return MeasureTable(table.space, {k: v for k, v in out.items() if v})
