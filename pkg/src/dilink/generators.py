"""Digraph constructors: random models and standard families."""

from __future__ import annotations

from .digraph import Digraph
from .errors import BadParameter


def gen_random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Binomial random digraph: each ordered pair (u, v), u != v, is an
    arc independently with probability p.  Deterministic given the seed."""
    if not 0.0 <= p <= 1.0:
        raise BadParameter(f"arc probability must lie in [0, 1], got {p}")
    import numpy as np

    rng = np.random.default_rng(seed)
    mat = rng.random((n, n)) < p
    np.fill_diagonal(mat, False)
    us, vs = np.nonzero(mat)
    return Digraph(n, zip(us.tolist(), vs.tolist()))


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise BadParameter("a directed cycle needs at least 2 vertices")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def rotational_tournament(n: int) -> Digraph:
    """Tournament on odd n with i -> i+1, ..., i+(n-1)/2 (mod n)."""
    if n % 2 == 0:
        raise BadParameter("rotational tournament requires odd n")
    half = (n - 1) // 2
    return Digraph(n, [(i, (i + j) % n) for i in range(n) for j in range(1, half + 1)])
