"""Shared test machinery: synthetic instances and independent oracles.

The oracles re-derive each property straight from its definition using
nothing but the public Digraph accessors, so they check library results
against independently written logic rather than against the code under
test.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from dilink import (
    Digraph,
    EmbeddedLadder,
    HSubdivision,
    Ladder,
    pattern_from_arcs,
)

# filled by the acceptance tests, echoed by conftest's terminal-summary hook
ACCEPTANCE_LINES: list[str] = []

PATTERN_SHAPES = {
    "arc": ((0, 1),),
    "digon": ((0, 1), (1, 0)),
    "triangle": ((0, 1), (1, 2), (2, 0)),
}


# --------------------------------------------------------------------------
# synthetic embedded-ladder instances
# --------------------------------------------------------------------------


class _Alloc:
    """Hands out fresh vertex ids."""

    def __init__(self):
        self.count = 0

    def take(self, k: int = 1) -> list[int]:
        out = list(range(self.count, self.count + k))
        self.count += k
        return out


def _ladder_rungs(lower, upper, connectors):
    """Rungs recomputed from first principles (not via the library)."""
    k = (len(lower) - 1) // 2
    rungs = []
    for i in range(0, 2 * k, 2):
        rungs.append((lower[i],) + tuple(connectors[i + 1]) + (upper[i],))
    rungs.append((lower[2 * k], upper[2 * k]))
    return rungs


def make_ladder_instance(rng: random.Random, k: int, shape: str | None = None):
    """A random digraph holding a pattern subdivision with a ladder
    embedded in one of its paths, plus an internally disjoint absorbee.

    Returns (D, sub, emb, P) where emb names the ladder and its host arc
    and P runs from the ladder's start to its end.
    """
    if shape is None:
        shape = rng.choice(sorted(PATTERN_SHAPES))
    pattern_arcs = PATTERN_SHAPES[shape]
    alloc = _Alloc()
    arcs: set[tuple[int, int]] = set()

    def chain(seq):
        arcs.update(zip(seq, seq[1:]))

    # ladder rows and connectors
    lower = alloc.take(2 * k + 1)
    upper = alloc.take(2 * k + 1)
    connectors: dict[int, tuple[int, ...]] = {}
    for i in range(1, 2 * k, 2):
        interior = alloc.take(rng.randrange(3))
        connectors[i] = (lower[i], *interior, upper[i])
        chain(connectors[i])
    for i in range(0, 2 * k, 2):
        arcs.add((lower[i], lower[i + 1]))
        arcs.add((upper[i + 1], upper[i]))
    for j in range(1, 2 * k, 2):
        arcs.add((lower[j + 1], lower[j]))
        arcs.add((upper[j], upper[j + 1]))
    arcs.add((lower[2 * k], upper[2 * k]))

    # branch vertices and the host path carrying the rungs in order
    n_branch = 1 + max(v for a in pattern_arcs for v in a)
    branch = alloc.take(n_branch)
    host_arc = pattern_arcs[rng.randrange(len(pattern_arcs))]
    host: list[int] = [branch[host_arc[0]]]
    for rung in _ladder_rungs(lower, upper, connectors):
        host.extend(alloc.take(rng.randrange(3)))
        host.extend(rung)
    host.extend(alloc.take(rng.randrange(3)))
    host.append(branch[host_arc[1]])
    chain(host)

    # remaining pattern arcs become short fresh paths
    paths = {tuple(host_arc): tuple(host)}
    for a in pattern_arcs:
        if tuple(a) == tuple(host_arc):
            continue
        p = (branch[a[0]], *alloc.take(rng.randrange(1, 4)), branch[a[1]])
        chain(p)
        paths[tuple(a)] = p

    # absorbee: ladder start -> fresh interior -> ladder end
    P = (lower[0], *alloc.take(rng.randrange(5)), upper[0])
    chain(P)

    # noise arcs, then a random relabelling so positions carry no signal
    n = alloc.count
    for _ in range(rng.randrange(2 * n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            arcs.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)

    def rl(seq):
        return tuple(perm[x] for x in seq)

    D = Digraph(n, [(perm[u], perm[v]) for u, v in arcs])
    L = Ladder(rl(lower), rl(upper), {i: rl(q) for i, q in connectors.items()})
    sub = HSubdivision(
        pattern_from_arcs(pattern_arcs),
        {i: perm[b] for i, b in enumerate(branch)},
        {a: rl(p) for a, p in paths.items()},
    )
    return D, sub, EmbeddedLadder(L, tuple(host_arc)), rl(P)


# --------------------------------------------------------------------------
# definition checkers
# --------------------------------------------------------------------------


def oracle_robust_outexpander(D: Digraph, nu, tau):
    """First violating set of the robust out-expansion definition, or None.

    Enumerates every S with tau*n < |S| < (1-tau)*n in (size, lex) order;
    a vertex belongs to the robust out-neighbourhood of S when it has at
    least nu*n in-neighbours inside S.  All comparisons are exact.
    """
    nu, tau = Fraction(nu), Fraction(tau)
    n = D.n
    ins = [set(D.in_neighbors(x)) for x in range(n)]
    for size in range(n + 1):
        if not tau * n < size < (1 - tau) * n:
            continue
        for S in combinations(range(n), size):
            sset = set(S)
            rn = sum(1 for x in range(n) if len(ins[x] & sset) >= nu * n)
            if rn < size + nu * n:
                return frozenset(S)
    return None


def oracle_d_cover(D: Digraph, pairs, U, d: int) -> bool:
    """Definition check: every ordered pair of distinct vertices of U is
    covered by at least d of the given pairs (all four vertices distinct,
    arcs u->x and y->v present)."""
    U = sorted(set(U))
    for x in U:
        for y in U:
            if x == y:
                continue
            hits = sum(
                1
                for u, v in pairs
                if len({u, v, x, y}) == 4 and D.has_arc(u, x) and D.has_arc(y, v)
            )
            if hits < d:
                return False
    return True


def oracle_connect(D: Digraph, terminals, forbidden, max_order: int):
    """Complete search for internally disjoint connecting paths.

    Returns one family of paths (order <= max_order each, interiors
    avoiding `forbidden`, each other, and every terminal) or None.
    """
    banned = set(forbidden) | {v for t in terminals for v in t}

    def tails(path: list[int], t: int, used: set[int]):
        tip = path[-1]
        if len(path) + 1 <= max_order and D.has_arc(tip, t):
            yield tuple(path) + (t,)
        if len(path) + 2 > max_order:
            return
        for w in D.out_neighbors(tip):
            if w == t or w in banned or w in used or w in path:
                continue
            yield from tails(path + [w], t, used)

    chosen: list[tuple[int, ...]] = []

    def place(i: int, used: set[int]) -> bool:
        if i == len(terminals):
            return True
        s, t = terminals[i]
        for path in tails([s], t, used):
            chosen.append(path)
            if place(i + 1, used | set(path[1:-1])):
                return True
            chosen.pop()
        return False

    return list(chosen) if place(0, set()) else None


def random_arc_set(rng: random.Random, n: int, density: float):
    """An arbitrary arc set on n labels, each ordered pair independently."""
    return [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < density
    ]
