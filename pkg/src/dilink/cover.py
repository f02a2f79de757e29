"""Covering pairs, d-covers, and disjoint routing utilities.

A pair (u, v) covers an ordered pair (x, y) when all four vertices are
distinct and both arcs u->x and y->v exist: any path from x to y can then
be extended to one from u to v.  A set of disjoint pairs K d-covers U if
every ordered pair of distinct vertices of U is covered by at least d
members of K.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .digraph import Digraph
from .errors import (
    BadParameter,
    ConnectionFailed,
    CoverConstructionFailed,
    LadderConstructionFailed,
)
from .ladder import Ladder, single_arc_ladder, validate_ladder
from .ratio import Real, as_fraction

Pair = tuple[int, int]


@dataclass(frozen=True)
class CoverPairSet:
    """Pairwise-disjoint ordered vertex pairs."""

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(u), int(v)) for u, v in self.pairs))
        seen: set[int] = set()
        for u, v in self.pairs:
            if u == v or u in seen or v in seen:
                raise BadParameter("cover pairs must be pairwise disjoint")
            seen.add(u)
            seen.add(v)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.pairs for v in p)


def covers(D: Digraph, pair: Pair, target: Pair) -> bool:
    """True iff pair = (u, v) covers target = (x, y)."""
    u, v = pair
    x, y = target
    if len({u, v, x, y}) != 4:
        return False
    return D.has_arc(u, x) and D.has_arc(y, v)


def verify_d_cover(
    D: Digraph, K: CoverPairSet | Sequence[Pair], U: Iterable[int] | None = None, d: int = 1
) -> bool:
    """Check that every ordered pair of distinct vertices of U is covered
    by at least d pairs of K."""
    pairs = list(K.pairs if isinstance(K, CoverPairSet) else K)
    uset = sorted(range(D.n) if U is None else set(U))
    if d < 0:
        raise BadParameter("d must be nonnegative")
    if len(uset) < 2 or d == 0:
        return True
    if not pairs:
        return False
    import numpy as np

    A = D.bool_matrix()
    us = np.array([p[0] for p in pairs], dtype=np.intp)
    vs = np.array([p[1] for p in pairs], dtype=np.intp)
    P = A[us, :].astype(np.int32)  # P[j, x] = arc u_j -> x
    Q = A[:, vs].astype(np.int32)  # Q[y, j] = arc y -> v_j
    C = (Q @ P).T  # C[x, y] = candidate count before distinctness
    for u, v in pairs:
        if A[u, v]:
            C[v, :] -= A[:, v]  # x = v_j collides
            C[:, u] -= A[u, :]  # y = u_j collides
            C[v, u] += 1  # both at once: subtracted twice
    idx = np.array(uset, dtype=np.intp)
    sub = C[np.ix_(idx, idx)]
    np.fill_diagonal(sub, d)  # ignore x == y
    return bool(sub.min() >= d)


def cover_size_formula(n: int, gamma: Real, d: int) -> int:
    """Number of pairs sufficient for a d-cover of an n-vertex digraph
    with min semidegree gamma*n (natural logarithms), before capping."""
    g = float(as_fraction(gamma))
    if not 0 < g < 1:
        raise BadParameter(f"gamma must lie in (0, 1), got {gamma}")
    if d < 1:
        raise BadParameter("d must be >= 1")
    return math.ceil(24 * g**-2 * (d * math.log(24 * d * g**-2) + 2 * math.log(n)))


def build_d_cover(
    D: Digraph,
    U: Iterable[int] | None,
    d: int,
    gamma: Real,
    seed: int,
    *,
    size: int | None = None,
    prefer_arcs: bool = False,
    avoid: Iterable[int] = (),
    max_restarts: int = 50,
) -> CoverPairSet:
    """Sample disjoint pairs until they verifiably d-cover U.

    The pair count is min(cover_size_formula, floor(n/2)) unless `size`
    overrides it.  Pairs avoid `avoid`; vertices outside U are preferred
    when available.  With prefer_arcs, pairs are drawn from existing arcs
    first (so each pair later admits a single-arc ladder).  Restarts
    resample; failure after the budget raises CoverConstructionFailed.
    """
    n = D.n
    uset = set(range(n) if U is None else U)
    avoid_set = set(avoid)
    m = size if size is not None else min(cover_size_formula(n, gamma, d), n // 2)
    if m < 1:
        raise CoverConstructionFailed(f"cover size resolved to {m}")
    usable = [v for v in range(n) if v not in avoid_set]
    if 2 * m > len(usable):
        raise CoverConstructionFailed(
            f"need {2 * m} distinct vertices for {m} pairs, have {len(usable)}"
        )
    last_reason = "verification failed"
    for attempt in range(max_restarts):
        rng = random.Random((seed * 7_654_321 + attempt) & 0xFFFFFFFF)
        pairs: list[Pair] = []
        used: set[int] = set(avoid_set)
        if prefer_arcs:
            arc_list = sorted(D.arcs)
            rng.shuffle(arc_list)
            for u, v in arc_list:
                if len(pairs) == m:
                    break
                if u in used or v in used:
                    continue
                pairs.append((u, v))
                used.add(u)
                used.add(v)
        if len(pairs) < m:
            outside = [v for v in usable if v not in uset and v not in used]
            inside = [v for v in usable if v in uset and v not in used]
            rng.shuffle(outside)
            rng.shuffle(inside)
            pool = outside + inside
            need = 2 * (m - len(pairs))
            if need > len(pool):
                last_reason = "not enough unused vertices to finish pairing"
                continue
            chunk = pool[:need]
            for i in range(0, need, 2):
                pairs.append((chunk[i], chunk[i + 1]))
        K = CoverPairSet(tuple(pairs))
        if verify_d_cover(D, K, uset, d):
            return K
    raise CoverConstructionFailed(
        f"no verified {d}-cover of size {m} after {max_restarts} attempts ({last_reason})"
    )


@dataclass(frozen=True)
class ConnectionRequest:
    """Terminal pairs to join by internally disjoint paths whose interior
    avoids `forbidden`; each path order (vertex count) <= max_order."""

    terminals: tuple[Pair, ...]
    forbidden: frozenset[int] = field(default_factory=frozenset)
    max_order: int = 4

    def __post_init__(self):
        object.__setattr__(self, "terminals", tuple(tuple(t) for t in self.terminals))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        flat = [v for t in self.terminals for v in t]
        if len(set(flat)) != len(flat):
            raise BadParameter("terminal vertices must be pairwise distinct")
        if set(flat) & self.forbidden:
            raise BadParameter("terminals may not be forbidden")
        if self.max_order < 2:
            raise BadParameter("max_order must be at least 2")


def shortest_path_avoiding(
    D: Digraph,
    s: int,
    t: int,
    blocked: set[int],
    max_order: int,
    rng: random.Random | None = None,
) -> tuple[int, ...] | None:
    """Shortest s->t path with interior outside `blocked`, order bounded;
    neighbor exploration is shuffled when an rng is supplied."""
    if s == t or max_order < 2:
        return None
    parent: dict[int, int | None] = {s: None}
    frontier = [s]
    # iteration k asks whether t sits at arc-distance k (path order k+1)
    for k in range(1, max_order):
        if rng is not None:
            rng.shuffle(frontier)
        for u in frontier:
            if D.has_arc(u, t):
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return tuple(path) + (t,)
        if k == max_order - 1:
            break
        nxt = []
        for u in frontier:
            nbs = list(D.out_neighbors(u))
            if rng is not None:
                rng.shuffle(nbs)
            for w in nbs:
                if w in blocked or w in parent or w == t:
                    continue
                parent[w] = u
                nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return None


def _exhaustive_connect(
    D: Digraph, req: ConnectionRequest, budget: int = 400_000
) -> list[tuple[int, ...]] | None:
    """Complete search for small instances.  Returns None when no family
    of disjoint paths exists within the order bound (or budget runs out)."""
    terminals = req.terminals
    base_block = set(req.forbidden) | {v for t in terminals for v in t}
    spent = [0]

    def paths_from(s: int, t: int, used: set[int]):
        # all simple s->t paths of order <= max_order avoiding used
        stack = [(s,)]
        while stack:
            path = stack.pop()
            spent[0] += 1
            if spent[0] > budget:
                return
            tip = path[-1]
            if D.has_arc(tip, t):
                yield path + (t,)
            if len(path) >= req.max_order - 1:
                continue
            for w in D.out_neighbors(tip):
                if w == t or w in base_block or w in used or w in path:
                    continue
                stack.append(path + (w,))

    out: list[tuple[int, ...]] = []

    def solve(i: int, used: set[int]) -> bool:
        if i == len(terminals):
            return True
        s, t = terminals[i]
        for path in paths_from(s, t, used):
            interior = set(path[1:-1])
            out.append(path)
            if solve(i + 1, used | interior):
                return True
            out.pop()
        return False

    if solve(0, set()):
        return out
    return None


def connect_disjoint_paths(
    D: Digraph, req: ConnectionRequest, seed: int, attempts: int = 100
) -> list[tuple[int, ...]]:
    """Route every terminal pair by internally disjoint short paths.

    Tries randomized shortest-path routing in shuffled request orders;
    on small instances (n <= 12) falls back to a complete search before
    giving up.  Raises ConnectionFailed with the index of the first
    unroutable pair.
    """
    r = len(req.terminals)
    if r == 0:
        return []
    terminal_set = {v for t in req.terminals for v in t}
    first_failed = 0
    for attempt in range(attempts):
        rng = random.Random((seed * 2_654_435 + attempt) & 0xFFFFFFFF)
        order = list(range(r))
        rng.shuffle(order)
        blocked = set(req.forbidden) | terminal_set
        found: dict[int, tuple[int, ...]] = {}
        ok = True
        for i in order:
            s, t = req.terminals[i]
            path = shortest_path_avoiding(D, s, t, blocked, req.max_order, rng)
            if path is None:
                first_failed = i
                ok = False
                break
            found[i] = path
            blocked.update(path[1:-1])
        if ok:
            return [found[i] for i in range(r)]
    if D.n <= 12:
        exact = _exhaustive_connect(D, req)
        if exact is not None:
            return exact
    raise ConnectionFailed(first_failed)


def build_disjoint_ladders(
    D: Digraph,
    terminals: Sequence[Pair],
    nu: Real,
    seed: int,
    ladder_k: int | None = None,
    avoid: Iterable[int] = (),
) -> list[Ladder]:
    """Build pairwise disjoint ladders, one per terminal pair (u_i, v_i).

    With ladder_k None, a terminal pair joined by an arc gets the
    single-arc ladder and the rest get k = 1; an explicit k forces that
    shape.  Each ladder obeys |V(L)| <= 12/nu^2 with its row path of
    order <= 8/nu.  Interior sampling never touches `avoid`.  Raises
    LadderConstructionFailed with the pair index.
    """
    nu = as_fraction(nu)
    if not 0 < nu <= 1:
        raise BadParameter(f"nu must lie in (0, 1], got {nu}")
    flat = [v for t in terminals for v in t]
    if len(set(flat)) != len(flat):
        raise BadParameter("terminal vertices must be pairwise distinct")
    max_size = int(12 / nu**2)
    max_rows = int(8 / nu)
    rng = random.Random(seed)
    used: set[int] = set(flat) | set(avoid)
    out: list[Ladder] = []
    for idx, (u, v) in enumerate(terminals):
        want_k = ladder_k
        if want_k is None:
            want_k = 0 if D.has_arc(u, v) else 1
        if want_k == 0:
            if not D.has_arc(u, v):
                raise LadderConstructionFailed(idx, f"no arc {u}->{v} for a k=0 ladder")
            out.append(single_arc_ladder(u, v))
            continue
        if 2 * (2 * want_k + 1) > max_rows or 2 * (2 * want_k + 1) > max_size:
            raise LadderConstructionFailed(
                idx, f"k={want_k} violates the nu={nu} size bounds"
            )
        L = _sample_ladder(D, u, v, want_k, used, max_size, rng)
        if L is None:
            raise LadderConstructionFailed(idx)
        if not validate_ladder(D, L):  # pragma: no cover - sampling guarantees this
            raise LadderConstructionFailed(idx, "sampled ladder failed validation")
        used |= L.vertices()
        out.append(L)
    return out


def _sample_ladder(
    D: Digraph,
    u: int,
    v: int,
    k: int,
    used: set[int],
    max_size: int,
    rng: random.Random,
    tries: int = 400,
) -> Ladder | None:
    """Randomly sample rows and connectors for a k >= 1 ladder from u to v."""
    for _ in range(tries):
        taken = set(used) | {u, v}
        lower = [u]
        upper = [v]
        ok = True
        for i in range(1, 2 * k + 1):
            # lower row: arcs v_(i-1)->v_i for even i-1, v_i->v_(i-1) for odd
            cand = (
                D.out_neighbors(lower[-1]) if i % 2 == 1 else D.in_neighbors(lower[-1])
            )
            pick = _pick(cand, taken, rng)
            if pick is None:
                ok = False
                break
            lower.append(pick)
            taken.add(pick)
            # upper row: arcs v_i*->v_(i-1)* for odd i, v_(i-1)*->v_i* for even
            cand = (
                D.in_neighbors(upper[-1]) if i % 2 == 1 else D.out_neighbors(upper[-1])
            )
            pick = _pick(cand, taken, rng)
            if pick is None:
                ok = False
                break
            upper.append(pick)
            taken.add(pick)
        if not ok or not D.has_arc(lower[2 * k], upper[2 * k]):
            continue
        connectors: dict[int, tuple[int, ...]] = {}
        for j in range(1, 2 * k, 2):
            room = max_size - (4 * k + 2) - sum(
                len(q) - 2 for q in connectors.values()
            )
            q = shortest_path_avoiding(
                D, lower[j], upper[j], taken, min(room + 2, 4), rng
            )
            if q is None:
                ok = False
                break
            connectors[j] = q
            taken.update(q[1:-1])
        if not ok:
            continue
        L = Ladder(tuple(lower), tuple(upper), connectors)
        if len(L.vertices()) <= max_size and validate_ladder(D, L):
            return L
    return None


def _pick(candidates, taken: set[int], rng: random.Random) -> int | None:
    options = [w for w in candidates if w not in taken]
    return rng.choice(options) if options else None
