"""Robust out-/in-expansion: neighbourhoods, certification, falsification.

The robust nu-out-neighbourhood of S is the set of vertices with at least
ceil(nu*n) in-neighbors inside S.  D is a robust (nu, tau)-out-expander if
|RN+(S)| >= |S| + nu*n for every S with tau*n < |S| < (1-tau)*n (strict,
exact rational comparisons).  Certification enumerates all subsets up to a
size cap; the falsifier samples structured candidate sets.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .digraph import Digraph, degree_profile, remove_vertices
from .errors import BadParameter, TooLargeForExact
from .ratio import Real, as_fraction, ceil_frac

DEFAULT_EXACT_CAP = 20


@dataclass(frozen=True)
class ExpansionParams:
    """Expansion parameters, held exactly.

    Requires 0 < nu <= tau <= 1 and gamma in (0, 1).  tau = 1 is admitted
    as the degenerate boundary (the quantified size range is then empty).
    """

    nu: Fraction
    tau: Fraction
    gamma: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "nu", as_fraction(self.nu))
        object.__setattr__(self, "tau", as_fraction(self.tau))
        object.__setattr__(self, "gamma", as_fraction(self.gamma))
        if not 0 < self.nu <= self.tau <= 1:
            raise BadParameter(f"need 0 < nu <= tau <= 1, got nu={self.nu}, tau={self.tau}")
        if not 0 < self.gamma < 1:
            raise BadParameter(f"gamma must lie in (0, 1), got {self.gamma}")


class Verdict(enum.Enum):
    CERTIFIED_EXACT = "certified-exact"
    NO_COUNTEREXAMPLE_FOUND = "no-counterexample-found"
    REFUTED = "refuted"


@dataclass(frozen=True)
class ExpansionReport:
    verdict: Verdict
    counterexample: frozenset[int] | None = None
    sampled_trials: int = 0

    def __post_init__(self):
        if (self.verdict is Verdict.REFUTED) != (self.counterexample is not None):
            raise BadParameter("counterexample present iff verdict is refuted")


def _in_count_threshold(nu: Fraction, n: int) -> int:
    return ceil_frac(nu * n)


def robust_out_neighbourhood(D: Digraph, S: Iterable[int], nu: Real) -> frozenset[int]:
    """Vertices with at least ceil(nu*n) in-neighbors inside S."""
    nu = as_fraction(nu)
    if not 0 < nu <= 1:
        raise BadParameter(f"nu must lie in (0, 1], got {nu}")
    sset = set(S)
    t = _in_count_threshold(nu, D.n)
    return frozenset(
        x for x in D.vertices() if sum(1 for u in D.in_neighbors(x) if u in sset) >= t
    )


def robust_in_neighbourhood(D: Digraph, S: Iterable[int], nu: Real) -> frozenset[int]:
    """Vertices with at least ceil(nu*n) out-neighbors inside S (the
    mirror image of the out-neighbourhood under arc reversal)."""
    nu = as_fraction(nu)
    if not 0 < nu <= 1:
        raise BadParameter(f"nu must lie in (0, 1], got {nu}")
    sset = set(S)
    t = _in_count_threshold(nu, D.n)
    return frozenset(
        x for x in D.vertices() if sum(1 for v in D.out_neighbors(x) if v in sset) >= t
    )


def _quantified_sizes(n: int, tau: Fraction) -> list[int]:
    lo = tau * n
    hi = (1 - tau) * n
    return [s for s in range(n + 1) if lo < s < hi]


def certify_outexpander_exact(
    D: Digraph, p: ExpansionParams, max_exact_n: int = DEFAULT_EXACT_CAP
) -> ExpansionReport:
    """Decide the robust (nu, tau)-out-expansion property by enumerating
    every subset in the quantified size range.

    Refutation reports a minimum-size counterexample (the first, in
    lexicographic order of the sorted vertex tuple, among the smallest
    violating sets).  Raises TooLargeForExact above the subset cap.
    """
    n = D.n
    if n > max_exact_n:
        raise TooLargeForExact(f"n={n} exceeds the exact enumeration cap {max_exact_n}")
    sizes = _quantified_sizes(n, p.tau)
    if not sizes:
        return ExpansionReport(Verdict.CERTIFIED_EXACT)
    import numpy as np

    M = D.bool_matrix().astype(np.int16)  # M[u, x] == 1 iff arc u->x
    t = _in_count_threshold(p.nu, n)
    for s in sizes:
        need = s + ceil_frac(p.nu * n)
        for chunk in _combination_chunks(n, s, 4096):
            rows = np.array(chunk, dtype=np.intp)  # (c, s) vertex indices
            counts = M[rows].sum(axis=1)  # (c, n): in-degrees from S
            rn_sizes = (counts >= t).sum(axis=1)
            bad = np.nonzero(rn_sizes < need)[0]
            if bad.size:
                return ExpansionReport(
                    Verdict.REFUTED, counterexample=frozenset(chunk[int(bad[0])])
                )
    return ExpansionReport(Verdict.CERTIFIED_EXACT)


def certify_inexpander_exact(
    D: Digraph, p: ExpansionParams, max_exact_n: int = DEFAULT_EXACT_CAP
) -> ExpansionReport:
    """Exact decision of the robust (nu, tau)-in-expansion property,
    computed as out-expansion of the reversed digraph."""
    return certify_outexpander_exact(D.reverse(), p, max_exact_n)


def _combination_chunks(n: int, s: int, chunk: int):
    it = itertools.combinations(range(n), s)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield block


def falsify_outexpander_sampled(
    D: Digraph, p: ExpansionParams, trials: int, seed: int
) -> ExpansionReport:
    """Search for a violating subset with seeded random proposals.

    Proposals mix uniform subsets across the quantified sizes, contiguous
    segments of random vertex orderings, and greedily grown candidate
    sets.  Trials are partitioned into fixed-size streams with derived
    seeds, so the outcome depends only on (seed, trials).  A returned
    counterexample always re-verifies against the definition.
    """
    if trials < 1:
        raise BadParameter(f"trials must be >= 1, got {trials}")
    n = D.n
    sizes = _quantified_sizes(n, p.tau)
    if not sizes:
        return ExpansionReport(Verdict.NO_COUNTEREXAMPLE_FOUND, sampled_trials=trials)
    t = _in_count_threshold(p.nu, n)
    nu_ceil = ceil_frac(p.nu * n)
    in_masks = D.in_masks()
    full = (1 << n) - 1

    def violates(mask: int) -> bool:
        s = mask.bit_count()
        rn = sum(1 for x in range(n) if (in_masks[x] & mask).bit_count() >= t)
        return rn < s + nu_ceil

    stream = 0
    done = 0
    while done < trials:
        rng = random.Random((seed * 1_000_003 + stream) & 0xFFFFFFFF)
        stream += 1
        order = list(range(n))
        rng.shuffle(order)
        budget = min(256, trials - done)
        for j in range(budget):
            kind = j % 3
            if kind == 0:  # uniform subset at a uniform in-range size
                s = rng.choice(sizes)
                mask = 0
                for v in rng.sample(range(n), s):
                    mask |= 1 << v
            elif kind == 1:  # contiguous segment of the shuffled ordering
                s = rng.choice(sizes)
                start = rng.randrange(n)
                mask = 0
                for k in range(s):
                    mask |= 1 << order[(start + k) % n]
            else:  # greedy growth: repeatedly add the most-dominated vertex
                mask = 1 << rng.randrange(n)
                target = rng.choice(sizes)
                while mask.bit_count() < target:
                    best, best_score = -1, -1
                    for v in range(n):
                        if mask >> v & 1:
                            continue
                        score = (in_masks[v] & mask).bit_count()
                        if score > best_score:
                            best, best_score = v, score
                    mask |= 1 << best
            size = mask.bit_count()
            if size not in sizes:
                continue
            if violates(mask):
                S = frozenset(v for v in range(n) if mask >> v & 1)
                return ExpansionReport(
                    Verdict.REFUTED, counterexample=S, sampled_trials=done + j + 1
                )
        done += budget
    return ExpansionReport(Verdict.NO_COUNTEREXAMPLE_FOUND, sampled_trials=trials)


def derive_params_from_degrees(n: int, gamma: Real) -> ExpansionParams:
    """Expansion parameters implied by a degree margin gamma:
    tau = gamma/16 and nu = tau**2."""
    g = as_fraction(gamma)
    if not 0 < g < 1:
        raise BadParameter(f"gamma must lie in (0, 1), got {g}")
    tau = g / 16
    return ExpansionParams(nu=tau * tau, tau=tau, gamma=g)


def shrink_params_for_deletion(p: ExpansionParams) -> ExpansionParams:
    """Parameters that survive deleting up to nu*n/4 vertices from a
    robust (nu, tau)-out-expander: (nu/2, 2*tau)."""
    return ExpansionParams(nu=p.nu / 2, tau=min(2 * p.tau, Fraction(1)), gamma=p.gamma)


def deletion_tolerance(D: Digraph, p: ExpansionParams) -> int:
    """Largest vertex-set size whose removal preserves expansion at the
    shrunken parameters: floor(nu*n/4)."""
    return int(p.nu * D.n / 4)


def inexpansion_params(p: ExpansionParams) -> ExpansionParams:
    """In-expansion parameters (nu**2, 2*tau) implied by out-expansion
    together with min semidegree >= gamma*n, provided 2*tau < gamma,
    nu**2/2 < tau*gamma and nu < 1/2."""
    if not (
        2 * p.tau < p.gamma
        and p.nu * p.nu / 2 < p.tau * p.gamma
        and p.nu < Fraction(1, 2)
    ):
        raise BadParameter(
            "need 2*tau < gamma, nu^2/2 < tau*gamma and nu < 1/2 "
            f"(got nu={p.nu}, tau={p.tau}, gamma={p.gamma})"
        )
    return ExpansionParams(nu=p.nu * p.nu, tau=min(2 * p.tau, Fraction(1)), gamma=p.gamma)


def certify_survives_deletion(
    D: Digraph,
    p: ExpansionParams,
    removed: Iterable[int],
    max_exact_n: int = DEFAULT_EXACT_CAP,
) -> ExpansionReport:
    """Certify D - removed as a robust (nu/2, 2*tau)-out-expander.

    The removed set must have size at most deletion_tolerance(D, p);
    min semidegree gamma*n is not assumed here.
    """
    removed = set(removed)
    if len(removed) > deletion_tolerance(D, p):
        raise BadParameter(
            f"removed set of size {len(removed)} exceeds tolerance "
            f"{deletion_tolerance(D, p)}"
        )
    sub = remove_vertices(D, removed).digraph
    return certify_outexpander_exact(sub, shrink_params_for_deletion(p), max_exact_n)


def min_semidegree_margin(D: Digraph) -> Fraction:
    """delta0(D) / n as an exact fraction (0 for the empty digraph)."""
    if D.n == 0:
        return Fraction(0)
    return Fraction(degree_profile(D).delta_zero, D.n)
