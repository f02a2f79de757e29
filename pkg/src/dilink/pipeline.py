"""End-to-end construction pipelines.

Both pipelines share one skeleton: build an absorber (whose host paths
are deliberately left short of their final size), find a Hamilton cycle
of the digraph minus the absorber, cut segments of exactly the missing
sizes from the cycle, and absorb each segment into its designated host
path.  Because rung-swap absorption adds exactly the absorbed vertices,
the final subdivisions hit their prescribed path lengths (or orders)
on the nose.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .absorber import (
    absorb_paths,
    absorber_params,
    build_type1_absorber,
    build_type2_absorber,
)
from .cycles import DEFAULT_EXACT_CAP, cut_cycle_segments, hamilton_cycle
from .digraph import Digraph, remove_vertices
from .errors import (
    AbsorberConstructionFailed,
    BadParameter,
    CycleNotFound,
    NoCoveringPair,
    OrdersDontSumToN,
    PipelineFailed,
)
from .expansion import ExpansionParams, derive_params_from_degrees
from .ratio import Real, as_fraction
from .subdivision import (
    HSubdivision,
    LengthPrescription,
    PatternDigraph,
    min_prescribed_length,
    path_lengths,
    subdivision_order,
    validate_subdivision,
    validate_tiling,
)

_CUT_TRIES = 8


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for the construction pipelines.

    nu and tau default to values derived from gamma (in which case the
    ordering 0 < nu <= tau <= gamma/16 is enforced); d defaults to the
    theory value ceil(64/nu^2), which desk-scale runs will usually
    override with something small.
    """

    gamma: Real
    nu: Real | None = None
    tau: Real | None = None
    d: int | None = None
    seed: int = 0
    restart_budget: int = 3
    cycle_exact_cap: int = DEFAULT_EXACT_CAP

    def __post_init__(self):
        g = as_fraction(self.gamma)
        if not 0 < g < 1:
            raise BadParameter(f"gamma must lie in (0, 1), got {self.gamma}")
        object.__setattr__(self, "gamma", g)
        if self.restart_budget < 1:
            raise BadParameter("restart_budget must be >= 1")
        if self.d is not None and self.d < 1:
            raise BadParameter("d must be >= 1")

    def resolve(self, n: int) -> tuple[ExpansionParams, int]:
        """Concrete (ExpansionParams, d) for an n-vertex instance."""
        if self.nu is None and self.tau is None:
            p = derive_params_from_degrees(n, self.gamma)
            if not 0 < p.nu <= p.tau <= self.gamma / 16:
                raise BadParameter(
                    "derived parameters violate nu <= tau <= gamma/16"
                )
        else:
            tau = as_fraction(self.tau) if self.tau is not None else None
            nu = as_fraction(self.nu) if self.nu is not None else None
            if nu is None:
                nu = tau * tau
            if tau is None:
                tau = nu
            p = ExpansionParams(nu, tau, self.gamma)
        d = self.d if self.d is not None else absorber_params(p.nu).d
        return p, d


def _stage_seed(base: int, restart: int, salt: int) -> int:
    return (base * 1_000_003 + restart * 7919 + salt) & 0xFFFFFFFF


def nh_linked_embed(
    D: Digraph,
    H: PatternDigraph,
    f: Mapping[int, int],
    N: LengthPrescription | Sequence[int],
    cfg: PipelineConfig,
) -> HSubdivision:
    """Embed an H-subdivision with branch map exactly f and path lengths
    exactly N (one length per pattern arc, in arc order).

    Stages per restart: Type-I absorber around f; Hamilton cycle of the
    digraph minus the absorber; cut one segment per pattern arc sized to
    top its host path up to the prescribed length; absorb each segment
    into its own path.  Stage failures trigger a full restart with a
    derived seed, up to cfg.restart_budget.
    """
    n = D.n
    N = N if isinstance(N, LengthPrescription) else LengthPrescription(tuple(N))
    if len(N) != H.h:
        raise BadParameter(f"{H.h} lengths required, got {len(N)}")
    p, d = cfg.resolve(n)
    floor = min_prescribed_length(p.nu)
    for l in N:
        if l < floor:
            raise PipelineFailed(
                "feasibility", f"prescribed length {l} below the minimum {floor}"
            )
    if sum(l + 1 for l in N) > n:
        raise PipelineFailed(
            "feasibility",
            f"sum of (l_i + 1) is {sum(l + 1 for l in N)}, exceeding n = {n}",
        )
    if d < H.h:
        raise PipelineFailed(
            "feasibility", f"d = {d} cannot absorb {H.h} segments at once"
        )
    arcs = H.arc_order
    last_stage, last_msg = "absorber", "no attempt ran"
    for restart in range(cfg.restart_budget):
        try:
            A = build_type1_absorber(
                D, H, f, N, p, d, _stage_seed(cfg.seed, restart, 1)
            )
        except AbsorberConstructionFailed as e:
            last_stage, last_msg = "absorber", str(e)
            continue
        removal = remove_vertices(D, A.vertices())
        try:
            C_local = hamilton_cycle(removal.digraph, _stage_seed(cfg.seed, restart, 2))
        except CycleNotFound as e:
            last_stage, last_msg = "cycle", str(e)
            continue
        C = tuple(removal.new_to_old[x] for x in C_local)
        sizes = [
            N.lengths[i] + 1 - len(A.host.paths[arc]) for i, arc in enumerate(arcs)
        ]
        done = None
        for cut in range(_CUT_TRIES):
            segs = cut_cycle_segments(C, sizes, _stage_seed(cfg.seed, restart, 3 + cut))
            try:
                sub = absorb_paths(D, A, segs, targets=arcs)
            except NoCoveringPair as e:
                last_stage, last_msg = "absorb", str(e)
                continue
            done = sub
            break
        if done is None:
            continue
        if (
            validate_subdivision(D, done)
            and path_lengths(done) == N.lengths
            and dict(done.branch_map) == dict(f)
        ):
            return done
        last_stage, last_msg = "validate", "absorbed subdivision failed final checks"
    raise PipelineFailed(last_stage, last_msg)


def perfect_tiling(
    D: Digraph,
    H: PatternDigraph,
    orders: Sequence[int],
    cfg: PipelineConfig,
) -> list[HSubdivision]:
    """Partition V(D) into H-subdivisions of exactly the given orders.

    Same skeleton as nh_linked_embed, but with a Type-II absorber (one
    host per requested order) and the ENTIRE leftover cycle cut into k
    segments, so the union of the k enlarged subdivisions is V(D).
    """
    n = D.n
    orders = [int(x) for x in orders]
    k = len(orders)
    if k < 1:
        raise BadParameter("at least one order required")
    if sum(orders) != n:
        raise OrdersDontSumToN(
            f"orders sum to {sum(orders)}, but the digraph has {n} vertices"
        )
    p, d = cfg.resolve(n)
    floor = min_prescribed_length(p.nu)
    for o in orders:
        if o < floor:
            raise PipelineFailed(
                "feasibility", f"order {o} below the minimum {floor}"
            )
    if d < k:
        raise PipelineFailed(
            "feasibility", f"d = {d} cannot absorb {k} segments at once"
        )
    last_stage, last_msg = "absorber", "no attempt ran"
    for restart in range(cfg.restart_budget):
        try:
            A = build_type2_absorber(
                D, H, orders, p, d, _stage_seed(cfg.seed, restart, 1)
            )
        except AbsorberConstructionFailed as e:
            last_stage, last_msg = "absorber", str(e)
            continue
        removal = remove_vertices(D, A.vertices())
        try:
            C_local = hamilton_cycle(removal.digraph, _stage_seed(cfg.seed, restart, 2))
        except CycleNotFound as e:
            last_stage, last_msg = "cycle", str(e)
            continue
        C = tuple(removal.new_to_old[x] for x in C_local)
        sizes = [orders[i] - subdivision_order(A.hosts[i]) for i in range(k)]
        assert sum(sizes) == len(C), "host budgets must account for every vertex"
        done = None
        for cut in range(_CUT_TRIES):
            segs = cut_cycle_segments(C, sizes, _stage_seed(cfg.seed, restart, 3 + cut))
            try:
                subs = absorb_paths(D, A, segs)
            except NoCoveringPair as e:
                last_stage, last_msg = "absorb", str(e)
                continue
            done = subs
            break
        if done is None:
            continue
        if validate_tiling(D, done, orders):
            return list(done)
        last_stage, last_msg = "validate", "tiling failed final checks"
    raise PipelineFailed(last_stage, last_msg)
