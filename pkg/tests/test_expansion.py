import random
from fractions import Fraction

import pytest

from dilink import (
    Digraph,
    ExpansionParams,
    Verdict,
    certify_inexpander_exact,
    certify_outexpander_exact,
    certify_survives_deletion,
    complete_digraph,
    deletion_tolerance,
    derive_params_from_degrees,
    directed_cycle,
    falsify_outexpander_sampled,
    gen_random_digraph,
    inexpansion_params,
    min_semidegree_margin,
    robust_in_neighbourhood,
    robust_out_neighbourhood,
    shrink_params_for_deletion,
)
from dilink.errors import BadParameter, TooLargeForExact

from helpers import oracle_robust_outexpander, random_arc_set


def test_params_validation():
    ExpansionParams("1/6", "1/6")
    ExpansionParams(Fraction(1, 3), Fraction(1, 2), Fraction(9, 10))
    with pytest.raises(BadParameter):
        ExpansionParams("1/2", "1/3")  # nu > tau
    with pytest.raises(BadParameter):
        ExpansionParams(0, "1/3")
    with pytest.raises(BadParameter):
        ExpansionParams("1/6", "1/6", gamma=1)


def test_robust_neighbourhoods_by_hand():
    # 0 -> 1, 0 -> 2, 3 -> 2.  With nu = 1/4 on n = 4 the threshold is
    # one in-neighbour inside S.
    D = Digraph(4, [(0, 1), (0, 2), (3, 2)])
    assert robust_out_neighbourhood(D, {0}, "1/4") == frozenset({1, 2})
    assert robust_out_neighbourhood(D, {0, 3}, "1/4") == frozenset({1, 2})
    # threshold two: only 2 has two in-neighbours inside {0, 3}
    assert robust_out_neighbourhood(D, {0, 3}, "1/2") == frozenset({2})
    # the in-neighbourhood mirrors under arc reversal
    assert robust_in_neighbourhood(D, {2}, "1/4") == frozenset({0, 3})
    assert robust_in_neighbourhood(D, {1, 2}, "1/2") == robust_out_neighbourhood(
        D.reverse(), {1, 2}, "1/2"
    )


def test_robust_neighbourhood_is_monotone_in_set_and_antitone_in_nu():
    """Growing S can only grow the robust neighbourhood; raising nu can
    only shrink it."""
    rng = random.Random(83)
    for _ in range(60):
        n = rng.randrange(2, 16)
        D = Digraph(n, random_arc_set(rng, n, rng.uniform(0.2, 0.9)))
        small = {v for v in range(n) if rng.random() < 0.4}
        big = small | {v for v in range(n) if rng.random() < 0.4}
        nu = Fraction(rng.randrange(1, n + 1), n)
        assert robust_out_neighbourhood(D, small, nu) <= robust_out_neighbourhood(D, big, nu)
        higher = min(nu + Fraction(rng.randrange(0, n + 1), n), Fraction(1))
        assert robust_out_neighbourhood(D, big, higher) <= robust_out_neighbourhood(D, big, nu)


def test_in_neighbourhood_mirrors_out_neighbourhood_exhaustively():
    """Over every S (all 2^n of them) the in-neighbourhood equals the
    out-neighbourhood of the reversed digraph."""
    rng = random.Random(84)
    hosts = [directed_cycle(6), complete_digraph(5)]
    hosts += [Digraph(8, random_arc_set(rng, 8, rng.uniform(0.3, 0.7))) for _ in range(3)]
    for D in hosts:
        R = D.reverse()
        for nu in ("1/8", "1/2"):
            for mask in range(1 << D.n):
                S = {v for v in range(D.n) if mask >> v & 1}
                assert robust_in_neighbourhood(D, S, nu) == robust_out_neighbourhood(R, S, nu)


def test_complete_digraph_certifies():
    p = ExpansionParams("1/6", "1/6")
    assert certify_outexpander_exact(complete_digraph(6), p).verdict is (
        Verdict.CERTIFIED_EXACT
    )
    assert certify_inexpander_exact(complete_digraph(6), p).verdict is (
        Verdict.CERTIFIED_EXACT
    )


def test_directed_cycle_is_refuted_with_reverifying_counterexample():
    p = ExpansionParams("1/6", "1/6")
    rep = certify_outexpander_exact(directed_cycle(6), p)
    assert rep.verdict is Verdict.REFUTED
    # the counterexample violates the definition, independently rechecked
    S = rep.counterexample
    n = 6
    hits = sum(
        1
        for x in range(n)
        if sum(1 for u in S if directed_cycle(6).has_arc(u, x)) >= Fraction(1, 6) * n
    )
    assert hits < len(S) + Fraction(1, 6) * n


def test_empty_quantifier_range_certifies_vacuously():
    # tau = 1/2 leaves no sizes with tau*n < s < (1-tau)*n
    p = ExpansionParams("1/2", "1/2")
    assert certify_outexpander_exact(directed_cycle(4), p).verdict is (
        Verdict.CERTIFIED_EXACT
    )


def test_exact_cap_is_enforced():
    p = ExpansionParams("1/6", "1/6")
    with pytest.raises(TooLargeForExact):
        certify_outexpander_exact(complete_digraph(9), p, max_exact_n=8)


@pytest.mark.parametrize("nu,tau", [("1/6", "1/6"), ("1/3", "1/3")])
def test_certifier_matches_definition_checker(nu, tau):
    rng = random.Random(42)
    p = ExpansionParams(nu, tau)
    for _ in range(300):
        n = rng.randrange(2, 7)
        D = Digraph(n, random_arc_set(rng, n, rng.uniform(0.1, 0.9)))
        expected = oracle_robust_outexpander(D, Fraction(nu), Fraction(tau))
        rep = certify_outexpander_exact(D, p)
        if expected is None:
            assert rep.verdict is Verdict.CERTIFIED_EXACT
        else:
            assert rep.verdict is Verdict.REFUTED
            assert rep.counterexample == expected  # same (size, lex) minimum


def test_falsifier_agrees_and_counterexamples_verify():
    rng = random.Random(7)
    p = ExpansionParams("1/4", "1/4")
    refuted = 0
    for trial in range(120):
        n = rng.randrange(3, 9)
        D = Digraph(n, random_arc_set(rng, n, rng.uniform(0.2, 0.9)))
        truth = oracle_robust_outexpander(D, Fraction(1, 4), Fraction(1, 4))
        rep = falsify_outexpander_sampled(D, p, trials=400, seed=trial)
        if truth is None:
            assert rep.verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
        elif rep.verdict is Verdict.REFUTED:
            refuted += 1
            S = rep.counterexample
            assert Fraction(1, 4) * n < len(S) < Fraction(3, 4) * n
            assert oracle_robust_outexpander(D, Fraction(1, 4), Fraction(1, 4)) is not None
    assert refuted > 20  # the sampler actually finds most violations


def test_falsifier_is_deterministic_in_seed_and_trials():
    D = gen_random_digraph(12, 0.4, 3)
    p = ExpansionParams("1/5", "1/5")
    a = falsify_outexpander_sampled(D, p, trials=500, seed=9)
    b = falsify_outexpander_sampled(D, p, trials=500, seed=9)
    assert a == b


def test_derived_parameters_are_exact():
    p = derive_params_from_degrees(100, "1/2")
    assert p.tau == Fraction(1, 32)
    assert p.nu == Fraction(1, 1024)
    assert p.gamma == Fraction(1, 2)
    with pytest.raises(BadParameter):
        derive_params_from_degrees(10, 0)


def test_deletion_parameters_and_tolerance():
    p = ExpansionParams("1/3", "1/3")
    q = shrink_params_for_deletion(p)
    assert (q.nu, q.tau) == (Fraction(1, 6), Fraction(2, 3))
    assert deletion_tolerance(complete_digraph(12), p) == 1
    # tau doubling saturates at 1
    assert shrink_params_for_deletion(ExpansionParams("1/2", "3/4")).tau == 1


def test_deletion_certification_on_complete_digraphs():
    p = ExpansionParams("1/3", "1/3")
    D = complete_digraph(12)
    assert certify_outexpander_exact(D, p).verdict is Verdict.CERTIFIED_EXACT
    for v in (0, 5, 11):
        rep = certify_survives_deletion(D, p, {v})
        assert rep.verdict is Verdict.CERTIFIED_EXACT
    with pytest.raises(BadParameter):
        certify_survives_deletion(D, p, {0, 1})  # above the tolerance


def test_inexpansion_parameter_guard():
    ok = ExpansionParams("1/5", "1/5", gamma="1/2")
    q = inexpansion_params(ok)
    assert (q.nu, q.tau) == (Fraction(1, 25), Fraction(2, 5))
    with pytest.raises(BadParameter):
        inexpansion_params(ExpansionParams("1/3", "1/3", gamma="1/2"))  # 2tau >= gamma


def test_min_semidegree_margin():
    assert min_semidegree_margin(complete_digraph(8)) == Fraction(7, 8)
    assert min_semidegree_margin(directed_cycle(5)) == Fraction(1, 5)
    assert min_semidegree_margin(Digraph(0, [])) == 0
