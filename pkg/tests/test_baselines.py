# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from pytest import fixture
from pytest import mark
from pytest import raises

from seedprice.baselines import STRATEGY_KINDS
from seedprice.baselines import solve_baseline
from seedprice.baselines import solve_nosocial
from seedprice.errors import MissingSeedForRandom
from seedprice.errors import UnknownSolver
from seedprice.model import build_network
from seedprice.prub import solve_prub
from seedprice.prubif import greedy_trace
from seedprice.prubif import solve_prubif
from seedprice.search import verify_result
from tests.networks import PRICES
from tests.networks import six_person_network


RNG_SEED = 7

GREEDY_KINDS = sorted(STRATEGY_KINDS - {'nosocial'})


@fixture
def six():
    """Create the six-person network with F(x) = x."""
    return six_person_network()


def test_sum_of_weights_picks_at_seven(six):
    """Test d (out-weight 11) goes first, then e beats f on index."""
    result = solve_baseline(six, PRICES, 4, 'sum_of_weights')
    assert greedy_trace(result, 7) == [
        ((), 0),
        (('d',), 7),
        (('d', 'e'), 14),
    ]


def test_nosocial_six(six):
    """Test a, c and e buy at $2 without seeds."""
    result = solve_nosocial(six, PRICES, 4)
    assert (result.p_max, result.seeds, result.revenue) == (2, (), 6)
    assert result.solver == 'nosocial'


def test_nosocial_prunes_the_lowest_price(six):
    """Test $1 is never examined once $6 is in hand."""
    result = solve_nosocial(six, PRICES, 4)
    assert 1 not in {event.price for event in result.trace}
    assert result.stats.prices_pruned == 1


def test_nosocial_all_zero_valuations():
    """Test nobody buys when every valuation is zero."""
    net = build_network(['a', 'b', 'c'], [0, 0, 0], [('a', 'b', 3)])
    result = solve_nosocial(net, PRICES, 3)
    assert (result.p_max, result.seeds, result.revenue) == (0, (), 0)


def test_nosocial_single_buyer():
    """Test one buyer valuing the commodity at $9 pays $9."""
    net = build_network(['x'], [9], [])
    result = solve_nosocial(net, PRICES, 1)
    assert (result.p_max, result.revenue) == (9, 9)


def test_nosocial_replays_without_influence(six):
    """Test the replay check uses inherent valuations for nosocial."""
    verify_result(six, 4, solve_nosocial(six, PRICES, 4))


def test_random_is_reproducible(six):
    """Test one seed gives one result."""
    first = solve_baseline(six, PRICES, 4, 'random', rng_seed=RNG_SEED)
    second = solve_baseline(six, PRICES, 4, 'random', rng_seed=RNG_SEED)
    assert first._replace(stats=None) == second._replace(stats=None)


def test_random_ignores_thread_count(six):
    """Test the draws do not depend on the worker pool."""
    single = solve_baseline(six, PRICES, 4, 'random', RNG_SEED, threads=1)
    pooled = solve_baseline(six, PRICES, 4, 'random', RNG_SEED, threads=4)
    assert single._replace(stats=None) == pooled._replace(stats=None)


def test_random_requires_seed(six):
    """Test MissingSeedForRandom without an rng seed."""
    with raises(MissingSeedForRandom):
        solve_baseline(six, PRICES, 4, 'random')


def test_unknown_strategy(six):
    """Test UnknownSolver for a name outside the registry."""
    with raises(UnknownSolver) as info:
        solve_baseline(six, PRICES, 4, 'pagerank')
    assert 'pagerank' in str(info.value)


@mark.parametrize('kind', GREEDY_KINDS)
def test_greedy_strategies_replay(six, kind):
    """Test every greedy strategy passes the replay check."""
    for n in range(1, 7):
        result = solve_baseline(six, PRICES, n, kind, rng_seed=RNG_SEED)
        assert result.solver == kind
        verify_result(six, n, result)


@mark.parametrize('kind', sorted(STRATEGY_KINDS))
def test_strategies_never_beat_the_exact_solver(six, kind):
    """Test every strategy stays at or below the optimum."""
    for n in range(1, 7):
        optimum = solve_prub(six, PRICES, n).revenue
        result = solve_baseline(six, PRICES, n, kind, rng_seed=RNG_SEED)
        assert result.revenue <= optimum


def test_prubif_dominates_nosocial(six):
    """Test seeding never does worse than pricing alone."""
    for n in range(1, 7):
        assert solve_prubif(six, PRICES, n).revenue >= \
            solve_nosocial(six, PRICES, n).revenue


def test_ablations_start_like_prubif_at_seven(six):
    """Test every importance ablation also seeds d first at $7."""
    for kind in ('ablation_N', 'ablation_F', 'ablation_P'):
        result = solve_baseline(six, PRICES, 4, kind)
        assert greedy_trace(result, 7)[1] == (('d',), 7)
