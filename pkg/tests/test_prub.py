# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from concurrent.futures import ThreadPoolExecutor

from pytest import fixture
from pytest import raises

from seedprice.cascade import revenue
from seedprice.datagen import InstanceSpec
from seedprice.datagen import generate_instance
from seedprice.errors import EmptyPriceSet
from seedprice.errors import InstanceTooLarge
from seedprice.errors import InvalidPriceSet
from seedprice.errors import InvalidQuantity
from seedprice.errors import InvariantViolation
from seedprice.errors import SeedsExceedStock
from seedprice.model import build_network
from seedprice.prub import ExhaustiveSearch
from seedprice.prub import per_price_best
from seedprice.prub import solve_bruteforce
from seedprice.prub import solve_prub
from seedprice.search import PriceSet
from seedprice.search import verify_result
from seedprice.utils.numeric import PENDING_PER_THREAD
from tests.networks import PRICES
from tests.networks import rising_price_network
from tests.networks import six_person_network


@fixture
def six():
    """Create the six-person network with F(x) = x."""
    return six_person_network()


@fixture
def rising():
    """Create the three-person network of the pricing exception."""
    return rising_price_network()


def test_prub_six_quantity_four(six):
    """Test the optimum ($6, {d}, $18) under a quantity of 4."""
    result = solve_prub(six, PRICES, 4)
    assert result.p_max == 6
    assert result.seeds == ('d',)
    assert result.revenue == 18
    assert result.solver == 'prub'


def test_prub_six_without_quantity_constraint(six):
    """Test the optimum ($7, {d, f}, $28) once stock is not binding."""
    result = solve_prub(six, PRICES, 6)
    assert result.p_max == 7
    assert set(result.seeds) == {'d', 'f'}
    assert result.revenue == 28


def test_prub_visits_prices_by_bound(six):
    """Test the search visits $7, then $6, then $8."""
    result = solve_prub(six, PRICES, 4)
    visited = []
    for event in result.trace:
        if event.price not in visited:
            visited.append(event.price)
    assert visited[:3] == [7, 6, 8]


def test_prub_trace_at_seven(six):
    """Test the $7 tiers: $0 with no seeds, $7 with one, $14 with two."""
    result = solve_prub(six, PRICES, 4)
    at_seven = [event for event in result.trace if event.price == 7]
    assert [event.revenue for event in at_seven] == [0, 7, 14]
    assert at_seven[1].seeds == ('d',)


def test_prub_stops_at_nine(six):
    """Test the $18 bound of $9 stops the search after four prices."""
    result = solve_prub(six, PRICES, 4)
    assert result.stats.prices_examined == 4
    assert result.stats.prices_pruned == 6


def test_prub_stats_account_for_every_price(six):
    """Test examined plus pruned prices equals |P|."""
    for n in range(1, 7):
        stats = solve_prub(six, PRICES, n).stats
        assert stats.prices_examined + stats.prices_pruned == len(PRICES)
        assert stats.groups_evaluated >= stats.prices_examined


def test_prub_global_revenue_never_decreases(six):
    """Test r_global is non-decreasing along the trace."""
    result = solve_prub(six, PRICES, 4)
    bests = [event.best for event in result.trace]
    assert bests == sorted(bests)
    assert bests[-1] == result.revenue


def test_prub_rising_small_quantity(rising):
    """Test n = 2 prices at $3 with no seeds."""
    result = solve_prub(rising, PRICES, 2)
    assert (result.p_max, result.seeds, result.revenue) == (3, (), 6)


def test_prub_rising_larger_quantity(rising):
    """Test n = 3 raises the optimal price to $7 with seeds a and c."""
    result = solve_prub(rising, PRICES, 3)
    assert (result.p_max, result.seeds, result.revenue) == (7, ('a', 'c'), 7)


def test_prub_result_replays(six):
    """Test results pass the replay check for every quantity."""
    prices = PriceSet(PRICES)
    for n in range(1, 7):
        verify_result(six, n, solve_prub(six, prices, n), prices)


def test_prub_same_result_for_any_thread_count(six):
    """Test threads change nothing but wall time."""
    single = solve_prub(six, PRICES, 4, threads=1)
    pooled = solve_prub(six, PRICES, 4, threads=4)
    assert single._replace(stats=None) == pooled._replace(stats=None)
    assert single.stats[:3] == pooled.stats[:3]


def test_worker_threads_run_a_bounded_distance_ahead(six):
    """Test only a few work units are queued ahead of the reduction."""
    search = ExhaustiveSearch(six, PRICES, 4, threads=2)
    drawn = []

    def units():
        for unit in range(1000):
            drawn.append(unit)
            yield unit

    search._executor = ThreadPoolExecutor(max_workers=2)
    try:
        results = search.map(lambda unit: unit * 2, units())
        assert next(results) == 0
        assert len(drawn) <= 2 * PENDING_PER_THREAD
        assert list(results) == [2 * unit for unit in range(1, 1000)]
    finally:
        search._executor.shutdown()


def test_prub_no_revenue_possible():
    """Test ($0, {}, $0) when every valuation is zero and nobody links."""
    net = build_network(['a', 'b'], [0, 0], [])
    result = solve_prub(net, PRICES, 1)
    assert (result.p_max, result.seeds, result.revenue) == (0, (), 0)
    verify_result(net, 1, result)


def test_prub_empty_price_set(six):
    """Test EmptyPriceSet for P = {}."""
    with raises(EmptyPriceSet):
        solve_prub(six, [], 4)


def test_prub_unsorted_price_set(six):
    """Test InvalidPriceSet for prices out of order."""
    with raises(InvalidPriceSet):
        solve_prub(six, [3, 2], 4)


def test_prub_non_positive_price(six):
    """Test InvalidPriceSet for a zero price."""
    with raises(InvalidPriceSet):
        solve_prub(six, [0, 1], 4)


def test_prub_zero_quantity(six):
    """Test InvalidQuantity for n = 0."""
    with raises(InvalidQuantity):
        solve_prub(six, PRICES, 0)


def test_bruteforce_six(six):
    """Test the oracle finds $18 too."""
    result = solve_bruteforce(six, PRICES, 4)
    assert result.revenue == 18
    assert result.solver == 'bruteforce'


def test_bruteforce_examines_every_price(six):
    """Test nothing is pruned by the oracle."""
    result = solve_bruteforce(six, PRICES, 4)
    assert result.stats.prices_examined == len(PRICES)
    assert result.stats.prices_pruned == 0


def test_bruteforce_single_node():
    """Test one buyer at his own valuation."""
    net = build_network(['x'], [5], [])
    result = solve_bruteforce(net, [5], 1)
    assert (result.p_max, result.seeds, result.revenue) == (5, (), 5)


def test_bruteforce_agrees_with_prub_field_by_field(six, rising):
    """Test both solvers break ties the same way."""
    for net in (six, rising):
        for n in range(1, net.node_count + 1):
            exact = solve_prub(net, PRICES, n)
            oracle = solve_bruteforce(net, PRICES, n)
            assert exact.p_max == oracle.p_max
            assert exact.seeds == oracle.seeds
            assert exact.revenue == oracle.revenue


def test_bruteforce_agrees_on_random_instances():
    """Test revenue equality on 100 random 8-node instances."""
    for seed in range(100):
        spec = InstanceSpec(node_count=8, edge_probability=0.3, rng_seed=seed)
        net = generate_instance(spec)
        n = 1 + seed % 4
        assert solve_prub(net, PRICES, n).revenue == \
            solve_bruteforce(net, PRICES, n).revenue


def test_bruteforce_refuses_large_networks():
    """Test InstanceTooLarge above 20 nodes."""
    net = build_network([str(i) for i in range(21)], [1] * 21, [])
    with raises(InstanceTooLarge):
        solve_bruteforce(net, PRICES, 1)


def test_per_price_maxima_are_not_single_peaked(six):
    """Test best revenues $18, $14 and $16 at $6, $7 and $8."""
    assert per_price_best(six, 6, 4)[1] == 18
    assert per_price_best(six, 7, 4)[1] == 14
    assert per_price_best(six, 8, 4)[1] == 16


def test_per_price_best_canonical_group(six):
    """Test ties at $7 resolve to the lexicographically first group."""
    seeds, value = per_price_best(six, 7, 4)
    assert seeds == ('a', 'f')
    assert value == 14
    assert revenue(six, 4, 7, {'d', 'f'}) == 14
    assert revenue(six, 4, 7, {'d', 'e'}) == 14


def test_per_price_best_size_cap(six):
    """Test a cap of one seed keeps $7 at a single freebie."""
    seeds, value = per_price_best(six, 7, 4, size_cap=1)
    assert seeds == ('d',)
    assert value == 7


def test_per_price_best_zero_quantity(six):
    """Test n = 0 sells nothing."""
    assert per_price_best(six, 1, 0) == ((), 0)


def test_per_price_best_cap_above_stock(six):
    """Test SeedsExceedStock for a size cap above n."""
    with raises(SeedsExceedStock):
        per_price_best(six, 7, 2, size_cap=3)


def test_verify_result_detects_wrong_revenue(six):
    """Test InvariantViolation for a tampered result."""
    result = solve_prub(six, PRICES, 4)
    with raises(InvariantViolation):
        verify_result(six, 4, result._replace(revenue=19))


def test_verify_result_detects_foreign_price(six):
    """Test InvariantViolation for a price outside P."""
    result = solve_prub(six, PRICES, 4)
    with raises(InvariantViolation):
        verify_result(six, 4, result, PriceSet([1, 2]))


def test_verify_result_detects_oversized_group(six):
    """Test InvariantViolation for more seeds than stock."""
    result = solve_prub(six, PRICES, 6)
    with raises(InvariantViolation):
        verify_result(six, 1, result)
