# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from pytest import approx
from pytest import fixture
from pytest import raises

from seedprice.errors import EmptyPriceSet
from seedprice.errors import InvalidQuantity
from seedprice.errors import UnknownNode
from seedprice.model import build_network
from seedprice.prubif import ImportanceState
from seedprice.prubif import greedy_trace
from seedprice.prubif import importance_feedback
from seedprice.prubif import normalized_weight
from seedprice.prubif import pricing_sensitive_importance
from seedprice.prubif import solve_prubif
from seedprice.search import verify_result
from tests.networks import PRICES
from tests.networks import TOLERANCE
from tests.networks import six_person_network


EMPTY_GROUP_IMPORTANCE = {
    'a': 29 / 28,
    'b': 1 / 5,
    'c': 0,
    'd': 73 / 28,
    'e': 15 / 14,
    'f': 65 / 28,
}

SEEDED_IMPORTANCE = {
    'b': 0,
    'c': 0,
    'e': 2,
    'f': 3,
}


@fixture
def six():
    """Create the six-person network with F(x) = x."""
    return six_person_network()


@fixture
def empty_state(six):
    """Create the importance state at $7 with no seeds."""
    return ImportanceState.build(six, 7)


@fixture
def seeded_state(six):
    """Create the importance state at $7 after seeding d."""
    return ImportanceState.build(six, 7, ['d'])


def test_normalized_weights_from_d(empty_state):
    """Test d's normalized weights at $7 with no seeds."""
    assert normalized_weight(empty_state, 'd', 'a') == approx(1, abs=TOLERANCE)
    assert normalized_weight(empty_state, 'd', 'b') == approx(4 / 7, abs=TOLERANCE)
    assert normalized_weight(empty_state, 'd', 'f') == approx(2 / 7, abs=TOLERANCE)
    assert normalized_weight(empty_state, 'd', 'c') == 0


def test_normalized_weight_to_self(empty_state):
    """Test w_hat(u, u) = 0."""
    for label in 'abcdef':
        assert normalized_weight(empty_state, label, label) == 0


def test_normalized_weight_to_adopter(seeded_state):
    """Test adopters get no normalized weight."""
    assert normalized_weight(seeded_state, 'b', 'a') == 0
    assert normalized_weight(seeded_state, 'c', 'd') == 0


def test_normalized_weight_to_seed_below_price():
    """Test a seed gets no normalized weight even below the price."""
    net = build_network(['u', 'v'], {'u': 0, 'v': 0}, [('u', 'v', 3)])
    assert normalized_weight(ImportanceState.build(net, 5), 'u', 'v') == approx(0.6)
    seeded = ImportanceState.build(net, 5, ['v'])
    assert normalized_weight(seeded, 'u', 'v') == 0


def test_normalized_weight_is_capped(seeded_state):
    """Test e's push on b is capped at 1 once b is $1 short."""
    assert normalized_weight(seeded_state, 'e', 'b') == 1


def test_normalized_weight_unknown_node(empty_state):
    """Test UnknownNode for labels outside the network."""
    with raises(UnknownNode):
        normalized_weight(empty_state, 'd', 'z')


def test_importance_feedback_from_d(empty_state):
    """Test IF(d, .) after a passes on its weights."""
    scores = importance_feedback(empty_state, 'd')
    expected = {'a': 1, 'b': 6 / 7, 'c': 3 / 4, 'd': 0, 'e': 0, 'f': 2 / 7}
    for label, value in expected.items():
        assert scores[label] == approx(value, abs=TOLERANCE)


def test_importance_feedback_after_seeding_d(seeded_state):
    """Test f converts b, c and e once d has adopted."""
    scores = importance_feedback(seeded_state, 'f')
    assert scores['b'] == 1
    assert scores['c'] == 1
    assert scores['e'] == 1
    assert scores['a'] == 0


def test_importance_feedback_to_self_is_zero(empty_state):
    """Test IF(u, u) = 0 even when a cycle leads back to u."""
    for label in 'abcdef':
        assert importance_feedback(empty_state, label)[label] == 0


def test_importance_feedback_bounds(empty_state, six):
    """Test w_hat <= IF <= 1 pointwise."""
    for u in six.labels:
        scores = importance_feedback(empty_state, u)
        for v in six.labels:
            assert 0 <= scores[v] <= 1
            assert scores[v] >= normalized_weight(empty_state, u, v) - TOLERANCE


def test_importance_without_seeds(empty_state):
    """Test Psi of every individual at $7 with no seeds."""
    for label, value in EMPTY_GROUP_IMPORTANCE.items():
        assert pricing_sensitive_importance(empty_state, label) == \
            approx(value, abs=TOLERANCE)


def test_importance_after_seeding_d(seeded_state):
    """Test Psi of the remaining non-adopters after d is seeded."""
    for label, value in SEEDED_IMPORTANCE.items():
        assert pricing_sensitive_importance(seeded_state, label) == \
            approx(value, abs=TOLERANCE)


def test_importance_is_bounded_by_potential_buyers(empty_state, six):
    """Test Psi(u) <= |potential buyers|."""
    for label in six.labels:
        assert pricing_sensitive_importance(empty_state, label) <= 4


def test_prubif_six(six):
    """Test the heuristic reports ($6, {d}, $18)."""
    result = solve_prubif(six, PRICES, 4)
    assert result.p_max == 6
    assert result.seeds == ('d',)
    assert result.revenue == 18
    assert result.solver == 'prubif'
    verify_result(six, 4, result)


def test_prubif_picks_at_seven(six):
    """Test picks d then f at $7 before the size bound stops growth."""
    result = solve_prubif(six, PRICES, 4)
    assert greedy_trace(result, 7) == [
        ((), 0),
        (('d',), 7),
        (('d', 'f'), 14),
    ]


def test_prubif_same_result_for_any_thread_count(six):
    """Test threads change nothing but wall time."""
    single = solve_prubif(six, PRICES, 4, threads=1)
    pooled = solve_prubif(six, PRICES, 4, threads=3)
    assert single._replace(stats=None) == pooled._replace(stats=None)


def test_prubif_single_node():
    """Test the empty group is optimal for one eager buyer."""
    net = build_network(['x'], [9], [])
    result = solve_prubif(net, [4], 1)
    assert (result.p_max, result.seeds, result.revenue) == (4, (), 4)


def test_prubif_keeps_picking_on_zero_importance():
    """Test selection proceeds by index when every Psi is 0."""
    net = build_network(['a', 'b', 'c'], [0, 0, 5], [])
    result = solve_prubif(net, [5], 2)
    assert greedy_trace(result, 5) == [((), 5), (('a',), 5)]


def test_prubif_empty_price_set(six):
    """Test EmptyPriceSet for P = {}."""
    with raises(EmptyPriceSet):
        solve_prubif(six, [], 4)


def test_prubif_invalid_quantity(six):
    """Test InvalidQuantity for n = 0."""
    with raises(InvalidQuantity):
        solve_prubif(six, PRICES, 0)
