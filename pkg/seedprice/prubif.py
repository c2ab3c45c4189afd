# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Greedy seeding by pricing-sensitive importance.

At every price the heuristic starts from the empty seed group and keeps
adding the non-adopter with the greatest importance Psi(u) while the
size bound allows. Psi is built in three layers over the current
adoption state:

    normalized weight   u's marginal push on v over v's gap to the price
    feedback            pushes of nodes that u fully converts, repeated
                        until nobody new is converted
    potential buyers    only nodes that could buy at the price count

Your usage of this module might look like:

    state = ImportanceState.build(net, 7, seeds=['d'])
    pricing_sensitive_importance(state, 'f')    # 3.0
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import logging

from seedprice.cascade import potential_buyer_indices
from seedprice.cascade import propagate
from seedprice.cascade import revenue_of
from seedprice.search import PriceSearch
from seedprice.utils.numeric import SATURATED


log = logging.getLogger(__name__)


class ImportanceState(object):
    """Adoption state sigma(A) at one price, with memoized weights.

    Instances are read-only apart from the memo, so importance of
    different candidates may be computed on worker threads.
    """

    def __init__(self, net, price, outcome):
        """Initialize an ImportanceState.

        Parameters
            net (MonetizingNetwork)
            price (float)
            outcome (Propagation)
                The cascade of the current seed group at price.
        """
        self.net = net
        self.price = price
        self.adopted = outcome.adopted
        self.in_weight = outcome.in_weight
        self.valuations = tuple(
            chi + net.influence(total)
            for chi, total in zip(net.valuations, outcome.in_weight)
        )
        self.potential_buyers = potential_buyer_indices(net, price)
        self._normalized = {}

    @classmethod
    def build(cls, net, price, seeds=()):
        """Alternate constructor taking seed labels.

        Raises
            UnknownNode (ModelError)
        """
        seed_indices = sorted(net.indices_of(seeds))
        return cls(net, price, propagate(net, price, seed_indices))

    def gain(self, u, v, weight):
        """Normalized push of u on v through an edge of the given weight."""
        if u == v or self.adopted[v]:
            return 0.0
        gap = self.price - self.valuations[v]
        if gap <= 0:
            return 0.0
        influence = self.net.influence
        base = self.in_weight[v]
        push = influence(weight + base) - influence(base)
        return min(1.0, push / gap)

    def normalized(self, u):
        """Map v -> w_hat(u, v) over u's out-neighbours with w_hat > 0."""
        weights = self._normalized.get(u)
        if weights is None:
            weights = {}
            for v, w in self.net.out_edges[u]:
                value = self.gain(u, v, w)
                if value > 0:
                    weights[v] = value
            self._normalized[u] = weights
        return weights

    def feedback(self, u):
        """Map v -> IF(u, v) for every v with a positive importance.

        Nodes whose importance reaches 1 pass their own normalized
        weights on in the next step. IF(u, u) stays 0.
        """
        scores = dict(self.normalized(u))
        frontier = self._saturate(scores, scores)
        reached = set(frontier)

        while frontier:
            gains = {}
            for i in frontier:
                for v, value in self.normalized(i).items():
                    if v != u:
                        gains[v] = gains.get(v, 0.0) + value

            touched = {}
            for v, value in gains.items():
                if v not in reached:
                    touched[v] = min(1.0, scores.get(v, 0.0) + value)
            scores.update(touched)
            frontier = self._saturate(scores, touched)
            reached.update(frontier)

        return scores

    @staticmethod
    def _saturate(scores, candidates):
        frontier = sorted(v for v in candidates if scores[v] >= SATURATED)
        for v in frontier:
            scores[v] = 1.0
        return frontier

    def importance(self, u):
        """Psi(u): feedback summed over the potential buyers."""
        scores = self.feedback(u)
        return sum(
            value for v, value in scores.items() if v in self.potential_buyers
        )


def normalized_weight(state, u, v):
    """Return w_hat(u, v) for node labels in [0, 1].

    0 when u == v, when v has adopted or already values the commodity
    at the price, otherwise the marginal increase of v's valuation from
    u's edge over v's remaining gap to the price, capped at 1.

    Raises
        UnknownNode (ModelError)
    """
    net = state.net
    source, target = net.index_of(u), net.index_of(v)
    return state.gain(source, target, net.weight(source, target))


def importance_feedback(state, u):
    """Return IF(u, .) as a map over every node label.

    Raises
        UnknownNode (ModelError)
    """
    net = state.net
    scores = state.feedback(net.index_of(u))
    return {
        label: scores.get(v, 0.0) for v, label in enumerate(net.labels)
    }


def pricing_sensitive_importance(state, u):
    """Return Psi(u), the importance of seeding u at the state's price.

    Raises
        UnknownNode (ModelError)
    """
    return state.importance(state.net.index_of(u))


class GreedySearch(PriceSearch):
    """Grows one seed group per price, one best-scoring node at a time.

    Subclasses implement score(); the highest score wins and ties go to
    the lowest node index. Zero scores still produce a pick, growth
    only stops at the size bound or when everybody has adopted.
    """

    def score(self, state, candidates):
        """Return one score per candidate, in candidate order."""
        raise NotImplementedError

    def select(self, state, candidates):
        scores = list(self.score(state, candidates))
        best = max(range(len(candidates)), key=lambda i: (scores[i], -i))
        return candidates[best]

    def search_price(self, price):
        log.debug('Examining price {}'.format(price))
        seeds = []
        outcome = propagate(self.net, price, seeds)
        self.record(price, seeds, self._revenue(price, seeds, outcome))
        evaluated = 1

        while len(seeds) < self.n - self.incumbent.revenue / price:
            candidates = [
                v for v in range(self.net.node_count) if not outcome.adopted[v]
            ]
            if not candidates:
                break

            state = ImportanceState(self.net, price, outcome)
            pick = self.select(state, candidates)
            seeds.append(pick)
            seeds.sort()
            outcome = propagate(self.net, price, seeds)
            value = self._revenue(price, seeds, outcome)
            log.debug(
                'Selected node {} at price {}, revenue={}'.format(
                    self.net.labels[pick],
                    price,
                    value,
                )
            )
            self.record(price, seeds, value)
            evaluated += 1

        return evaluated

    def _revenue(self, price, seeds, outcome):
        return revenue_of(price, self.n, len(seeds), outcome.adopter_count)


class PrubIfSearch(GreedySearch):
    """Seeds by pricing-sensitive importance Psi."""

    name = 'prubif'

    def score(self, state, candidates):
        return self.map(state.importance, candidates)


def greedy_trace(result, price):
    """Return (seeds, revenue) pairs a greedy solver evaluated at a price."""
    return [
        (event.seeds, event.revenue)
        for event in result.trace
        if event.price == price
    ]


def solve_prubif(net, prices, n, threads=1):
    """Approximate the optimal (price, seed group) pair greedily.

    Parameters
        net (MonetizingNetwork)
            The monetizing social network.
        prices (PriceSet or iterable)
            The input prices.
        n (int)
            The quantity of commodities.
        threads (int)
            Worker threads for importance scoring.

    Returns
        (SolverResult)

    Raises
        EmptyPriceSet, InvalidPriceSet, InvalidQuantity (SolverError)
    """
    return PrubIfSearch(net, prices, n, threads).solve()
