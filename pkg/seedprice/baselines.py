# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Comparison strategies sharing the greedy price framework.

    random          uniform pick among non-adopters
    sum_of_weights  largest total out-weight
    ablation_N      sum of normalized weights over every node
    ablation_F      sum of importance feedback over every node
    ablation_P      sum of normalized weights over potential buyers
    nosocial        no seeds, adoption by inherent valuation only
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import numpy as np

from seedprice.errors import MissingSeedForRandom
from seedprice.errors import UnknownSolver
from seedprice.prubif import GreedySearch
from seedprice.search import PriceSearch


STRATEGY_KINDS = frozenset([
    'random',
    'sum_of_weights',
    'ablation_N',
    'ablation_F',
    'ablation_P',
    'nosocial',
])


class RandomSearch(GreedySearch):

    name = 'random'

    def __init__(self, net, prices, n, rng_seed=None, threads=1):
        if rng_seed is None:
            raise MissingSeedForRandom()
        super(RandomSearch, self).__init__(net, prices, n, threads)
        self.rng_seed = rng_seed

    def solve(self):
        self.rng = np.random.Generator(np.random.PCG64(self.rng_seed))
        return super(RandomSearch, self).solve()

    def select(self, state, candidates):
        return candidates[int(self.rng.integers(len(candidates)))]


class SumOfWeightsSearch(GreedySearch):

    name = 'sum_of_weights'

    def score(self, state, candidates):
        totals = self.net.out_weight_totals
        return [totals[u] for u in candidates]


class NormalizedWeightSearch(GreedySearch):
    """Ablation with normalized weights only."""

    name = 'ablation_N'

    def _score(self, state, u):
        return sum(state.normalized(u).values())

    def score(self, state, candidates):
        return self.map(lambda u: self._score(state, u), candidates)


class FeedbackSearch(NormalizedWeightSearch):
    """Ablation with feedback but no potential buyer filter."""

    name = 'ablation_F'

    def _score(self, state, u):
        return sum(state.feedback(u).values())


class PotentialBuyerSearch(NormalizedWeightSearch):
    """Ablation with the potential buyer filter but no feedback."""

    name = 'ablation_P'

    def _score(self, state, u):
        buyers = state.potential_buyers
        return sum(
            value for v, value in state.normalized(u).items() if v in buyers
        )


class NoSocialSearch(PriceSearch):
    """Prices for inherent valuations only, with no seeds."""

    name = 'nosocial'
    social = False

    def search_price(self, price):
        self.record(price, (), self.evaluate(price, ()))
        return 1


STRATEGIES = {
    search.name: search
    for search in (
        RandomSearch,
        SumOfWeightsSearch,
        NormalizedWeightSearch,
        FeedbackSearch,
        PotentialBuyerSearch,
        NoSocialSearch,
    )
}


def solve_baseline(net, prices, n, kind, rng_seed=None, threads=1):
    """Run one of the comparison strategies.

    Parameters
        net (MonetizingNetwork)
            The monetizing social network.
        prices (PriceSet or iterable)
            The input prices.
        n (int)
            The quantity of commodities.
        kind (str)
            One of STRATEGY_KINDS.
        rng_seed (int)
            Required for 'random', ignored otherwise.
        threads (int)
            Worker threads for seed scoring.

    Returns
        (SolverResult)

    Raises
        UnknownSolver, MissingSeedForRandom (SolverError)
        EmptyPriceSet, InvalidPriceSet, InvalidQuantity (SolverError)
    """
    if kind not in STRATEGY_KINDS:
        raise UnknownSolver(kind)

    if kind == 'random':
        search = RandomSearch(net, prices, n, rng_seed, threads)
    else:
        search = STRATEGIES[kind](net, prices, n, threads)
    return search.solve()


def solve_nosocial(net, prices, n):
    """max over p of p * min(n, |{v : chi_v >= p}|), with no seeds."""
    return NoSocialSearch(net, prices, n).solve()
