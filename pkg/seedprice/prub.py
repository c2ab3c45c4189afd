# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Exact revenue maximization with pricing upper bounds.

At every surviving price the search enumerates seed groups by
ascending size, starting from the empty group, and re-checks the size
bound |A| < n - r_global / p before moving to the next size. The brute
force variant drops both prunings and serves as a testing oracle.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from itertools import combinations
from itertools import islice
from math import comb

import logging

from seedprice.cascade import check_quantity
from seedprice.cascade import size_admissible
from seedprice.errors import InstanceTooLarge
from seedprice.search import Incumbent
from seedprice.search import PriceSearch
from seedprice.utils.numeric import BRUTEFORCE_NODE_LIMIT
from seedprice.utils.numeric import GROUP_CHUNK_SIZE


log = logging.getLogger(__name__)


def _chunks(iterable, size):
    iterator = iter(iterable)
    while True:
        chunk = tuple(islice(iterator, size))
        if not chunk:
            return
        yield chunk


class ExhaustiveSearch(PriceSearch):
    """Enumerates seed groups by size at every price the bounds allow."""

    name = 'prub'
    prune = True

    def _chunk_best(self, job):
        price, groups = job
        best_revenue, best_group = -1.0, None
        for group in groups:
            value = self.evaluate(price, group)
            if value > best_revenue:
                best_revenue, best_group = value, group
        return best_revenue, best_group

    def best_of_size(self, price, size):
        """Return the first maximal group of one size.

        Groups are split into chunks that may be evaluated on worker
        threads; the reduction keeps lexicographic order.

        Returns
            (tuple)
                (revenue, group)
        """
        groups = combinations(range(self.net.node_count), size)
        jobs = ((price, chunk) for chunk in _chunks(groups, GROUP_CHUNK_SIZE))
        best_revenue, best_group = -1.0, None
        for value, group in self.map(self._chunk_best, jobs):
            if value > best_revenue:
                best_revenue, best_group = value, group
        return best_revenue, best_group

    def admits(self, size, price):
        if size > self.n:
            return False
        if not self.prune:
            return True
        return size_admissible(size, self.n, price, self.incumbent.revenue)

    def search_price(self, price, size_cap=None):
        log.debug('Examining price {}'.format(price))
        self.record(price, (), self.evaluate(price, ()))
        evaluated = 1

        largest = self.net.node_count
        if size_cap is not None:
            largest = min(largest, size_cap)

        for size in range(1, largest + 1):
            if not self.admits(size, price):
                break
            value, group = self.best_of_size(price, size)
            evaluated += comb(self.net.node_count, size)
            self.record(price, group, value)

        return evaluated


class BruteForceSearch(ExhaustiveSearch):
    """Every price, every group with |A| <= n. Small networks only."""

    name = 'bruteforce'
    prune = False

    def __init__(self, net, prices, n, threads=1):
        if net.node_count > BRUTEFORCE_NODE_LIMIT:
            raise InstanceTooLarge(net.node_count, BRUTEFORCE_NODE_LIMIT)
        super(BruteForceSearch, self).__init__(net, prices, n, threads)

    def prunes(self, bound):
        return False


def solve_prub(net, prices, n, threads=1):
    """Find an optimal (price, seed group) pair.

    Parameters
        net (MonetizingNetwork)
            The monetizing social network.
        prices (PriceSet or iterable)
            The input prices.
        n (int)
            The quantity of commodities.
        threads (int)
            Worker threads for seed group evaluation.

    Returns
        (SolverResult)

    Raises
        EmptyPriceSet, InvalidPriceSet, InvalidQuantity (SolverError)
    """
    return ExhaustiveSearch(net, prices, n, threads).solve()


def solve_bruteforce(net, prices, n, threads=1):
    """Exhaustive search without pruning, for networks of <= 20 nodes.

    Ties are broken exactly as in solve_prub, so both report the same
    price and seed group.

    Raises
        InstanceTooLarge (SolverError)
    """
    return BruteForceSearch(net, prices, n, threads).solve()


def per_price_best(net, price, n, size_cap=None):
    """Return the best seed group at a single price.

    Sizes are enumerated from 0 while |A| < n - r / p, where r is the
    best revenue found at this price so far.

    Parameters
        net (MonetizingNetwork)
        price (float)
        n (int)
            The quantity of commodities.
        size_cap (int)
            Optional largest seed group size, at most n.

    Returns
        (tuple)
            (seed labels, revenue)

    Raises
        SeedsExceedStock (SolverError)
            Raised if size_cap exceeds n.
    """
    check_quantity(n, size_cap or 0)
    if n == 0:
        return (), 0.0

    search = ExhaustiveSearch(net, [price], n)
    search.incumbent = Incumbent()
    search.trace = []
    search.search_price(float(price), size_cap)

    # a price with no revenue reports the empty group
    return net.labels_of(search.incumbent.seeds), search.incumbent.revenue
