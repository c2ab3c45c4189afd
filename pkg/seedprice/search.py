# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""The price framework shared by every solver.

Each solver visits input prices in descending order of the revenue
upper bound and stops at the first price whose bound cannot beat the
best revenue found so far. What happens at a surviving price is up to
the subclass: exhaustive seed group enumeration, greedy seed growth or
plain inherent-valuation adoption. Your usage of this module might
look like:

    prices = PriceSet.parse('1..10')
    result = ExhaustiveSearch(net, prices, n=4).solve()
    verify_result(net, 4, result, prices)
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import deque
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from numbers import Integral
from timeit import default_timer

import logging

from seedprice.cascade import BoundTable
from seedprice.cascade import propagate
from seedprice.cascade import revenue
from seedprice.cascade import revenue_of
from seedprice.errors import EmptyPriceSet
from seedprice.errors import InputError
from seedprice.errors import InvalidPriceSet
from seedprice.errors import InvalidQuantity
from seedprice.errors import InvariantViolation
from seedprice.utils.files import RANGE_SEPARATOR
from seedprice.utils.numeric import MONEY_TOLERANCE
from seedprice.utils.numeric import PENDING_PER_THREAD


log = logging.getLogger(__name__)


SearchStats = namedtuple(
    'SearchStats',
    'prices_examined, prices_pruned, groups_evaluated, wall_time_ms',
)

TraceEvent = namedtuple('TraceEvent', 'price, seeds, revenue, best')
TraceEvent.__doc__ = """One seed group compared against the incumbent.

    price (float)
    seeds (tuple)
        Seed labels in node index order.
    revenue (float)
        R(n, price, seeds).
    best (float)
        r_global after the comparison.
"""

SolverResult = namedtuple(
    'SolverResult',
    'solver, p_max, seeds, revenue, stats, trace',
)
SolverResult.__doc__ = """The best (price, seed group) pair a solver found.

    solver (str)
        Registry name of the solver.
    p_max (float)
        0 when no input price yields positive revenue.
    seeds (tuple)
        Seed labels in node index order.
    revenue (float)
    stats (SearchStats)
    trace (tuple)
        TraceEvent records in visit order.
"""


class PriceSet(object):
    """A non-empty, strictly ascending set of positive input prices."""

    def __init__(self, prices):
        """Initialize a PriceSet.

        Parameters
            prices (iterable)
                Prices in strictly ascending order.

        Raises
            EmptyPriceSet (SolverError)
                Raised if no price is given.
            InvalidPriceSet (SolverError)
                Raised if a price is not positive or the prices are
                not strictly ascending.
        """
        values = tuple(float(p) for p in prices)
        if not values:
            raise EmptyPriceSet()

        for price in values:
            if not price > 0:
                message = 'Prices must be positive, got {}.'
                raise InvalidPriceSet(message.format(price))

        for lower, upper in zip(values, values[1:]):
            if not lower < upper:
                message = 'Prices must be strictly ascending: {} then {}.'
                raise InvalidPriceSet(message.format(lower, upper))

        self.prices = values

    def __iter__(self):
        return iter(self.prices)

    def __len__(self):
        return len(self.prices)

    def __contains__(self, price):
        return price in self.prices

    def __eq__(self, other):
        if not isinstance(other, PriceSet):
            return NotImplemented
        return self.prices == other.prices

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.prices)

    def __repr__(self):
        return 'PriceSet({!r})'.format(list(self.prices))

    @classmethod
    def from_range(cls, low, high):
        """All integer prices in [low, high]."""
        return cls(range(int(low), int(high) + 1))

    @classmethod
    def parse(cls, text):
        """Parse 'a..b' or a comma separated list of prices.

        Raises
            InputError
                Raised if the text is not a range or a list of numbers.
            EmptyPriceSet, InvalidPriceSet (SolverError)
        """
        text = text.strip()
        try:
            if RANGE_SEPARATOR in text:
                low, high = text.split(RANGE_SEPARATOR)
                return cls.from_range(int(low), int(high))
            return cls(float(part) for part in text.split(',') if part.strip())
        except ValueError:
            raise InputError('Invalid price set {!r}.'.format(text))


def check_solver_quantity(n):
    """Solvers accept any integral n >= 1."""
    if isinstance(n, bool) or not isinstance(n, Integral) or n < 1:
        raise InvalidQuantity(n)


class Incumbent(object):
    """The running best (p_max, A_max, r_global) of one search."""

    def __init__(self):
        self.price = 0.0
        self.seeds = ()
        self.revenue = 0.0

    def offer(self, price, seeds, revenue):
        """Replace the incumbent on strict improvement only."""
        if revenue > self.revenue:
            self.price = price
            self.seeds = tuple(seeds)
            self.revenue = revenue
            return True
        return False


class PriceSearch(object):
    """Base class of the solvers that share the price framework.

    Subclasses implement search_price(), which evaluates seed groups at
    one price and reports each of them through record().
    """

    name = None
    social = True

    def __init__(self, net, prices, n, threads=1):
        """Initialize a PriceSearch.

        Parameters
            net (MonetizingNetwork)
                The monetizing social network.
            prices (PriceSet or iterable)
                The input prices.
            n (int)
                The quantity of commodities.
            threads (int)
                Worker threads used inside one price. Results do not
                depend on this value.

        Raises
            EmptyPriceSet, InvalidPriceSet, InvalidQuantity (SolverError)
        """
        if not isinstance(prices, PriceSet):
            prices = PriceSet(prices)
        check_solver_quantity(n)

        self.net = net
        self.prices = prices
        self.n = n
        self.threads = max(1, int(threads or 1))
        self.incumbent = None
        self.trace = []
        self._executor = None

    def evaluate(self, price, seeds):
        """Revenue of a seed group given as sorted node indices."""
        outcome = propagate(self.net, price, seeds, self.social)
        return revenue_of(price, self.n, len(seeds), outcome.adopter_count)

    def map(self, function, iterable):
        """Apply function to every item, results in input order.

        With worker threads at most PENDING_PER_THREAD items per thread
        are submitted ahead of the consumer, so large size tiers are
        never materialized.
        """
        if self._executor is None:
            return map(function, iterable)
        return self._bounded_map(function, iterable)

    def _bounded_map(self, function, iterable):
        limit = self.threads * PENDING_PER_THREAD
        pending = deque()
        for item in iterable:
            pending.append(self._executor.submit(function, item))
            if len(pending) >= limit:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()

    def record(self, price, seeds, revenue):
        """Offer a seed group to the incumbent and trace it."""
        improved = self.incumbent.offer(price, seeds, revenue)
        labels = self.net.labels_of(seeds)
        self.trace.append(
            TraceEvent(price, labels, revenue, self.incumbent.revenue)
        )
        if improved:
            log.debug(
                'New best at price {}: seeds={}, revenue={}'.format(
                    price,
                    list(labels),
                    revenue,
                )
            )
        return improved

    def prunes(self, bound):
        """True once a price bound cannot beat r_global."""
        return bound <= self.incumbent.revenue

    def search_price(self, price):
        """Evaluate seed groups at one price.

        Returns
            (int)
                The number of seed groups evaluated.
        """
        raise NotImplementedError

    def solve(self):
        """Run the search.

        Returns
            (SolverResult)
        """
        started = default_timer()
        self.incumbent = Incumbent()
        self.trace = []
        table = BoundTable(self.net, self.prices, self.n)
        order = table.visit_order()

        examined = 0
        groups = 0
        if self.threads > 1:
            self._executor = ThreadPoolExecutor(max_workers=self.threads)

        try:
            for price in order:
                if self.prunes(table.bound(price)):
                    log.debug(
                        'Stopping at price {}: bound {} <= r_global {}'.format(
                            price,
                            table.bound(price),
                            self.incumbent.revenue,
                        )
                    )
                    break
                examined += 1
                groups += self.search_price(price)
        finally:
            if self._executor is not None:
                self._executor.shutdown()
                self._executor = None

        elapsed = (default_timer() - started) * 1000.0
        stats = SearchStats(
            prices_examined=examined,
            prices_pruned=len(order) - examined,
            groups_evaluated=groups,
            wall_time_ms=elapsed,
        )
        result = SolverResult(
            solver=self.name,
            p_max=self.incumbent.price,
            seeds=self.net.labels_of(self.incumbent.seeds),
            revenue=self.incumbent.revenue,
            stats=stats,
            trace=tuple(self.trace),
        )
        log.info(
            '{} finished: p_max={}, seeds={}, revenue={} '
            '({} prices examined, {} pruned, {} groups)'.format(
                self.name,
                result.p_max,
                list(result.seeds),
                result.revenue,
                examined,
                stats.prices_pruned,
                groups,
            )
        )
        return result


def verify_result(net, n, result, prices=None):
    """Replay a SolverResult through the cascade.

    Parameters
        net (MonetizingNetwork)
        n (int)
            The quantity the result was solved for.
        result (SolverResult)
        prices (PriceSet)
            Optional input prices p_max must belong to.

    Raises
        InvariantViolation (SeedPriceError)
            Raised if the seed group exceeds n, p_max is not an input
            price, or the revenue cannot be reproduced.
    """
    if len(result.seeds) > n:
        message = '{} returned {} seeds for a quantity of {}.'
        raise InvariantViolation(
            message.format(result.solver, len(result.seeds), n)
        )

    if result.p_max == 0:
        if result.seeds or result.revenue != 0:
            message = '{} returned seeds or revenue without a price.'
            raise InvariantViolation(message.format(result.solver))
        return

    if prices is not None and result.p_max not in prices:
        message = '{} returned price {} which is not an input price.'
        raise InvariantViolation(message.format(result.solver, result.p_max))

    social = result.solver != 'nosocial'
    replayed = revenue(net, n, result.p_max, result.seeds, social=social)
    if abs(replayed - result.revenue) > MONEY_TOLERANCE:
        message = '{} reported revenue {} but the cascade gives {}.'
        raise InvariantViolation(
            message.format(result.solver, result.revenue, replayed)
        )
