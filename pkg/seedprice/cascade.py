# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Adoption cascades under the monetary linear threshold model.

An individual adopts the commodity iff it is a seed (a freebie
recipient) or its valuation under the current adopters reaches the
price. Adopters push their weight to out-neighbours until nobody new
adopts. The module also holds the revenue function and the two
quantities the price search prunes with: the revenue upper bound
R_bound(n, p) and the seed size bound |A| < n - r_global / p.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from bisect import bisect_left
from collections import namedtuple
from math import ceil

from seedprice.errors import InvalidQuantity
from seedprice.errors import SeedsExceedStock
from seedprice.model import incoming_weight


CascadeResult = namedtuple('CascadeResult', 'adopters, final_valuation, rounds')
CascadeResult.__doc__ = """The adoption fixpoint sigma(A).

    adopters (frozenset)
        Labels of every adopter, seeds included.
    final_valuation (dict)
        Label -> valuation against the final adopter set.
    rounds (int)
        Propagation rounds that added at least one adopter.
"""


class Propagation(object):
    """Index-level outcome of one cascade, shared by the solvers."""

    __slots__ = ('adopted', 'in_weight', 'rounds', 'adopter_count')

    def __init__(self, adopted, in_weight, rounds):
        self.adopted = adopted
        self.in_weight = in_weight
        self.rounds = rounds
        self.adopter_count = sum(adopted)


def propagate(net, price, seeds, social=True):
    """Run the synchronous-round cascade on node indices.

    Round 0 adopters are the seeds plus everybody whose inherent
    valuation reaches the price. Each edge is pushed at most once: the
    running in-weight sum of a node is updated when its in-neighbour
    adopts, and F is re-applied to the running sum.

    Parameters
        net (MonetizingNetwork)
        price (float)
        seeds (iterable)
            Seed node indices.
        social (bool)
            False disables propagation, leaving only seeds and nodes
            with chi_v >= price.

    Returns
        (Propagation)
    """
    size = net.node_count
    adopted = [False] * size
    in_weight = [0.0] * size
    valuations = net.valuations
    influence = net.influence
    out_edges = net.out_edges

    frontier = []
    for v in seeds:
        if not adopted[v]:
            adopted[v] = True
            frontier.append(v)
    for v in range(size):
        if not adopted[v] and valuations[v] >= price:
            adopted[v] = True
            frontier.append(v)

    rounds = 0
    while frontier and social:
        touched = set()
        for u in frontier:
            for v, w in out_edges[u]:
                in_weight[v] += w
                if not adopted[v]:
                    touched.add(v)

        frontier = sorted(
            v for v in touched
            if valuations[v] + influence(in_weight[v]) >= price
        )
        for v in frontier:
            adopted[v] = True
        if frontier:
            rounds += 1

    if not social:
        for u in range(size):
            if adopted[u]:
                for v, w in out_edges[u]:
                    in_weight[v] += w

    return Propagation(adopted, in_weight, rounds)


def run_cascade(net, price, seeds, social=True):
    """Compute sigma(A) for seed labels at a price.

    Parameters
        net (MonetizingNetwork)
        price (float)
        seeds (iterable)
            Seed labels.
        social (bool)
            False gives inherent-valuation-only adoption.

    Returns
        (CascadeResult)

    Raises
        UnknownNode (ModelError)
            Raised if a seed is not part of the network.
    """
    seed_indices = net.indices_of(seeds)
    outcome = propagate(net, price, sorted(seed_indices), social)
    adopters = frozenset(
        net.labels[v] for v in range(net.node_count) if outcome.adopted[v]
    )
    members = [v for v in range(net.node_count) if outcome.adopted[v]]
    member_set = frozenset(members)
    final_valuation = {
        net.labels[v]: (
            net.valuations[v]
            + net.influence(incoming_weight(net, v, member_set))
        )
        for v in range(net.node_count)
    }
    return CascadeResult(adopters, final_valuation, outcome.rounds)


def check_quantity(n, seed_count=0):
    """Validate the commodity quantity against a seed group size.

    Raises
        InvalidQuantity (SolverError)
            Raised if n is negative.
        SeedsExceedStock (SolverError)
            Raised if seed_count > n.
    """
    if n < 0:
        raise InvalidQuantity(n)
    if seed_count > n:
        raise SeedsExceedStock(seed_count, n)


def revenue_of(price, n, seed_count, adopter_count):
    """p * min(|sigma(A) minus A|, n - |A|)."""
    buyers = adopter_count - seed_count
    return price * max(0, min(buyers, n - seed_count))


def revenue(net, n, price, seeds, social=True):
    """Return R(n, p, A) for seed labels.

    Parameters
        net (MonetizingNetwork)
        n (int)
            The quantity of commodities.
        price (float)
        seeds (iterable)
            Seed labels.
        social (bool)
            False prices NoSocial adoption.

    Returns
        (float)

    Raises
        SeedsExceedStock (SolverError)
        InvalidQuantity (SolverError)
        UnknownNode (ModelError)
    """
    seed_indices = net.indices_of(seeds)
    check_quantity(n, len(seed_indices))
    outcome = propagate(net, price, sorted(seed_indices), social)
    return revenue_of(price, n, len(seed_indices), outcome.adopter_count)


def potential_buyer_indices(net, price):
    return frozenset(
        v for v, top in enumerate(net.max_valuations) if top >= price
    )


def potential_buyers(net, price):
    """Return labels of nodes with X_max(v) >= price."""
    return frozenset(
        net.labels[v] for v in potential_buyer_indices(net, price)
    )


def revenue_upper_bound(net, n, price):
    """R_bound(n, p) = p * min(n, m_p)."""
    return price * min(n, len(potential_buyer_indices(net, price)))


def seed_size_bound(n, price, r_global):
    """Return the largest seed group size k with k < n - r_global / p.

    Returns
        (int or None)
            None when even k = 0 is inadmissible. Callers still
            evaluate the empty seed group in that case.
    """
    limit = n - r_global / price
    if limit <= 0:
        return None
    return int(ceil(limit)) - 1


def size_admissible(size, n, price, r_global):
    return size < n - r_global / price


class BoundTable(object):
    """Per-price potential buyer counts m_p and bounds R_bound(n, p)."""

    def __init__(self, net, prices, n):
        """Initialize a BoundTable.

        Parameters
            net (MonetizingNetwork)
            prices (iterable)
                Input prices.
            n (int)
                The quantity of commodities.
        """
        ordered = sorted(net.max_valuations)
        count = len(ordered)
        self.n = n
        self.prices = tuple(prices)
        self.potential_counts = {
            p: count - bisect_left(ordered, p) for p in self.prices
        }
        self.bounds = {
            p: p * min(n, self.potential_counts[p]) for p in self.prices
        }

    def bound(self, price):
        return self.bounds[price]

    def visit_order(self):
        """Prices by descending bound, ascending price among ties."""
        return sorted(self.prices, key=lambda p: (-self.bounds[p], p))
