# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Synthetic valuations and random monetizing networks.

All randomness flows from a numpy PCG64 generator seeded with the
caller's rng_seed, so a seed identifies an instance on every platform.
Topologies come from networkx, seeded from the same stream. Your usage
of this module might look like:

    spec = InstanceSpec(node_count=8, edge_probability=0.3, rng_seed=42)
    net = generate_instance(spec)
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from math import sqrt
from numbers import Integral

import logging

import networkx as nx
import numpy as np

from seedprice.errors import InvalidParams
from seedprice.model import build_network


log = logging.getLogger(__name__)


VALUATION_KINDS = frozenset([
    'normal',
    'm_shape',
])

WEIGHT_LAWS = frozenset([
    'uniform',
    'power_law',
])

TOPOLOGIES = frozenset([
    'gnp',
    'scale_free',
])

# (mean, variance) and (low mean, low variance, high mean, high variance)
DATASET_VALUATIONS = {
    'highschool': {
        'normal': (10.0, 8.16),
        'm_shape': (4.0, 1.78, 16.0, 1.78),
    },
    'digg': {
        'normal': (5.0, 2.04),
        'm_shape': (2.0, 0.44, 8.0, 0.44),
    },
    'facebook': {
        'normal': (5.0, 2.04),
        'm_shape': (2.0, 0.44, 8.0, 0.44),
    },
}

DATASET_PRICES = {
    'highschool': (1, 300),
    'digg': (1, 2000),
    'facebook': (1, 2000),
}

NETWORKX_SEED_LIMIT = 2 ** 31


def new_rng(rng_seed):
    return np.random.Generator(np.random.PCG64(rng_seed))


class ValuationDistribution(object):
    """Inherent valuation distribution: Normal or an M-shape mixture.

    The M-shape draws every valuation from one of two Normals with
    equal probability. Parameters are variances, not deviations.
    """

    def __init__(self, kind, params):
        """Initialize a ValuationDistribution.

        Parameters
            kind (str)
                'normal' or 'm_shape'.
            params (tuple)
                (mean, variance) for 'normal', (low mean, low variance,
                high mean, high variance) for 'm_shape'.

        Raises
            InvalidParams (SeedPriceError)
                Raised for an unknown kind, a wrong parameter count, a
                non-positive variance or M-shape means out of order.
        """
        if kind not in VALUATION_KINDS:
            message = '{!r} is not a valid valuation distribution.'
            raise InvalidParams(message.format(kind))

        params = tuple(float(value) for value in params)
        expected = 2 if kind == 'normal' else 4
        if len(params) != expected:
            message = '{} takes {} parameters, got {}.'
            raise InvalidParams(message.format(kind, expected, len(params)))

        for variance in params[1::2]:
            if not variance > 0:
                message = 'Variance must be positive, got {}.'
                raise InvalidParams(message.format(variance))

        if kind == 'm_shape' and not params[0] < params[2]:
            message = 'M-shape low mean {} must be below high mean {}.'
            raise InvalidParams(message.format(params[0], params[2]))

        self.kind = kind
        self.params = params

    @classmethod
    def normal(cls, mean, variance):
        return cls('normal', (mean, variance))

    @classmethod
    def m_shape(cls, low_mean, low_variance, high_mean, high_variance):
        return cls('m_shape', (low_mean, low_variance, high_mean, high_variance))

    @classmethod
    def preset(cls, dataset, kind='normal'):
        """Return a distribution with published dataset parameters.

        Parameters
            dataset (str)
                'highschool', 'digg' or 'facebook'.
            kind (str)
                'normal' or 'm_shape'.

        Raises
            InvalidParams (SeedPriceError)
        """
        try:
            params = DATASET_VALUATIONS[dataset][kind]
        except KeyError:
            message = 'No valuation preset for {!r} ({!r}).'
            raise InvalidParams(message.format(dataset, kind))
        return cls(kind, params)

    @property
    def mean(self):
        if self.kind == 'normal':
            return self.params[0]
        return (self.params[0] + self.params[2]) / 2

    def draw(self, rng, count):
        """Return count raw draws, negatives included."""
        if self.kind == 'normal':
            mean, variance = self.params
            return rng.normal(mean, sqrt(variance), size=count)

        low_mean, low_variance, high_mean, high_variance = self.params
        high = rng.random(size=count) < 0.5
        lows = rng.normal(low_mean, sqrt(low_variance), size=count)
        highs = rng.normal(high_mean, sqrt(high_variance), size=count)
        return np.where(high, highs, lows)

    def sample(self, rng, count):
        """Return count valuations with negative draws clamped to 0."""
        return [float(value) for value in np.maximum(self.draw(rng, count), 0.0)]

    def __eq__(self, other):
        if not isinstance(other, ValuationDistribution):
            return NotImplemented
        return (self.kind, self.params) == (other.kind, other.params)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.kind, self.params))

    def __repr__(self):
        return 'ValuationDistribution({!r}, {!r})'.format(self.kind, self.params)


def sample_valuations(dist, node_count, rng_seed):
    """Draw node_count i.i.d. valuations, clamped at 0.

    Parameters
        dist (ValuationDistribution)
        node_count (int)
        rng_seed (int)

    Returns
        (list)
            One non-negative valuation per node.

    Raises
        InvalidParams (SeedPriceError)
            Raised if node_count < 1.
    """
    _check_count(node_count)
    return dist.sample(new_rng(rng_seed), node_count)


def _check_count(node_count):
    if isinstance(node_count, bool) or not isinstance(node_count, Integral):
        raise InvalidParams('Node count must be an integer.')
    if node_count < 1:
        message = 'Node count must be at least 1, got {}.'
        raise InvalidParams(message.format(node_count))


class InstanceSpec(object):
    """A recipe for a random monetizing network."""

    def __init__(
        self,
        node_count,
        edge_probability=0.3,
        weight_law='uniform',
        weight_range=(1, 5),
        weight_exponent=2.0,
        valuation=None,
        rng_seed=0,
        topology='gnp',
        influence='identity',
    ):
        """Initialize an InstanceSpec.

        Parameters
            node_count (int)
                Number of nodes, at least 1.
            edge_probability (float)
                Probability of each ordered pair (u, v) for 'gnp'.
            weight_law (str)
                'uniform' integers in weight_range, or 'power_law'
                Zipf draws with weight_exponent clipped to weight_range.
            weight_range (tuple)
                Inclusive (low, high) integer weight bounds.
            weight_exponent (float)
                Zipf exponent, above 1.
            valuation (ValuationDistribution)
                Defaults to Normal(mean=10, variance=8.16).
            rng_seed (int)
                Seed of the PCG64 stream.
            topology (str)
                'gnp' or 'scale_free'.
            influence (str)
                Influence function of the generated network.

        Raises
            InvalidParams (SeedPriceError)
        """
        _check_count(node_count)

        if not 0 <= edge_probability <= 1:
            message = 'Edge probability must be in [0, 1], got {}.'
            raise InvalidParams(message.format(edge_probability))

        if weight_law not in WEIGHT_LAWS:
            message = '{!r} is not a valid weight law.'
            raise InvalidParams(message.format(weight_law))

        low, high = weight_range
        if not 0 <= low <= high:
            message = 'Invalid weight range {!r}.'
            raise InvalidParams(message.format(weight_range))

        if weight_law == 'power_law' and not weight_exponent > 1:
            message = 'Power law exponent must exceed 1, got {}.'
            raise InvalidParams(message.format(weight_exponent))

        if topology not in TOPOLOGIES:
            message = '{!r} is not a valid topology.'
            raise InvalidParams(message.format(topology))

        # networkx grows scale free graphs from a 3-cycle
        if topology == 'scale_free' and node_count < 3:
            message = 'Scale free topology needs at least 3 nodes, got {}.'
            raise InvalidParams(message.format(node_count))

        self.node_count = node_count
        self.edge_probability = edge_probability
        self.weight_law = weight_law
        self.weight_range = (int(low), int(high))
        self.weight_exponent = weight_exponent
        self.valuation = valuation or ValuationDistribution.preset('highschool')
        self.rng_seed = rng_seed
        self.topology = topology
        self.influence = influence


def _topology(spec, rng):
    seed = int(rng.integers(0, NETWORKX_SEED_LIMIT))
    if spec.topology == 'gnp':
        graph = nx.gnp_random_graph(
            spec.node_count,
            spec.edge_probability,
            seed=seed,
            directed=True,
        )
    else:
        graph = nx.DiGraph(nx.scale_free_graph(spec.node_count, seed=seed))
        graph.remove_edges_from(list(nx.selfloop_edges(graph)))
    return sorted(graph.edges())


def _weights(spec, rng, count):
    low, high = spec.weight_range
    if spec.weight_law == 'uniform':
        draws = rng.integers(low, high + 1, size=count)
    else:
        draws = np.clip(rng.zipf(spec.weight_exponent, size=count), low, high)
    return [float(w) for w in draws]


def generate_instance(spec):
    """Build a random network from an InstanceSpec.

    Nodes are labelled '0'..'node_count - 1'. The topology, weights and
    valuations are drawn in that order from one PCG64 stream.

    Parameters
        spec (InstanceSpec)

    Returns
        (MonetizingNetwork)
    """
    rng = new_rng(spec.rng_seed)
    pairs = _topology(spec, rng)
    weights = _weights(spec, rng, len(pairs))
    valuations = spec.valuation.sample(rng, spec.node_count)

    labels = [str(i) for i in range(spec.node_count)]
    edges = [
        (labels[u], labels[v], w) for (u, v), w in zip(pairs, weights)
    ]
    log.debug(
        'Generated {} instance: {} nodes, {} edges, seed {}'.format(
            spec.topology,
            spec.node_count,
            len(edges),
            spec.rng_seed,
        )
    )
    return build_network(labels, valuations, edges, spec.influence)


ORACLE_NODE_COUNT = 8
ORACLE_EDGE_PROBABILITY = 0.3
ORACLE_VALUATION = ValuationDistribution.normal(4.0, 4.0)
ORACLE_MAX_QUANTITY = 4


def oracle_instances(count, rng_seed=0):
    """Yield (network, n) pairs of the small random verification corpus.

    Instance i uses seed rng_seed + i and n = 1 + i mod 4 on an
    8-node gnp graph with integer weights 1..5.
    """
    for i in range(count):
        spec = InstanceSpec(
            node_count=ORACLE_NODE_COUNT,
            edge_probability=ORACLE_EDGE_PROBABILITY,
            weight_range=(1, 5),
            valuation=ORACLE_VALUATION,
            rng_seed=rng_seed + i,
        )
        yield generate_instance(spec), 1 + i % ORACLE_MAX_QUANTITY
