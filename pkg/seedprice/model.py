# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""The monetizing social network.

A monetizing social network G = (V, X, E, W, F) is a weighted digraph
whose nodes carry an inherent valuation of a commodity. When a set S of
in-neighbours of v has adopted the commodity, v values it at

    chi_v + F(sum of w_iv over i in S)

where F is a non-negative, non-decreasing, concave influence function
with F(0) = 0. Your usage of this module might look like:

    net = build_network(
        ['a', 'b'],
        {'a': 2, 'b': 0},
        [('a', 'b', 3)],
    )
    max_valuation(net, 'b')    # 3.0
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import OrderedDict
from math import fsum
from math import log1p
from math import sqrt

import networkx as nx

from seedprice.errors import DuplicateEdge
from seedprice.errors import DuplicateNode
from seedprice.errors import InvalidInfluence
from seedprice.errors import MissingValuation
from seedprice.errors import NegativeValuation
from seedprice.errors import NegativeWeight
from seedprice.errors import SelfLoop
from seedprice.errors import UnknownNode
from seedprice.utils.numeric import CONCAVITY_SAMPLES
from seedprice.utils.numeric import CONCAVITY_SLACK


def _identity(x):
    return x


BUILTIN_INFLUENCE = OrderedDict([
    ('identity', _identity),
    ('sqrt', sqrt),
    ('log1p', log1p),
])


class ConcaveInfluence(object):
    """The influence function F turning accumulated weight into money."""

    def __init__(self, kind='identity', function=None):
        """Initialize a ConcaveInfluence.

        Parameters
            kind (str)
                One of 'identity', 'sqrt' or 'log1p', or a free name
                when function is given.
            function (callable)
                Optional custom F. It is only accepted after passing
                check() against the network it is attached to.

        Raises
            InvalidInfluence (ModelError)
                Raised if kind is unknown and no function is given.
        """
        if function is None:
            if kind not in BUILTIN_INFLUENCE:
                message = '{!r} is not a valid influence function.'
                raise InvalidInfluence(message.format(kind))
            function = BUILTIN_INFLUENCE[kind]

        self.kind = kind
        self.evaluate = function

    def __call__(self, x):
        return self.evaluate(x)

    def __eq__(self, other):
        if not isinstance(other, ConcaveInfluence):
            return NotImplemented
        return self.kind == other.kind and self.evaluate == other.evaluate

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return 'ConcaveInfluence({!r})'.format(self.kind)

    def check(self, upper):
        """Validate F on an evenly spaced grid over [0, upper].

        Arbitrary F cannot be verified symbolically, so the check
        samples CONCAVITY_SAMPLES points and applies the midpoint test
        F((x + y) / 2) >= (F(x) + F(y)) / 2 to every pair.

        Parameters
            upper (float)
                Largest total in-weight of the network.

        Raises
            InvalidInfluence (ModelError)
                Raised if F(0) != 0, or F is negative, decreasing or
                not concave on the grid.
        """
        if abs(self.evaluate(0.0)) > CONCAVITY_SLACK:
            raise InvalidInfluence('F(0) must be 0 for {!r}.'.format(self))

        if upper <= 0:
            return

        step = upper / (CONCAVITY_SAMPLES - 1)
        grid = [step * i for i in range(CONCAVITY_SAMPLES)]
        values = [self.evaluate(x) for x in grid]

        for previous, current in zip(values, values[1:]):
            if current < 0 or current < previous - CONCAVITY_SLACK:
                message = '{!r} is negative or decreasing on [0, {}].'
                raise InvalidInfluence(message.format(self, upper))

        for i, x in enumerate(grid):
            for j in range(i + 2, CONCAVITY_SAMPLES):
                middle = self.evaluate((x + grid[j]) / 2)
                chord = (values[i] + values[j]) / 2
                if middle < chord - CONCAVITY_SLACK:
                    message = '{!r} is not concave on [0, {}].'
                    raise InvalidInfluence(message.format(self, upper))


class MonetizingNetwork(object):
    """An immutable monetizing social network.

    Nodes are dense indices 0..|V|-1; external labels live in a side
    map. Adjacency is kept both ways: out-lists drive the cascade push,
    in-lists drive valuation lookups. Build instances with
    build_network() rather than calling the constructor directly.
    """

    def __init__(self, labels, valuations, out_edges, in_edges, influence):
        """Initialize a MonetizingNetwork from validated parts.

        Parameters
            labels (tuple)
                External label of each node index.
            valuations (tuple)
                Inherent valuation chi_v of each node index.
            out_edges (tuple)
                Per node, a tuple of (target, weight) sorted by target.
            in_edges (tuple)
                Per node, a tuple of (source, weight) sorted by source.
            influence (ConcaveInfluence)
                The influence function F.
        """
        self.labels = labels
        self.index = {label: i for i, label in enumerate(labels)}
        self.valuations = valuations
        self.out_edges = out_edges
        self.in_edges = in_edges
        self.influence = influence

        self.in_weight_totals = tuple(
            fsum(w for _, w in edges) for edges in in_edges
        )
        self.out_weight_totals = tuple(
            fsum(w for _, w in edges) for edges in out_edges
        )
        self.max_valuations = tuple(
            chi + influence(total)
            for chi, total in zip(valuations, self.in_weight_totals)
        )
        self._weights = {
            (u, v): w
            for u, edges in enumerate(out_edges)
            for v, w in edges
        }

    def __len__(self):
        return len(self.labels)

    @property
    def node_count(self):
        return len(self.labels)

    @property
    def edge_count(self):
        return len(self._weights)

    def index_of(self, label):
        """Return the dense index of a node label.

        Raises
            UnknownNode (ModelError)
                Raised if the label is not part of the network.
        """
        try:
            return self.index[label]
        except (KeyError, TypeError):
            raise UnknownNode(label)

    def indices_of(self, labels):
        return frozenset(self.index_of(label) for label in labels)

    def labels_of(self, indices):
        """Return labels of the given indices in ascending index order."""
        return tuple(self.labels[i] for i in sorted(indices))

    def weight(self, u, v):
        """Return w_uv for node indices u, v; 0 when there is no edge."""
        return self._weights.get((u, v), 0.0)

    def edges(self):
        """Yield (source, target, weight) index triples."""
        for u, edges in enumerate(self.out_edges):
            for v, w in edges:
                yield u, v, w

    def to_digraph(self):
        """Export as a networkx DiGraph keyed by label.

        Node attribute 'valuation' holds chi_v and edge attribute
        'weight' holds w_uv.
        """
        graph = nx.DiGraph()
        for label, chi in zip(self.labels, self.valuations):
            graph.add_node(label, valuation=chi)
        for u, v, w in self.edges():
            graph.add_edge(self.labels[u], self.labels[v], weight=w)
        return graph

    @classmethod
    def from_digraph(cls, graph, influence_fn='identity'):
        """Alternate constructor for MonetizingNetwork.

        Create a network from a networkx DiGraph whose nodes carry a
        'valuation' attribute and whose edges carry 'weight'.

        Parameters
            graph (networkx.DiGraph)
                The weighted digraph.
            influence_fn (str or ConcaveInfluence)
                The influence function F.

        Returns
            (MonetizingNetwork)
        """
        nodes = list(graph.nodes())
        valuations = {
            node: graph.nodes[node].get('valuation') for node in nodes
        }
        valuations = {
            node: value for node, value in valuations.items()
            if value is not None
        }
        edges = [
            (u, v, data.get('weight', 1.0))
            for u, v, data in graph.edges(data=True)
        ]
        return build_network(nodes, valuations, edges, influence_fn)

    def canonical(self):
        """Label-normalized content used for equality."""
        nodes = sorted(
            (str(label), chi)
            for label, chi in zip(self.labels, self.valuations)
        )
        edges = sorted(
            (str(self.labels[u]), str(self.labels[v]), w)
            for u, v, w in self.edges()
        )
        return nodes, edges, self.influence.kind

    def __eq__(self, other):
        if not isinstance(other, MonetizingNetwork):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'MonetizingNetwork(nodes={}, edges={}, influence={!r})'.format(
            self.node_count,
            self.edge_count,
            self.influence.kind,
        )


def _as_influence(influence_fn):
    if isinstance(influence_fn, ConcaveInfluence):
        return influence_fn
    return ConcaveInfluence(influence_fn)


def _valuation_list(labels, index, valuations):
    if hasattr(valuations, 'items'):
        for label in valuations:
            if label not in index:
                raise UnknownNode(label)
        values = []
        for label in labels:
            if label not in valuations:
                raise MissingValuation(label)
            values.append(valuations[label])
    else:
        values = list(valuations)
        if len(values) < len(labels):
            raise MissingValuation(labels[len(values)])
        if len(values) > len(labels):
            raise UnknownNode(len(labels))

    result = []
    for label, value in zip(labels, values):
        value = float(value)
        if value < 0:
            raise NegativeValuation(label, value)
        result.append(value)
    return tuple(result)


def build_network(nodes, valuations, weighted_edges, influence_fn='identity'):
    """Validate inputs and build a MonetizingNetwork.

    Parameters
        nodes (iterable)
            Node labels; their order fixes the dense indices.
        valuations (dict or sequence)
            Inherent valuation per label, or a sequence aligned
            with nodes.
        weighted_edges (iterable)
            (source, target, weight) triples of labels.
        influence_fn (str or ConcaveInfluence)
            'identity', 'sqrt', 'log1p' or a ConcaveInfluence.

    Returns
        (MonetizingNetwork)

    Raises
        DuplicateEdge, SelfLoop, NegativeWeight, NegativeValuation,
        UnknownNode, MissingValuation (ModelError)
            Raised if the inputs violate the network invariants.
        DuplicateNode (InputError)
            Raised if a label appears twice in nodes.
        InvalidInfluence (ModelError)
            Raised if F fails the sampling check.
    """
    labels = tuple(nodes)
    index = {}
    for i, label in enumerate(labels):
        if label in index:
            raise DuplicateNode(None, label)
        index[label] = i

    values = _valuation_list(labels, index, valuations)

    out_lists = [[] for _ in labels]
    in_lists = [[] for _ in labels]
    seen = set()

    for source, target, weight in weighted_edges:
        if source not in index:
            raise UnknownNode(source)
        if target not in index:
            raise UnknownNode(target)
        if source == target:
            raise SelfLoop(source)

        weight = float(weight)
        if weight < 0:
            raise NegativeWeight(source, target, weight)

        u, v = index[source], index[target]
        if (u, v) in seen:
            raise DuplicateEdge(source, target)
        seen.add((u, v))

        out_lists[u].append((v, weight))
        in_lists[v].append((u, weight))

    influence = _as_influence(influence_fn)
    network = MonetizingNetwork(
        labels=labels,
        valuations=values,
        out_edges=tuple(tuple(sorted(edges)) for edges in out_lists),
        in_edges=tuple(tuple(sorted(edges)) for edges in in_lists),
        influence=influence,
    )
    influence.check(max(network.in_weight_totals or (0.0,)))
    return network


def incoming_weight(net, v, influencers):
    """Sum w_iv over i in influencers, all given as indices."""
    return fsum(w for u, w in net.in_edges[v] if u in influencers)


def valuation_under(net, v, influencers):
    """Return v's valuation when the influencers have adopted.

    Parameters
        net (MonetizingNetwork)
        v (label)
            The node being valued.
        influencers (iterable)
            Labels of the adopters exerting influence on v.

    Returns
        (float)
            chi_v + F(sum of w_iv over i in influencers).

    Raises
        UnknownNode (ModelError)
    """
    target = net.index_of(v)
    sources = net.indices_of(influencers)
    total = incoming_weight(net, target, sources)
    return net.valuations[target] + net.influence(total)


def max_valuation(net, v):
    """Return X_max(v), v's valuation under all of its in-neighbours.

    Raises
        UnknownNode (ModelError)
    """
    return net.max_valuations[net.index_of(v)]
