# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals


class SeedPriceError(Exception):
    """Parent class of all seedprice errors."""
    pass


class ModelError(SeedPriceError):
    """Parent class of all monetizing network validation errors."""
    pass


class UnknownNode(ModelError):
    """Raise when a node label or index is not part of the network."""

    def __init__(self, node, message=None):
        if not message:
            message = 'Unknown node: {!r}.'.format(node)

        super(UnknownNode, self).__init__(message)
        self.node = node


class DuplicateEdge(ModelError):
    """Raise when the same ordered pair (u, v) is given twice."""

    def __init__(self, source, target, message=None):
        if not message:
            message = 'Duplicate edge {!r} -> {!r}.'.format(source, target)

        super(DuplicateEdge, self).__init__(message)
        self.source = source
        self.target = target


class SelfLoop(ModelError):
    """Raise for an edge from a node to itself.

    line_no is set when the edge comes from an edge list.
    """

    def __init__(self, node, line_no=None, message=None):
        if not message:
            message = 'Self-loop on node {!r} is not allowed.'.format(node)
            if line_no is not None:
                message = 'line {}: {}'.format(line_no, message)

        super(SelfLoop, self).__init__(message)
        self.node = node
        self.line_no = line_no


class NegativeWeight(ModelError):
    """Raise for an influence weight below zero.

    Raised both while building a network and while parsing an edge
    list, in which case line_no points at the offending line.
    """

    def __init__(self, source, target, weight, line_no=None, message=None):
        if not message:
            message = 'Negative weight {} on edge {!r} -> {!r}.'.format(
                weight,
                source,
                target,
            )
            if line_no is not None:
                message = 'line {}: {}'.format(line_no, message)

        super(NegativeWeight, self).__init__(message)
        self.source = source
        self.target = target
        self.weight = weight
        self.line_no = line_no


class NegativeValuation(ModelError):
    """Raise for an inherent valuation below zero."""

    def __init__(self, node, valuation, line_no=None, message=None):
        if not message:
            message = 'Negative valuation {} for node {!r}.'.format(
                valuation,
                node,
            )
            if line_no is not None:
                message = 'line {}: {}'.format(line_no, message)

        super(NegativeValuation, self).__init__(message)
        self.node = node
        self.valuation = valuation
        self.line_no = line_no


class MissingValuation(ModelError):
    """Raise when a node has no inherent valuation at build time."""

    def __init__(self, node, message=None):
        if not message:
            message = 'No inherent valuation given for node {!r}.'.format(node)

        super(MissingValuation, self).__init__(message)
        self.node = node


class InvalidInfluence(ModelError):
    """Raise when an influence function is not usable as F.

    F must satisfy F(0) = 0 and be non-negative, non-decreasing and
    concave on the sampled grid.
    """
    pass


class SolverError(SeedPriceError):
    """Parent class of solver precondition errors."""
    pass


class EmptyPriceSet(SolverError):
    """Raise when no input price is given."""

    def __init__(self, message=None):
        if not message:
            message = 'The price set must contain at least one price.'

        super(EmptyPriceSet, self).__init__(message)


class InvalidPriceSet(SolverError):
    """Raise for non-positive or non-ascending prices."""
    pass


class InvalidQuantity(SolverError):
    """Raise when the commodity quantity n is out of range."""

    def __init__(self, quantity, message=None):
        if not message:
            message = 'Invalid commodity quantity: {!r}.'.format(quantity)

        super(InvalidQuantity, self).__init__(message)
        self.quantity = quantity


class SeedsExceedStock(SolverError):
    """Raise when a seed group is larger than the commodity quantity."""

    def __init__(self, seed_count, quantity, message=None):
        if not message:
            message = (
                'Seed group of size {} exceeds the quantity of '
                'commodities {}.'
            ).format(seed_count, quantity)

        super(SeedsExceedStock, self).__init__(message)
        self.seed_count = seed_count
        self.quantity = quantity


class InstanceTooLarge(SolverError):
    """Raise when exhaustive search is requested on a large network."""

    def __init__(self, node_count, limit, message=None):
        if not message:
            message = (
                'Exhaustive search is limited to {} nodes, '
                'the network has {}.'
            ).format(limit, node_count)

        super(InstanceTooLarge, self).__init__(message)
        self.node_count = node_count
        self.limit = limit


class MissingSeedForRandom(SolverError):
    """Raise when the random strategy is run without an rng seed."""

    def __init__(self, message=None):
        if not message:
            message = 'The random strategy requires an rng_seed.'

        super(MissingSeedForRandom, self).__init__(message)


class UnknownSolver(SolverError):
    """Raise for a solver or strategy name that is not registered."""

    def __init__(self, name, message=None):
        if not message:
            message = '{!r} is not a valid solver.'.format(name)

        super(UnknownSolver, self).__init__(message)
        self.name = name


class InvalidParams(SeedPriceError):
    """Raise for invalid generator or configuration parameters."""
    pass


class InputError(SeedPriceError):
    """Parent class of file and command line input errors.

    Carries the file path and line number when they are known.
    """

    def __init__(self, message, path=None, line_no=None):
        super(InputError, self).__init__(message)
        self.message = message
        self.path = path
        self.line_no = line_no

    def __str__(self):
        location = [str(part) for part in (self.path, self.line_no) if part]
        if not location:
            return self.message
        return '{}: {}'.format(':'.join(location), self.message)


class MalformedLine(InputError):
    """Raise for a line that does not match the expected columns."""

    def __init__(self, line_no, line, path=None, message=None):
        if not message:
            message = 'Malformed line {!r}.'.format(line)

        super(MalformedLine, self).__init__(message, path, line_no)
        self.line = line


class DuplicateNode(InputError):
    """Raise when a valuation file lists the same node twice."""

    def __init__(self, line_no, node, path=None, message=None):
        if not message:
            message = 'Duplicate valuation for node {!r}.'.format(node)

        super(DuplicateNode, self).__init__(message, path, line_no)
        self.node = node


class InvariantViolation(SeedPriceError):
    """Raise for Illegal State Errors.

    Thrown when a computed result fails to satisfy a post-condition,
    e.g. a solver result whose revenue cannot be replayed.
    """
    pass
