# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Graph, valuation and result file formats.

Graph files are TSV with one `source<TAB>target[<TAB>weight]` edge per
line, valuation files are TSV with one `node<TAB>valuation` per line.
Lines starting with '#' are comments in both. Results are CSV with the
fixed RESULT_COLUMNS header.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import OrderedDict
from collections import namedtuple
from io import open

import csv

from seedprice.datagen import sample_valuations
from seedprice.errors import DuplicateNode
from seedprice.errors import InputError
from seedprice.errors import MalformedLine
from seedprice.errors import NegativeValuation
from seedprice.errors import NegativeWeight
from seedprice.errors import SelfLoop
from seedprice.model import build_network
from seedprice.utils.files import COMMENT_PREFIX
from seedprice.utils.files import CURVE_COLUMNS
from seedprice.utils.files import DEFAULT_EDGE_WEIGHT
from seedprice.utils.files import DEFAULT_RATIO_STEP
from seedprice.utils.files import FIELD_SEPARATOR
from seedprice.utils.files import RANGE_SEPARATOR
from seedprice.utils.files import RATIO_COLUMNS
from seedprice.utils.files import RESULT_COLUMNS
from seedprice.utils.files import SEED_SEPARATOR


ResultRow = namedtuple('ResultRow', RESULT_COLUMNS)
RatioRow = namedtuple('RatioRow', RATIO_COLUMNS)
CurveRow = namedtuple('CurveRow', CURVE_COLUMNS)


def _records(text):
    """Yield (line number, line, fields) of every non-comment, non-blank line."""
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        fields = [field.strip() for field in line.split(FIELD_SEPARATOR)]
        yield line_no, line, fields


def _located(path, line_no, message):
    if path:
        return '{}:{}: {}'.format(path, line_no, message)
    return 'line {}: {}'.format(line_no, message)


def parse_edge_list(text, path=None):
    """Parse a TSV edge list.

    The weight column is optional and defaults to 1. Repeated
    (source, target) lines are summed into one edge.

    Parameters
        text (str)
            File contents.
        path (str)
            Optional file name used in error messages.

    Returns
        (list)
            (source, target, weight) triples in order of first
            appearance.

    Raises
        MalformedLine (InputError)
            Raised for a line without 2 or 3 fields or with a weight
            that is not a number.
        NegativeWeight (ModelError)
        SelfLoop (ModelError)
    """
    totals = OrderedDict()
    for line_no, line, fields in _records(text):
        if len(fields) not in (2, 3) or not fields[0] or not fields[1]:
            raise MalformedLine(line_no, line, path)

        source, target = fields[0], fields[1]
        weight = DEFAULT_EDGE_WEIGHT
        if len(fields) == 3:
            try:
                weight = float(fields[2])
            except ValueError:
                raise MalformedLine(line_no, line, path)

        if source == target:
            message = 'Self-loop on node {!r} is not allowed.'.format(source)
            raise SelfLoop(source, line_no, _located(path, line_no, message))

        if weight < 0:
            message = 'Negative weight {} on edge {!r} -> {!r}.'.format(
                weight,
                source,
                target,
            )
            raise NegativeWeight(
                source,
                target,
                weight,
                line_no,
                _located(path, line_no, message),
            )

        key = (source, target)
        totals[key] = totals.get(key, 0.0) + weight

    return [(source, target, weight) for (source, target), weight in totals.items()]


def parse_valuations(text, path=None):
    """Parse a TSV valuation file.

    Parameters
        text (str)
            File contents.
        path (str)
            Optional file name used in error messages.

    Returns
        (OrderedDict)
            Label -> inherent valuation, in file order.

    Raises
        MalformedLine, DuplicateNode (InputError)
        NegativeValuation (ModelError)
    """
    valuations = OrderedDict()
    for line_no, line, fields in _records(text):
        if len(fields) != 2 or not fields[0]:
            raise MalformedLine(line_no, line, path)

        node = fields[0]
        try:
            value = float(fields[1])
        except ValueError:
            raise MalformedLine(line_no, line, path)

        if value < 0:
            message = 'Negative valuation {} for node {!r}.'.format(value, node)
            raise NegativeValuation(
                node,
                value,
                line_no,
                _located(path, line_no, message),
            )

        if node in valuations:
            raise DuplicateNode(line_no, node, path)
        valuations[node] = value

    return valuations


def read_text(path):
    """Read a UTF-8 file.

    Raises
        InputError
            Raised if the file cannot be read.
    """
    try:
        with open(path, 'r', encoding='utf-8') as stream:
            return stream.read()
    except (IOError, OSError, UnicodeDecodeError) as error:
        raise InputError('Cannot read file: {}.'.format(error), path)


def load_network(
    graph_path,
    valuations_path=None,
    distribution=None,
    rng_seed=0,
    influence_fn='identity',
):
    """Load a network from a graph file and one valuation source.

    Nodes listed in the valuation file come first, in file order, and
    graph nodes without a valuation line follow in order of first
    appearance with a valuation of 0. Sampled valuations follow the
    graph order.

    Parameters
        graph_path (str)
            TSV edge list.
        valuations_path (str)
            TSV valuation file.
        distribution (ValuationDistribution)
            Samples valuations instead of reading them.
        rng_seed (int)
            Seed for distribution sampling.
        influence_fn (str)
            The influence function F.

    Returns
        (MonetizingNetwork)

    Raises
        InputError
            Raised if both or no valuation sources are given, or a file
            cannot be read or parsed.
        ModelError
            Raised if the contents violate the network invariants.
    """
    if (valuations_path is None) == (distribution is None):
        message = 'Give exactly one of a valuation file or a distribution.'
        raise InputError(message)

    edges = parse_edge_list(read_text(graph_path), graph_path)
    nodes = OrderedDict()
    if valuations_path is not None:
        given = parse_valuations(read_text(valuations_path), valuations_path)
        for node in given:
            nodes[node] = None
    for source, target, _ in edges:
        nodes[source] = None
        nodes[target] = None

    if valuations_path is not None:
        valuations = [given.get(node, 0.0) for node in nodes]
    else:
        if not nodes:
            raise InputError('Graph file has no edges to sample for.', graph_path)
        valuations = sample_valuations(distribution, len(nodes), rng_seed)

    return build_network(list(nodes), valuations, edges, influence_fn)


def load_graph(graph_path, influence_fn='identity'):
    """Load a graph file alone, with every inherent valuation at 0."""
    edges = parse_edge_list(read_text(graph_path), graph_path)
    nodes = OrderedDict()
    for source, target, _ in edges:
        nodes[source] = None
        nodes[target] = None
    return build_network(list(nodes), [0.0] * len(nodes), edges, influence_fn)


def format_money(value):
    """Render an amount without a trailing '.0' for whole numbers."""
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return repr(value)


def format_edge_list(net):
    """Render a network's edges in the graph file format."""
    lines = ['# source\ttarget\tweight']
    for u, v, w in net.edges():
        lines.append(FIELD_SEPARATOR.join([
            str(net.labels[u]),
            str(net.labels[v]),
            format_money(w),
        ]))
    return '\n'.join(lines) + '\n'


def format_valuations(net):
    """Render every node's inherent valuation, isolated nodes included."""
    lines = ['# node\tvaluation']
    for label, chi in zip(net.labels, net.valuations):
        lines.append(FIELD_SEPARATOR.join([str(label), format_money(chi)]))
    return '\n'.join(lines) + '\n'


def write_text(path, text):
    try:
        with open(path, 'w', encoding='utf-8') as stream:
            stream.write(text)
    except (IOError, OSError) as error:
        raise InputError('Cannot write file: {}.'.format(error), path)


def format_seeds(seeds):
    return SEED_SEPARATOR.join(str(seed) for seed in seeds)


def parse_seeds(text):
    """Split 'd,f' or 'd;f' into a tuple of labels."""
    text = (text or '').replace(SEED_SEPARATOR, ',')
    return tuple(part.strip() for part in text.split(',') if part.strip())


def format_ratio(value):
    return '{:.6g}'.format(value)


def result_row(result, n, node_count, omit_timing=False):
    """Flatten a SolverResult into a ResultRow of strings.

    Parameters
        result (SolverResult)
        n (int)
            The quantity the result was solved for.
        node_count (int)
            |V| of the network.
        omit_timing (bool)
            Leave wall_time_ms blank so reruns compare byte for byte.

    Returns
        (ResultRow)
    """
    stats = result.stats
    wall_time = '' if omit_timing else '{:.3f}'.format(stats.wall_time_ms)
    return ResultRow(
        solver=result.solver,
        n=str(n),
        n_over_V=format_ratio(n / node_count),
        p_max=format_money(result.p_max),
        revenue=format_money(result.revenue),
        seed_set=format_seeds(result.seeds),
        prices_examined=str(stats.prices_examined),
        prices_pruned=str(stats.prices_pruned),
        groups_or_rounds_evaluated=str(stats.groups_evaluated),
        wall_time_ms=wall_time,
    )


def write_table(stream, columns, rows):
    """Write a CSV header and rows with '\\n' line endings."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow(list(row))


def write_results(stream, rows):
    write_table(stream, RESULT_COLUMNS, rows)


def parse_ratios(text):
    """Parse 'a..b' (stepping by 0.05) or a comma list of n/|V| ratios.

    Raises
        InputError
            Raised if the text is not a range or list of numbers in
            (0, 1].
    """
    try:
        if RANGE_SEPARATOR in text:
            low, high = (float(part) for part in text.split(RANGE_SEPARATOR))
            steps = int(round((high - low) / DEFAULT_RATIO_STEP))
            ratios = [
                round(low + i * DEFAULT_RATIO_STEP, 10) for i in range(steps + 1)
            ]
        else:
            ratios = [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise InputError('Invalid ratio list {!r}.'.format(text))

    if not ratios or any(not 0 < ratio <= 1 for ratio in ratios):
        raise InputError('Ratios must lie in (0, 1]: {!r}.'.format(text))
    return tuple(ratios)
