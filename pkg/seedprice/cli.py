# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""The seedprice command line.

    seedprice solve --graph six.tsv --valuations six.val --n 4
    seedprice cascade --graph six.tsv --valuations six.val \\
        --price 7 --seeds d,f --n 4
    seedprice bench --generate 200 --solver prubif,random,sumweights
    seedprice gen --nodes 8 --seed 42 --output instance
    seedprice validate --graph six.tsv --valuations six.val

Exit status is 0 on success, 1 for input errors and 2 when a result
fails its replay check.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from contextlib import contextmanager
from io import open

import argparse
import logging
import sys

from seedprice.bench import heuristic_gap
from seedprice.bench import ratio_table
from seedprice.bench import result_rows
from seedprice.bench import revenue_curve
from seedprice.bench import sweep
from seedprice.cascade import revenue
from seedprice.cascade import run_cascade
from seedprice.config import RunConfig
from seedprice.config import default_prices
from seedprice.config import parse_distribution
from seedprice.config import resolve_threads
from seedprice.datagen import InstanceSpec
from seedprice.datagen import generate_instance
from seedprice.errors import InputError
from seedprice.errors import SeedPriceError
from seedprice.formats import format_edge_list
from seedprice.formats import format_money
from seedprice.formats import format_seeds
from seedprice.formats import format_valuations
from seedprice.formats import load_graph
from seedprice.formats import load_network
from seedprice.formats import parse_ratios
from seedprice.formats import parse_seeds
from seedprice.formats import result_row
from seedprice.formats import write_results
from seedprice.formats import write_table
from seedprice.formats import write_text
from seedprice.runner import parse_solvers
from seedprice.runner import run_solver
from seedprice.search import PriceSet
from seedprice.utils.files import CURVE_COLUMNS
from seedprice.utils.files import DEFAULT_RATIOS
from seedprice.utils.files import GRAPH_SUFFIX
from seedprice.utils.files import RATIO_COLUMNS
from seedprice.utils.files import VALUATION_SUFFIX
from seedprice.utils.handlers import EXIT_SUCCESS
from seedprice.utils.handlers import error_handler


log = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s |%(levelname)s: %(message)s'
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

DEFAULT_BENCH_SOLVERS = 'prubif,sum_of_weights,random'
BENCH_PRICES = '1..30'


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as InputError instead of exiting."""

    def error(self, message):
        raise InputError(message)


@contextmanager
def output_stream(path):
    """Yield a text stream for path, or standard output."""
    if not path:
        yield sys.stdout
        return
    try:
        stream = open(path, 'w', encoding='utf-8', newline='')
    except (IOError, OSError) as error:
        raise InputError('Cannot write file: {}.'.format(error), path)
    with stream:
        yield stream


def _network(args):
    distribution = None
    if args.distribution:
        distribution = parse_distribution(args.distribution)
        if args.seed is None:
            raise InputError('--distribution requires --seed.')
    return load_network(
        args.graph,
        valuations_path=args.valuations,
        distribution=distribution,
        rng_seed=args.seed,
        influence_fn=args.influence,
    )


def solve_command(args):
    if args.config:
        config = RunConfig.from_yaml(args.config)
        if args.threads is not None:
            config.threads = resolve_threads(args.threads)
        if args.output:
            config.output = args.output
    else:
        if not args.graph:
            raise InputError('solve needs --config or --graph.')
        config = RunConfig(
            graph=args.graph,
            valuations=args.valuations,
            distribution=args.distribution,
            prices=args.prices,
            quantity=args.n,
            ratio=args.ratio,
            solver=args.solver,
            seed=args.seed,
            output=args.output,
            threads=args.threads,
            influence=args.influence,
        )

    net = config.load_network()
    n = config.resolve_n(net)
    result = run_solver(
        config.solver,
        net,
        config.prices,
        n,
        config.seed,
        config.threads,
    )
    row = result_row(result, n, net.node_count, args.omit_timing)
    with output_stream(config.output) as stream:
        write_results(stream, [row])
    return EXIT_SUCCESS


def bench_command(args):
    threads = resolve_threads(args.threads)

    if args.oracle_corpus:
        report = heuristic_gap(args.oracle_corpus, args.seed, threads)
        with output_stream(args.output) as stream:
            write_table(
                stream,
                ('instances', 'mean_ratio', 'worst_ratio'),
                [(report.instances,
                  '{:.6f}'.format(report.mean_ratio),
                  '{:.6f}'.format(report.worst_ratio))],
            )
        return EXIT_SUCCESS

    if args.generate:
        spec = InstanceSpec(
            node_count=args.generate,
            edge_probability=args.edge_probability,
            weight_law=args.weight_law,
            weight_range=_weight_range(args.weight_range),
            valuation=parse_distribution(args.distribution or 'highschool'),
            rng_seed=args.seed,
            topology=args.topology,
            influence=args.influence,
        )
        net = generate_instance(spec)
    elif args.graph:
        net = _network(args)
    else:
        raise InputError('bench needs --graph or --generate.')

    if args.prices is None:
        prices = default_prices(args.distribution, BENCH_PRICES)
    else:
        prices = PriceSet.parse(args.prices)
    solvers = parse_solvers(args.solver)
    ratios = parse_ratios(args.ratios)
    entries = sweep(net, prices, solvers, ratios, args.seed, threads)

    with output_stream(args.output) as stream:
        write_results(stream, result_rows(net, entries, args.omit_timing))

    if args.ratio_output:
        with output_stream(args.ratio_output) as stream:
            write_table(stream, RATIO_COLUMNS, ratio_table(net, prices, entries))

    if args.curves:
        rows = []
        for entry in entries:
            rows.extend(revenue_curve(
                net,
                prices,
                entry.n,
                entry.solver,
                args.seed,
                threads,
            ))
        with output_stream(args.curves) as stream:
            write_table(stream, CURVE_COLUMNS, rows)

    return EXIT_SUCCESS


def _weight_range(text):
    try:
        low, high = text.split('..')
        return int(low), int(high)
    except ValueError:
        raise InputError('Invalid weight range {!r}.'.format(text))


def gen_command(args):
    spec = InstanceSpec(
        node_count=args.nodes,
        edge_probability=args.edge_probability,
        weight_law=args.weight_law,
        weight_range=_weight_range(args.weight_range),
        weight_exponent=args.weight_exponent,
        valuation=parse_distribution(args.distribution),
        rng_seed=args.seed,
        topology=args.topology,
    )
    net = generate_instance(spec)
    write_text(args.output + GRAPH_SUFFIX, format_edge_list(net))
    write_text(args.output + VALUATION_SUFFIX, format_valuations(net))
    print('wrote {} nodes, {} edges to {}{{{},{}}}'.format(
        net.node_count,
        net.edge_count,
        args.output,
        GRAPH_SUFFIX,
        VALUATION_SUFFIX,
    ))
    return EXIT_SUCCESS


def validate_command(args):
    if args.valuations:
        net = load_network(
            args.graph,
            valuations_path=args.valuations,
            influence_fn=args.influence,
        )
    else:
        net = load_graph(args.graph, args.influence)
    print('ok: {} nodes, {} edges, largest max valuation {}'.format(
        net.node_count,
        net.edge_count,
        format_money(max(net.max_valuations or (0.0,))),
    ))
    return EXIT_SUCCESS


def cascade_command(args):
    net = _network(args)
    seeds = parse_seeds(args.seeds)
    social = not args.no_social
    outcome = run_cascade(net, args.price, seeds, social=social)

    adopters = net.labels_of(net.indices_of(outcome.adopters))
    buyers = [label for label in adopters if label not in seeds]
    print('adopters: {}'.format(format_seeds(adopters)))
    print('buyers: {}'.format(format_seeds(buyers)))
    print('rounds: {}'.format(outcome.rounds))
    if args.n is not None:
        value = revenue(net, args.n, args.price, seeds, social=social)
        print('revenue: {}'.format(format_money(value)))
    return EXIT_SUCCESS


def _add_network_arguments(parser):
    parser.add_argument('--graph', help='TSV edge list')
    parser.add_argument('--valuations', help='TSV valuation file')
    parser.add_argument(
        '--distribution',
        help="sample valuations, e.g. 'normal:10,8.16' or 'digg:m_shape'",
    )
    parser.add_argument('--influence', default='identity')
    parser.add_argument('--seed', type=int)


def _add_generator_arguments(parser):
    parser.add_argument('--edge-probability', type=float, default=0.3)
    parser.add_argument('--weight-law', default='uniform')
    parser.add_argument('--weight-range', default='1..5')
    parser.add_argument('--topology', default='gnp')


def build_parser():
    parser = ArgumentParser(prog='seedprice')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    solve = commands.add_parser('solve', help='run one solver')
    _add_network_arguments(solve)
    solve.add_argument('--config', help='YAML run configuration')
    solve.add_argument('--prices')
    quantity = solve.add_mutually_exclusive_group()
    quantity.add_argument('--n', type=int)
    quantity.add_argument('--ratio', type=float)
    solve.add_argument('--solver', default='prub')
    solve.add_argument('--threads', type=int)
    solve.add_argument('--output')
    solve.add_argument('--omit-timing', action='store_true')
    solve.set_defaults(handler=solve_command)

    bench = commands.add_parser('bench', help='sweep solvers over n/|V|')
    _add_network_arguments(bench)
    _add_generator_arguments(bench)
    bench.set_defaults(
        seed=0,
        weight_law='power_law',
        weight_range='1..10',
        topology='scale_free',
    )
    bench.add_argument('--generate', type=int, metavar='NODES')
    bench.add_argument('--prices')
    bench.add_argument('--solver', default=DEFAULT_BENCH_SOLVERS)
    bench.add_argument('--ratios', default=DEFAULT_RATIOS)
    bench.add_argument('--threads', type=int)
    bench.add_argument('--output')
    bench.add_argument('--ratio-output')
    bench.add_argument('--curves')
    bench.add_argument('--omit-timing', action='store_true')
    bench.add_argument('--oracle-corpus', type=int, metavar='N')
    bench.set_defaults(handler=bench_command)

    gen = commands.add_parser('gen', help='write a random instance')
    _add_generator_arguments(gen)
    gen.add_argument('--nodes', type=int, required=True)
    gen.add_argument('--weight-exponent', type=float, default=2.0)
    gen.add_argument('--distribution', default='highschool')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--output', required=True, metavar='PREFIX')
    gen.set_defaults(handler=gen_command)

    validate = commands.add_parser('validate', help='check a network file')
    validate.add_argument('--graph', required=True)
    validate.add_argument('--valuations')
    validate.add_argument('--influence', default='identity')
    validate.set_defaults(handler=validate_command)

    cascade = commands.add_parser('cascade', help='replay one seed group')
    _add_network_arguments(cascade)
    cascade.add_argument('--price', type=float, required=True)
    cascade.add_argument('--seeds', default='')
    cascade.add_argument('--n', type=int)
    cascade.add_argument('--no-social', action='store_true')
    cascade.set_defaults(handler=cascade_command)

    return parser


def main(argv=None):
    """Run one command.

    Parameters
        argv (list)
            Arguments without the program name; defaults to sys.argv.

    Returns
        (int)
            The exit code.
    """
    try:
        args = build_parser().parse_args(argv)
        level = LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)]
        logging.basicConfig(format=LOG_FORMAT, level=level)
        return args.handler(args)
    except SeedPriceError as error:
        return error_handler(error)


def run():
    sys.exit(main())
