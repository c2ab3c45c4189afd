# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Run configuration from YAML files or command line flags.

A configuration file might look like:

    graph: six.tsv
    valuations: six.val
    prices: 1..10
    quantity: 4
    solver: prub

Relative paths are resolved against the configuration file.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from math import floor
from os import path as os_path

import os

from yaml import YAMLError
from yaml import safe_load

from seedprice.datagen import DATASET_PRICES
from seedprice.datagen import DATASET_VALUATIONS
from seedprice.datagen import ValuationDistribution
from seedprice.errors import InputError
from seedprice.errors import InvalidParams
from seedprice.errors import InvalidQuantity
from seedprice.formats import load_network
from seedprice.runner import RANDOMIZED_SOLVERS
from seedprice.runner import solver_name
from seedprice.search import PriceSet
from seedprice.utils.files import THREADS_ENV_VAR


CONFIG_KEYS = frozenset([
    'graph',
    'valuations',
    'distribution',
    'prices',
    'quantity',
    'ratio',
    'solver',
    'seed',
    'output',
    'threads',
    'influence',
])

DISTRIBUTION_FIELDS = {
    'normal': ('mean', 'variance'),
    'm_shape': ('low_mean', 'low_variance', 'high_mean', 'high_variance'),
}


def resolve_threads(threads=None, environ=None):
    """Return the worker thread count.

    An explicit value wins, then SEEDPRICE_THREADS, then the number of
    CPUs.

    Raises
        InvalidParams (SeedPriceError)
            Raised if the value is not a positive integer.
    """
    environ = os.environ if environ is None else environ
    source = 'threads'
    if threads is None and environ.get(THREADS_ENV_VAR):
        threads = environ[THREADS_ENV_VAR]
        source = THREADS_ENV_VAR

    if threads is None:
        return os.cpu_count() or 1

    try:
        value = int(threads)
    except (TypeError, ValueError):
        value = 0
    if value < 1:
        message = '{} must be a positive integer, got {!r}.'
        raise InvalidParams(message.format(source, threads))
    return value


def resolve_quantity(node_count, quantity=None, ratio=None):
    """Return n from an absolute quantity or a ratio n/|V|.

    Ratios round half up: n = floor(ratio * |V| + 0.5).

    Raises
        InvalidParams (SeedPriceError)
            Raised if both or neither are given.
        InvalidQuantity (SolverError)
            Raised unless 1 <= n <= |V|.
    """
    if (quantity is None) == (ratio is None):
        raise InvalidParams('Give exactly one of quantity or ratio.')

    if quantity is not None:
        n = quantity
    else:
        n = int(floor(ratio * node_count + 0.5))

    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= node_count:
        raise InvalidQuantity(n)
    return n


def parse_distribution(spec):
    """Build a ValuationDistribution from text or a mapping.

    Text forms are 'normal:MEAN,VARIANCE', 'm_shape:LM,LV,HM,HV' and
    'DATASET' or 'DATASET:KIND' for a dataset preset. Mappings carry
    'kind' plus either the named parameters or 'preset'.

    Raises
        InvalidParams (SeedPriceError)
    """
    if isinstance(spec, ValuationDistribution):
        return spec

    if hasattr(spec, 'items'):
        kind = spec.get('kind', 'normal')
        if 'preset' in spec:
            return ValuationDistribution.preset(spec['preset'], kind)
        if kind not in DISTRIBUTION_FIELDS:
            raise InvalidParams('{!r} is not a valid distribution.'.format(kind))
        try:
            params = [spec[field] for field in DISTRIBUTION_FIELDS[kind]]
        except KeyError as error:
            message = 'Distribution {} is missing {}.'
            raise InvalidParams(message.format(kind, error))
        return ValuationDistribution(kind, params)

    name, _, rest = str(spec).partition(':')
    if name in DATASET_VALUATIONS:
        return ValuationDistribution.preset(name, rest or 'normal')

    try:
        params = [float(part) for part in rest.split(',') if part.strip()]
    except ValueError:
        raise InvalidParams('Invalid distribution {!r}.'.format(spec))
    return ValuationDistribution(name, params)


def default_prices(distribution=None, fallback='1..10'):
    """Return the price set of a run that lists no prices.

    A distribution naming a dataset preset ('digg', 'facebook:m_shape'
    or a mapping with 'preset') brings that dataset's price range.

    Parameters
        distribution (str or dict)
            The distribution as written in the config or on the
            command line.
        fallback (str)
            The range used for everything else.

    Returns
        (PriceSet)
    """
    if hasattr(distribution, 'items'):
        name = distribution.get('preset')
    else:
        name = str(distribution).partition(':')[0]

    if name in DATASET_PRICES:
        low, high = DATASET_PRICES[name]
        return PriceSet.from_range(low, high)
    return PriceSet.parse(fallback)


class RunConfig(object):
    """Everything needed to run one solver on one network."""

    def __init__(
        self,
        graph,
        valuations=None,
        distribution=None,
        prices=None,
        quantity=None,
        ratio=None,
        solver='prub',
        seed=None,
        output=None,
        threads=None,
        influence='identity',
    ):
        """Initialize a RunConfig.

        Parameters
            graph (str)
                Path of the TSV edge list.
            valuations (str)
                Path of the TSV valuation file.
            distribution (str, dict or ValuationDistribution)
                Samples valuations instead of reading them.
            prices (str, list or PriceSet)
                'a..b', a comma list, or a list of prices. Defaults to
                default_prices(distribution).
            quantity (int)
                The quantity of commodities n.
            ratio (float)
                n / |V|, instead of quantity.
            solver (str)
                Registry name of the solver.
            seed (int)
                Seed for sampling and randomized solvers.
            output (str)
                Optional CSV destination.
            threads (int)
                Worker threads; see resolve_threads().
            influence (str)
                The influence function F.

        Raises
            InvalidParams (SeedPriceError)
                Raised if the valuation or quantity sources conflict
                or are missing, or a randomized solver has no seed.
            UnknownSolver, EmptyPriceSet, InvalidPriceSet (SolverError)
        """
        if (valuations is None) == (distribution is None):
            message = (
                'RunConfig needs exactly one of a valuation '
                'file or a distribution.'
            )
            raise InvalidParams(message)

        if (quantity is None) == (ratio is None):
            raise InvalidParams('RunConfig needs exactly one of quantity or ratio.')

        self.graph = graph
        self.valuations = valuations
        self.distribution = None
        if distribution is not None:
            self.distribution = parse_distribution(distribution)

        if prices is None:
            self.prices = default_prices(distribution)
        elif isinstance(prices, PriceSet):
            self.prices = prices
        elif isinstance(prices, (list, tuple)):
            self.prices = PriceSet(prices)
        else:
            self.prices = PriceSet.parse(str(prices))

        self.quantity = quantity
        self.ratio = ratio
        self.solver = solver_name(solver)
        self.seed = seed
        self.output = output
        self.threads = resolve_threads(threads)
        self.influence = influence

        if self.seed is None and self.distribution is not None:
            raise InvalidParams('Sampling valuations requires a seed.')
        if self.seed is None and self.solver in RANDOMIZED_SOLVERS:
            raise InvalidParams('Solver {} requires a seed.'.format(self.solver))

    @classmethod
    def from_yaml(cls, filename):
        """Load a RunConfig from a YAML file.

        Parameters
            filename (str)
                Name of the configuration file.

        Raises
            InputError
                Raised if the file cannot be read or is not a mapping.
            InvalidParams (SeedPriceError)
                Raised for unknown keys.
        """
        try:
            with open(filename, 'r') as config_file:
                config = safe_load(config_file)
        except (IOError, OSError, YAMLError) as error:
            raise InputError('Cannot load config: {}.'.format(error), filename)

        if not isinstance(config, dict):
            raise InputError('Config must be a mapping.', filename)

        unknown = sorted(set(config) - CONFIG_KEYS)
        if unknown:
            message = 'Unknown config keys in {}: {}.'
            raise InvalidParams(message.format(filename, ', '.join(unknown)))

        base = os_path.dirname(os_path.abspath(filename))
        for key in ('graph', 'valuations', 'output'):
            value = config.get(key)
            if value and not os_path.isabs(value):
                config[key] = os_path.join(base, value)

        return cls(**config)

    def load_network(self):
        return load_network(
            self.graph,
            valuations_path=self.valuations,
            distribution=self.distribution,
            rng_seed=self.seed,
            influence_fn=self.influence,
        )

    def resolve_n(self, net):
        return resolve_quantity(net.node_count, self.quantity, self.ratio)
