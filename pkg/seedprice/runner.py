# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Solver registry and dispatch.

Every solver is reachable by name, so the command line, configuration
files and the benchmark harness share one vocabulary. Your usage of
this module might look like:

    result = run_solver('prubif', net, PriceSet.parse('1..10'), n=4)
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import OrderedDict

import logging

from seedprice.baselines import solve_baseline
from seedprice.baselines import solve_nosocial
from seedprice.errors import MissingSeedForRandom
from seedprice.errors import UnknownSolver
from seedprice.prub import solve_bruteforce
from seedprice.prub import solve_prub
from seedprice.prubif import solve_prubif
from seedprice.search import PriceSet
from seedprice.search import verify_result


log = logging.getLogger(__name__)


def _exact(solve):
    def run(net, prices, n, rng_seed, threads):
        return solve(net, prices, n, threads)
    return run


def _baseline(kind):
    def run(net, prices, n, rng_seed, threads):
        return solve_baseline(net, prices, n, kind, rng_seed, threads)
    return run


def _nosocial(net, prices, n, rng_seed, threads):
    return solve_nosocial(net, prices, n)


SOLVERS = OrderedDict([
    ('prub', _exact(solve_prub)),
    ('bruteforce', _exact(solve_bruteforce)),
    ('prubif', _exact(solve_prubif)),
    ('random', _baseline('random')),
    ('sum_of_weights', _baseline('sum_of_weights')),
    ('ablation_N', _baseline('ablation_N')),
    ('ablation_F', _baseline('ablation_F')),
    ('ablation_P', _baseline('ablation_P')),
    ('nosocial', _nosocial),
])

SOLVER_ALIASES = {
    'sumweights': 'sum_of_weights',
    'sw': 'sum_of_weights',
    'prub+if': 'prubif',
    'ablation_n': 'ablation_N',
    'ablation_f': 'ablation_F',
    'ablation_p': 'ablation_P',
}

RANDOMIZED_SOLVERS = frozenset([
    'random',
])


def solver_name(name):
    """Return the registry name of a solver or one of its aliases.

    Raises
        UnknownSolver (SolverError)
    """
    name = SOLVER_ALIASES.get(name, name)
    if name not in SOLVERS:
        raise UnknownSolver(name)
    return name


def parse_solvers(text):
    """Split a comma separated solver list into registry names."""
    return tuple(
        solver_name(part.strip()) for part in text.split(',') if part.strip()
    )


def run_solver(name, net, prices, n, rng_seed=None, threads=1):
    """Run a solver by name and replay its result.

    Parameters
        name (str)
            Registry name or alias.
        net (MonetizingNetwork)
        prices (PriceSet or iterable)
        n (int)
            The quantity of commodities.
        rng_seed (int)
            Required by randomized solvers.
        threads (int)

    Returns
        (SolverResult)

    Raises
        UnknownSolver, MissingSeedForRandom (SolverError)
        InvariantViolation (SeedPriceError)
            Raised if the result cannot be replayed.
    """
    name = solver_name(name)
    if name in RANDOMIZED_SOLVERS and rng_seed is None:
        raise MissingSeedForRandom()

    if not isinstance(prices, PriceSet):
        prices = PriceSet(prices)

    log.info('Running {} with n={} over {} prices'.format(name, n, len(prices)))
    result = SOLVERS[name](net, prices, n, rng_seed, threads)
    verify_result(net, n, result, prices)
    return result
