# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

"""Benchmark harness.

Sweeps solvers over quantity ratios n/|V|, compares their revenue with
the NoSocial baseline, and traces per-price revenue curves. The
heuristic gap reports how close the greedy heuristic gets to the exact
optimum on a corpus of small random instances.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import namedtuple

import logging

from seedprice.config import resolve_quantity
from seedprice.datagen import oracle_instances
from seedprice.formats import CurveRow
from seedprice.formats import RatioRow
from seedprice.formats import format_money
from seedprice.formats import format_ratio
from seedprice.formats import format_seeds
from seedprice.formats import result_row
from seedprice.runner import run_solver
from seedprice.search import PriceSet
from seedprice.utils.numeric import HEURISTIC_RATIO_FLOOR


log = logging.getLogger(__name__)


SweepEntry = namedtuple('SweepEntry', 'solver, ratio, n, result')

GapReport = namedtuple('GapReport', 'instances, mean_ratio, worst_ratio')


def sweep(net, prices, solvers, ratios, rng_seed=None, threads=1):
    """Run every solver at every quantity ratio.

    Parameters
        net (MonetizingNetwork)
        prices (PriceSet)
        solvers (iterable)
            Solver registry names.
        ratios (iterable)
            n / |V| values.
        rng_seed (int)
            Passed to randomized solvers.
        threads (int)

    Returns
        (list)
            SweepEntry records, solver-major.
    """
    entries = []
    for name in solvers:
        for ratio in ratios:
            n = resolve_quantity(net.node_count, ratio=ratio)
            result = run_solver(name, net, prices, n, rng_seed, threads)
            log.info(
                'Bench {} at n/|V|={} (n={}): revenue={}'.format(
                    name,
                    ratio,
                    n,
                    result.revenue,
                )
            )
            entries.append(SweepEntry(name, ratio, n, result))
    return entries


def result_rows(net, entries, omit_timing=False):
    return [
        result_row(entry.result, entry.n, net.node_count, omit_timing)
        for entry in entries
    ]


def ratio_table(net, prices, entries):
    """Revenue of every sweep entry relative to NoSocial at the same n.

    The ratio column is left blank when NoSocial earns nothing.

    Returns
        (list)
            RatioRow records.
    """
    baseline = {}
    rows = []
    for entry in entries:
        if entry.n not in baseline:
            result = run_solver('nosocial', net, prices, entry.n)
            baseline[entry.n] = result.revenue

        reference = baseline[entry.n]
        ratio = format_ratio(entry.result.revenue / reference) if reference else ''
        rows.append(RatioRow(
            solver=entry.solver,
            n=str(entry.n),
            n_over_V=format_ratio(entry.n / net.node_count),
            revenue=format_money(entry.result.revenue),
            nosocial_revenue=format_money(reference),
            ratio=ratio,
        ))
    return rows


def revenue_curve(net, prices, n, solver, rng_seed=None, threads=1):
    """Best revenue the solver finds at each single price.

    Returns
        (list)
            CurveRow records in ascending price order.
    """
    rows = []
    for price in prices:
        result = run_solver(solver, net, PriceSet([price]), n, rng_seed, threads)
        rows.append(CurveRow(
            solver=result.solver,
            n=str(n),
            price=format_money(price),
            revenue=format_money(result.revenue),
            seed_set=format_seeds(result.seeds),
        ))
    return rows


def heuristic_gap(instance_count, rng_seed=0, threads=1):
    """Mean PRUB+IF / PRUB revenue ratio over random 8-node instances.

    Instances where the optimum is 0 count as a ratio of 1. A mean
    below 0.85 is logged as a warning, not raised.

    Returns
        (GapReport)
    """
    prices = PriceSet.from_range(1, 10)
    ratios = []
    for net, n in oracle_instances(instance_count, rng_seed):
        exact = run_solver('prub', net, prices, n, threads=threads)
        greedy = run_solver('prubif', net, prices, n, threads=threads)
        ratios.append(greedy.revenue / exact.revenue if exact.revenue else 1.0)

    if not ratios:
        return GapReport(0, 1.0, 1.0)

    report = GapReport(len(ratios), sum(ratios) / len(ratios), min(ratios))
    log.info(
        'Heuristic gap over {} instances: mean={:.4f}, worst={:.4f}'.format(
            report.instances,
            report.mean_ratio,
            report.worst_ratio,
        )
    )
    if report.mean_ratio < HEURISTIC_RATIO_FLOOR:
        log.warning(
            'Mean PRUB+IF / PRUB ratio {:.4f} is below {}'.format(
                report.mean_ratio,
                HEURISTIC_RATIO_FLOOR,
            )
        )
    return report
