# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

COMMENT_PREFIX = '#'
FIELD_SEPARATOR = '\t'
DEFAULT_EDGE_WEIGHT = 1.0

SEED_SEPARATOR = ';'
RANGE_SEPARATOR = '..'

# column order is part of the external interface; never reorder
RESULT_COLUMNS = (
    'solver',
    'n',
    'n_over_V',
    'p_max',
    'revenue',
    'seed_set',
    'prices_examined',
    'prices_pruned',
    'groups_or_rounds_evaluated',
    'wall_time_ms',
)

RATIO_COLUMNS = (
    'solver',
    'n',
    'n_over_V',
    'revenue',
    'nosocial_revenue',
    'ratio',
)

CURVE_COLUMNS = (
    'solver',
    'n',
    'price',
    'revenue',
    'seed_set',
)

DEFAULT_RATIOS = '0.05..0.30'
DEFAULT_RATIO_STEP = 0.05

THREADS_ENV_VAR = 'SEEDPRICE_THREADS'

GRAPH_SUFFIX = '.tsv'
VALUATION_SUFFIX = '.val'
