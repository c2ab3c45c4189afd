# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

MONEY_TOLERANCE = 1e-9

# importance feedback treats IF >= 1 - eps as having reached 1
SATURATION_EPSILON = 1e-12
SATURATED = 1.0 - SATURATION_EPSILON

CONCAVITY_SAMPLES = 64
CONCAVITY_SLACK = 1e-9

BRUTEFORCE_NODE_LIMIT = 20

# seed groups per work unit when a size tier is evaluated
GROUP_CHUNK_SIZE = 256

# work units queued ahead of the reduction, per worker thread
PENDING_PER_THREAD = 4

HEURISTIC_RATIO_FLOOR = 0.85
