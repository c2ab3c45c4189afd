# Copyright (c) 2026 The seedprice authors.
# Licensed under the MIT License.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import sys

from seedprice.errors import InvariantViolation
from seedprice.errors import SeedPriceError


EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


def exit_code_for(error):
    """Map an error to the command line exit code.

    Parameters
        error (SeedPriceError)
            The error raised while running a command.

    Returns
        (int)
            2 for InvariantViolation, 1 for any other SeedPriceError.

    Raises
        error
            Re-raised if it is not a SeedPriceError.
    """
    if isinstance(error, InvariantViolation):
        return EXIT_INVARIANT_VIOLATION
    if isinstance(error, SeedPriceError):
        return EXIT_INPUT_ERROR
    raise error


def error_handler(error, stream=None):
    """Report an error on standard error and return its exit code."""
    code = exit_code_for(error)
    kind = 'internal error' if code == EXIT_INVARIANT_VIOLATION else 'error'
    print('seedprice: {}: {}'.format(kind, error), file=stream or sys.stderr)
    return code
