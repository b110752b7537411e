#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging
import sys


def setup_logging(verbose=False):
    """configures the root logger. Log messages go to stderr so that
    stdout carries nothing but the result.

    @param verbose log debug messages as well
    """
    logging.basicConfig(
        format='%(asctime)s %(levelname)-8s %(message)s',
        level=logging.DEBUG if verbose else logging.INFO,
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
        force=True)
