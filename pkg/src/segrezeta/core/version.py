#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________


# This file is imported by both Python and Shell scripts

# pylint: disable=C0326
# flake8: noqa
VERSION="0.1"
