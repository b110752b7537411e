#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________
