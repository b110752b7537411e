#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import argparse
import json
import logging
import sys

from segrezeta.core.errors import PreconditionViolation, SegreZetaError
from segrezeta.core.segrezeta import COMMANDS, SegreZeta
from segrezeta.core.version import VERSION


class SegreZetaCli:
    """a commandline tool for Segre classes, Segre zeta functions and
    integral dependence of homogeneous ideals"""

    def __common_options(self):
        """options accepted after every command"""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--seed",
                            type=int,
                            metavar="n",
                            help="base seed of the random scalars (default from segrezeta.ini: 0)")
        common.add_argument("--trials",
                            type=int,
                            metavar="n",
                            help="independent runs merged by consensus (default from segrezeta.ini: 5)")
        common.add_argument("--char",
                            type=int,
                            metavar="p",
                            help="prime characteristic for files without a char: line (default from segrezeta.ini: 32003)")
        common.add_argument("--n-max",
                            dest="n_max",
                            type=int,
                            metavar="n",
                            help="largest exponent tried for Rees certificates (default from segrezeta.ini: 6)")
        common.add_argument("--json",
                            action="store_true",
                            help="prints the result envelope as JSON")
        common.add_argument("--trace",
                            action="store_true",
                            help="includes the residual ideals of the intersection algorithm")
        common.add_argument("--config",
                            metavar="file",
                            help="configuration file instead of ~/.config/segrezeta.ini")
        common.add_argument("-v", "--verbose",
                            action="store_true",
                            help="prints debug messages")
        return common


    def __parse_args(self, argv):
        """parses command line arguments"""
        common = self.__common_options()
        parser = argparse.ArgumentParser(description="Segre classes, Segre zeta functions and integral dependence of homogeneous ideals",
                                         epilog="Ideal files: char: <prime>, vars: <names>, gens: <polynomials>. See README.md.")
        parser.add_argument("--version",
                            action="version",
                            version=VERSION)
        subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)
        for command_class in COMMANDS:
            sub = subparsers.add_parser(command_class.name, parents=[common], help=command_class.__doc__)
            if command_class.arity == 1:
                sub.add_argument("ideal", help="ideal file")
            else:
                sub.add_argument("ideal", help="ideal file of I")
                sub.add_argument("over", help="ideal file of J, containing I")
        self.args = parser.parse_args(argv)


    def __paths(self):
        if getattr(self.args, "over", None) is not None:
            return [self.args.ideal, self.args.over]
        return [self.args.ideal]


    def __report_error(self, e):
        if self.args.json:
            print(json.dumps(e.to_dict(), sort_keys=True, indent=2))
        else:
            print("ERROR: " + str(e), file=sys.stderr)


    def start(self, argv=None):
        """starts up segrezeta

        @return exit code: 0 ok, 2 parse error, 3 genericity failure,
                4 not stabilized, 5 precondition violation or unreadable input
        """
        self.__parse_args(argv)
        try:
            segrezeta = SegreZeta(self.args)
            segrezeta.boot()
            envelope = segrezeta.run(self.args.command, self.__paths())
        except SegreZetaError as e:
            logging.debug("command failed", exc_info=True)
            self.__report_error(e)
            return e.exit_code
        except OSError as e:
            error = PreconditionViolation("cannot read ideal file: " + str(e))
            self.__report_error(error)
            return error.exit_code

        if self.args.json:
            print(envelope.to_json())
        else:
            print(envelope.to_text())
        return 0


def main():
    sys.exit(SegreZetaCli().start())
