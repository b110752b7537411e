#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging
import os

from segrezeta.command.compare import Compare
from segrezeta.command.degrees import Degrees
from segrezeta.command.integral import Integral
from segrezeta.command.segre import Segre
from segrezeta.command.show import Show
from segrezeta.command.snapper import Snapper
from segrezeta.command.vogel import Vogel
from segrezeta.command.zeta import Zeta
from segrezeta.core.config import ConfigManager, Settings
from segrezeta.core.envelope import ResultEnvelope, content_hash
from segrezeta.core.errors import PreconditionViolation
from segrezeta.parser.idealfile import parse_ideal_file
from segrezeta.util.logutil import setup_logging

COMMANDS = (Degrees, Vogel, Segre, Zeta, Integral, Snapper, Show, Compare)
CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")


class SegreZeta:
    """This is the manager class. It reads the configuration, loads ideal
    files and delegates the actual work to the command classes."""

    def __init__(self, args):
        """Constructor of the manager class SegreZeta

        @param args the command line arguments as returned by argparser"""
        self.args = args
        self.settings = None


    def __overrides(self):
        """settings given on the command line"""
        names = {"characteristic": "char", "seed": "seed", "trials": "trials", "n_max": "n_max"}
        return {key: getattr(self.args, attr, None) for key, attr in names.items()}


    def boot(self):
        """starts up segrezeta.

        - enable logging
        - read configuration from segrezeta.ini
        - combine configuration and command line into the settings of this run
        """
        setup_logging(getattr(self.args, "verbose", False))
        config = ConfigManager(getattr(self.args, "config", None)).config
        self.settings = Settings.from_config(config, self.__overrides())
        logging.debug("settings: " + str(self.settings))


    def __resolve(self, path):
        """ideal files are looked up as given, then in the bundled corpus"""
        if os.path.exists(path):
            return path
        candidate = os.path.join(CORPUS_DIR, os.path.basename(path))
        if os.path.exists(candidate):
            return candidate
        raise PreconditionViolation("ideal file not found: " + path)


    def load(self, path):
        """reads and parses an ideal file

        @param path file name
        @return (IdealFile, content hash)
        """
        try:
            with open(self.__resolve(path), "r", encoding="utf-8") as f:
                text = f.read()
        except (OSError, UnicodeDecodeError) as e:
            raise PreconditionViolation("cannot read ideal file " + path + ": " + str(e))
        return parse_ideal_file(text, self.settings.characteristic), content_hash(text)


    def __instantiate_command(self, name):
        for command_class in COMMANDS:
            if command_class.name == name:
                return command_class(self.settings, getattr(self.args, "trace", False))
        raise PreconditionViolation("Unknown command \"" + str(name) + "\". Supported commands: "
                                    + ", ".join(c.name for c in COMMANDS))


    def run(self, name, paths):
        """executes a command on ideal files

        @param name command name, e. g. segre
        @param paths ideal files
        @return ResultEnvelope
        """
        command = self.__instantiate_command(name)
        if len(paths) != command.arity:
            raise PreconditionViolation(name + " expects " + str(command.arity) + " ideal files, got " + str(len(paths)))

        ideals = []
        inputs = []
        for path in paths:
            ideal_file, digest = self.load(path)
            ideals.append(ideal_file.ideal)
            inputs.append((path, digest))
        logging.info("running " + name + " on " + ", ".join(paths))

        payload = command.execute(ideals)
        parameters = command.parameters()
        parameters["characteristic"] = ideals[0].ring.field.modulus
        return ResultEnvelope(name, tuple(inputs), parameters, payload)
