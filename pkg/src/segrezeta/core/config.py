#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import configparser
import logging
import os
from dataclasses import dataclass

from segrezeta.arith.primefield import PrimeField
from segrezeta.core.errors import ConfigurationError, PreconditionViolation
from segrezeta.groebner.operations import SATURATION_METHODS

DEFAULT_CONFIGURATION = """
#
# Configuration file for segrezeta.
# Lines starting with a # are ignored. Command line options take precedence.
#

[global]
# prime characteristic of the coefficient field
characteristic = 32003
# base seed of the random scalars
seed = 0
# independent runs of the intersection algorithm per ideal
trials = 5
# largest exponent n tried for a Rees certificate I * J^n = J^(n+1)
n_max = 6
# quotient (iterated colon ideals) or elimination (auxiliary variable)
saturation = quotient

[snapper]
m_start = 2
n_start = 1
points = 4
"""


class ConfigManager:
    """This class loads configuration from segrezeta.ini and writes the
    default configuration if there is none."""

    def __init__(self, filename=None):
        """loads the configuration

        @param filename configuration file, ~/.config/segrezeta.ini if not specified
        """
        self.filename = filename if filename is not None else self.__determine_filename()
        self.__write_default_configuration_if_missing()
        self.__read_configuration_from_file()


    def __determine_filename(self):
        """configuration file should be used from the .config subfolder
        of the user's home directory"""

        config_folder = os.path.expanduser("~") + "/.config"
        if not os.path.exists(config_folder):
            os.makedirs(config_folder)
        return config_folder + "/segrezeta.ini"


    def __write_default_configuration_if_missing(self):
        if os.path.exists(self.filename):
            return
        logging.info("Writing default configuration file to " + self.filename)
        try:
            with open(self.filename, "w", encoding="utf-8") as f:
                f.write(DEFAULT_CONFIGURATION)
        except OSError as e:
            logging.warning("Could not write default configuration: " + str(e))


    def __read_configuration_from_file(self):
        logging.debug("Using configuration file " + self.filename)
        config = configparser.ConfigParser(strict=False)
        config.read_string(DEFAULT_CONFIGURATION)
        try:
            config.read(self.filename, "UTF-8")
        except configparser.Error as e:
            raise ConfigurationError("Error reading configuration file " + self.filename + ": " + str(e))
        self.config = config


@dataclass(frozen=True)
class Settings:
    """effective parameters of a run: built-in defaults, overridden by
    segrezeta.ini, overridden by the command line"""

    characteristic: int = 32003
    seed: int = 0
    trials: int = 5
    n_max: int = 6
    saturation: str = "quotient"
    m_start: int = 2
    n_start: int = 1
    points: int = 4

    def __post_init__(self):
        try:
            PrimeField(self.characteristic)
        except PreconditionViolation as e:
            raise ConfigurationError(e.message)
        if self.seed < 0:
            raise ConfigurationError("seed must be >= 0, got " + str(self.seed))
        if self.trials < 1:
            raise ConfigurationError("trials must be >= 1, got " + str(self.trials))
        if self.n_max < 1:
            raise ConfigurationError("n_max must be >= 1, got " + str(self.n_max))
        if self.saturation not in SATURATION_METHODS:
            raise ConfigurationError("unknown saturation method \"" + self.saturation + "\". Supported: " + ", ".join(SATURATION_METHODS))


    @classmethod
    def from_config(cls, config, overrides=None):
        """reads the settings from a ConfigParser

        @param config ConfigParser with [global] and [snapper] sections
        @param overrides dict of values that replace configured ones, None values are ignored
        """
        try:
            values = {
                "characteristic": config.getint("global", "characteristic"),
                "seed": config.getint("global", "seed"),
                "trials": config.getint("global", "trials"),
                "n_max": config.getint("global", "n_max"),
                "saturation": config.get("global", "saturation").strip().lower(),
                "m_start": config.getint("snapper", "m_start"),
                "n_start": config.getint("snapper", "n_start"),
                "points": config.getint("snapper", "points"),
            }
        except (configparser.Error, ValueError) as e:
            raise ConfigurationError("Error reading configuration: " + str(e))
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value
        return cls(**values)


    def to_dict(self):
        return {"characteristic": self.characteristic, "seed": self.seed, "trials": self.trials,
                "n_max": self.n_max, "saturation": self.saturation}
