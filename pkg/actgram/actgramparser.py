# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import argparse

import actgram


class ActGramParser(argparse.ArgumentParser):
	def __init__(self, commands=(), **kwargs):
		kwargs["add_help"] = False
		kwargs["conflict_handler"] = "resolve"
		kwargs["fromfile_prefix_chars"] = "@"
		# options of the command are unknown during the first parsing
		kwargs["allow_abbrev"] = False
		kwargs["formatter_class"] = argparse.RawDescriptionHelpFormatter
		kwargs.setdefault("prog", "actgram")
		kwargs["epilog"] = (
			"Configuration precedence: command line flag > --config file > default.\n"
			"  Config files hold one \"key = value\" setting per line, keys are the\n"
			"  long option names (e.g. \"queue-size = 40\").\n"
		)
		kwargs.setdefault("parents", []).append(logger.loggingParser)

		super(ActGramParser, self).__init__(**kwargs)

		self.add_argument("command", nargs="?", choices=list(commands),
		                  help="Pipeline to run: {0}.".format(", ".join(commands)))
		self.add_argument("-h", "--help", default=False, action="store_true",
		                  help="Show this help message and exit.")
		self.add_argument("--version", action="version", version="%(prog)s " + actgram.__version__)

		self.run_options = self.add_argument_group("Run options")
		self.run_options.add_argument("--config",
		                              help="Config file with default settings (key = value lines).")
		self.run_options.add_argument("--seed", type=int, default=0,
		                              help="Seed of all random number generators. [Default: %(default)s]")
		self.run_options.add_argument("--n-processes", type=int, default=1,
		                              help="Number of parallel processes. [Default: %(default)s]")

		self.module_options = self.add_argument_group("Modules")
		self.module_options.add_argument("--modules-search-paths", default=[], nargs="+",
		                                 help="Additional paths to be searched for modules.")
		self.module_options.add_argument("--input-modules", nargs="+",
		                                 help="Input Modules. [Default: given by the command]")
		self.module_options.add_argument("--analysis-modules", nargs="+",
		                                 help="Analysis Modules. [Default: given by the command]")
		self.module_options.add_argument("--output-modules", nargs="+",
		                                 help="Output Modules. [Default: given by the command]")
		self.module_options.add_argument("--list-available-modules", default=False, action="store_true",
		                                 help="List all available modules.")

		# Register new keyword 'bool' for parser
		self.register('type', 'bool', self._str2bool)

	def set_defaults(self, **kwargs):
		# check if argument exists. If not, its most likely an incorrect user input (e.g. misspelling)
		existing_arguments = [action.dest for action in self._actions]
		for argument in kwargs.keys():
			if argument not in existing_arguments:
				log.warning("Trying to set unknown argument '{0}'".format(argument))
		super(ActGramParser, self).set_defaults(**kwargs)

	def set_config_defaults(self, config):
		"""
		Use the string values of a ConfigDict as defaults.

		Lists are split at whitespace and flags converted to bool, all other values
		are converted by the argument types during parsing.
		"""
		actions = dict((action.dest, action) for action in self._actions)
		defaults = {}
		for key, value in config.items():
			action = actions.get(key)
			if action is None:
				defaults[key] = value
			elif action.nargs in ("+", "*") or (isinstance(action.nargs, int) and action.nargs > 1):
				values = value.split()
				defaults[key] = [action.type(item) for item in values] if callable(action.type) else values
			elif isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
				defaults[key] = self._str2bool(value)
			else:
				defaults[key] = value
		self.set_defaults(**defaults)

	@staticmethod
	def _str2bool(v):
		""" Parse string content to bool."""
		return v.lower() in ("yes", "true", "t", "1")

	def parse_args(self, args=None, namespace=None, **kwargs):
		new_logger = not kwargs.pop("from_script", False)
		# file arguments may follow options of the command
		known_args = super(ActGramParser, self).parse_intermixed_args(args=args, namespace=namespace)
		if new_logger:
			logger.initLogger(known_args)

		# Add help after first parsing
		self.add_help = True
		self.add_argument('-h', '--help', action='help', default=argparse.SUPPRESS, help='show this help message and exit')

		return known_args

	def parse_known_args(self, args=None, namespace=None, **kwargs):
		new_logger = not kwargs.pop("from_script", False)
		known_args, unknown_args = super(ActGramParser, self).parse_known_args(args=args, namespace=namespace, **kwargs)
		if new_logger:
			logger.initLogger(known_args)

		# Add help after first parsing
		self.add_help = True
		self.add_argument('-h', '--help', action='help', default=argparse.SUPPRESS, help='show this help message and exit')

		return known_args, unknown_args
