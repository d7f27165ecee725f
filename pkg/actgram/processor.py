# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import os

from actgram.errors import ConfigError


class Processor(object):
	"""
	Base class of all steps of a command: input modules load corpora, grammars,
	probability matrices and labels into the PipelineData artifacts, analysis
	modules compute new artifacts and output modules stage files and stdout text.
	"""

	def __init__(self):
		super(Processor, self).__init__()

	def modify_argument_parser(self, parser, args):
		"""
		Add the options of this processor to the ActGramParser.

		args holds the result of the first parsing (command and module lists).
		"""
		pass

	def prepare_args(self, parser, pipelineData):
		"""
		Validate and normalise the parsed options in pipelineData.config.

		Runs for all processors of the chain before the first run(), so invalid
		options fail the command before any work is done.
		"""
		pass

	def run(self, pipelineData):
		log.debug("Running processor " + self.name() + "...")

	def prepare_list_args(self, pipelineData, keys_of_list_args, n_items=None, help=""):
		"""
		Turn the options keys_of_list_args into lists of n_items entries (default:
		the longest list), repeating short lists. Used for per-file options like
		--weights and --nicks.
		"""
		config = pipelineData.config
		# prepare lists
		for key in keys_of_list_args:
			if config[key] is None:
				config[key] = [None]
			elif not isinstance(config[key], (list, tuple)):
				config[key] = [config[key]]
			else:
				config[key] = list(config[key])

		max_n_inputs = n_items if n_items is not None else max([len(config[key]) for key in keys_of_list_args])

		# warn if any input requires replication to match length
		if any((1 < len(config[key]) < max_n_inputs) for key in keys_of_list_args):
			log.warning(
				"Options '%s' have %d entries."
				" Options %s are repeated to match." % (
					"', '".join(key for key in keys_of_list_args if len(config[key]) == max_n_inputs),
					max_n_inputs,
					", ".join("'%s'(%d)" % (key, len(config[key])) for key in keys_of_list_args if 1 < len(config[key]) < max_n_inputs),
				)
			)

		# expand/cut lists that are too short/long
		for key in keys_of_list_args:
			config[key] = (config[key] * max_n_inputs)[:max_n_inputs]

		if log.isEnabledFor(logging.DEBUG):
			log.debug("Argument list expansion: " + help)
			for index in range(max_n_inputs):
				log.debug("\tItem %d:" % index)
				for key in keys_of_list_args:
					log.debug("\t\t" + key + " -> " + str(config[key][index]))

	@staticmethod
	def check_files(filenames, option):
		for filename in filenames:
			if not os.path.isfile(filename):
				raise ConfigError("{0}: file \"{1}\" does not exist".format(option, filename))

	@staticmethod
	def check_positive(pipelineData, keys, allow_zero=False):
		for key in keys:
			value = pipelineData.config[key]
			if value is not None and (value < 0 or (value == 0 and not allow_zero)):
				raise ConfigError("--{0} must be {1}, got {2}".format(key.replace("_", "-"), "non-negative" if allow_zero else "positive", value))

	@classmethod
	def name(cls):
		"""
		Returns a unique processor name.
		"""
		return cls.__name__
