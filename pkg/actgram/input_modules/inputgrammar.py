# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.inputbase as inputbase
from actgram.errors import ConfigError
from actgram.grammar.grammarfile import read_grammar


class InputGrammar(inputbase.InputBase):
	"""Read activity grammars from PCFG text files."""

	def __init__(self):
		super(InputGrammar, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(InputGrammar, self).modify_argument_parser(parser, args)

		self.input_options.add_argument("-g", "--grammar", nargs="+",
		                                help="Grammar file(s).")
		self.input_options.add_argument("--weights", type=float, nargs="+", default=[1.0],
		                                help="Weights of the grammars when merging them. [Default: %(default)s]")
		self.input_options.add_argument("--nicks", nargs="+",
		                                help="Names of the grammars when merging them. [Default: file names]")

	def prepare_args(self, parser, pipelineData):
		super(InputGrammar, self).prepare_args(parser, pipelineData)

		if not pipelineData.config["grammar"]:
			raise ConfigError(self.name() + ": no grammar files given (--grammar)")
		self.check_files(pipelineData.config["grammar"], "--grammar")
		if any(weight < 0.0 for weight in pipelineData.config["weights"]):
			raise ConfigError("--weights must be non-negative")

		if pipelineData.config["nicks"] is None:
			pipelineData.config["nicks"] = [self.nick(filename) for filename in pipelineData.config["grammar"]]
		self.prepare_list_args(pipelineData, ["grammar", "weights", "nicks"], n_items=len(pipelineData.config["grammar"]),
		                       help="Grammar options")

	def run(self, pipelineData):
		super(InputGrammar, self).run(pipelineData)

		grammars = []
		for filename in pipelineData.config["grammar"]:
			grammar = read_grammar(filename)
			log.debug("Read grammar with {0} rules from \"{1}\".".format(len(grammar.rules), filename))
			grammars.append(grammar)
		pipelineData.artifacts["grammars"] = grammars
		# single-grammar processors use the first one
		pipelineData.artifacts["grammar"] = grammars[0]
