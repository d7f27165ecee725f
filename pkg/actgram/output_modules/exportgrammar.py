# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.outputbase as outputbase
from actgram.errors import ConfigError
from actgram.grammar.grammarfile import save_grammar


class ExportGrammar(outputbase.OutputBase):
	"""Write the produced grammars as PCFG text files. A single grammar without -o/--output goes to stdout."""

	def __init__(self):
		super(ExportGrammar, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(ExportGrammar, self).modify_argument_parser(parser, args)

		self.output_options.add_argument("-o", "--output", default=None,
		                                 help="Grammar output file. [Default: stdout or <output-dir>/<name>.pcfg]")

	def run(self, pipelineData):
		super(ExportGrammar, self).run(pipelineData)

		grammars = pipelineData.artifacts.get("output_grammars", [])
		output = pipelineData.config["output"]
		if output is not None and len(grammars) > 1:
			raise ConfigError("--output names one file for {0} grammars, use --output-dir".format(len(grammars)))

		for nick, grammar in grammars:
			text = save_grammar(grammar)
			if output is not None:
				pipelineData.stage_file(output, text)
			elif len(grammars) == 1 and pipelineData.config["output_dir"] is None:
				pipelineData.stage_stdout(text)
			else:
				pipelineData.stage_file(self.output_path(pipelineData, nick + ".pcfg"), text)
