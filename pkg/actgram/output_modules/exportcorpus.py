# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.outputbase as outputbase
from actgram.errors import ConfigError
from actgram.induction.corpus import save_corpora


class ExportCorpus(outputbase.OutputBase):
	"""Write produced action sequences as corpus files. A single corpus without --corpus-output goes to stdout."""

	def __init__(self):
		super(ExportCorpus, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(ExportCorpus, self).modify_argument_parser(parser, args)

		self.output_options.add_argument("--corpus-output", default=None,
		                                 help="Corpus output file. [Default: stdout or <output-dir>/<name>.txt]")

	def run(self, pipelineData):
		super(ExportCorpus, self).run(pipelineData)

		corpora = pipelineData.artifacts.get("output_corpora", [])
		output = pipelineData.config["corpus_output"]
		if output is not None and len(corpora) > 1:
			raise ConfigError("--corpus-output names one file for {0} corpora, use --output-dir".format(len(corpora)))

		for nick, activity_corpora in corpora:
			text = save_corpora(activity_corpora)
			if output is not None:
				pipelineData.stage_file(output, text)
			elif len(corpora) == 1 and pipelineData.config["output_dir"] is None:
				pipelineData.stage_stdout(text)
			else:
				pipelineData.stage_file(self.output_path(pipelineData, nick + ".txt"), text)
