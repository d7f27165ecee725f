# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.inputbase as inputbase
from actgram.errors import ConfigError
from actgram.induction.corpus import read_corpora


class InputCorpus(inputbase.InputBase):
	"""Read action sequence corpora, one sequence of whitespace separated actions per line and "%activity <label>" sections."""

	def __init__(self):
		super(InputCorpus, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(InputCorpus, self).modify_argument_parser(parser, args)

		self.input_options.add_argument("corpus_files", nargs="+",
		                                help="Corpus file(s).")
		self.input_options.add_argument("--dedup-adjacent", default=False, action="store_true",
		                                help="Merge repeated adjacent actions while reading. [Default: %(default)s]")

	def prepare_args(self, parser, pipelineData):
		super(InputCorpus, self).prepare_args(parser, pipelineData)

		if not pipelineData.config["corpus_files"]:
			raise ConfigError(self.name() + ": no corpus files given")
		self.check_files(pipelineData.config["corpus_files"], "corpus_files")

	def run(self, pipelineData):
		super(InputCorpus, self).run(pipelineData)

		corpora = []
		for filename in pipelineData.config["corpus_files"]:
			file_corpora = read_corpora(filename, dedup=pipelineData.config["dedup_adjacent"])
			log.debug("Read {0} activities with {1} sequences from \"{2}\".".format(
				len(file_corpora), sum(len(corpus) for corpus in file_corpora), filename))
			corpora.extend(file_corpora)

		activities = [corpus.activity for corpus in corpora]
		if len(set(activities)) != len(activities):
			raise ConfigError(self.name() + ": activities appear in several corpus files: " +
			                  ", ".join(sorted(set(activity for activity in activities if activities.count(activity) > 1))))
		pipelineData.artifacts["corpora"] = corpora
