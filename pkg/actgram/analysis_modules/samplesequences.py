# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysisbase as analysisbase
from actgram.grammar.sampling import sample_sequences
from actgram.induction.corpus import Corpus


class SampleSequences(analysisbase.AnalysisBase):
	"""Sample action sequences from the first grammar."""

	def __init__(self):
		super(SampleSequences, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(SampleSequences, self).modify_argument_parser(parser, args)

		self.analysis_options.add_argument("--n-sequences", type=int, default=10,
		                                   help="Number of sampled sequences. [Default: %(default)s]")
		self.analysis_options.add_argument("--max-len", type=int, default=50,
		                                   help="Longest accepted sequence, longer derivations are sampled again. [Default: %(default)s]")
		self.analysis_options.add_argument("--distinct-adjacent", default=False, action="store_true",
		                                   help="Reject sequences repeating an action directly. [Default: %(default)s]")

	def prepare_args(self, parser, pipelineData):
		super(SampleSequences, self).prepare_args(parser, pipelineData)
		self.check_positive(pipelineData, ["n_sequences", "max_len"])

	def run(self, pipelineData):
		super(SampleSequences, self).run(pipelineData)

		grammar, = self.require(pipelineData, "grammar")
		config = pipelineData.config
		sequences = sample_sequences(grammar, config["seed"], config["n_sequences"], config["max_len"],
		                             distinct_adjacent=config["distinct_adjacent"])
		nick = config["nicks"][0] if config.get("nicks") else "sample"
		pipelineData.artifacts["output_corpora"] = [(nick, [Corpus(sequences, alphabet=grammar.terminals)])]
