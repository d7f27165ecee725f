# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.inputbase as inputbase
from actgram.errors import ConfigError
from actgram.parsing.probmatrix import read_prob_matrix


class InputProbabilities(inputbase.InputBase):
	"""Read frame-wise class probability matrices (CSV with a header row of class names, one row per frame)."""

	def __init__(self):
		super(InputProbabilities, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(InputProbabilities, self).modify_argument_parser(parser, args)

		self.input_options.add_argument("-p", "--probs", nargs="+",
		                                help="Probability matrix file(s), one per video.")

	def prepare_args(self, parser, pipelineData):
		super(InputProbabilities, self).prepare_args(parser, pipelineData)

		if not pipelineData.config["probs"]:
			raise ConfigError(self.name() + ": no probability matrices given (--probs)")
		self.check_files(pipelineData.config["probs"], "--probs")
		nicks = [self.nick(filename) for filename in pipelineData.config["probs"]]
		if len(set(nicks)) != len(nicks):
			raise ConfigError("--probs: file names must be distinct without their directories")

	def run(self, pipelineData):
		super(InputProbabilities, self).run(pipelineData)

		matrices = []
		for filename in pipelineData.config["probs"]:
			probs = read_prob_matrix(filename)
			log.debug("Read {0} frames over {1} classes from \"{2}\".".format(probs.n_frames, len(probs.classes), filename))
			matrices.append((self.nick(filename), probs))
		pipelineData.artifacts["probs"] = matrices
