# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysisbase as analysisbase
from actgram.grammar.grammar import merge_grammars


class MergeGrammars(analysisbase.AnalysisBase):
	"""Merge the grammars below a new start rule choosing grammar i with probability weight_i / sum(weights).
Variables are prefixed with the grammar nicks."""

	def __init__(self):
		super(MergeGrammars, self).__init__()

	def run(self, pipelineData):
		super(MergeGrammars, self).run(pipelineData)

		grammars, = self.require(pipelineData, "grammars")
		config = pipelineData.config
		merged = merge_grammars(list(zip(grammars, config["weights"])), names=config["nicks"])
		pipelineData.artifacts["grammar"] = merged
		pipelineData.artifacts["output_grammars"] = [("merged", merged)]
