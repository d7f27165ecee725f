# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysisbase as analysisbase
from actgram.grammar.grammar import validate_grammar


class ValidateGrammar(analysisbase.AnalysisBase):
	"""Check the well-formedness of the grammars (symbols, reachability, normalisation of all rule probabilities)."""

	def __init__(self):
		super(ValidateGrammar, self).__init__()

	def run(self, pipelineData):
		super(ValidateGrammar, self).run(pipelineData)

		grammars, = self.require(pipelineData, "grammars")
		pipelineData.artifacts["validation"] = [(nick, validate_grammar(grammar))
		                                        for nick, grammar in zip(pipelineData.config["nicks"], grammars)]
