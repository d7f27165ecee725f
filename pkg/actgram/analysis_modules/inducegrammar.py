# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysisbase as analysisbase
from actgram.errors import ConfigError
from actgram.grammar.grammar import merge_grammars
from actgram.induction.baselines import NGramConfig, induce_flat, induce_right_regular
from actgram.induction.kari import BOUNDARY_TOKEN, PERMUTATION_POLICIES, activity_name, induce_corpora

ALGORITHMS = ("kari", "flat", "right-regular")


class InduceGrammar(analysisbase.AnalysisBase):
	"""Induce an activity grammar from the corpora. Several activities are induced separately and merged,
weighted by their numbers of sequences."""

	def __init__(self):
		super(InduceGrammar, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(InduceGrammar, self).modify_argument_parser(parser, args)

		self.analysis_options.add_argument("--algo", default="kari", choices=ALGORITHMS,
		                                   help="Induction algorithm. [Default: %(default)s]")
		self.analysis_options.add_argument("--n-key", type=int, default=4,
		                                   help="Number of key actions (kari), 0 disables the key action split. [Default: %(default)s]")
		self.analysis_options.add_argument("--perms", default="observed", choices=PERMUTATION_POLICIES,
		                                   help="Key action orders of the middle rule (kari). [Default: %(default)s]")
		self.analysis_options.add_argument("--no-recursion", default=False, action="store_true",
		                                   help="Use one-step action group rules instead of recursive ones (kari). [Default: %(default)s]")
		self.analysis_options.add_argument("--boundary-token", default=BOUNDARY_TOKEN,
		                                   help="Action framing every sequence, lifted into the start rule (kari); \"none\" disables it. [Default: %(default)s]")
		self.analysis_options.add_argument("--order", type=int, default=None,
		                                   help="History length of the right-regular grammar. [Default: full history]")
		self.analysis_options.add_argument("--smoothing", type=float, default=0.0,
		                                   help="Probability mass spread uniformly over all continuations (right-regular). [Default: %(default)s]")

	def prepare_args(self, parser, pipelineData):
		super(InduceGrammar, self).prepare_args(parser, pipelineData)

		self.check_positive(pipelineData, ["n_key"], allow_zero=True)
		self.check_positive(pipelineData, ["order"])
		if not 0.0 <= pipelineData.config["smoothing"] < 1.0:
			raise ConfigError("--smoothing must lie in [0, 1), got {0}".format(pipelineData.config["smoothing"]))
		if pipelineData.config["boundary_token"] in ("none", "None", ""):
			pipelineData.config["boundary_token"] = None

	def run(self, pipelineData):
		super(InduceGrammar, self).run(pipelineData)

		corpora, = self.require(pipelineData, "corpora")
		config = pipelineData.config
		algorithm = config["algo"]
		if algorithm == "kari":
			grammar = induce_corpora(corpora, config["n_key"], perms=config["perms"],
			                         recursive=not config["no_recursion"], boundary_token=config["boundary_token"])
		elif algorithm == "flat":
			grammar = induce_flat(corpora)
		else:
			ngram = NGramConfig(config["order"], config["smoothing"])
			grammars = [(induce_right_regular(corpus, ngram), len(corpus)) for corpus in corpora]
			if len(grammars) == 1:
				grammar = grammars[0][0]
			else:
				grammar = merge_grammars(grammars, names=[activity_name(corpus.activity) for corpus in corpora])

		log.info("Induced {0} grammar with {1} rules from {2} activities.".format(algorithm, len(grammar.rules), len(corpora)))
		pipelineData.artifacts["grammar"] = grammar
		pipelineData.artifacts["output_grammars"] = [("grammar", grammar)]
