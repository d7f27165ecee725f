# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysis_modules.synthesizegrammars as synthesizegrammars
from actgram.evaluation.grammareval import ALGORITHMS, run_grammar_eval
from actgram.induction.baselines import NGramConfig
from actgram.induction.kari import PERMUTATION_POLICIES


class GrammarEvaluation(synthesizegrammars.SynthesizeGrammars):
	"""Induce a grammar from the seen sequences of every synthetic grammar and try to parse the unseen sequences
of all grammars with it. Reports precision and recall per grammar and the confusion matrix."""

	def __init__(self):
		super(GrammarEvaluation, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(GrammarEvaluation, self).modify_argument_parser(parser, args)

		self.analysis_options.add_argument("--algo", default="kari", choices=ALGORITHMS,
		                                   help="Induction algorithm. [Default: %(default)s]")
		self.analysis_options.add_argument("--n-key", type=int, default=None,
		                                   help="Number of key actions (kari). [Default: --n-key-terminals]")
		self.analysis_options.add_argument("--perms", default="observed", choices=PERMUTATION_POLICIES,
		                                   help="Key action orders of the middle rule (kari). [Default: %(default)s]")
		self.analysis_options.add_argument("--no-recursion", default=False, action="store_true",
		                                   help="Use one-step action group rules (kari). [Default: %(default)s]")
		self.analysis_options.add_argument("--order", type=int, default=None,
		                                   help="History length of the right-regular grammar. [Default: full history]")
		self.analysis_options.add_argument("--smoothing", type=float, default=0.0,
		                                   help="Smoothing of the right-regular grammar. [Default: %(default)s]")

	def prepare_args(self, parser, pipelineData):
		super(GrammarEvaluation, self).prepare_args(parser, pipelineData)
		self.check_positive(pipelineData, ["n_key"], allow_zero=True)
		self.check_positive(pipelineData, ["order"])
		config = pipelineData.config
		self.ngram = NGramConfig(config["order"], config["smoothing"]) if config["algo"] == "right-regular" else None

	def run(self, pipelineData):
		# no sampling of its own, run_grammar_eval generates the cases
		super(synthesizegrammars.SynthesizeGrammars, self).run(pipelineData)

		config = pipelineData.config
		report = run_grammar_eval(self.synth_config, algorithm=config["algo"], n_processes=config["n_processes"],
		                          n_key=config["n_key"], ngram=self.ngram, recursive=not config["no_recursion"], perms=config["perms"])

		pipelineData.artifacts["evaluation"] = report
		pipelineData.artifacts["report_files"] = [("grammars.csv", report.to_csv()), ("confusion.csv", report.confusion_csv())]
		pipelineData.artifacts["report_summary"] = report.summary()
