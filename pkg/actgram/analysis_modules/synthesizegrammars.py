# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysisbase as analysisbase
from actgram.errors import ActGramError, ConfigError
from actgram.evaluation.grammareval import make_cases
from actgram.evaluation.synthetic import GRAMMAR_TYPES, SynthConfig
from actgram.induction.corpus import Corpus


class SynthesizeGrammars(analysisbase.AnalysisBase):
	"""Generate random activity grammars over a shared terminal set and sample seen and unseen sequences from each."""

	def __init__(self):
		super(SynthesizeGrammars, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(SynthesizeGrammars, self).modify_argument_parser(parser, args)

		defaults = SynthConfig()
		self.synth_options = parser.add_argument_group("Synthetic grammar options")
		self.synth_options.add_argument("--n-grammars", type=int, default=defaults.n_grammars,
		                                help="Number of synthetic grammars. [Default: %(default)s]")
		self.synth_options.add_argument("--n-variables", type=int, default=defaults.n_variables,
		                                help="Number of variables below the start rule. [Default: %(default)s]")
		self.synth_options.add_argument("--random-variables", default=defaults.random_variables, action="store_true",
		                                help="Draw the number of variables of every grammar up to --n-variables. [Default: %(default)s]")
		self.synth_options.add_argument("--n-terminals", type=int, default=defaults.n_terminals,
		                                help="Size of the shared terminal set. [Default: %(default)s]")
		self.synth_options.add_argument("--grammar-type", default=defaults.grammar_type, choices=GRAMMAR_TYPES,
		                                help="I: every terminal belongs to one variable, II: terminals are reused. [Default: %(default)s]")
		self.synth_options.add_argument("--n-key-terminals", type=int, default=defaults.n_key_terminals,
		                                help="Number of key actions of every grammar. [Default: %(default)s]")
		self.synth_options.add_argument("--seq-per-grammar", type=int, default=defaults.seq_per_grammar,
		                                help="Sequences sampled from every grammar. [Default: %(default)s]")
		self.synth_options.add_argument("--seen-fraction", type=float, default=defaults.seen_fraction,
		                                help="Fraction of the sequences used for induction. [Default: %(default)s]")
		self.synth_options.add_argument("--optional-prob", type=float, default=defaults.optional_prob,
		                                help="Chance of a block to be optional. [Default: %(default)s]")
		self.synth_options.add_argument("--independent-prob", type=float, default=defaults.independent_prob,
		                                help="Chance of a block to hold an order-free pair of actions. [Default: %(default)s]")
		self.synth_options.add_argument("--max-len", type=int, default=defaults.max_len,
		                                help="Longest sampled sequence. [Default: %(default)s]")

	def prepare_args(self, parser, pipelineData):
		super(SynthesizeGrammars, self).prepare_args(parser, pipelineData)
		try:
			self.synth_config = synth_config_from_args(pipelineData.config)
		except ActGramError as error:
			raise ConfigError(str(error))

	def run(self, pipelineData):
		super(SynthesizeGrammars, self).run(pipelineData)

		cases = make_cases(self.synth_config, n_processes=pipelineData.config["n_processes"])
		pipelineData.artifacts["output_grammars"] = [(case.name, case.grammar) for case in cases]
		pipelineData.artifacts["output_corpora"] = [
				(case.name, [Corpus(case.seen, activity="seen"), Corpus(case.unseen, activity="unseen")])
				for case in cases
		]


def synth_config_from_args(config):
	return SynthConfig(**dict((field, config[field]) for field in SynthConfig._fields))
