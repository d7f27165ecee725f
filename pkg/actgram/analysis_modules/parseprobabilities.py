# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import collections

import actgram.analysisbase as analysisbase
from actgram.errors import ConfigError
from actgram.evaluation.refinement import ParserOptions, parse_video
from actgram.parsing.bep import POLICY_ALIASES, BreadthFirstEarleyParser

ParsedVideo = collections.namedtuple("ParsedVideo", ["name", "result", "labels"])


class ParseProbabilities(analysisbase.AnalysisBase):
	"""Parse every probability matrix into the most probable action sequence of the grammar (breadth-first
Earley parsing) and segment it into frame labels."""

	def __init__(self):
		super(ParseProbabilities, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(ParseProbabilities, self).modify_argument_parser(parser, args)

		self.analysis_options.add_argument("--queue-size", type=int, default=20,
		                                   help="Number of state sets kept in the queue, 0 keeps all. [Default: %(default)s]")
		self.analysis_options.add_argument("--policy", default="bep", choices=sorted(POLICY_ALIASES.keys()),
		                                   help="Queue order: bep/depth pops the shallowest state set, gep/probability the most probable one. [Default: %(default)s]")
		self.analysis_options.add_argument("--max-actions", type=int, default=20,
		                                   help="Longest action sequence considered. [Default: %(default)s]")
		self.analysis_options.add_argument("--stride", type=int, default=1,
		                                   help="Parse every stride-th frame only. [Default: %(default)s]")
		self.analysis_options.add_argument("--no-early-stop", default=False, action="store_true",
		                                   help="Search until the queue is empty. [Default: %(default)s]")
		self.analysis_options.add_argument("--trace", default=False, action="store_true",
		                                   help="Log every processed state set. [Default: %(default)s]")

	def prepare_args(self, parser, pipelineData):
		super(ParseProbabilities, self).prepare_args(parser, pipelineData)

		self.check_positive(pipelineData, ["queue_size"], allow_zero=True)
		self.check_positive(pipelineData, ["max_actions", "stride"])
		if pipelineData.config["policy"] not in POLICY_ALIASES:
			raise ConfigError("--policy must be one of {0}".format(", ".join(sorted(POLICY_ALIASES))))

	@staticmethod
	def parser_options(config):
		return ParserOptions(
				n_queue=config["queue_size"] if config["queue_size"] > 0 else None,
				policy=POLICY_ALIASES[config["policy"]],
				max_actions=config["max_actions"],
				stride=config["stride"],
				early_stop=not config["no_early_stop"],
		)

	def run(self, pipelineData):
		super(ParseProbabilities, self).run(pipelineData)

		grammar, matrices = self.require(pipelineData, "grammar", "probs")
		options = self.parser_options(pipelineData.config)
		parser = BreadthFirstEarleyParser(grammar, n_queue=options.n_queue, policy=options.policy, max_actions=options.max_actions,
		                                  early_stop=options.early_stop, trace=pipelineData.config["trace"])

		parsed = []
		for name, probs in matrices:
			result, labels = parse_video(probs, grammar, options, parser=parser)
			log.info("{0}: {1}".format(name, " ".join(result.best_sequence)))
			parsed.append(ParsedVideo(name, result, labels))
		pipelineData.artifacts["parses"] = parsed
		pipelineData.artifacts["frame_labels"] = [(video.name, video.labels) for video in parsed]
