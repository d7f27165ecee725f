# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import math

import actgram.outputbase as outputbase


class PrintParse(outputbase.OutputBase):
	"""Print the best action sequence of every parsed video with its log-probabilities, the runner-up parse
and the number of explored states. With --trace the processed state sets follow."""

	def __init__(self):
		super(PrintParse, self).__init__()

	def run(self, pipelineData):
		super(PrintParse, self).run(pipelineData)

		parses = pipelineData.artifacts.get("parses", [])
		lines = []
		for video in parses:
			result = video.result
			if len(parses) > 1:
				lines.append("video: {0}".format(video.name))
			lines.append("sequence: {0}".format(" ".join(result.best_sequence)))
			lines.append("log_prob: {0:.6f}".format(result.best_logprob))
			lines.append("grammar_prob: {0:.6f}".format(math.exp(result.grammar_logprob)))
			if result.runner_up is not None:
				lines.append("runner_up: {0} (grammar_prob {1:.6f})".format(
						" ".join(result.runner_up.sequence), math.exp(result.runner_up.grammar_logprob)))
			lines.append("explored_states: {0}".format(result.explored_states))
			if result.trace:
				lines.append(format_trace(result.trace))
		pipelineData.stage_stdout("".join(line + "\n" for line in lines))


def format_trace(rows):
	lines = ["order\tset\trule\tprefix\toperation\tprobability\tqueued_depth"]
	for row in rows:
		lines.append("{0}\tQ({1})\t{2}\t{3}\t{4}\t{5:.6f}\t{6}".format(
				row.order, ",".join(str(index) for index in row.ids), row.rule, row.prefix or "-",
				row.operation, row.probability, "" if row.queued_depth is None else row.queued_depth))
	return "\n".join(lines)
