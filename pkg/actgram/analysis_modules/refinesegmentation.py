# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysis_modules.parseprobabilities as parseprobabilities
from actgram.errors import ConfigError
from actgram.evaluation.refinement import Video, refine_dataset


class RefineSegmentation(parseprobabilities.ParseProbabilities):
	"""Refine the frame argmax of every probability matrix with the grammar and score both against the
ground truth labels (--gt-labels, one file per matrix in the same order). Parse failures keep the argmax."""

	def __init__(self):
		super(RefineSegmentation, self).__init__()

	def run(self, pipelineData):
		# skip the plain parsing of ParseProbabilities
		super(parseprobabilities.ParseProbabilities, self).run(pipelineData)

		grammar, matrices = self.require(pipelineData, "grammar", "probs")
		gt_labels = pipelineData.artifacts.get("gt_labels") or []
		if gt_labels and len(gt_labels) != len(matrices):
			raise ConfigError("--gt-labels: {0} label files for {1} probability matrices".format(len(gt_labels), len(matrices)))

		videos = [Video(name, probs, gt_labels[index][1] if gt_labels else None) for index, (name, probs) in enumerate(matrices)]
		report = refine_dataset(videos, grammar, self.parser_options(pipelineData.config),
		                        n_processes=pipelineData.config["n_processes"])

		pipelineData.artifacts["refinement"] = report
		pipelineData.artifacts["frame_labels"] = [(video.name, video.labels) for video in report.videos]
		pipelineData.artifacts["report_files"] = [("videos.csv", report.to_csv())]
		pipelineData.artifacts["report_summary"] = report.summary()
