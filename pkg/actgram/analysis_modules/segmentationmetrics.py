# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.analysisbase as analysisbase
from actgram.errors import ConfigError
from actgram.segmentation.metrics import mean_scores, score_all


class SegmentationMetrics(analysisbase.AnalysisBase):
	"""Edit score, F1@{10,25,50} and frame accuracy of predicted against ground truth frame labels."""

	def __init__(self):
		super(SegmentationMetrics, self).__init__()

	def run(self, pipelineData):
		super(SegmentationMetrics, self).run(pipelineData)

		predictions, ground_truths = self.require(pipelineData, "labels", "gt_labels")
		if len(predictions) != len(ground_truths):
			raise ConfigError("{0} predictions for {1} ground truth label files".format(len(predictions), len(ground_truths)))

		rows = [(name, score_all(predicted, ground_truth)) for (name, predicted), (gt_name, ground_truth) in zip(predictions, ground_truths)]
		pipelineData.artifacts["metrics"] = rows
		pipelineData.artifacts["mean_metrics"] = mean_scores(scores for name, scores in rows)
