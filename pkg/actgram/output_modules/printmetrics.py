# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.outputbase as outputbase
from actgram.segmentation.metrics import METRIC_NAMES


class PrintMetrics(outputbase.OutputBase):
	"""Print segmentation metrics per prediction and their mean."""

	def __init__(self):
		super(PrintMetrics, self).__init__()

	def run(self, pipelineData):
		super(PrintMetrics, self).run(pipelineData)

		rows = list(pipelineData.artifacts.get("metrics", []))
		if len(rows) > 1:
			rows.append(("mean", pipelineData.artifacts["mean_metrics"]))
		width = max([len("labels")] + [len(name) for name, scores in rows])
		lines = [" ".join(["{0:<{1}}".format("labels", width)] + ["{0:>8}".format(metric) for metric in METRIC_NAMES])]
		for name, scores in rows:
			lines.append(" ".join(["{0:<{1}}".format(name, width)] + ["{0:>8.2f}".format(scores[metric]) for metric in METRIC_NAMES]))
		pipelineData.stage_stdout("".join(line + "\n" for line in lines))
