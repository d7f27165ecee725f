# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.processor as processor
from actgram.errors import ConfigError


class AnalysisBase(processor.Processor):
	def __init__(self):
		super(AnalysisBase, self).__init__()

	def modify_argument_parser(self, parser, args):
		self.analysis_options = parser.add_argument_group("{0} options".format(self.name()))

	def prepare_args(self, parser, pipelineData):
		super(AnalysisBase, self).prepare_args(parser, pipelineData)

	def run(self, pipelineData=None):
		super(AnalysisBase, self).run(pipelineData)

	def require(self, pipelineData, *artifacts):
		"""Artifacts this processor needs from earlier processors of the chain."""
		missing = [artifact for artifact in artifacts if artifact not in pipelineData.artifacts]
		if missing:
			raise ConfigError("{0} needs {1} from an input module".format(self.name(), ", ".join(missing)))
		return [pipelineData.artifacts[artifact] for artifact in artifacts]
