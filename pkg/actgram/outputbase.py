# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import os

import actgram.processor as processor


class OutputBase(processor.Processor):
	def __init__(self):
		super(OutputBase, self).__init__()

	def modify_argument_parser(self, parser, args):
		self.output_options = parser.add_argument_group("Output options")
		self.output_options.add_argument("--output-dir", default=None,
		                                 help="Directory for output files. [Default: %(default)s]")

	def prepare_args(self, parser, pipelineData):
		super(OutputBase, self).prepare_args(parser, pipelineData)

	def run(self, pipelineData):
		super(OutputBase, self).run(pipelineData)

	@staticmethod
	def output_path(pipelineData, filename):
		"""filename below --output-dir (if given)."""
		output_dir = pipelineData.config.get("output_dir")
		return filename if output_dir is None else os.path.join(output_dir, filename)
