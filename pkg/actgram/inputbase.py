# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import os

import actgram.processor as processor


class InputBase(processor.Processor):
	def __init__(self):
		super(InputBase, self).__init__()

	def modify_argument_parser(self, parser, args):
		self.input_options = parser.add_argument_group("Input options")

	def prepare_args(self, parser, pipelineData):
		super(InputBase, self).prepare_args(parser, pipelineData)

	def run(self, pipelineData):
		super(InputBase, self).run(pipelineData)

	@staticmethod
	def nick(filename):
		"""Name of an input: its file name without directory and extension."""
		return os.path.splitext(os.path.basename(filename))[0]
