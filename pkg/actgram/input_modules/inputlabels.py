# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.inputbase as inputbase
from actgram.errors import ConfigError
from actgram.segmentation.segopt import read_labels


class InputLabels(inputbase.InputBase):
	"""Read frame label files (one label per line): predictions as positional arguments, ground truth with --gt-labels.
Two positional files without --gt-labels are read as prediction and ground truth."""

	def __init__(self):
		super(InputLabels, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(InputLabels, self).modify_argument_parser(parser, args)

		self.input_options.add_argument("label_files", nargs="*", default=[],
		                                help="Predicted frame label file(s).")
		self.input_options.add_argument("--gt-labels", nargs="+",
		                                help="Ground truth frame label file(s), one per prediction or video.")

	def prepare_args(self, parser, pipelineData):
		super(InputLabels, self).prepare_args(parser, pipelineData)

		config = pipelineData.config
		if config["gt_labels"] is None and config["command"] == "metrics":
			if len(config["label_files"]) != 2:
				raise ConfigError(self.name() + ": expected a prediction and a ground truth label file, or --gt-labels")
			config["label_files"], config["gt_labels"] = config["label_files"][:1], config["label_files"][1:]
		self.check_files(config["label_files"], "label_files")
		self.check_files(config["gt_labels"] or [], "--gt-labels")

	def run(self, pipelineData):
		super(InputLabels, self).run(pipelineData)

		pipelineData.artifacts["labels"] = [(self.nick(filename), read_labels(filename)) for filename in pipelineData.config["label_files"]]
		pipelineData.artifacts["gt_labels"] = [(self.nick(filename), read_labels(filename)) for filename in (pipelineData.config["gt_labels"] or [])]
