# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import os

import actgram.outputbase as outputbase
from actgram.segmentation.segopt import format_labels


class ExportLabels(outputbase.OutputBase):
	"""Write frame labels of parsed or refined videos to <labels-dir>/<video>.labels."""

	def __init__(self):
		super(ExportLabels, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(ExportLabels, self).modify_argument_parser(parser, args)

		self.output_options.add_argument("--labels-dir", default=None,
		                                 help="Directory for frame label files. [Default: no label files]")

	def run(self, pipelineData):
		super(ExportLabels, self).run(pipelineData)

		labels_dir = pipelineData.config["labels_dir"]
		if labels_dir is None:
			log.debug("No --labels-dir given, frame labels are not written.")
			return
		for name, labels in pipelineData.artifacts.get("frame_labels", []):
			pipelineData.stage_file(os.path.join(labels_dir, name + ".labels"), format_labels(labels))
