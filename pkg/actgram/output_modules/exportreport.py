# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import os

import actgram.outputbase as outputbase


class ExportReport(outputbase.OutputBase):
	"""Write evaluation reports as CSV files (<report-dir>/<report-prefix>_<table>.csv) and print their summary."""

	def __init__(self):
		super(ExportReport, self).__init__()

	def modify_argument_parser(self, parser, args):
		super(ExportReport, self).modify_argument_parser(parser, args)

		self.output_options.add_argument("--report-dir", default=None,
		                                 help="Directory for report files. [Default: --output-dir or the working directory]")
		self.output_options.add_argument("--report-prefix", default=None,
		                                 help="Prefix of the report file names. [Default: the command]")

	def prepare_args(self, parser, pipelineData):
		super(ExportReport, self).prepare_args(parser, pipelineData)

		if pipelineData.config["report_prefix"] is None:
			pipelineData.config["report_prefix"] = pipelineData.config["command"] or "actgram"

	def run(self, pipelineData):
		super(ExportReport, self).run(pipelineData)

		config = pipelineData.config
		for table, text in pipelineData.artifacts.get("report_files", []):
			filename = "{0}_{1}".format(config["report_prefix"], table)
			if config["report_dir"] is not None:
				filename = os.path.join(config["report_dir"], filename)
			else:
				filename = self.output_path(pipelineData, filename)
			pipelineData.stage_file(filename, text)
		if "report_summary" in pipelineData.artifacts:
			pipelineData.stage_stdout(pipelineData.artifacts["report_summary"])
