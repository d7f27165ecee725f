# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import actgram.outputbase as outputbase


class PrintValidation(outputbase.OutputBase):
	"""Print the validation report of every grammar. The command fails if any grammar has issues."""

	def __init__(self):
		super(PrintValidation, self).__init__()

	def run(self, pipelineData):
		super(PrintValidation, self).run(pipelineData)

		lines = []
		for nick, report in pipelineData.artifacts.get("validation", []):
			if report.ok:
				lines.append("{0}: OK".format(nick))
			else:
				lines.append("{0}: {1} issue(s)".format(nick, len(report)))
				lines.extend("\t" + issue for issue in report)
				pipelineData.exit_status = 1
		pipelineData.stage_stdout("".join(line + "\n" for line in lines))
