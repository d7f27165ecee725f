# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import sys

import actgram.utility.tools as tools


class PipelineData(object):
	"""
	Shared state of one processor chain.

	config holds the parsed arguments, artifacts the objects handed from one
	processor to the next. Output processors only stage files and standard output
	text; save() writes them at the end of a successful run.
	"""

	def __init__(self, args):
		super(PipelineData, self).__init__()
		self.config = args
		self.artifacts = {}
		self.exit_status = 0
		self._files = []
		self._stdout = []

	def stage_file(self, filename, text):
		if any(staged == filename for staged, old_text in self._files):
			log.warning("Output \"{0}\" is written twice, keeping the last version.".format(filename))
			self._files = [(staged, old_text) for staged, old_text in self._files if staged != filename]
		self._files.append((filename, text))

	def stage_stdout(self, text):
		self._stdout.append(text)

	def save(self, stream=None):
		"""Write all staged files (each one atomically), then the standard output text."""
		output_filenames = tools.write_files_atomically(self._files)
		for filename in output_filenames:
			log.info("Created \"{0}\".".format(filename))
		stream = sys.stdout if stream is None else stream
		for text in self._stdout:
			stream.write(text)
		stream.flush()
		return output_filenames
