# -*- coding: utf-8 -*-

import logging
log = logging.getLogger(__name__)

import math
import shutil
import sys


def get_tty_size():
	size = shutil.get_terminal_size(fallback=(80, 24))
	return (size.lines, size.columns)


class ProgressIterator(object):
	"""
	Iterator wrapper drawing a progress bar on stderr.

	The bar is only drawn when stderr is a terminal, so redirected runs stay clean.
	"""

	def __init__(self, iterable, length=None, description="", visible=None):
		self.iterator = iter(iterable)
		self.len = length if length is not None else len(iterable)
		self.description = (description if description == "" else (description+"... "))
		self.current_index = 0
		self.ratio = -1.0
		self.tty_width = get_tty_size()[1]
		self.visible = sys.stderr.isatty() if visible is None else visible

	def __iter__(self):
		return self

	def __next__(self):
		ratio = float(self.current_index) / max(1, self.len)

		if self.visible and int(ratio*100) > int(self.ratio*100):
			self.ratio = ratio
			current_progress = min(int(math.ceil(float(self.tty_width) * self.current_index / max(1, self.len))),
			                       self.tty_width)

			line = "%s%.1f %s" % (self.description, ratio*100, "%")
			line = line.center(self.tty_width)
			line = "\r\033[0;42m%s\033[0;41m%s\033[0m" % (line[:current_progress], line[current_progress:])
			sys.stderr.write(line)
			sys.stderr.flush()

		self.current_index += 1
		try:
			return next(self.iterator)
		except StopIteration:
			if self.visible:
				sys.stderr.write("\r\033[J")
				sys.stderr.flush()
			raise
