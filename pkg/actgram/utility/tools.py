# -*- coding: utf-8 -*-

import logging
log = logging.getLogger(__name__)

import multiprocessing
import os
import tempfile
import textwrap
import time

import actgram.utility.progressiterator as pi


def get_colored_string(string, color='green'):
	colors = {
		'black': '\033[0;30m',
		'red': '\033[0;31m',
		'green': '\033[0;32m',
		'yellow': '\033[0;33m',
		'blue': '\033[0;34m',
	}
	return colors.get(color, '') + string + '\033[0m'


def get_indented_text(prefix, message, width=None):
	if width is None:
		width = pi.get_tty_size()[1]
	wrapper = textwrap.TextWrapper(initial_indent=prefix, width=width, subsequent_indent=prefix)
	return "\n".join(wrapper.fill(line) for line in message.split("\n"))


def flattenList(listOfLists):
	"""
	flatten 2D list
	return [1, 2, 3, 4, ...] for input [[1, 2], [3, 4, ...], ...]
	"""
	return [item for subList in listOfLists for item in subList]


def parallelize(function, arguments_list, n_processes=1, description=None):
	"""
	Call function for every item of arguments_list and return the results in order.

	With n_processes > 1 the calls are distributed over a process pool; function
	and arguments must be picklable.
	"""
	description = description if description else "calling "+getattr(function, "__name__", str(function))
	if n_processes <= 1 or len(arguments_list) <= 1:
		results = []
		for arguments in pi.ProgressIterator(arguments_list, description=description):
			results.append(function(arguments))
		return results
	else:
		pool = multiprocessing.Pool(processes=max(1, min(n_processes, len(arguments_list))))
		try:
			results = pool.map_async(function, arguments_list, chunksize=1)
			n_tasks = len(arguments_list)
			left = n_tasks
			progress_iterator = pi.ProgressIterator(range(n_tasks), description=description)
			while True:
				ready = results.ready()
				remaining = results._number_left
				if ready or (remaining < left):
					for i in range(left-remaining):
						next(progress_iterator, None)
					left = remaining
				if ready:
					break
				time.sleep(0.2)
			returnvalue = results.get()
		finally:
			pool.close() # necessary to actually terminate the processes
			pool.join()  # without these two lines, they happen to live until the whole program terminates
		return returnvalue


def write_files_atomically(contents):
	"""
	Write (filename, text) pairs, staging every text before any target is touched.

	Each text goes to a temporary file next to its target first, and the
	temporaries are renamed only after all of them have been written, so a
	failed write leaves every target as it was. Each rename is atomic on its
	own; when one fails, the targets renamed before it keep their new text.
	"""
	staged = []
	try:
		for filename, text in contents:
			directory = os.path.dirname(os.path.abspath(filename))
			if not os.path.isdir(directory):
				os.makedirs(directory, exist_ok=True)
			handle, tmp_filename = tempfile.mkstemp(prefix=".tmp_", dir=directory)
			staged.append((tmp_filename, filename))
			with os.fdopen(handle, "w", encoding="utf-8", newline="\n") as tmp_file:
				tmp_file.write(text)
		for tmp_filename, filename in staged:
			os.replace(tmp_filename, filename)
			log.debug("Created \"{0}\".".format(filename))
	finally:
		for tmp_filename, filename in staged:
			if os.path.exists(tmp_filename):
				os.remove(tmp_filename)
	return [filename for tmp_filename, filename in staged]
