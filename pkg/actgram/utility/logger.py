# -*- coding: utf-8 -*-

import argparse
import logging
import os
import sys
'''
Logging setup of the actgram command line tool.

loggingParser
  argparse parent parser with the verbosity and logging options of every command.

initLogger
  Attach handlers with level dependent formats to a logger.

Grammars, corpora and parse results are written to stdout or files, log
messages go to stderr unless --log-stream says otherwise.
'''

log = logging.getLogger(__name__)

LOG_LEVELS = ["notset", "debug", "info", "warning", "error", "critical"]
LOG_STREAMS = {"stdout": "stdout", "stderr": "stderr", "NONE": None}

# formats per minimum level, the colored variants are used on terminals
LEVEL_FORMATS = {
	logging.NOTSET: "%(levelname)s (%(filename)s.%(lineno)d): %(message)s",
	logging.DEBUG: "%(message)s",
	logging.WARNING: "{warning}%(levelname)s:{reset} %(message)s",
	logging.ERROR: "{error}%(levelname)s:{reset} %(message)s (%(filename)s: line %(lineno)s)",
	logging.CRITICAL: "%(message)s",
}
COLORS = {"warning": "\033[0;43m", "error": "\033[0;41m", "reset": "\033[0m"}
NO_COLORS = dict((key, "") for key in COLORS)


def getLoggingParser(levels=None):
	'''
	Parent parser holding all options of this module.
	'''
	parser = argparse.ArgumentParser(add_help=False)
	verbosity_options = parser.add_argument_group("Verbosity options")
	verbosity_options.add_argument("-v", "--verbose", default=False, action="store_true",
	                               help="Log debug messages (same as --log-level debug). [Default: %(default)s]")

	logging_options = parser.add_argument_group("Logging options")
	logging_options.add_argument("--log-level", default="warning", choices=levels or LOG_LEVELS,
	                             help="Minimum level of logged messages. [Default: %(default)s]")
	logging_options.add_argument("--log-files", nargs="*", default=[],
	                             help="Files that receive a copy of the log. [Default: %(default)s]")
	logging_options.add_argument("--log-stream", default="stderr", choices=sorted(LOG_STREAMS.keys()),
	                             help="Stream to log to. [Default: %(default)s]")
	return parser

loggingParser = getLoggingParser()


def initLogger(argParserArgs=None, name="", logLevel="warning", logFiles=None, logStream="stderr", reinitialize=True):
	'''
	Set up the logger called name (default: the root logger).

	argParserArgs
	                namespace parsed with loggingParser, its settings win over the keyword arguments
	logLevel
	                level name or number
	logFiles
	                files that receive all messages in addition to the stream
	logStream
	                stdout, stderr or NONE
	reinitialize
	                remove handlers of earlier calls
	'''
	thisLogger = logging.getLogger(name)

	logLevel = getattr(argParserArgs, "log_level", logLevel)
	if getattr(argParserArgs, "verbose", False):
		logLevel = "debug"
	thisLogger.setLevel(int(logLevel) if str(logLevel).isdigit() else getattr(logging, logLevel.upper()))

	logStream = getattr(argParserArgs, "log_stream", logStream)
	if logStream not in LOG_STREAMS:
		raise ValueError("Invalid stream designator for logging: %s" % logStream)
	logFiles = list(logFiles or []) + list(getattr(argParserArgs, "log_files", None) or [])

	handlers = []
	if LOG_STREAMS[logStream] is not None:
		stream = getattr(sys, LOG_STREAMS[logStream])
		handlers.append((logging.StreamHandler(stream), hasattr(stream, "isatty") and stream.isatty()))
	for logFile in logFiles:
		logFileDir = os.path.dirname(logFile)
		if logFileDir and not os.path.exists(logFileDir):
			os.makedirs(logFileDir)
		handlers.append((logging.FileHandler(logFile, mode="w", encoding="utf-8"), False))

	if reinitialize:
		thisLogger.handlers = []
	for handler, color in handlers:
		handler.setFormatter(LevelDependentFormatter(LEVEL_FORMATS, color=color))
		thisLogger.addHandler(handler)
	return thisLogger


class LevelDependentFormatter(logging.Formatter):
	"""Formats a record with the format of the highest level in formats not above the record level."""

	def __init__(self, formats, color=False):
		super(LevelDependentFormatter, self).__init__(fmt=formats[min(formats)].format(**NO_COLORS))
		colors = COLORS if color else NO_COLORS
		self._formatters = sorted((levelno, logging.Formatter(fmt.format(**colors))) for levelno, fmt in formats.items())

	def format(self, record):
		formatter = self._formatters[0][1]
		for levelno, levelFormatter in self._formatters:
			if record.levelno >= levelno:
				formatter = levelFormatter
		return formatter.format(record)
