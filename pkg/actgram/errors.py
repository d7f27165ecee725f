# -*- coding: utf-8 -*-

"""
Exceptions raised by the actgram library.

The command line front end turns every ActGramError into a single error line and
a non-zero exit status.
"""


class ActGramError(Exception):
	pass


class ConfigError(ActGramError):
	pass


class FileFormatError(ActGramError):
	pass


class GrammarError(ActGramError):
	pass


class GrammarSyntaxError(GrammarError):
	def __init__(self, message, line=None, column=None):
		self.line = line
		self.column = column
		if line is not None:
			message = "line {0}, column {1}: {2}".format(line, column if column is not None else 1, message)
		super(GrammarSyntaxError, self).__init__(message)


class ProbabilityError(ActGramError):
	pass


class InductionError(ActGramError):
	pass


class ParseError(ActGramError):
	pass


class SegmentationError(ActGramError):
	pass


class EvaluationError(ActGramError):
	pass
