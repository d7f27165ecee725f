# -*- coding: utf-8 -*-

"""
Frame-wise class probability matrices, the input of the parser.

File format: CSV, header row with the class tokens, one row of probabilities per frame.
"""

import logging
log = logging.getLogger(__name__)

import csv
import io

import numpy

from actgram.errors import FileFormatError, ProbabilityError
from actgram.parsing.logspace import safe_log


ROW_TOLERANCE = 1e-6


class FrameProbMatrix(object):
	"""T x |classes| matrix Y of per-frame class probabilities."""

	def __init__(self, classes, probs, validate=True):
		super(FrameProbMatrix, self).__init__()
		self.classes = tuple(classes)
		self.probs = numpy.array(probs, dtype=float, ndmin=2)
		self.probs.setflags(write=False)
		self._class_indices = dict((token, index) for index, token in enumerate(self.classes))
		self._log_columns = {}
		if validate:
			self.validate()

	def validate(self):
		if len(self._class_indices) != len(self.classes):
			raise ProbabilityError("duplicate class tokens in probability matrix")
		if self.probs.ndim != 2 or self.probs.shape[1] != len(self.classes):
			raise ProbabilityError("probability matrix of shape {0} does not match {1} classes".format(self.probs.shape, len(self.classes)))
		if self.probs.shape[0] < 1:
			raise ProbabilityError("probability matrix without frames")
		if not numpy.all(numpy.isfinite(self.probs)) or numpy.any(self.probs < 0.0):
			raise ProbabilityError("probability matrix has negative or non-finite entries")
		deviations = numpy.abs(self.probs.sum(axis=1) - 1.0)
		if numpy.any(deviations > ROW_TOLERANCE):
			frame = int(numpy.argmax(deviations))
			raise ProbabilityError("row {0} of the probability matrix sums to {1:g}".format(frame + 1, self.probs[frame].sum()))

	@property
	def n_frames(self):
		return self.probs.shape[0]

	def __len__(self):
		return self.n_frames

	def column(self, token):
		index = self._class_indices.get(token)
		if index is None:
			return numpy.zeros(self.n_frames)
		return self.probs[:, index]

	def log_column(self, token):
		"""log Y[:, token] as a list of floats (-inf for zeros and unknown classes)."""
		if token not in self._log_columns:
			self._log_columns[token] = [float(value) for value in safe_log(self.column(token))]
		return self._log_columns[token]

	def argmax_labels(self):
		return [self.classes[index] for index in numpy.argmax(self.probs, axis=1)]

	def rows(self, indices):
		return FrameProbMatrix(self.classes, self.probs[indices], validate=False)

	@classmethod
	def uniform(cls, classes, n_frames):
		classes = tuple(classes)
		return cls(classes, numpy.full((n_frames, len(classes)), 1.0 / len(classes)))

	@classmethod
	def one_hot(cls, labels, classes=None):
		"""Matrix putting all mass of frame t on labels[t]."""
		classes = tuple(sorted(set(labels))) if classes is None else tuple(classes)
		indices = dict((token, index) for index, token in enumerate(classes))
		probs = numpy.zeros((len(labels), len(classes)))
		for frame, label in enumerate(labels):
			if label not in indices:
				raise ProbabilityError("label {0} is not a class of the matrix".format(label))
			probs[frame, indices[label]] = 1.0
		return cls(classes, probs)

	def __eq__(self, other):
		if not isinstance(other, FrameProbMatrix):
			return NotImplemented
		return self.classes == other.classes and numpy.array_equal(self.probs, other.probs)

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	__hash__ = None

	def to_csv(self):
		output = io.StringIO()
		writer = csv.writer(output, lineterminator="\n")
		writer.writerow(self.classes)
		for row in self.probs:
			writer.writerow([repr(float(value)) for value in row])
		return output.getvalue()


def load_prob_matrix(text, source="<string>"):
	reader = csv.reader(io.StringIO(text))
	rows = [(reader.line_num, row) for row in reader if row and any(cell.strip() for cell in row)]
	if len(rows) < 2:
		raise FileFormatError("{0}: probability matrix needs a header and at least one frame".format(source))
	classes = [cell.strip() for cell in rows[0][1]]
	probs = []
	for line_number, row in rows[1:]:
		if len(row) != len(classes):
			raise FileFormatError("{0}:{1}: expected {2} values, got {3}".format(source, line_number, len(classes), len(row)))
		try:
			probs.append([float(cell) for cell in row])
		except ValueError:
			raise FileFormatError("{0}:{1}: non-numeric probability".format(source, line_number))
	try:
		return FrameProbMatrix(classes, probs)
	except ProbabilityError as error:
		raise FileFormatError("{0}: {1}".format(source, error))


def read_prob_matrix(filename):
	with open(filename, encoding="utf-8", newline="") as matrix_file:
		return load_prob_matrix(matrix_file.read(), source=filename)
