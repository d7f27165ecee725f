# -*- coding: utf-8 -*-

"""
Frame length allocation for a parsed action sequence.

Given the action sequence a and the frame probabilities Y, optimal_lengths
finds the lengths l maximising the product of Y[t, a_i] over the frames t
allocated to a_i. Every segment gets at least min_length frames.
"""

import logging
log = logging.getLogger(__name__)

import itertools

import numpy

from actgram.errors import FileFormatError, SegmentationError
from actgram.parsing.logspace import NEG_INF, safe_log


class SegmentLabeling(object):
	"""Segment-level labeling: actions with positive frame lengths, adjacent actions differ."""

	def __init__(self, actions, lengths, logprob=None):
		super(SegmentLabeling, self).__init__()
		self.actions = tuple(actions)
		self.lengths = tuple(int(length) for length in lengths)
		self.logprob = logprob
		if len(self.actions) != len(self.lengths):
			raise SegmentationError("{0} actions but {1} lengths".format(len(self.actions), len(self.lengths)))
		if any(length < 1 for length in self.lengths):
			raise SegmentationError("segment lengths must be positive")
		for previous, action in zip(self.actions, self.actions[1:]):
			if previous == action:
				raise SegmentationError("adjacent segments share the action {0}".format(action))

	@property
	def n_frames(self):
		return sum(self.lengths)

	def boundaries(self):
		"""Start frame of every segment."""
		return [0] + list(itertools.accumulate(self.lengths))[:-1]

	def __eq__(self, other):
		if not isinstance(other, SegmentLabeling):
			return NotImplemented
		return self.actions == other.actions and self.lengths == other.lengths

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	def __hash__(self):
		return hash((self.actions, self.lengths))

	def __repr__(self):
		return "SegmentLabeling({0}, {1})".format(list(self.actions), list(self.lengths))


def _segment_sums(log_column):
	"""Function (start, stop) -> sum of log_column[start:stop], exact -inf for zero probabilities."""
	finite = numpy.where(numpy.isneginf(log_column), 0.0, log_column)
	cumulative = numpy.concatenate(([0.0], numpy.cumsum(finite)))
	zeros = numpy.concatenate(([0], numpy.cumsum(numpy.isneginf(log_column))))
	def sums(starts, stop):
		values = cumulative[stop] - cumulative[starts]
		return numpy.where(zeros[stop] - zeros[starts] > 0, NEG_INF, values)
	return sums


def optimal_lengths(probs, actions, min_length=1):
	actions = tuple(actions)
	n_frames = probs.n_frames
	n_actions = len(actions)
	if n_actions == 0:
		raise SegmentationError("cannot segment an empty action sequence")
	if min_length < 1:
		raise SegmentationError("minimum segment length must be positive")
	if n_actions * min_length > n_frames:
		raise SegmentationError("more segments than frames ({0} segments of at least {1} frames, {2} frames)".format(n_actions, min_length, n_frames))

	sums = [_segment_sums(numpy.array(probs.log_column(action))) for action in actions]

	# best[n, t]: log probability of the first n+1 actions covering frames [0, t]
	best = numpy.full((n_actions, n_frames), NEG_INF)
	starts = numpy.zeros((n_actions, n_frames), dtype=int)
	for t in range(min_length - 1, n_frames):
		best[0, t] = sums[0](numpy.array([0]), t + 1)[0]
	for n in range(1, n_actions):
		for t in range((n + 1) * min_length - 1, n_frames):
			# candidate start frames of segment n
			candidates = numpy.arange(n * min_length, t - min_length + 2)
			scores = best[n - 1, candidates - 1] + sums[n](candidates, t + 1)
			index = int(numpy.argmax(scores))
			best[n, t] = scores[index]
			starts[n, t] = candidates[index]

	lengths = []
	stop = n_frames - 1
	for n in range(n_actions - 1, 0, -1):
		start = starts[n, stop]
		lengths.append(stop - start + 1)
		stop = start - 1
	lengths.append(stop + 1)
	logprob = float(best[n_actions - 1, n_frames - 1])
	if logprob == NEG_INF:
		log.warning("Every length allocation of {0} has probability zero.".format(" ".join(actions)))
	return SegmentLabeling(actions, reversed(lengths), logprob=logprob)


def allocation_logprob(probs, actions, lengths):
	"""log prod_i prod_{t in segment i} Y[t, a_i]."""
	total = 0.0
	frame = 0
	for action, length in zip(actions, lengths):
		total += float(numpy.sum(safe_log(probs.column(action)[frame:frame + length])))
		frame += length
	return total


def to_framewise(labeling):
	return [action for action, length in zip(labeling.actions, labeling.lengths) for repeat in range(length)]


def run_length_encode(labels):
	"""SegmentLabeling of a frame label sequence."""
	if len(labels) == 0:
		raise SegmentationError("cannot encode an empty label sequence")
	actions, lengths = [], []
	for label, group in itertools.groupby(labels):
		actions.append(label)
		lengths.append(len(list(group)))
	return SegmentLabeling(actions, lengths)


def downsample(probs, stride):
	"""Every stride-th frame, starting with the first."""
	if stride < 1:
		raise SegmentationError("stride must be positive, got {0}".format(stride))
	if stride == 1:
		return probs
	return probs.rows(numpy.arange(0, probs.n_frames, stride))


def upsample_labels(labels, stride, n_frames):
	"""Repeat every label stride times, cut or padded with the last label to n_frames."""
	if stride < 1:
		raise SegmentationError("stride must be positive, got {0}".format(stride))
	if len(labels) == 0:
		raise SegmentationError("cannot upsample an empty label sequence")
	frames = [label for label in labels for repeat in range(stride)][:n_frames]
	frames.extend([frames[-1]] * (n_frames - len(frames)))
	return frames


def read_labels(filename):
	"""Frame label file: one token per line."""
	with open(filename, encoding="utf-8") as label_file:
		labels = [line.strip() for line in label_file if line.strip()]
	if not labels:
		raise FileFormatError("{0}: no frame labels".format(filename))
	return labels


def format_labels(labels):
	return "".join(label + "\n" for label in labels)
