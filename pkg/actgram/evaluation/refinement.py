# -*- coding: utf-8 -*-

"""
Refinement of frame-wise classifier outputs with an activity grammar.

Each video's probability matrix is downsampled, parsed into the best action
sequence, segmented by optimal_lengths and upsampled again. The frame argmax
of the matrix is the unrefined baseline.
"""

import logging
log = logging.getLogger(__name__)

import collections
import csv
import io

import numpy

from actgram.errors import ParseError, SegmentationError, EvaluationError
from actgram.grammar.sampling import sample_sequences
from actgram.parsing.bep import BreadthFirstEarleyParser
from actgram.parsing.probmatrix import FrameProbMatrix
from actgram.segmentation.metrics import METRIC_NAMES, score_all, mean_scores
from actgram.segmentation.segopt import optimal_lengths, to_framewise, downsample, upsample_labels
import actgram.utility.tools as tools


Video = collections.namedtuple("Video", ["name", "probs", "labels"])
RefinedVideo = collections.namedtuple("RefinedVideo", ["name", "sequence", "labels", "before", "after", "failed"])

ParserOptions = collections.namedtuple("ParserOptions", ["n_queue", "policy", "max_actions", "stride", "early_stop"])
ParserOptions.__new__.__defaults__ = (20, "depth", 20, 1, True)


def parse_video(probs, grammar, options=None, parser=None):
	"""(ParseResult, frame labels) of one probability matrix; parser is built from options unless given."""
	options = ParserOptions() if options is None else options
	if parser is None:
		parser = BreadthFirstEarleyParser(grammar, n_queue=options.n_queue, policy=options.policy,
		                                  max_actions=options.max_actions, early_stop=options.early_stop)
	coarse = downsample(probs, options.stride)
	result = parser.parse(coarse)
	labeling = optimal_lengths(coarse, result.best_sequence)
	return result, upsample_labels(to_framewise(labeling), options.stride, probs.n_frames)


def refine_video(probs, grammar, options=None, parser=None):
	"""(sequence, frame labels) of one probability matrix."""
	result, labels = parse_video(probs, grammar, options, parser)
	return result.best_sequence, labels


def _refine_item(arguments):
	video, grammar, options = arguments
	unrefined = video.probs.argmax_labels()
	before = score_all(unrefined, video.labels) if video.labels is not None else None
	try:
		sequence, labels = refine_video(video.probs, grammar, options)
		failed = False
	except (ParseError, SegmentationError) as error:
		log.warning("Refinement of {0} failed, keeping the frame argmax: {1}".format(video.name, error))
		sequence, labels, failed = (), unrefined, True
	after = score_all(labels, video.labels) if video.labels is not None else None
	return RefinedVideo(video.name, tuple(sequence), labels, before, after, failed)


class RefinementReport(object):
	def __init__(self, videos, options):
		super(RefinementReport, self).__init__()
		self.videos = list(videos)
		self.options = options

	@property
	def scored(self):
		return [video for video in self.videos if video.before is not None]

	def mean_before(self):
		return mean_scores(video.before for video in self.scored)

	def mean_after(self):
		return mean_scores(video.after for video in self.scored)

	@property
	def n_failed(self):
		return sum(1 for video in self.videos if video.failed)

	def to_csv(self):
		output = io.StringIO()
		for key, value in self.options._asdict().items():
			output.write("# {0} = {1}\n".format(key, value))
		writer = csv.writer(output, lineterminator="\n")
		writer.writerow(["video", "failed", "sequence"] + ["before_" + name for name in METRIC_NAMES] + ["after_" + name for name in METRIC_NAMES])
		for video in self.videos:
			before = [video.before[name] for name in METRIC_NAMES] if video.before is not None else [""] * len(METRIC_NAMES)
			after = [video.after[name] for name in METRIC_NAMES] if video.after is not None else [""] * len(METRIC_NAMES)
			writer.writerow([video.name, int(video.failed), " ".join(video.sequence)] +
			                [value if value == "" else "{0:.4f}".format(value) for value in before + after])
		if self.scored:
			writer.writerow(["mean", self.n_failed, ""] +
			                ["{0:.4f}".format(value) for value in list(self.mean_before().values()) + list(self.mean_after().values())])
		return output.getvalue()

	def summary(self):
		lines = ["videos: {0} ({1} parse failures)".format(len(self.videos), self.n_failed)]
		if self.scored:
			before, after = self.mean_before(), self.mean_after()
			lines.append("{0:<10} {1:>8} {2:>8}".format("metric", "before", "after"))
			for name in METRIC_NAMES:
				lines.append("{0:<10} {1:>8.2f} {2:>8.2f}".format(name, before[name], after[name]))
		return "\n".join(lines) + "\n"


def refine_dataset(videos, grammar, options=None, n_processes=1):
	"""RefinementReport over Video tuples (labels may be None to skip scoring)."""
	options = ParserOptions() if options is None else options
	videos = list(videos)
	for video in videos:
		if video.labels is not None and len(video.labels) != video.probs.n_frames:
			raise EvaluationError("{0}: {1} ground truth labels for {2} frames".format(video.name, len(video.labels), video.probs.n_frames))
	refined = tools.parallelize(_refine_item, [(video, grammar, options) for video in videos], n_processes=n_processes,
	                            description="Refining segmentations")
	return RefinementReport(refined, options)


def make_refinement_fixtures(grammar, n_videos, seed=0, noise=0.2, flip_prob=0.0, segment_length=(5, 15), max_len=20, classes=None):
	"""
	Synthetic videos from grammar samples.

	Every sampled action gets a random segment length, its frames the mixture
	(1 - noise) * one_hot + noise * Dirichlet(1). With flip_prob a segment's
	one-hot part moves to a random other class.
	"""
	if not 0.0 <= noise < 0.5:
		raise EvaluationError("label preserving noise must lie in [0, 0.5), got {0}".format(noise))
	rng = numpy.random.default_rng(seed)
	classes = sorted(grammar.terminals) if classes is None else list(classes)
	if len(classes) < 2:
		raise EvaluationError("fixtures need at least two classes")
	index = dict((token, position) for position, token in enumerate(classes))
	videos = []
	for number, sequence in enumerate(sample_sequences(grammar, rng, n_videos, max_len, distinct_adjacent=True), start=1):
		lengths = rng.integers(segment_length[0], segment_length[1] + 1, size=len(sequence))
		labels = [action for action, length in zip(sequence, lengths) for repeat in range(length)]
		probs = noise * rng.dirichlet(numpy.ones(len(classes)), size=len(labels))
		frame = 0
		for action, length in zip(sequence, lengths):
			column = index[action]
			if flip_prob and rng.random() < flip_prob:
				column = int(rng.choice([position for position in range(len(classes)) if position != index[action]]))
			probs[frame:frame + length, column] += 1.0 - noise
			frame += length
		videos.append(Video("video_{0:03d}".format(number), FrameProbMatrix(classes, probs), labels))
	return videos
