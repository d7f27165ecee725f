# -*- coding: utf-8 -*-

"""
Temporal action segmentation metrics: edit score, F1@tau and frame accuracy.
All scores are percentages in [0, 100].
"""

import logging
log = logging.getLogger(__name__)

import collections

import numpy

from actgram.errors import SegmentationError


F1_THRESHOLDS = (0.10, 0.25, 0.50)
METRIC_NAMES = ("edit", "f1@10", "f1@25", "f1@50", "accuracy")

Segment = collections.namedtuple("Segment", ["label", "start", "stop"])


def segments(labels):
	"""Maximal runs of equal labels, stop exclusive."""
	runs = []
	for frame, label in enumerate(labels):
		if runs and runs[-1].label == label:
			runs[-1] = runs[-1]._replace(stop=frame + 1)
		else:
			runs.append(Segment(label, frame, frame + 1))
	return runs


def levenshtein(first, second):
	distances = numpy.zeros((len(first) + 1, len(second) + 1), dtype=int)
	distances[:, 0] = numpy.arange(len(first) + 1)
	distances[0, :] = numpy.arange(len(second) + 1)
	for i in range(1, len(first) + 1):
		for j in range(1, len(second) + 1):
			substitution = 0 if first[i - 1] == second[j - 1] else 1
			distances[i, j] = min(distances[i - 1, j] + 1, distances[i, j - 1] + 1, distances[i - 1, j - 1] + substitution)
	return int(distances[-1, -1])


def edit_score(predicted, ground_truth):
	if len(predicted) == 0 or len(ground_truth) == 0:
		raise SegmentationError("edit score of empty label sequences")
	predicted_actions = [segment.label for segment in segments(predicted)]
	true_actions = [segment.label for segment in segments(ground_truth)]
	distance = levenshtein(predicted_actions, true_actions)
	return (1.0 - float(distance) / max(len(predicted_actions), len(true_actions))) * 100.0


def _check_lengths(predicted, ground_truth):
	if len(predicted) != len(ground_truth):
		raise SegmentationError("{0} predicted frames but {1} ground truth frames".format(len(predicted), len(ground_truth)))


def f1_at(predicted, ground_truth, tau):
	"""
	Segmental F1 at IoU threshold tau.

	Each predicted segment is matched to the same-class ground truth segment of
	highest overlap; it is a hit if that IoU is at least tau and the ground
	truth segment was not matched before.
	"""
	_check_lengths(predicted, ground_truth)
	predicted_segments = segments(predicted)
	true_segments = segments(ground_truth)
	matched = [False] * len(true_segments)
	true_positives = false_positives = 0
	for segment in predicted_segments:
		best_iou, best_index = 0.0, None
		for index, true_segment in enumerate(true_segments):
			if true_segment.label != segment.label:
				continue
			intersection = min(segment.stop, true_segment.stop) - max(segment.start, true_segment.start)
			if intersection <= 0:
				continue
			union = max(segment.stop, true_segment.stop) - min(segment.start, true_segment.start)
			iou = float(intersection) / union
			if iou > best_iou:
				best_iou, best_index = iou, index
		if best_index is not None and best_iou >= tau and not matched[best_index]:
			true_positives += 1
			matched[best_index] = True
		else:
			false_positives += 1
	false_negatives = len(true_segments) - sum(matched)
	if true_positives == 0:
		return 0.0
	precision = float(true_positives) / (true_positives + false_positives)
	recall = float(true_positives) / (true_positives + false_negatives)
	return 2.0 * precision * recall / (precision + recall) * 100.0


def frame_accuracy(predicted, ground_truth):
	_check_lengths(predicted, ground_truth)
	if len(ground_truth) == 0:
		raise SegmentationError("frame accuracy of empty label sequences")
	return 100.0 * sum(1 for p, g in zip(predicted, ground_truth) if p == g) / len(ground_truth)


def score_all(predicted, ground_truth):
	"""OrderedDict over METRIC_NAMES."""
	scores = collections.OrderedDict()
	scores["edit"] = edit_score(predicted, ground_truth)
	for tau, name in zip(F1_THRESHOLDS, METRIC_NAMES[1:4]):
		scores[name] = f1_at(predicted, ground_truth, tau)
	scores["accuracy"] = frame_accuracy(predicted, ground_truth)
	return scores


def mean_scores(score_rows):
	"""Metric-wise mean of score dictionaries."""
	score_rows = list(score_rows)
	if not score_rows:
		return collections.OrderedDict((name, float("nan")) for name in METRIC_NAMES)
	return collections.OrderedDict((name, float(numpy.mean([row[name] for row in score_rows]))) for name in METRIC_NAMES)
