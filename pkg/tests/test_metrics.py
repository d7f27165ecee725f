# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, strategies as st

from actgram.errors import SegmentationError
from actgram.segmentation.metrics import (
	METRIC_NAMES, edit_score, f1_at, frame_accuracy, levenshtein, mean_scores, score_all, segments,
)


labels = st.lists(st.sampled_from("ABC"), min_size=1, max_size=30)


def test_segments():
	assert [(segment.label, segment.start, segment.stop) for segment in segments("AABAA")] == [("A", 0, 2), ("B", 2, 3), ("A", 3, 5)]


def test_levenshtein():
	assert levenshtein("kitten", "sitting") == 3
	assert levenshtein("", "abc") == 3


def test_edit_score():
	assert edit_score(["A", "A", "B"], ["A", "A", "A"]) == pytest.approx(50.0)
	assert edit_score(["A", "B"], ["B", "A"]) == pytest.approx(0.0)
	assert edit_score(["A", "A", "B"], ["A", "B", "B"]) == pytest.approx(100.0)
	with pytest.raises(SegmentationError):
		edit_score([], ["A"])


def test_iou_threshold():
	predicted = ["A"] * 10
	ground_truth = ["B"] * 5 + ["A"] * 5
	assert f1_at(predicted, ground_truth, 0.5) == pytest.approx(200.0 / 3.0)
	assert f1_at(predicted, ground_truth, 0.51) == 0.0


def test_ground_truth_segment_matched_once():
	predicted = ["A", "B", "A", "A"]
	ground_truth = ["A", "A", "A", "A"]
	# both predicted A segments overlap the single true A segment
	assert f1_at(predicted, ground_truth, 0.1) == pytest.approx(2.0 * (1.0 / 3.0) * 1.0 / (1.0 / 3.0 + 1.0) * 100.0)


def test_frame_accuracy():
	assert frame_accuracy(["A", "B", "B", "A"], ["A", "B", "A", "A"]) == pytest.approx(75.0)
	with pytest.raises(SegmentationError):
		frame_accuracy(["A"], ["A", "B"])
	with pytest.raises(SegmentationError):
		frame_accuracy([], [])


@given(labels)
def test_identical_labels_score_100(frames):
	scores = score_all(frames, frames)
	assert list(scores.keys()) == list(METRIC_NAMES)
	for value in scores.values():
		assert value == pytest.approx(100.0)


@given(labels, st.integers(min_value=0, max_value=2 ** 16), st.integers(min_value=2, max_value=4))
def test_bounds_and_temporal_scaling(frames, seed, factor):
	ground_truth = [frames[(index * 7 + seed) % len(frames)] for index in range(len(frames))]
	scores = score_all(frames, ground_truth)
	for value in scores.values():
		assert 0.0 <= value <= 100.0
	scaled = score_all([label for label in frames for repeat in range(factor)],
	                   [label for label in ground_truth for repeat in range(factor)])
	for name in ("edit", "f1@10", "f1@25", "f1@50"):
		assert scaled[name] == pytest.approx(scores[name])


def test_mean_scores():
	rows = [score_all("AAB", "AAB"), score_all("AAB", "AAA")]
	means = mean_scores(rows)
	assert means["edit"] == pytest.approx(75.0)
	assert means["accuracy"] == pytest.approx((100.0 + 200.0 / 3.0) / 2.0)
