# -*- coding: utf-8 -*-

import pytest

from actgram.errors import EvaluationError
from actgram.evaluation.refinement import (
	ParserOptions, Video, make_refinement_fixtures, parse_video, refine_dataset, refine_video,
)
from actgram.parsing.bep import BreadthFirstEarleyParser
from actgram.parsing.probmatrix import FrameProbMatrix
from actgram.segmentation.metrics import METRIC_NAMES


EXACT = ParserOptions(n_queue=None)


def test_refine_video(toy_grammar):
	probs = FrameProbMatrix.one_hot(["x1", "x1", "x5", "x6", "x6"], classes=["x{0}".format(number) for number in range(1, 8)])
	sequence, labels = refine_video(probs, toy_grammar, EXACT)
	assert sequence == ("x1", "x5", "x6")
	assert labels == ["x1", "x1", "x5", "x6", "x6"]


def test_parse_video_with_a_shared_parser(coffee_grammar):
	options = ParserOptions(n_queue=None, stride=4)
	parser = BreadthFirstEarleyParser(coffee_grammar, n_queue=None, trace=True)
	for video in make_refinement_fixtures(coffee_grammar, 3, seed=5, noise=0.0, segment_length=(8, 12)):
		result, labels = parse_video(video.probs, coffee_grammar, options, parser=parser)
		assert result.trace
		assert (result.best_sequence, labels) == refine_video(video.probs, coffee_grammar, options)


def test_one_hot_videos_are_reproduced(coffee_grammar):
	videos = make_refinement_fixtures(coffee_grammar, 8, seed=0, noise=0.0)
	report = refine_dataset(videos, coffee_grammar, EXACT)
	assert report.n_failed == 0
	for video, refined in zip(videos, report.videos):
		assert refined.labels == video.labels
		for name in METRIC_NAMES:
			assert refined.after[name] == pytest.approx(100.0)
	assert report.mean_after()["edit"] == pytest.approx(100.0)


def test_strided_refinement(coffee_grammar):
	video = make_refinement_fixtures(coffee_grammar, 1, seed=3, noise=0.0, segment_length=(8, 12))[0]
	sequence, labels = refine_video(video.probs, coffee_grammar, ParserOptions(n_queue=None, stride=4))
	assert len(labels) == len(video.labels)
	assert sequence == tuple(label for index, label in enumerate(video.labels) if index == 0 or video.labels[index - 1] != label)


def test_parse_failures_keep_the_frame_argmax(coffee_grammar, toy_grammar):
	videos = make_refinement_fixtures(coffee_grammar, 3, seed=1, noise=0.1)
	report = refine_dataset(videos, toy_grammar)
	assert report.n_failed == 3
	for video, refined in zip(videos, report.videos):
		assert refined.failed
		assert refined.sequence == ()
		assert refined.labels == video.probs.argmax_labels()
		assert refined.after == refined.before
	assert "videos: 3 (3 parse failures)" in report.summary()


def test_report_csv(coffee_grammar):
	videos = make_refinement_fixtures(coffee_grammar, 2, seed=2, noise=0.1)
	videos.append(Video("unlabelled", videos[0].probs, None))
	report = refine_dataset(videos, coffee_grammar)
	lines = report.to_csv().splitlines()
	assert lines[0] == "# n_queue = 20"
	header = lines[5].split(",")
	assert header[:3] == ["video", "failed", "sequence"]
	assert header[3:] == ["before_" + name for name in METRIC_NAMES] + ["after_" + name for name in METRIC_NAMES]
	assert lines[8].startswith("unlabelled,0,")
	assert lines[8].endswith("," * len(METRIC_NAMES) * 2)
	assert lines[9].startswith("mean,0,,")
	assert len(report.scored) == 2


def test_fixture_validation(coffee_grammar):
	with pytest.raises(EvaluationError):
		make_refinement_fixtures(coffee_grammar, 2, noise=0.5)
	video = make_refinement_fixtures(coffee_grammar, 1, noise=0.0)[0]
	with pytest.raises(EvaluationError):
		refine_dataset([Video("short", video.probs, video.labels[:-1])], coffee_grammar)


def test_fixtures_are_deterministic(coffee_grammar):
	first = make_refinement_fixtures(coffee_grammar, 4, seed=5, noise=0.2, flip_prob=0.3)
	second = make_refinement_fixtures(coffee_grammar, 4, seed=5, noise=0.2, flip_prob=0.3)
	for video, other in zip(first, second):
		assert video.labels == other.labels
		assert video.probs == other.probs


@pytest.mark.slow
def test_noisy_refinement_keeps_the_edit_score(coffee_grammar):
	videos = make_refinement_fixtures(coffee_grammar, 50, seed=1, noise=0.2)
	report = refine_dataset(videos, coffee_grammar)
	kept = sum(1 for video in report.videos if video.after["edit"] >= video.before["edit"])
	assert kept >= 40


@pytest.mark.slow
def test_depth_policy_beats_probability_policy(coffee_grammar):
	videos = make_refinement_fixtures(coffee_grammar, 50, seed=4, noise=0.3, flip_prob=0.2)
	depth = refine_dataset(videos, coffee_grammar, ParserOptions(n_queue=20, policy="depth"))
	probability = refine_dataset(videos, coffee_grammar, ParserOptions(n_queue=20, policy="probability"))
	assert depth.mean_after()["edit"] >= probability.mean_after()["edit"]
