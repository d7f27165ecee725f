# -*- coding: utf-8 -*-

import math

import numpy
import pytest
from hypothesis import given, strategies as st

from actgram.errors import FileFormatError, ProbabilityError
from actgram.parsing.logspace import NEG_INF, log_sum, safe_log
from actgram.parsing.probmatrix import FrameProbMatrix, load_prob_matrix, read_prob_matrix


@given(st.floats(min_value=-700.0, max_value=0.0), st.floats(min_value=-700.0, max_value=0.0))
def test_log_sum_matches_direct_sum(a, b):
	assert log_sum(a, b) == pytest.approx(math.log(math.exp(a) + math.exp(b)), abs=1e-9)


def test_log_sum_neutral_element():
	assert log_sum(NEG_INF, NEG_INF) == NEG_INF
	assert log_sum(NEG_INF, -2.5) == -2.5
	assert log_sum(-1000.0, -1000.0) == pytest.approx(-1000.0 + math.log(2.0))


def test_safe_log():
	assert safe_log(0.0) == NEG_INF
	assert safe_log(1.0) == 0.0
	values = safe_log(numpy.array([0.0, 1.0]))
	assert values[0] == NEG_INF and values[1] == 0.0


def test_validation():
	with pytest.raises(ProbabilityError):
		FrameProbMatrix(["a", "b"], [[0.5, 0.6]])
	with pytest.raises(ProbabilityError):
		FrameProbMatrix(["a", "a"], [[0.5, 0.5]])
	with pytest.raises(ProbabilityError):
		FrameProbMatrix(["a", "b"], [[1.2, -0.2]])
	with pytest.raises(ProbabilityError):
		FrameProbMatrix(["a", "b", "c"], [[0.5, 0.5]])


def test_columns_and_argmax():
	probs = FrameProbMatrix(["a", "b"], [[0.9, 0.1], [0.2, 0.8], [0.0, 1.0]])
	assert probs.n_frames == 3
	assert list(probs.column("b")) == [0.1, 0.8, 1.0]
	assert list(probs.column("unknown")) == [0.0, 0.0, 0.0]
	assert probs.log_column("a")[2] == NEG_INF
	assert probs.argmax_labels() == ["a", "b", "b"]


def test_one_hot_and_uniform():
	probs = FrameProbMatrix.one_hot(["b", "a", "b"], classes=["a", "b", "c"])
	assert probs.argmax_labels() == ["b", "a", "b"]
	assert numpy.array_equal(probs.probs.sum(axis=1), numpy.ones(3))
	with pytest.raises(ProbabilityError):
		FrameProbMatrix.one_hot(["d"], classes=["a"])
	uniform = FrameProbMatrix.uniform(["a", "b", "c", "d"], 2)
	assert numpy.allclose(uniform.probs, 0.25)


def test_csv_round_trip(rng, make_probs):
	probs = make_probs(rng, ["a", "b", "c"], 5)
	assert load_prob_matrix(probs.to_csv()) == probs


def test_read_uniform_file(data_dir):
	probs = read_prob_matrix(data_dir + "/uniform.csv")
	assert probs.classes == tuple("x{0}".format(number) for number in range(1, 8))
	assert probs.n_frames == 3


@pytest.mark.parametrize("text", [
	"a,b\n",
	"a,b\n0.5\n",
	"a,b\n0.5,zero\n",
	"a,b\n0.5,0.6\n",
])
def test_malformed_csv(text):
	with pytest.raises(FileFormatError):
		load_prob_matrix(text)


def test_errors_name_the_physical_line():
	with pytest.raises(FileFormatError, match="video.csv:5: expected 2 values, got 1"):
		load_prob_matrix("a,b\n0.5,0.5\n\n   \n0.5\n", source="video.csv")
	with pytest.raises(FileFormatError, match="video.csv:4: non-numeric probability"):
		load_prob_matrix("\na,b\n\nzero,1.0\n", source="video.csv")
