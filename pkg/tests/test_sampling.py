# -*- coding: utf-8 -*-

import collections

import numpy
import pytest
from scipy import stats

from actgram.errors import GrammarError
from actgram.grammar.grammar import Grammar, And, Or, Alternative, RecursiveProb
from actgram.grammar.sampling import sample_sequence, sample_sequences, recursion_context, child_context


def _group_grammar(avg_len):
	spec = RecursiveProb([0.5, 0.5], 0.0, avg_len)
	return Grammar({"G": Or([Alternative(["a", "G"], spec), Alternative(["b", "G"], spec), Alternative([], spec)])}, "G")


def test_sampling_is_deterministic(toy_grammar):
	assert sample_sequences(toy_grammar, 7, 20, 10) == sample_sequences(toy_grammar, 7, 20, 10)
	assert sample_sequences(toy_grammar, 7, 20, 10) != sample_sequences(toy_grammar, 8, 20, 10)


def test_sampled_sequences_follow_the_grammar(toy_grammar):
	for sequence in sample_sequences(toy_grammar, 0, 200, 10):
		assert sequence[0] in ("x1", "x2")
		assert sequence[-2:] in (("x5", "x6"), ("x5", "x7"))


def test_toy_distribution_chi_square(toy_grammar):
	samples = sample_sequences(toy_grammar, 3, 4000, 10)
	counts = collections.Counter((sequence[0], sequence[-1]) for sequence in samples)
	outcomes = [("x1", "x6"), ("x1", "x7"), ("x2", "x6"), ("x2", "x7")]
	expected = numpy.array([0.7 * 0.7, 0.7 * 0.3, 0.3 * 0.7, 0.3 * 0.3]) * len(samples)
	observed = numpy.array([counts[outcome] for outcome in outcomes])
	assert observed.sum() == len(samples)
	assert stats.chisquare(observed, expected).pvalue > 1e-3


@pytest.mark.parametrize("avg_len", [1.5, 3.0, 5.0])
def test_mean_group_length(avg_len):
	# the first action is certain, every later one continues with probability 1 - 1/avg_len
	samples = sample_sequences(_group_grammar(avg_len), 11, 100000, 1000)
	mean_length = numpy.mean([len(sequence) for sequence in samples])
	assert abs((mean_length - 1.0) - (avg_len - 1.0)) <= 0.05 * (avg_len - 1.0)


def test_no_repeated_group_actions():
	for sequence in sample_sequences(_group_grammar(3.0), 5, 500, 1000):
		assert all(a != b for a, b in zip(sequence, sequence[1:]))


def test_rejection_of_long_sequences():
	grammar = Grammar({"S": And(["a", "b", "c"])}, "S")
	with pytest.raises(GrammarError):
		sample_sequence(grammar, 0, 2)
	with pytest.raises(GrammarError):
		sample_sequence(grammar, 0, 0)
	assert sample_sequence(grammar, 0, 3) == ("a", "b", "c")


def test_distinct_adjacent_rejection():
	grammar = Grammar({"S": Or([Alternative(["a", "a"], 0.5), Alternative(["a", "b"], 0.5)])}, "S")
	for sequence in sample_sequences(grammar, 2, 50, 5, distinct_adjacent=True):
		assert sequence == ("a", "b")


def test_recursion_context():
	grammar = _group_grammar(2.0)
	assert recursion_context(grammar, "G", ()) == (1, None)
	context = child_context(grammar, "G", (), 1, 0)
	assert context == (("G", (1, 0)),)
	assert recursion_context(grammar, "G", context) == (2, 0)
	assert recursion_context(grammar, "G", child_context(grammar, "G", context, 2, 1)) == (3, 1)
