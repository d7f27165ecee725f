# -*- coding: utf-8 -*-

import os

import pytest

from actgram.errors import InductionError
from actgram.grammar.grammar import validate_grammar
from actgram.induction.baselines import NGramConfig, induce_flat, induce_right_regular
from actgram.induction.corpus import Corpus, read_corpora
from actgram.parsing.bep import BreadthFirstEarleyParser


@pytest.fixture
def tea_corpus(data_dir):
	return read_corpora(os.path.join(data_dir, "two_activities.txt"))[1]


def test_flat_grammar(coffee_corpus):
	grammar = induce_flat([coffee_corpus])
	assert [alternative.symbols for alternative in grammar.rules["S"].alternatives] == [("V_1",)]
	assert [alternative.prob.p for alternative in grammar.rules["V_1"].alternatives] == pytest.approx([0.25] * 4)
	assert validate_grammar(grammar).ok
	parser = BreadthFirstEarleyParser(grammar)
	for sequence in coffee_corpus:
		assert parser.accepts(sequence)
	assert not parser.accepts(("take_cup", "pour_coffee", "spoon_sugar", "pour_milk", "stir_coffee"))


def test_flat_grammar_weights(coffee_corpus, tea_corpus):
	grammar = induce_flat([coffee_corpus, tea_corpus])
	assert [alternative.prob.p for alternative in grammar.rules["S"].alternatives] == pytest.approx([4.0 / 7.0, 3.0 / 7.0])
	tea = grammar.rules["V_2"].alternatives
	assert tea[0].symbols == ("take_cup", "add_teabag", "pour_water")
	assert [alternative.prob.p for alternative in tea] == pytest.approx([2.0 / 3.0, 1.0 / 3.0])
	unweighted = induce_flat([coffee_corpus, tea_corpus], weighted=False)
	assert [alternative.prob.p for alternative in unweighted.rules["S"].alternatives] == pytest.approx([0.5, 0.5])
	with pytest.raises(InductionError):
		induce_flat([])


def test_full_history_grammar(tea_corpus):
	grammar = induce_right_regular(tea_corpus)
	start = grammar.rules["S"].alternatives
	assert [alternative.symbols for alternative in start] == [("add_teabag", "H_1"), ("take_cup", "H_2")]
	assert [alternative.prob.p for alternative in start] == pytest.approx([1.0 / 3.0, 2.0 / 3.0])
	assert validate_grammar(grammar).ok
	parser = BreadthFirstEarleyParser(grammar)
	for sequence in tea_corpus:
		assert parser.accepts(sequence)
	assert not parser.accepts(("take_cup", "add_teabag", "pour_water", "spoon_sugar"))


def test_bigram_grammar(tea_corpus):
	grammar = induce_right_regular(tea_corpus, NGramConfig(order=1))
	parser = BreadthFirstEarleyParser(grammar)
	assert parser.accepts(("take_cup", "add_teabag", "pour_water", "spoon_sugar"))
	assert not parser.accepts(("pour_water", "take_cup"))


def test_smoothed_grammar(tea_corpus):
	grammar = induce_right_regular(tea_corpus, NGramConfig(order=1, smoothing=0.1))
	assert validate_grammar(grammar).ok
	for body in grammar.rules.values():
		assert len(body.alternatives) == len(tea_corpus.alphabet) + 1
	assert BreadthFirstEarleyParser(grammar).accepts(("spoon_sugar", "take_cup"))


def test_ngram_config():
	assert NGramConfig() == (None, 0.0)
	with pytest.raises(InductionError):
		NGramConfig(order=0)
	with pytest.raises(InductionError):
		NGramConfig(order=2, smoothing=1.0)
	with pytest.raises(InductionError):
		induce_right_regular(Corpus([]))
