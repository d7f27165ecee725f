# -*- coding: utf-8 -*-

import os

import numpy
import pytest

from actgram.grammar.grammarfile import read_grammar
from actgram.induction.corpus import Corpus
from actgram.induction.kari import induce
from actgram.parsing.probmatrix import FrameProbMatrix


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")

COFFEE_SEQUENCES = [
	("take_cup", "pour_coffee", "pour_milk"),
	("pour_coffee", "spoon_sugar", "pour_milk"),
	("take_cup", "pour_coffee", "pour_milk", "spoon_sugar", "stir_coffee"),
	("pour_coffee", "spoon_sugar", "stir_coffee"),
]

TOY_TERMINALS = ["x{0}".format(number) for number in range(1, 8)]


def data_path(filename):
	return os.path.join(DATA_DIR, filename)


def random_prob_matrix(rng, classes, n_frames, concentration=1.0):
	return FrameProbMatrix(classes, rng.dirichlet(numpy.full(len(classes), concentration), size=n_frames))


@pytest.fixture
def data_dir():
	return DATA_DIR


@pytest.fixture
def toy_grammar():
	return read_grammar(data_path("toy.pcfg"))


@pytest.fixture
def uniform_toy_probs():
	return FrameProbMatrix.uniform(TOY_TERMINALS, 3)


@pytest.fixture
def coffee_corpus():
	return Corpus(COFFEE_SEQUENCES, activity="make coffee")


@pytest.fixture
def coffee_grammar(coffee_corpus):
	return induce(coffee_corpus, 1)


@pytest.fixture
def rng():
	return numpy.random.default_rng(12345)


@pytest.fixture
def make_probs():
	return random_prob_matrix
