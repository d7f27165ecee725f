# -*- coding: utf-8 -*-

import numpy
import pytest

from actgram.errors import EvaluationError
from actgram.grammar.grammar import And, Or, validate_grammar
from actgram.grammar.sampling import sample_sequences
from actgram.evaluation.synthetic import SynthConfig, generate_synthetic_grammar, key_terminals, terminal_names
from actgram.parsing.bep import BreadthFirstEarleyParser


def block_terminals(grammar):
	"""Terminals of every V_n block."""
	blocks = {}
	for variable, body in grammar.rules.items():
		if not variable.startswith("V_"):
			continue
		symbols = body.symbols if isinstance(body, And) else body.alternatives[0].symbols
		blocks[variable] = symbols
	return blocks


def test_terminal_names():
	assert terminal_names(3) == ["t01", "t02", "t03"]
	assert terminal_names(120)[0] == "t001"


@pytest.mark.parametrize("n_variables", [5, 10, 20])
def test_type_one_assigns_every_terminal_once(n_variables):
	cfg = SynthConfig(n_variables=n_variables, n_terminals=20 if n_variables == 20 else 10)
	for index in range(5):
		grammar = generate_synthetic_grammar(cfg, index, numpy.random.default_rng(index))
		assert grammar.terminals == frozenset(terminal_names(cfg.n_terminals))
		assert validate_grammar(grammar).ok
		keys = key_terminals(grammar)
		assert len(keys) == cfg.n_key_terminals
		assigned = [terminal for symbols in block_terminals(grammar).values() for terminal in symbols] + keys
		assert sorted(assigned) == sorted(terminal_names(cfg.n_terminals))


def test_type_two_blocks():
	cfg = SynthConfig(grammar_type="II")
	grammar = generate_synthetic_grammar(cfg, 0, numpy.random.default_rng(7))
	assert validate_grammar(grammar).ok
	blocks = block_terminals(grammar)
	assert len(blocks) == cfg.n_variables - cfg.n_key_terminals
	for symbols in blocks.values():
		assert 1 <= len(symbols) <= 3
		assert not set(symbols) & set(key_terminals(grammar))


@pytest.mark.parametrize("cfg", [
	SynthConfig(grammar_type="II"),
	SynthConfig(grammar_type="II", n_variables=4, n_terminals=4, n_key_terminals=1, optional_prob=0.0),
])
@pytest.mark.parametrize("seed", range(10))
def test_type_two_block_boundaries_never_repeat(cfg, seed):
	grammar = generate_synthetic_grammar(cfg, seed, numpy.random.default_rng(seed))
	blocks = list(block_terminals(grammar).values())
	for number, block in enumerate(blocks):
		for other in blocks[:number] + blocks[number + 1:]:
			assert block[-1] != other[0]
	sequences = sample_sequences(grammar, numpy.random.default_rng(seed), 50, cfg.max_len, distinct_adjacent=True)
	assert len(sequences) == 50
	for sequence in sequences:
		assert all(a != b for a, b in zip(sequence, sequence[1:]))


@pytest.mark.parametrize("grammar_type", ["I", "II"])
def test_same_seed_same_grammar(grammar_type):
	cfg = SynthConfig(grammar_type=grammar_type)
	first = generate_synthetic_grammar(cfg, 3, numpy.random.default_rng(42))
	second = generate_synthetic_grammar(cfg, 3, numpy.random.default_rng(42))
	assert first == second


def test_samples_contain_every_key_terminal():
	cfg = SynthConfig(independent_prob=0.5)
	grammar = generate_synthetic_grammar(cfg, 0, numpy.random.default_rng(3))
	keys = key_terminals(grammar)
	parser = BreadthFirstEarleyParser(grammar, n_queue=None)
	for sequence in sample_sequences(grammar, numpy.random.default_rng(4), 100, cfg.max_len, distinct_adjacent=True):
		assert set(keys) <= set(sequence)
		assert parser.accepts(sequence)


def test_order_free_pairs():
	grammar = generate_synthetic_grammar(SynthConfig(independent_prob=1.0), 0, numpy.random.default_rng(5))
	pairs = [body for variable, body in grammar.rules.items() if variable.startswith("P_")]
	assert len(pairs) == 5
	for body in pairs:
		first, second = body.alternatives
		assert first.symbols == tuple(reversed(second.symbols))


def test_optional_blocks():
	grammar = generate_synthetic_grammar(SynthConfig(optional_prob=0.0), 0, numpy.random.default_rng(5))
	assert not any(isinstance(body, Or) for variable, body in grammar.rules.items() if variable.startswith("V_"))


@pytest.mark.parametrize("kwargs", [
	{"grammar_type": "III"},
	{"n_key_terminals": 0},
	{"n_terminals": 3, "n_key_terminals": 4},
	{"n_variables": 2, "n_key_terminals": 2},
	{"seen_fraction": 1.0},
	{"seq_per_grammar": 1},
	{"optional_prob": 1.0},
])
def test_invalid_configurations(kwargs):
	with pytest.raises(EvaluationError):
		SynthConfig(**kwargs)


def test_config_header():
	header = SynthConfig(n_grammars=4).header()
	assert list(header.keys())[:3] == ["n_grammars", "n_variables", "n_terminals"]
	assert header["n_grammars"] == 4
