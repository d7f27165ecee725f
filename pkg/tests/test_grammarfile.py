# -*- coding: utf-8 -*-

import os

import pytest

from actgram.errors import GrammarError, GrammarSyntaxError
from actgram.grammar.grammar import Grammar, And, Or, Alternative, RecursiveProb, validate_grammar
from actgram.grammar.grammarfile import load_grammar, save_grammar, read_grammar


COFFEE_APPENDIX = """
%start S
S -> 'SIL' V^L V^M V^R 'SIL'
V^L -> V^L_1
@recursive first_escape=0.5455 avg_len=1.0
V^L_1 -> 'take cup' V^L_1 [0.4545] | ε [0.5455]
V^M -> 'pour coffee' [1.0]
V^R -> V^R_1
@recursive first_escape=0.0 avg_len=1.5
V^R_1 -> 'pour milk' V^R_1 [0.5] | 'spoon sugar' V^R_1 [0.5] | ε
"""


def test_read_toy_grammar(data_dir):
	grammar = read_grammar(os.path.join(data_dir, "toy.pcfg"))
	assert grammar.rules["A2"] == Or([Alternative(["A3", "A4"], 0.5), Alternative([], 0.5)])
	assert grammar.rules["S"] == And(["A", "B", "C"])


def test_quoted_terminals_with_spaces():
	grammar = load_grammar(COFFEE_APPENDIX)
	assert "take cup" in grammar.terminals
	assert "SIL" in grammar.terminals
	spec = grammar.rules["V^L_1"].recursive
	assert spec.first_step == (0.4545,)
	assert spec.first_escape == 0.5455
	assert [alternative.symbols for alternative in grammar.rules["V^R_1"].alternatives] == [
		("pour milk", "V^R_1"), ("spoon sugar", "V^R_1"), (),
	]
	assert validate_grammar(grammar).ok


def test_round_trip(toy_grammar, coffee_grammar):
	assert load_grammar(save_grammar(toy_grammar)) == toy_grammar
	assert load_grammar(save_grammar(coffee_grammar)) == coffee_grammar
	assert save_grammar(load_grammar(save_grammar(coffee_grammar))) == save_grammar(coffee_grammar)


def test_round_trip_keeps_recursive_settings():
	spec = RecursiveProb([1.0, 0.0], 0.0, 2.0, follow=[0.75, 0.25], forbid_repeat=False)
	grammar = Grammar({"S": Or([Alternative(["a", "S"], spec), Alternative(["b", "S"], spec), Alternative([], spec)])}, "S")
	text = save_grammar(grammar)
	assert "repeat=allow" in text
	assert "follow=0.75,0.25" in text
	assert load_grammar(text) == grammar


def test_renormalises_small_deviations():
	grammar = load_grammar("S -> 'a' [0.5000001] | 'b' [0.5]\n")
	probs = [alternative.prob.p for alternative in grammar.rules["S"].alternatives]
	assert sum(probs) == pytest.approx(1.0, abs=1e-12)


def test_keeps_large_deviations_for_validation():
	grammar = load_grammar("S -> 'a' [0.6] | 'b' [0.6]\n")
	assert not validate_grammar(grammar).ok


@pytest.mark.parametrize("text, line, column", [
	("S -> 'a' [0.5] | 'b'\n", 1, 1),
	("S -> A\n", 1, 6),
	("\nS 'a'\n", 2, 1),
	("S -> 'a'\nS -> 'b'\n", 2, 1),
	("@recursive avg_len=1.0\nS -> 'a' S [1.0] | ε\n", 1, 1),
	("S -> 'a' ε\n", 1, 10),
	("%start\n", 1, 1),
	("@recursive first_escape=0.5 avg_len=1.0\n", 1, 1),
])
def test_syntax_errors_carry_location(text, line, column):
	with pytest.raises(GrammarSyntaxError) as error:
		load_grammar(text)
	assert error.value.line == line
	assert error.value.column == column
	assert "line {0}, column {1}".format(line, column) in str(error.value)


def test_read_grammar_names_file(tmp_path):
	filename = tmp_path / "broken.pcfg"
	filename.write_text("S -> A\n", encoding="utf-8")
	with pytest.raises(GrammarSyntaxError) as error:
		read_grammar(str(filename))
	assert str(filename) in str(error.value)
	assert error.value.line == 1


def test_unwritable_variable_name():
	grammar = Grammar({"bad name": And(["a"])}, "bad name")
	with pytest.raises(GrammarError):
		save_grammar(grammar)


def test_declared_bare_terminals():
	grammar = load_grammar("%terminals a b\nS -> a b\n")
	assert grammar.terminals == frozenset(["a", "b"])
	assert grammar.rules["S"] == And(["a", "b"])
