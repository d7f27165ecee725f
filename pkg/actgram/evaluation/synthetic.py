# -*- coding: utf-8 -*-

"""
Random activity grammars with temporal dependencies between actions.

All grammars of one configuration share the terminal set t01, t02, ... A
grammar is a sequence of variable blocks S -> V_a K_b ...: n_key blocks K hold a
single required key terminal, the others a short ordered run of terminals and
are optional with probability optional_prob. Adjacent blocks are turned into an
order-free pair P_k -> V_a V_b | V_b V_a with probability independent_prob.
Type I grammars assign every terminal to one block, type II grammars draw the
terminals of every block independently.
"""

import logging
log = logging.getLogger(__name__)

import collections

import numpy

from actgram.errors import EvaluationError
from actgram.grammar.grammar import Grammar, And, Or, Alternative


GRAMMAR_TYPES = ("I", "II")
MAX_BLOCK_TERMINALS = 3


class SynthConfig(collections.namedtuple("SynthConfig", [
		"n_grammars", "n_variables", "n_terminals", "grammar_type", "n_key_terminals", "seed",
		"seq_per_grammar", "seen_fraction", "optional_prob", "independent_prob", "random_variables", "max_len"])):
	__slots__ = ()

	def __new__(cls, n_grammars=20, n_variables=10, n_terminals=10, grammar_type="I", n_key_terminals=2, seed=0,
	            seq_per_grammar=50, seen_fraction=0.5, optional_prob=0.5, independent_prob=0.3, random_variables=False, max_len=50):
		if grammar_type not in GRAMMAR_TYPES:
			raise EvaluationError("grammar type must be one of {0}, got {1}".format(", ".join(GRAMMAR_TYPES), grammar_type))
		if not n_terminals >= n_key_terminals >= 1:
			raise EvaluationError("need n_terminals >= n_key_terminals >= 1")
		if n_variables <= n_key_terminals:
			raise EvaluationError("need more variables than key terminals")
		if not 0.0 < seen_fraction < 1.0:
			raise EvaluationError("seen fraction must lie in (0, 1), got {0}".format(seen_fraction))
		if n_grammars < 1 or seq_per_grammar < 2 or max_len < 1:
			raise EvaluationError("grammar, sequence and length counts must be positive")
		if not (0.0 <= optional_prob < 1.0 and 0.0 <= independent_prob <= 1.0):
			raise EvaluationError("optional and independent probabilities must lie in [0, 1)")
		return super(SynthConfig, cls).__new__(cls, n_grammars, n_variables, n_terminals, grammar_type, n_key_terminals, seed,
		                                       seq_per_grammar, seen_fraction, optional_prob, independent_prob, random_variables, max_len)

	def header(self):
		return collections.OrderedDict((field, getattr(self, field)) for field in self._fields)


def terminal_names(n_terminals):
	width = len(str(n_terminals))
	return ["t{0:0{1}d}".format(number, max(2, width)) for number in range(1, n_terminals + 1)]


def _type_one_blocks(terminals, n_blocks, rng):
	"""Random partition of terminals into at most n_blocks non-empty runs."""
	n_blocks = min(n_blocks, len(terminals))
	if n_blocks == 0:
		return []
	shuffled = [terminals[index] for index in rng.permutation(len(terminals))]
	cuts = sorted(rng.choice(numpy.arange(1, len(shuffled)), size=n_blocks - 1, replace=False)) if n_blocks > 1 else []
	return [tuple(block) for block in numpy.split(numpy.array(shuffled, dtype=object), cuts)]


def _bounded_block(terminals, size, firsts, lasts, rng):
	"""size distinct terminals starting outside lasts and ending outside firsts, or None."""
	if size == 1:
		free = [terminal for terminal in terminals if terminal not in firsts and terminal not in lasts]
		if free:
			return (free[int(rng.integers(len(free)))],)
		size = 2
	pairs = [(first, last) for first in terminals if first not in lasts for last in terminals if last not in firsts and last != first]
	if not pairs:
		return None
	first, last = pairs[int(rng.integers(len(pairs)))]
	inner = [terminal for terminal in terminals if terminal != first and terminal != last]
	n_inner = min(size - 2, len(inner))
	middle = [inner[index] for index in rng.choice(len(inner), size=n_inner, replace=False)] if n_inner else []
	return tuple([first] + middle + [last])


def _type_two_blocks(terminals, n_blocks, rng):
	"""
	n_blocks runs of up to MAX_BLOCK_TERMINALS distinct terminals drawn independently.

	The first terminal of a block is never the last terminal of another block,
	so no derivation repeats an action across a block boundary, whatever the
	block order, optional blocks and order-free pairs make of it. This holds
	as long as there are no more blocks than terminals.
	"""
	if not terminals:
		return []
	blocks = []
	firsts, lasts = set(), set()
	for block in range(n_blocks):
		size = int(rng.integers(1, min(MAX_BLOCK_TERMINALS, len(terminals)) + 1))
		symbols = _bounded_block(terminals, size, firsts, lasts, rng)
		if symbols is None:
			log.debug("Block {0} shares a boundary terminal with an earlier block.".format(block + 1))
			symbols = tuple(terminals[index] for index in rng.choice(len(terminals), size=size, replace=False))
		blocks.append(symbols)
		firsts.add(symbols[0])
		lasts.add(symbols[-1])
	return blocks


def generate_synthetic_grammar(cfg, index, rng):
	"""Grammar number index of cfg, drawn with rng."""
	terminals = terminal_names(cfg.n_terminals)
	n_variables = cfg.n_variables
	if cfg.random_variables:
		n_variables = int(rng.integers(cfg.n_key_terminals + 1, cfg.n_variables + 1))

	keys = [terminals[position] for position in sorted(rng.choice(len(terminals), size=cfg.n_key_terminals, replace=False))]
	others = [terminal for terminal in terminals if terminal not in keys]
	n_other_blocks = n_variables - cfg.n_key_terminals
	if cfg.grammar_type == "I":
		other_blocks = _type_one_blocks(others, n_other_blocks, rng)
	else:
		other_blocks = _type_two_blocks(others, n_other_blocks, rng)

	rules = collections.OrderedDict()
	blocks = []
	for key in keys:
		blocks.append(("key", (key,)))
	for block in other_blocks:
		blocks.append(("other", block))
	order = rng.permutation(len(blocks))

	variables = []
	for number, position in enumerate(order, start=1):
		kind, symbols = blocks[position]
		variable = ("K_{0}" if kind == "key" else "V_{0}").format(number)
		if kind == "other" and rng.random() < cfg.optional_prob:
			rules[variable] = Or([Alternative(symbols, 0.5), Alternative([], 0.5)])
		else:
			rules[variable] = And(symbols)
		variables.append(variable)

	body = []
	position = 0
	n_pairs = 0
	while position < len(variables):
		if position + 1 < len(variables) and rng.random() < cfg.independent_prob:
			n_pairs += 1
			pair = "P_{0}".format(n_pairs)
			first, second = variables[position], variables[position + 1]
			rules[pair] = Or([Alternative([first, second], 0.5), Alternative([second, first], 0.5)])
			body.append(pair)
			position += 2
		else:
			body.append(variables[position])
			position += 1

	all_rules = collections.OrderedDict([("S", And(body))])
	all_rules.update(rules)
	log.debug("Synthetic grammar {0}: {1} blocks, {2} order-free pairs, keys {3}.".format(index, len(variables), n_pairs, ", ".join(keys)))
	return Grammar(all_rules, "S", terminals=terminals)


def key_terminals(grammar):
	"""Terminals of the key blocks K_n."""
	return sorted(body.symbols[0] for variable, body in grammar.rules.items() if variable.startswith("K_"))
