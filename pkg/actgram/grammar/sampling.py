# -*- coding: utf-8 -*-

"""
Top-down sampling of action sequences from a grammar.
"""

import logging
log = logging.getLogger(__name__)

import numpy

from actgram.errors import GrammarError
from actgram.grammar.grammar import Or


MAX_ATTEMPTS = 1000


def make_rng(seed):
	"""numpy Generator from a seed, SeedSequence or an existing Generator."""
	if isinstance(seed, numpy.random.Generator):
		return seed
	return numpy.random.default_rng(seed)


def recursion_context(grammar, variable, context):
	"""
	(n_rec, q) of an expansion of variable below the derivation context.

	context is a tuple of (variable, (n_rec, alternative)) pairs of the recursive
	group expansions the derivation is currently inside of.
	"""
	body = grammar.rules[variable]
	if not isinstance(body, Or) or body.recursive is None:
		return 1, None
	for entry_variable, (n_rec, alternative) in context:
		if entry_variable == variable:
			return n_rec + 1, alternative
	return 1, None


def child_context(grammar, variable, context, n_rec, alternative):
	body = grammar.rules[variable]
	if not isinstance(body, Or) or body.recursive is None:
		return context
	return tuple(entry for entry in context if entry[0] != variable) + ((variable, (n_rec, alternative)),)


class _Rejected(Exception):
	pass


def _sample_once(grammar, rng, max_len, distinct_adjacent):
	sequence = []
	stack = [(grammar.start, ())]
	# bounds expansions without output, e.g. chains of ε choices
	budget = 100 * (max_len + 1) + 10 * len(grammar.rules)
	while stack:
		budget -= 1
		if budget < 0:
			raise _Rejected()
		symbol, context = stack.pop()
		if not grammar.is_variable(symbol):
			if distinct_adjacent and sequence and sequence[-1] == symbol:
				raise _Rejected()
			sequence.append(symbol)
			if len(sequence) > max_len:
				raise _Rejected()
			continue
		n_rec, q = recursion_context(grammar, symbol, context)
		expansions = grammar.alternatives_at(symbol, n_rec, q)
		if not expansions:
			raise _Rejected()
		probs = numpy.array([prob for index, symbols, prob in expansions])
		position = int(numpy.searchsorted(numpy.cumsum(probs), rng.random() * probs.sum(), side="right"))
		index, symbols, prob = expansions[min(position, len(expansions) - 1)]
		next_context = child_context(grammar, symbol, context, n_rec, index)
		stack.extend((child, next_context) for child in reversed(symbols))
	if not sequence:
		raise _Rejected()
	return tuple(sequence)


def sample_sequence(grammar, seed, max_len, distinct_adjacent=False, max_attempts=MAX_ATTEMPTS):
	"""
	Sample one terminal sequence by expanding rules top-down.

	Derivations longer than max_len (or with repeated adjacent actions if
	distinct_adjacent is set) are rejected and sampled again.
	"""
	if max_len < 1:
		raise GrammarError("max_len must be positive, got {0}".format(max_len))
	rng = make_rng(seed)
	for attempt in range(max_attempts):
		try:
			return _sample_once(grammar, rng, max_len, distinct_adjacent)
		except _Rejected:
			continue
	raise GrammarError("grammar cannot produce sequence within max_len {0} ({1} attempts)".format(max_len, max_attempts))


def sample_sequences(grammar, seed, n_sequences, max_len, distinct_adjacent=False):
	rng = make_rng(seed)
	return [sample_sequence(grammar, rng, max_len, distinct_adjacent=distinct_adjacent) for index in range(n_sequences)]
