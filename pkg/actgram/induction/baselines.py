# -*- coding: utf-8 -*-

"""
Baseline grammar inductions: the flat grammar over the training sequences and
the right-regular grammar over action histories. Rule probabilities are
relative training frequencies.
"""

import logging
log = logging.getLogger(__name__)

import collections

from actgram.errors import InductionError
from actgram.grammar.grammar import Grammar, Or, Alternative


START = "S"


class NGramConfig(collections.namedtuple("NGramConfig", ["order", "smoothing"])):
	"""order = None keys the variables by the full action history."""
	__slots__ = ()

	def __new__(cls, order=None, smoothing=0.0):
		if order is not None and order < 1:
			raise InductionError("history order must be positive, got {0}".format(order))
		if not 0.0 <= smoothing < 1.0:
			raise InductionError("smoothing must lie in [0, 1), got {0}".format(smoothing))
		return super(NGramConfig, cls).__new__(cls, order, float(smoothing))


def induce_flat(corpora, weighted=True):
	"""
	S -> V_1 | V_2 | ... with one variable per activity, V_i -> one alternative per
	distinct training sequence.
	"""
	corpora = list(corpora)
	if not corpora or not any(len(corpus) for corpus in corpora):
		raise InductionError("flat induction needs at least one non-empty corpus")
	corpora = [corpus for corpus in corpora if len(corpus)]

	rules = collections.OrderedDict()
	terminals = set()
	weights = [float(len(corpus)) if weighted else 1.0 for corpus in corpora]
	rules[START] = Or([Alternative(["V_{0}".format(number)], weight / sum(weights))
	                   for number, weight in enumerate(weights, start=1)])
	for number, corpus in enumerate(corpora, start=1):
		counts = collections.Counter(corpus.sequences)
		distinct = sorted(counts, key=lambda sequence: (-counts[sequence], sequence))
		rules["V_{0}".format(number)] = Or([Alternative(sequence, counts[sequence] / float(len(corpus))) for sequence in distinct])
		terminals.update(corpus.alphabet)
	log.info("Flat grammar over {0} distinct sequences of {1} activities.".format(
			sum(len(set(corpus.sequences)) for corpus in corpora), len(corpora)
	))
	return Grammar(rules, START, terminals=terminals)


def _history(history, order):
	return history if order is None else history[-order:]


def induce_right_regular(corpus, config=None):
	"""
	Right-regular grammar H -> c H' | ε, one variable per observed history.

	The history of a variable is the suffix of length config.order of the actions
	derived so far. Histories ending a training sequence get an ε alternative.
	With a finite order, config.smoothing spreads that much mass uniformly over
	all actions and ε.
	"""
	config = NGramConfig() if config is None else config
	if not len(corpus):
		raise InductionError("cannot induce a grammar from an empty corpus")
	if config.order is None and config.smoothing > 0.0:
		log.warning("Smoothing is ignored for full-history grammars.")
	smoothing = config.smoothing if config.order is not None else 0.0

	continuations = collections.defaultdict(collections.Counter)
	for sequence in corpus.sequences:
		for position in range(len(sequence) + 1):
			history = _history(sequence[:position], config.order)
			continuations[history][sequence[position] if position < len(sequence) else None] += 1

	alphabet = sorted(corpus.alphabet)
	names = {(): START}
	rules = collections.OrderedDict()
	queue = collections.deque([()])
	while queue:
		history = queue.popleft()
		counts = continuations.get(history, collections.Counter())
		total = float(sum(counts.values()))
		outcomes = alphabet + [None]
		probs = []
		for outcome in outcomes:
			observed = counts[outcome] / total if total else 0.0
			if total and smoothing:
				probs.append((1.0 - smoothing) * observed + smoothing / len(outcomes))
			elif total:
				probs.append(observed)
			else:
				probs.append(1.0 / len(outcomes))
		alternatives = []
		for outcome, prob in zip(outcomes, probs):
			if prob <= 0.0:
				continue
			if outcome is None:
				alternatives.append(Alternative([], prob))
				continue
			following = _history(history + (outcome,), config.order)
			if following not in names:
				names[following] = "H_{0}".format(len(names))
				queue.append(following)
			alternatives.append(Alternative([outcome, names[following]], prob))
		rules[names[history]] = Or(alternatives)

	log.info("Right-regular grammar with {0} history variables (order {1}).".format(len(rules), "full" if config.order is None else config.order))
	return Grammar(rules, START, terminals=corpus.alphabet)
