# -*- coding: utf-8 -*-

"""
Breadth-first Earley parsing of frame-wise class probabilities.

The parser searches for the action sequence a* that the grammar derives and
that best explains a probability matrix Y. Every state belongs to a set
Q(m, n, d): m counts the scanned actions, n distinguishes sets created by
different scans with the same m and d is the depth below the root state.
Predictions go to Q(m, n, d+1), completions to Q(m, n, d-1) and every scan
creates a new set Q(m+1, n', d). Sets are popped from a priority queue, by
depth (breadth-first) or by prefix probability (generalised Earley mode).

The grammar factor g of a scanned action is the product of the OR choices
taken since the previous scan. Prefix records hold the frame recursion of
p(F_1:t -> a) for every t and the prefix probability of a.
"""

import logging
log = logging.getLogger(__name__)

import collections
import heapq
import itertools
import math

import numpy

from actgram.errors import GrammarError, ParseError
from actgram.grammar.grammar import Or, eval_alternative_prob, validate_grammar
from actgram.grammar.sampling import recursion_context, child_context
from actgram.parsing.logspace import NEG_INF, log_sum, safe_log
from actgram.parsing.probmatrix import FrameProbMatrix


ROOT = "Γ"
POLICIES = ("depth", "probability")
POLICY_ALIASES = {"bep": "depth", "gep": "probability", "depth": "depth", "probability": "probability"}


class PrefixRecord(object):
	"""Frame recursion of an action prefix, shared by all states with the same derivation history."""

	__slots__ = ("prefix", "_parse_log", "prefix_logprob", "trans_logprob", "grammar_logprob", "parent")

	def __init__(self, prefix, parse_log, prefix_logprob, trans_logprob, grammar_logprob, parent=None):
		self.prefix = prefix
		self._parse_log = parse_log
		self.prefix_logprob = prefix_logprob
		self.trans_logprob = trans_logprob
		self.grammar_logprob = grammar_logprob
		self.parent = parent

	@classmethod
	def empty(cls, n_frames):
		return cls((), [NEG_INF] * n_frames, 0.0, 0.0, 0.0)

	@property
	def parse_log(self):
		"""log p(F_1:t -> prefix) for t = 1..T."""
		return numpy.array(self._parse_log)

	@property
	def full_logprob(self):
		return self._parse_log[-1]

	def g_values(self):
		values = []
		record = self
		while record is not None and record.prefix:
			values.append(math.exp(record.trans_logprob))
			record = record.parent
		return list(reversed(values))

	def __repr__(self):
		return "PrefixRecord({0}, prefix={1:.6g})".format(list(self.prefix), self.prefix_logprob)


def _extend(record, x, probs, log_g):
	log_y = probs.log_column(x)
	previous = record._parse_log
	n_frames = len(log_y)
	parse_log = [NEG_INF] * n_frames
	if not record.prefix:
		parse_log[0] = log_g + log_y[0]
	prefix_logprob = parse_log[0]
	for t in range(1, n_frames):
		shifted = log_g + previous[t - 1]
		parse_log[t] = log_y[t] + log_sum(parse_log[t - 1], shifted)
		prefix_logprob = log_sum(prefix_logprob, log_y[t] + shifted)
	return PrefixRecord(record.prefix + (x,), parse_log, prefix_logprob, log_g, record.grammar_logprob + log_g, record)


def extend_prefix(record, x, probs, g_val):
	"""Record of record.prefix + [x] given the grammar factor g_val of x."""
	return _extend(record, x, probs, safe_log(g_val))


def replay_logprob(sequence, g_values, probs, tail_logprob=0.0):
	"""Parse log probability of a sequence with a given g chain, recomputed from scratch."""
	record = PrefixRecord.empty(probs.n_frames)
	for x, g_val in zip(sequence, g_values):
		record = extend_prefix(record, x, probs, g_val)
	return record.full_logprob + tail_logprob


class ParserState(object):
	__slots__ = ("head", "alternative", "symbols", "dot", "parent", "record", "pending", "context")

	def __init__(self, head, alternative, symbols, dot, parent, record, pending, context):
		self.head = head
		self.alternative = alternative
		self.symbols = symbols
		self.dot = dot
		self.parent = parent
		self.record = record
		# log product of the OR choices since the last scan
		self.pending = pending
		self.context = context

	@property
	def complete(self):
		return self.dot >= len(self.symbols)

	@property
	def score(self):
		return self.record.prefix_logprob + self.pending

	@property
	def grammar_logprob(self):
		return self.record.grammar_logprob + self.pending

	def rule_string(self):
		symbols = list(self.symbols)
		symbols.insert(self.dot, "·")
		return "{0} → {1}".format(self.head, " ".join(symbols))


class StateSet(object):
	"""Append-only set Q(m, n, d); states before cursor have been processed."""

	def __init__(self, m, n, d):
		self.m, self.n, self.d = m, n, d
		self.states = []
		self.cursor = 0
		self.version = 0
		self.queued = False
		self.best_score = NEG_INF
		self.best_prefix = ()

	@property
	def ids(self):
		return (self.m, self.n, self.d)

	@property
	def has_pending(self):
		return self.cursor < len(self.states)


ParseCandidate = collections.namedtuple("ParseCandidate", ["sequence", "logprob", "grammar_logprob", "g_values", "tail_logprob"])
TraceRow = collections.namedtuple("TraceRow", ["order", "ids", "rule", "prefix", "operation", "probability", "queued_depth"])


class ParseResult(object):
	def __init__(self, best, runner_up, explored_states, stopped_early, queue_policy, max_queue_size, trace):
		super(ParseResult, self).__init__()
		self.best = best
		self.runner_up = runner_up
		self.explored_states = explored_states
		self.stopped_early = stopped_early
		self.queue_policy = queue_policy
		self.max_queue_size = max_queue_size
		self.trace = trace

	@property
	def best_sequence(self):
		return self.best.sequence

	@property
	def best_logprob(self):
		return self.best.logprob

	@property
	def grammar_logprob(self):
		return self.best.grammar_logprob

	@property
	def g_values(self):
		return self.best.g_values

	def __repr__(self):
		return "ParseResult({0}, logprob={1:.6g})".format(list(self.best.sequence), self.best.logprob)


def _better(candidate, other):
	if candidate.logprob != other.logprob:
		return candidate.logprob > other.logprob
	return (len(candidate.sequence), candidate.sequence) < (len(other.sequence), other.sequence)


class BreadthFirstEarleyParser(object):
	"""
	Parser of probability matrices under one grammar.

	n_queue = None keeps every state set; policy "depth" pops the shallowest set
	first, "probability" the set with the highest prefix probability. A complete
	parse scores its frame parse probability at T times the choices taken after
	its last scan.
	"""

	def __init__(self, grammar, n_queue=20, policy="depth", max_actions=20, early_stop=True,
	             max_depth=200, forbid_repeats=True, stop_at_first=False, trace=False):
		super(BreadthFirstEarleyParser, self).__init__()
		report = validate_grammar(grammar)
		if not report.ok:
			raise GrammarError("cannot parse with an invalid grammar: " + report[0])
		if policy not in POLICY_ALIASES:
			raise ParseError("unknown queue policy {0}".format(policy))
		if n_queue is not None and n_queue < 1:
			raise ParseError("queue size must be positive")
		if max_actions < 1:
			raise ParseError("max_actions must be positive")
		self.grammar = grammar
		self.n_queue = n_queue
		self.policy = POLICY_ALIASES[policy]
		self.max_actions = max_actions
		self.early_stop = early_stop
		self.max_depth = max_depth
		self.forbid_repeats = forbid_repeats
		self.stop_at_first = stop_at_first
		self.trace = trace

	def parse(self, probs):
		result = self._run(probs)
		if result.best is None:
			raise ParseError("grammar rejects input distribution support")
		log.debug("Parsed {0} frames: {1} (log p = {2:.6g}, {3} states{4}).".format(
				probs.n_frames, " ".join(result.best.sequence), result.best.logprob, result.explored_states,
				", stopped early" if result.stopped_early else ""
		))
		return result

	def accepts(self, sequence):
		"""Membership of sequence, tested on a one-hot matrix with one frame per action."""
		if not sequence:
			return False
		probs = FrameProbMatrix.one_hot(sequence, classes=sorted(set(self.grammar.terminals) | set(sequence)))
		saved = (self.n_queue, self.max_actions, self.stop_at_first)
		self.n_queue, self.max_actions, self.stop_at_first = None, len(sequence), True
		try:
			result = self._run(probs)
		finally:
			self.n_queue, self.max_actions, self.stop_at_first = saved
		return result.best is not None and result.best.sequence == tuple(sequence)

	def prefix_grammar_logprob(self, prefix):
		"""Highest log grammar factor product over derivations of a prefix (-inf if none)."""
		prefix = tuple(prefix)
		if not prefix:
			return 0.0
		probs = FrameProbMatrix.one_hot(prefix, classes=sorted(set(self.grammar.terminals) | set(prefix)))
		saved = (self.n_queue, self.max_actions, self.early_stop, self.stop_at_first)
		self.n_queue, self.max_actions, self.early_stop, self.stop_at_first = None, len(prefix), False, False
		try:
			self._run(probs)
		finally:
			self.n_queue, self.max_actions, self.early_stop, self.stop_at_first = saved
		scores = [record.grammar_logprob for record in self._records.values()
		          if record.prefix == prefix and record.prefix_logprob > NEG_INF]
		return max(scores) if scores else NEG_INF

	# search

	def _run(self, probs):
		self._probs = probs
		self._records = {}
		self._sets = {}
		self._n_sets = collections.Counter()
		self._heap = []
		self._queued = set()
		self._counter = itertools.count()
		self._best = None
		self._runner_up = None
		self._rows = [] if self.trace else None
		self._order = 0

		root = ParserState(ROOT, 0, (self.grammar.start,), 0, None, PrefixRecord.empty(probs.n_frames), 0.0, ())
		self._n_sets[0] = 1
		self._add(self._get_set(0, 0, 0), root)

		explored = 0
		stopped_early = False
		max_queue_size = len(self._queued)
		while True:
			state_set = self._pop()
			if state_set is None:
				break
			self._order += 1
			queued_depth = min([other.d for other in self._queued]) if self._queued else None
			states = state_set.states[state_set.cursor:]
			state_set.cursor = len(state_set.states)
			state_set.best_score = NEG_INF
			for state in states:
				explored += 1
				operation = self._process(state_set, state)
				if self._rows is not None:
					self._rows.append(TraceRow(self._order, state_set.ids, state.rule_string(), " ".join(state.record.prefix),
					                           operation, math.exp(state.grammar_logprob), queued_depth))
			self._prune()
			max_queue_size = max(max_queue_size, len(self._queued))

			if self._best is not None and self._queued:
				if self.stop_at_first:
					stopped_early = True
					break
				if self.early_stop:
					bound = max(other.best_score for other in self._queued)
					if self._best.logprob > bound:
						log.debug("Early stop: best parse {0:.6g} above every queued prefix ({1:.6g}).".format(self._best.logprob, bound))
						stopped_early = True
						break

		return ParseResult(self._best, self._runner_up, explored, stopped_early, self.policy, max_queue_size, self._rows)

	def _get_set(self, m, n, d):
		key = (m, n, d)
		if key not in self._sets:
			self._sets[key] = StateSet(m, n, d)
		return self._sets[key]

	def _priority(self, state_set):
		if self.policy == "depth":
			return (state_set.d, -state_set.best_score, len(state_set.best_prefix), state_set.best_prefix, state_set.ids)
		return (-state_set.best_score, state_set.d, len(state_set.best_prefix), state_set.best_prefix, state_set.ids)

	def _push(self, state_set):
		state_set.version += 1
		state_set.queued = True
		self._queued.add(state_set)
		heapq.heappush(self._heap, (self._priority(state_set), next(self._counter), state_set, state_set.version))

	def _pop(self):
		while self._heap:
			priority, counter, state_set, version = heapq.heappop(self._heap)
			if version != state_set.version or not state_set.queued:
				continue
			state_set.queued = False
			self._queued.discard(state_set)
			if state_set.has_pending:
				return state_set
		return None

	def _add(self, state_set, state):
		score = state.score
		if score == NEG_INF:
			return
		state_set.states.append(state)
		if score > state_set.best_score:
			state_set.best_score = score
			state_set.best_prefix = state.record.prefix
			self._push(state_set)
		elif not state_set.queued:
			self._push(state_set)

	def _prune(self):
		if self.n_queue is None or len(self._queued) <= self.n_queue:
			return
		ranked = sorted(self._queued, key=lambda state_set: (-state_set.best_score, len(state_set.best_prefix), state_set.best_prefix, state_set.ids))
		for state_set in ranked[self.n_queue:]:
			state_set.cursor = len(state_set.states)
			state_set.queued = False
			state_set.version += 1
			state_set.best_score = NEG_INF
			self._queued.discard(state_set)
		log.debug("Pruned queue from {0} to {1} state sets.".format(len(ranked), self.n_queue))

	def _process(self, state_set, state):
		if state.complete:
			self._complete(state_set, state)
			return "complete"
		symbol = state.symbols[state.dot]
		if self.grammar.is_variable(symbol):
			self._predict(state_set, state, symbol)
			return "predict"
		self._scan(state_set, state, symbol)
		return "scan"

	def _predict(self, state_set, state, variable):
		depth = state_set.d + 1
		if depth > self.max_depth:
			log.debug("Prediction of {0} exceeds depth {1}.".format(variable, self.max_depth))
			return
		n_rec, q = recursion_context(self.grammar, variable, state.context)
		target = self._get_set(state_set.m, state_set.n, depth)
		for index, symbols, prob in self.grammar.alternatives_at(variable, n_rec, q):
			context = child_context(self.grammar, variable, state.context, n_rec, index)
			self._add(target, ParserState(variable, index, symbols, 0, state, state.record, state.pending + math.log(prob), context))

	def _scan(self, state_set, state, symbol):
		record = state.record
		if len(record.prefix) >= self.max_actions:
			return
		if self.forbid_repeats and record.prefix and record.prefix[-1] == symbol:
			return
		key = (id(record), symbol, state.pending)
		extended = self._records.get(key)
		if extended is None:
			extended = _extend(record, symbol, self._probs, state.pending)
			self._records[key] = extended
		if extended.prefix_logprob == NEG_INF:
			return
		m = state_set.m + 1
		n = self._n_sets[m]
		self._n_sets[m] += 1
		advanced = ParserState(state.head, state.alternative, state.symbols, state.dot + 1, state.parent, extended, 0.0, state.context)
		self._add(self._get_set(m, n, state_set.d), advanced)

	def _complete(self, state_set, state):
		parent = state.parent
		if parent is None:
			self._register(state)
			return
		advanced = ParserState(parent.head, parent.alternative, parent.symbols, parent.dot + 1, parent.parent,
		                       state.record, state.pending, parent.context)
		if advanced.parent is None and advanced.complete:
			self._register(advanced)
			if self._rows is not None:
				self._rows.append(TraceRow(self._order, (state_set.m, state_set.n, state_set.d - 1), advanced.rule_string(),
				                           " ".join(advanced.record.prefix), "accept", math.exp(advanced.grammar_logprob), None))
			return
		self._add(self._get_set(state_set.m, state_set.n, state_set.d - 1), advanced)

	def _register(self, state):
		record = state.record
		if not record.prefix:
			return
		logprob = record.full_logprob + state.pending
		if logprob == NEG_INF:
			return
		candidate = ParseCandidate(record.prefix, logprob, state.grammar_logprob, record.g_values(), state.pending)
		if self._best is None or _better(candidate, self._best):
			if self._best is not None and self._best.sequence != candidate.sequence:
				if self._runner_up is None or _better(self._best, self._runner_up):
					self._runner_up = self._best
			if self._runner_up is not None and self._runner_up.sequence == candidate.sequence:
				self._runner_up = None
			self._best = candidate
		elif candidate.sequence != self._best.sequence and (self._runner_up is None or _better(candidate, self._runner_up)):
			self._runner_up = candidate


def parse(probs, grammar, n_queue=20, policy="depth", max_actions=20, **kwargs):
	return BreadthFirstEarleyParser(grammar, n_queue=n_queue, policy=policy, max_actions=max_actions, **kwargs).parse(probs)


def transition_prob(grammar, x, prefix=(), choices=None):
	"""
	Grammar factor g(x | prefix).

	With choices, a sequence of (variable, alternative, n_rec, q) OR decisions
	taken since the previous scan, this is the product of their probabilities.
	Without, it is the ratio of the best derivation products of prefix + [x] and
	prefix.
	"""
	if choices is not None:
		value = 1.0
		for variable, alternative, n_rec, q in choices:
			body = grammar.rules[variable]
			if isinstance(body, Or):
				value *= eval_alternative_prob(body.alternatives[alternative].prob, n_rec, q, alternative)
		return value
	parser = BreadthFirstEarleyParser(grammar, n_queue=None, early_stop=False)
	extended = parser.prefix_grammar_logprob(tuple(prefix) + (x,))
	if extended == NEG_INF:
		return 0.0
	return math.exp(extended - parser.prefix_grammar_logprob(prefix))


def grammar_prefix_prob(grammar, prefix):
	"""Product of the grammar factors along the best derivation of prefix."""
	value = BreadthFirstEarleyParser(grammar, n_queue=None, early_stop=False).prefix_grammar_logprob(prefix)
	return 0.0 if value == NEG_INF else math.exp(value)
