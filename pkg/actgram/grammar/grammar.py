# -*- coding: utf-8 -*-

"""
Probabilistic context-free activity grammars.

A grammar maps every variable to exactly one rule body: an AND body (a fixed
symbol sequence) or an OR body (weighted alternatives). Alternatives of a
recursive OR body share one RecursiveProb whose values depend on how often the
variable has already recursed (n_rec) and which alternative was taken last (q).
ε is the empty symbol sequence.
"""

import logging
log = logging.getLogger(__name__)

import collections

from actgram.errors import GrammarError, ProbabilityError


NORMALISATION_TOLERANCE = 1e-9
# depth up to which recursive OR bodies are probed by validate_grammar
RECURSION_PROBE_DEPTH = 5


class StaticProb(collections.namedtuple("StaticProb", ["p"])):
	__slots__ = ()

	def __new__(cls, p):
		return super(StaticProb, cls).__new__(cls, float(p))


class RecursiveProb(collections.namedtuple("RecursiveProb", ["first_step", "first_escape", "avg_len", "follow", "forbid_repeat"])):
	"""
	Recursion dependent probabilities of a group OR rule.

	first_step[j] is the probability to start the group with action alternative j,
	first_escape the probability to leave it before any action and avg_len the
	mean length of the non-empty group sub-sequences. follow holds the weights of
	the action alternatives after the first recursion (first_step unless stated
	otherwise); forbid_repeat disallows taking the same alternative twice in a row.
	"""
	__slots__ = ()

	def __new__(cls, first_step, first_escape, avg_len, follow=None, forbid_repeat=True):
		first_step = tuple(float(p) for p in first_step)
		follow = first_step if follow is None else tuple(float(w) for w in follow)
		return super(RecursiveProb, cls).__new__(cls, first_step, float(first_escape), float(avg_len), follow, bool(forbid_repeat))

	@property
	def epsilon_index(self):
		return len(self.first_step)


class Alternative(collections.namedtuple("Alternative", ["symbols", "prob"])):
	__slots__ = ()

	def __new__(cls, symbols, prob):
		if not isinstance(prob, (StaticProb, RecursiveProb)):
			prob = StaticProb(prob)
		return super(Alternative, cls).__new__(cls, tuple(symbols), prob)

	@property
	def is_epsilon(self):
		return len(self.symbols) == 0


class And(collections.namedtuple("And", ["symbols"])):
	__slots__ = ()

	def __new__(cls, symbols):
		return super(And, cls).__new__(cls, tuple(symbols))

	def symbol_sequences(self):
		return [self.symbols]


class Or(collections.namedtuple("Or", ["alternatives"])):
	__slots__ = ()

	def __new__(cls, alternatives):
		return super(Or, cls).__new__(cls, tuple(alternatives))

	@property
	def recursive(self):
		"""The shared RecursiveProb of a recursive group rule, None for static rules."""
		for alternative in self.alternatives:
			if isinstance(alternative.prob, RecursiveProb):
				return alternative.prob
		return None

	def symbol_sequences(self):
		return [alternative.symbols for alternative in self.alternatives]


class Grammar(object):
	"""
	Immutable PCFG G = (variables, terminals, rules, start).

	Terminals default to every body symbol without a rule of its own.
	"""

	def __init__(self, rules, start, terminals=None, variables=None):
		super(Grammar, self).__init__()
		self._rules = collections.OrderedDict(rules)
		self._start = start
		if variables is None:
			variables = set(self._rules.keys())
		self._variables = frozenset(variables)
		if terminals is None:
			terminals = set()
			for body in self._rules.values():
				for symbols in body.symbol_sequences():
					terminals.update(symbol for symbol in symbols if symbol not in self._variables)
		self._terminals = frozenset(terminals)

	@property
	def rules(self):
		return self._rules

	@property
	def start(self):
		return self._start

	@property
	def variables(self):
		return self._variables

	@property
	def terminals(self):
		return self._terminals

	def is_variable(self, symbol):
		return symbol in self._variables

	def is_terminal(self, symbol):
		return symbol in self._terminals

	def alternatives_at(self, variable, n_rec=1, q=None):
		"""
		Expansions of variable as (alternative index, symbols, probability) triples.

		Alternatives with zero probability in this recursion context are skipped.
		"""
		body = self._rules[variable]
		if isinstance(body, And):
			return [(0, body.symbols, 1.0)]
		expansions = []
		for index, alternative in enumerate(body.alternatives):
			prob = eval_alternative_prob(alternative.prob, n_rec, q, index)
			if prob > 0.0:
				expansions.append((index, alternative.symbols, prob))
		return expansions

	def __eq__(self, other):
		if not isinstance(other, Grammar):
			return NotImplemented
		return (self._start == other._start and self._variables == other._variables and
		        self._terminals == other._terminals and dict(self._rules) == dict(other._rules))

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	def __hash__(self):
		return hash((self._start, self._variables, self._terminals))

	def __repr__(self):
		return "Grammar(start={0!r}, {1} variables, {2} terminals)".format(self._start, len(self._variables), len(self._terminals))


def eval_alternative_prob(spec, n_rec, q, j):
	"""
	Probability of alternative j of an OR rule in recursion context (n_rec, q).

	For recursive specs, j == spec.epsilon_index selects the escape alternative.
	Escaping is first_escape on entry and 1/avg_len afterwards; the remaining mass
	is shared by the action alternatives in proportion to their follow weights,
	excluding the previous alternative q when repeats are forbidden. If no
	alternative is left to continue with, escaping takes all of the mass.
	"""
	if isinstance(spec, StaticProb):
		return spec.p
	if n_rec < 1:
		raise ProbabilityError("recursion count must be positive, got {0}".format(n_rec))
	n_actions = len(spec.first_step)
	if not 0 <= j <= n_actions:
		raise ProbabilityError("invalid alternative index {0} for a group with {1} actions".format(j, n_actions))

	if n_rec == 1:
		return spec.first_escape if j == n_actions else spec.first_step[j]

	if spec.avg_len < 1.0:
		raise ProbabilityError("degenerate group: average length {0} with recursion {1}".format(spec.avg_len, n_rec))
	allowed = [l for l in range(n_actions) if not (spec.forbid_repeat and l == q)]
	weight = sum(spec.follow[l] for l in allowed)
	escape = 1.0 / spec.avg_len
	if weight <= 0.0:
		return 1.0 if j == n_actions else 0.0
	if j == n_actions:
		return escape
	if j not in allowed:
		return 0.0
	return spec.follow[j] * (1.0 - escape) / weight


class ValidationReport(list):
	"""List of violated invariants, empty for a well-formed grammar."""

	@property
	def ok(self):
		return len(self) == 0

	def __str__(self):
		return "\n".join(self)


def validate_grammar(grammar):
	report = ValidationReport()

	if grammar.start not in grammar.variables:
		report.append("start variable {0} is not a variable".format(grammar.start))
	for symbol in sorted(grammar.variables & grammar.terminals):
		report.append("symbol {0} is both a variable and a terminal".format(symbol))
	for variable in sorted(grammar.variables - set(grammar.rules.keys())):
		report.append("variable {0} has no rule".format(variable))
	for variable in grammar.rules:
		if variable not in grammar.variables:
			report.append("rule head {0} is not a declared variable".format(variable))

	for variable, body in grammar.rules.items():
		for symbols in body.symbol_sequences():
			for symbol in symbols:
				if symbol not in grammar.variables and symbol not in grammar.terminals:
					report.append("rule {0}: unknown symbol {1}".format(variable, symbol))
		if isinstance(body, Or):
			report.extend(_validate_or(variable, body))

	reachable = reachable_variables(grammar)
	for variable in sorted(set(grammar.rules.keys()) - reachable):
		report.append("variable {0} is unreachable from {1}".format(variable, grammar.start))

	for issue in report:
		log.debug("Validation: " + issue)
	return report


def _validate_or(variable, body):
	issues = []
	if not body.alternatives:
		return ["rule {0}: OR rule without alternatives".format(variable)]
	spec = body.recursive
	if spec is None:
		total = 0.0
		for alternative in body.alternatives:
			if not 0.0 <= alternative.prob.p <= 1.0:
				issues.append("rule {0}: probability {1:g} outside [0, 1]".format(variable, alternative.prob.p))
			total += alternative.prob.p
		if abs(total - 1.0) > NORMALISATION_TOLERANCE:
			issues.append("rule {0}: alternatives sum to {1:g}".format(variable, total))
		return issues

	if any(alternative.prob != spec for alternative in body.alternatives):
		issues.append("rule {0}: alternatives mix different recursive probabilities".format(variable))
		return issues
	if len(body.alternatives) != len(spec.first_step) + 1 or not body.alternatives[-1].is_epsilon:
		issues.append("rule {0}: recursive rule needs one alternative per action followed by ε".format(variable))
		return issues
	if len(spec.follow) != len(spec.first_step):
		issues.append("rule {0}: {1} follow weights for {2} actions".format(variable, len(spec.follow), len(spec.first_step)))
		return issues
	if any(not 0.0 <= p <= 1.0 for p in spec.first_step + (spec.first_escape,)):
		issues.append("rule {0}: recursive probabilities outside [0, 1]".format(variable))
	total = sum(spec.first_step) + spec.first_escape
	if abs(total - 1.0) > NORMALISATION_TOLERANCE:
		issues.append("rule {0}: alternatives sum to {1:g}".format(variable, total))
	if any(not alternative.is_epsilon for alternative in body.alternatives) and spec.avg_len < 1.0:
		issues.append("rule {0}: average group length {1:g} below 1".format(variable, spec.avg_len))
		return issues

	for n_rec in range(2, RECURSION_PROBE_DEPTH + 1):
		for q in range(len(spec.first_step)):
			total = sum(eval_alternative_prob(spec, n_rec, q, j) for j in range(len(body.alternatives)))
			if abs(total - 1.0) > NORMALISATION_TOLERANCE:
				issues.append("rule {0}: alternatives sum to {1:g} at recursion {2} after alternative {3}".format(variable, total, n_rec, q))
				return issues
	return issues


def reachable_variables(grammar):
	reachable = set()
	stack = [grammar.start]
	while stack:
		variable = stack.pop()
		if variable in reachable or variable not in grammar.rules:
			continue
		reachable.add(variable)
		for symbols in grammar.rules[variable].symbol_sequences():
			stack.extend(symbol for symbol in symbols if symbol in grammar.variables)
	return reachable


def merge_grammars(weighted_grammars, names=None):
	"""
	Merge (grammar, weight) pairs below a new start OR rule.

	The variables of the i-th grammar are renamed to "<name>::<variable>" with
	name names[i] (default "g<i>"); terminals are shared.
	"""
	weighted_grammars = list(weighted_grammars)
	if not weighted_grammars:
		raise GrammarError("cannot merge an empty list of grammars")
	if names is None:
		names = ["g{0}".format(index) for index in range(len(weighted_grammars))]
	if len(set(names)) != len(names) or len(names) != len(weighted_grammars):
		raise GrammarError("merge needs one distinct name per grammar")
	total = float(sum(weight for grammar, weight in weighted_grammars))
	if total <= 0.0 or any(weight < 0 for grammar, weight in weighted_grammars):
		raise GrammarError("merge weights must be non-negative with a positive sum")

	terminals = set()
	for grammar, weight in weighted_grammars:
		terminals.update(grammar.terminals)
	start = "S"
	while start in terminals:
		start += "'"

	rules = collections.OrderedDict()
	alternatives = []
	for name, (grammar, weight) in zip(names, weighted_grammars):
		rename = lambda symbol, grammar=grammar, name=name: (name + "::" + symbol) if grammar.is_variable(symbol) else symbol
		alternatives.append(Alternative((rename(grammar.start),), StaticProb(weight / total)))
		for variable, body in grammar.rules.items():
			if isinstance(body, And):
				rules[rename(variable)] = And([rename(symbol) for symbol in body.symbols])
			else:
				rules[rename(variable)] = Or([Alternative([rename(symbol) for symbol in alternative.symbols], alternative.prob)
				                             for alternative in body.alternatives])
	merged_rules = collections.OrderedDict([(start, Or(alternatives))])
	merged_rules.update(rules)
	log.debug("Merged {0} grammars with weights {1}.".format(len(weighted_grammars), [weight for grammar, weight in weighted_grammars]))
	return Grammar(merged_rules, start, terminals=terminals)
