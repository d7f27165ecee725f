# -*- coding: utf-8 -*-

"""
Text format of grammars.

	# comment
	%start S
	%terminals 'take cup' 'pour coffee'
	S -> V^L 'pour coffee'
	@recursive first_escape=0.5 avg_len=1.0
	V^L -> 'take cup' V^L [0.5] | ε [0.5]

One rule per line. A single alternative without probability is an AND rule,
everything else is an OR rule with a bracketed probability per alternative.
Terminals are quoted (or declared with %terminals), bare symbols are variables.
An @recursive line marks the following OR rule as a recursive group rule: its
action alternatives carry the first-step probabilities, the trailing ε
alternative the first escape probability. Optional keys are follow=<w,w,...>
(continuation weights) and repeat=allow.
"""

import logging
log = logging.getLogger(__name__)

import collections
import re

from actgram.errors import GrammarError, GrammarSyntaxError
from actgram.grammar.grammar import Grammar, And, Or, Alternative, StaticProb, RecursiveProb, NORMALISATION_TOLERANCE


EPSILON_TOKENS = ("ε", "<eps>")
RENORMALISATION_TOLERANCE = 1e-6

_TOKEN = re.compile(r"""\s*(?:(?P<comment>\#.*)|(?P<quoted>'(?:[^'\\]|\\.)*')|(?P<prob>\[[^\]]*\])|(?P<bar>\|)|(?P<bare>[^\s'\[\]\|\#]+))""")
_BARE_FORBIDDEN = re.compile(r"""[\s'\[\]\|\#]""")

_Token = collections.namedtuple("_Token", ["kind", "text", "column"])


def _tokenize(line, line_number):
	tokens = []
	position = 0
	while position < len(line):
		if not line[position:].strip():
			break
		match = _TOKEN.match(line, position)
		if match is None or match.end() == position:
			column = position + len(line[position:]) - len(line[position:].lstrip()) + 1
			raise GrammarSyntaxError("unexpected character {0!r}".format(line[column - 1]), line_number, column)
		kind = match.lastgroup
		if kind == "comment":
			break
		tokens.append(_Token(kind, match.group(kind), match.start(kind) + 1))
		position = match.end()
	return tokens


def _unquote(text):
	return re.sub(r"\\(.)", r"\1", text[1:-1])


def _quote(token):
	return "'" + token.replace("\\", "\\\\").replace("'", "\\'") + "'"


def _parse_probability(token, line_number):
	try:
		return float(token.text[1:-1].strip())
	except ValueError:
		raise GrammarSyntaxError("invalid probability {0}".format(token.text), line_number, token.column)


def _parse_recursive_annotation(tokens, line_number):
	settings = {}
	for token in tokens[1:]:
		key, separator, value = token.text.partition("=")
		if token.kind != "bare" or not separator:
			raise GrammarSyntaxError("expected key=value in @recursive annotation", line_number, token.column)
		settings[key] = (value, token.column)
	for key in ("first_escape", "avg_len"):
		if key not in settings:
			raise GrammarSyntaxError("@recursive annotation needs {0}".format(key), line_number, tokens[0].column)
	unknown = sorted(set(settings) - set(["first_escape", "avg_len", "follow", "repeat"]))
	if unknown:
		raise GrammarSyntaxError("unknown @recursive key {0}".format(unknown[0]), line_number, settings[unknown[0]][1])
	try:
		annotation = {
			"first_escape": float(settings["first_escape"][0]),
			"avg_len": float(settings["avg_len"][0]),
			"follow": None if "follow" not in settings else tuple(float(w) for w in settings["follow"][0].split(",")),
		}
	except ValueError:
		raise GrammarSyntaxError("invalid number in @recursive annotation", line_number, tokens[0].column)
	repeat = settings.get("repeat", ("forbid", None))[0]
	if repeat not in ("allow", "forbid"):
		raise GrammarSyntaxError("repeat must be allow or forbid", line_number, settings["repeat"][1])
	annotation["forbid_repeat"] = (repeat == "forbid")
	return annotation


def _split_alternatives(tokens, line_number):
	alternatives = [[]]
	for token in tokens:
		if token.kind == "bar":
			alternatives.append([])
		else:
			alternatives[-1].append(token)
	parsed = []
	for alternative in alternatives:
		prob = None
		if alternative and alternative[-1].kind == "prob":
			prob = _parse_probability(alternative[-1], line_number)
			alternative = alternative[:-1]
		if any(token.kind == "prob" for token in alternative):
			token = [token for token in alternative if token.kind == "prob"][0]
			raise GrammarSyntaxError("probability must close its alternative", line_number, token.column)
		if not alternative:
			column = tokens[0].column if tokens else 1
			raise GrammarSyntaxError("empty alternative (write ε)", line_number, column)
		parsed.append((alternative, prob))
	return parsed


def _renormalised(values, variable):
	total = sum(values)
	deviation = abs(total - 1.0)
	if NORMALISATION_TOLERANCE < deviation <= RENORMALISATION_TOLERANCE:
		log.warning("Renormalising rule {0} (alternatives sum to {1!r}).".format(variable, total))
		return [value / total for value in values]
	return values


def load_grammar(text):
	start = None
	declared_terminals = set()
	quoted_terminals = set()
	rules = collections.OrderedDict()
	references = []
	pending_annotation = None

	for line_number, line in enumerate(text.splitlines(), start=1):
		tokens = _tokenize(line, line_number)
		if not tokens:
			continue
		first = tokens[0]
		if first.kind == "bare" and first.text == "%start":
			if len(tokens) != 2 or tokens[1].kind != "bare":
				raise GrammarSyntaxError("%start needs exactly one variable", line_number, first.column)
			start = tokens[1].text
			continue
		if first.kind == "bare" and first.text == "%terminals":
			for token in tokens[1:]:
				if token.kind not in ("bare", "quoted"):
					raise GrammarSyntaxError("unexpected {0} in %terminals".format(token.text), line_number, token.column)
				declared_terminals.add(_unquote(token.text) if token.kind == "quoted" else token.text)
			continue
		if first.kind == "bare" and first.text == "@recursive":
			pending_annotation = (_parse_recursive_annotation(tokens, line_number), line_number)
			continue
		if first.kind == "bare" and first.text.startswith(("%", "@")):
			raise GrammarSyntaxError("unknown directive {0}".format(first.text), line_number, first.column)

		if first.kind != "bare" or len(tokens) < 3 or tokens[1].text != "->":
			raise GrammarSyntaxError("expected \"HEAD -> symbols\"", line_number, first.column)
		head = first.text
		if head in rules:
			raise GrammarSyntaxError("second rule for variable {0}".format(head), line_number, first.column)

		alternatives = []
		for alternative_tokens, prob in _split_alternatives(tokens[2:], line_number):
			if len(alternative_tokens) == 1 and alternative_tokens[0].kind == "bare" and alternative_tokens[0].text in EPSILON_TOKENS:
				alternatives.append(([], prob))
				continue
			symbols = []
			for token in alternative_tokens:
				if token.kind == "quoted":
					symbols.append(_unquote(token.text))
					quoted_terminals.add(symbols[-1])
				elif token.text in EPSILON_TOKENS:
					raise GrammarSyntaxError("ε must stand alone in its alternative", line_number, token.column)
				elif token.text == "->":
					raise GrammarSyntaxError("unexpected ->", line_number, token.column)
				else:
					symbols.append(token.text)
					references.append((token.text, line_number, token.column))
			alternatives.append((symbols, prob))

		if pending_annotation is not None:
			rules[head] = _recursive_rule(head, alternatives, pending_annotation[0], line_number, first.column)
			pending_annotation = None
		elif len(alternatives) == 1 and alternatives[0][1] is None:
			rules[head] = And(alternatives[0][0])
		else:
			if any(prob is None for symbols, prob in alternatives):
				raise GrammarSyntaxError("OR rule {0} needs a probability per alternative".format(head), line_number, first.column)
			probs = _renormalised([prob for symbols, prob in alternatives], head)
			rules[head] = Or([Alternative(symbols, StaticProb(prob)) for (symbols, old_prob), prob in zip(alternatives, probs)])

	if pending_annotation is not None:
		raise GrammarSyntaxError("@recursive annotation without a rule", pending_annotation[1], 1)
	if not rules:
		raise GrammarSyntaxError("grammar without rules", 1, 1)

	terminals = declared_terminals | quoted_terminals
	for symbol, line_number, column in references:
		if symbol not in rules and symbol not in declared_terminals:
			raise GrammarSyntaxError("reference to undeclared symbol {0}".format(symbol), line_number, column)
	if start is None:
		start = next(iter(rules))
	return Grammar(rules, start, terminals=terminals, variables=set(rules.keys()))


def _recursive_rule(head, alternatives, annotation, line_number, column):
	if len(alternatives) < 1 or alternatives[-1][0]:
		raise GrammarSyntaxError("recursive rule {0} must end with an ε alternative".format(head), line_number, column)
	if any(not symbols for symbols, prob in alternatives[:-1]) or any(prob is None for symbols, prob in alternatives[:-1]):
		raise GrammarSyntaxError("recursive rule {0} needs a probability per action alternative".format(head), line_number, column)
	escape_prob = alternatives[-1][1]
	if escape_prob is not None and abs(escape_prob - annotation["first_escape"]) > NORMALISATION_TOLERANCE:
		raise GrammarSyntaxError("ε probability of {0} differs from first_escape".format(head), line_number, column)
	values = _renormalised([prob for symbols, prob in alternatives[:-1]] + [annotation["first_escape"]], head)
	follow = annotation["follow"]
	if follow is not None and len(follow) != len(alternatives) - 1:
		raise GrammarSyntaxError("follow of {0} needs one weight per action alternative".format(head), line_number, column)
	spec = RecursiveProb(values[:-1], values[-1], annotation["avg_len"], follow=follow, forbid_repeat=annotation["forbid_repeat"])
	return Or([Alternative(symbols, spec) for symbols, prob in alternatives])


def _format_float(value):
	return repr(float(value))


def _format_symbols(grammar, symbols):
	if not symbols:
		return EPSILON_TOKENS[0]
	return " ".join(_quote(symbol) if grammar.is_terminal(symbol) else symbol for symbol in symbols)


def _check_variable_name(variable):
	if (not variable or _BARE_FORBIDDEN.search(variable) or variable.startswith(("%", "@"))
	    or variable in EPSILON_TOKENS or variable == "->"):
		raise GrammarError("variable name {0!r} cannot be written to a grammar file".format(variable))


def save_grammar(grammar):
	"""Canonical text of a grammar: start rule first, then rules in grammar order."""
	lines = ["%start " + grammar.start]
	if grammar.terminals:
		lines.append("%terminals " + " ".join(_quote(terminal) for terminal in sorted(grammar.terminals)))

	heads = [grammar.start] if grammar.start in grammar.rules else []
	heads += [variable for variable in grammar.rules if variable != grammar.start]
	for variable in heads:
		_check_variable_name(variable)
		body = grammar.rules[variable]
		if isinstance(body, And):
			lines.append("{0} -> {1}".format(variable, _format_symbols(grammar, body.symbols)))
			continue
		spec = body.recursive
		if spec is not None:
			annotation = "@recursive first_escape={0} avg_len={1}".format(_format_float(spec.first_escape), _format_float(spec.avg_len))
			if spec.follow != spec.first_step:
				annotation += " follow=" + ",".join(_format_float(weight) for weight in spec.follow)
			if not spec.forbid_repeat:
				annotation += " repeat=allow"
			lines.append(annotation)
			probs = list(spec.first_step) + [spec.first_escape]
		else:
			probs = [alternative.prob.p for alternative in body.alternatives]
		lines.append("{0} -> {1}".format(variable, " | ".join(
				"{0} [{1}]".format(_format_symbols(grammar, alternative.symbols), _format_float(prob))
				for alternative, prob in zip(body.alternatives, probs)
		)))
	return "\n".join(lines) + "\n"


def read_grammar(filename):
	with open(filename, encoding="utf-8") as grammar_file:
		try:
			return load_grammar(grammar_file.read())
		except GrammarSyntaxError as error:
			located = GrammarSyntaxError("{0}: {1}".format(filename, error))
			located.line, located.column = error.line, error.column
			raise located
