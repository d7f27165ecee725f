# -*- coding: utf-8 -*-

"""
Key-action based recursive induction of activity grammars.

Every training sequence is split around the key actions (actions present in
all sequences) into a left part, a middle part spanning the first to the last
key action, and a right part:

	S -> V^L V^M V^R

Each part becomes an AND rule over groups of temporally independent actions,
each group a recursive OR rule V -> d_1 V | ... | ε whose probabilities are
estimated from the training sub-sequences filtered to the group. The middle
part is an OR over the observed orders (permutations) of the key actions, with
gap parts V^M(i,j) between consecutive keys; middles passing the keys several
times recurse into V^M.
"""

import logging
log = logging.getLogger(__name__)

import collections
import itertools

import numpy

from actgram.errors import InductionError
from actgram.grammar.grammar import Grammar, And, Or, Alternative, RecursiveProb, merge_grammars
from actgram.induction.corpus import Corpus


START = "S"
BOUNDARY_TOKEN = "SIL"
PERMUTATION_POLICIES = ("observed", "all")
# |K|! permutations are enumerated for perms="all"
MAX_ENUMERATED_KEYS = 6

KeySelection = collections.namedtuple("KeySelection", ["keys", "shortfall"])
SplitCorpus = collections.namedtuple("SplitCorpus", ["left", "middle", "right", "key_actions", "skipped"])
ActionGroupSequence = collections.namedtuple("ActionGroupSequence", ["groups", "h_lists", "part_alphabet", "merged_cycles"])
EscapeStats = collections.namedtuple("EscapeStats", ["first_escape", "avg_blocks"])
PermutationTable = collections.namedtuple("PermutationTable", ["perms", "counts", "occurrences", "gap_corpora", "block_sequences", "escape_stats", "irregular"])


def select_key_actions(corpus, n_key):
	"""
	The n_key most frequent actions among those occurring in every sequence.

	Ties are broken by earlier mean position, then by token.
	"""
	if n_key < 1:
		raise InductionError("number of key actions must be positive, got {0}".format(n_key))
	sequences = list(corpus)
	if not sequences:
		raise InductionError("no key actions in an empty corpus")
	universal = set(sequences[0])
	for sequence in sequences[1:]:
		universal &= set(sequence)
	if not universal:
		raise InductionError("no key actions: no action occurs in every sequence of {0}".format(corpus.activity))

	counts = collections.Counter()
	positions = collections.defaultdict(list)
	for sequence in sequences:
		for position, token in enumerate(sequence):
			counts[token] += 1
			positions[token].append(position)
	ranked = sorted(universal, key=lambda token: (-counts[token], float(numpy.mean(positions[token])), token))
	keys = tuple(ranked[:n_key])
	shortfall = max(0, n_key - len(ranked))
	if shortfall:
		log.warning("Only {0} of {1} requested key actions occur in every sequence of {2}.".format(len(keys), n_key, corpus.activity))
	log.debug("Key actions of {0}: {1}".format(corpus.activity, ", ".join(keys)))
	return KeySelection(keys, shortfall)


def split_sequence(sequence, keys):
	"""(left, middle, right) around the first and last key action occurrence."""
	sequence = tuple(sequence)
	missing = [key for key in keys if key not in sequence]
	if missing:
		raise InductionError("sequence misses key action {0}".format(missing[0]))
	key_positions = [position for position, token in enumerate(sequence) if token in keys]
	first, last = key_positions[0], key_positions[-1]
	return sequence[:first], sequence[first:last + 1], sequence[last + 1:]


def split_corpus(sequences, keys):
	left, middle, right, skipped = [], [], [], []
	for sequence in sequences:
		try:
			parts = split_sequence(sequence, keys)
		except InductionError as error:
			log.warning("Skipping sequence {0}: {1}".format(" ".join(sequence), error))
			skipped.append(tuple(sequence))
			continue
		for target, part in zip((left, middle, right), parts):
			target.append(part)
	return SplitCorpus(left, middle, right, tuple(keys), skipped)


def _transitive_closure(adjacency):
	reach = adjacency.copy()
	for k in range(len(reach)):
		reach |= numpy.outer(reach[:, k], reach[k, :])
	return reach


def _components(n_items, pairs):
	"""Connected components of an undirected graph as sorted lists of item indices."""
	parents = list(range(n_items))
	def find(item):
		while parents[item] != item:
			parents[item] = parents[parents[item]]
			item = parents[item]
		return item
	for first, second in pairs:
		root_first, root_second = find(first), find(second)
		if root_first != root_second:
			parents[max(root_first, root_second)] = min(root_first, root_second)
	members = collections.defaultdict(list)
	for item in range(n_items):
		members[find(item)].append(item)
	return sorted(members.values())


def build_action_groups(part):
	"""
	Groups of temporally independent actions of a part, in temporal order.

	a precedes b iff a and b co-occur at least once and, in every sub-sequence
	containing both, every a comes before every b. Actions without precedence in
	either direction share a group; groups still ordered both ways against each
	other are merged.
	"""
	part = [tuple(sequence) for sequence in part]
	alphabet = sorted(set(token for sequence in part for token in sequence))
	if not alphabet:
		return ActionGroupSequence([], [], frozenset(), [])
	index = dict((token, position) for position, token in enumerate(alphabet))
	n_actions = len(alphabet)

	cooccurrences = numpy.zeros((n_actions, n_actions), dtype=int)
	violated = numpy.zeros((n_actions, n_actions), dtype=bool)
	for sequence in part:
		firsts, lasts = {}, {}
		for position, token in enumerate(sequence):
			firsts.setdefault(token, position)
			lasts[token] = position
		for a, b in itertools.permutations(firsts, 2):
			cooccurrences[index[a], index[b]] += 1
			if not lasts[a] < firsts[b]:
				violated[index[a], index[b]] = True
	precedes = (cooccurrences > 0) & ~violated

	independent = [(i, j) for i, j in itertools.combinations(range(n_actions), 2) if not precedes[i, j] and not precedes[j, i]]
	components = _components(n_actions, independent)

	group_of = numpy.zeros(n_actions, dtype=int)
	for group, members in enumerate(components):
		group_of[members] = group
	edges = numpy.zeros((len(components), len(components)), dtype=bool)
	for i, j in zip(*numpy.nonzero(precedes)):
		if group_of[i] != group_of[j]:
			edges[group_of[i], group_of[j]] = True
	reach = _transitive_closure(edges)
	cyclic = [(g, h) for g, h in itertools.combinations(range(len(components)), 2) if reach[g, h] and reach[h, g]]
	merged = _components(len(components), cyclic)

	merged_cycles = []
	groups = []
	for members in merged:
		actions = sorted(alphabet[item] for group in members for item in components[group])
		if len(members) > 1:
			merged_cycles.append(tuple(actions))
			log.debug("Merged precedence cycle into one group: {0}".format(", ".join(actions)))
		groups.append((members, actions))

	def n_predecessors(entry):
		members, actions = entry
		return sum(1 for g in range(len(components)) if g not in members and any(reach[g, h] for h in members))
	groups.sort(key=lambda entry: (n_predecessors(entry), entry[1]))

	ordered = [frozenset(actions) for members, actions in groups]
	h_lists = [[tuple(token for token in sequence if token in group) for sequence in part] for group in ordered]
	return ActionGroupSequence(ordered, h_lists, frozenset(alphabet), merged_cycles)


def build_permutation_table(middles, keys):
	"""
	Key action orders of the middles.

	A middle's key action occurrences are cut into blocks of |keys|, each block
	one pass over all keys. Gap (i, j) < |keys| collects what lies between the
	j-th and the (j+1)-th key of a block of permutation i, gap (i, |keys|) what
	follows the block before the next one. Middles that cannot be cut into
	whole permutations are irregular and left out. escape_stats holds the
	fraction of regular middles with exactly one block and their mean block count.
	"""
	keys = tuple(keys)
	key_set = set(keys)
	n_keys = len(keys)
	first_counts = collections.Counter()
	occurrences = collections.Counter()
	gaps = collections.defaultdict(list)
	raw_blocks = []
	irregular = []
	for middle in middles:
		middle = tuple(middle)
		positions = [position for position, token in enumerate(middle) if token in key_set]
		if not positions or len(positions) % n_keys or positions[0] != 0 or positions[-1] != len(middle) - 1:
			irregular.append(middle)
			continue
		blocks = [positions[start:start + n_keys] for start in range(0, len(positions), n_keys)]
		orders = [tuple(middle[position] for position in block) for block in blocks]
		if any(set(order) != key_set for order in orders):
			irregular.append(middle)
			continue
		for number, (block, order) in enumerate(zip(blocks, orders)):
			for j in range(1, n_keys):
				gaps[(order, j)].append(middle[block[j - 1] + 1:block[j]])
			end = blocks[number + 1][0] if number + 1 < len(blocks) else block[-1] + 1
			gaps[(order, n_keys)].append(middle[block[-1] + 1:end])
		raw_blocks.append(orders)
		first_counts[orders[0]] += 1
		occurrences.update(orders)
	if irregular:
		log.warning("{0} middle part(s) do not pass the key actions in whole permutations and are left out.".format(len(irregular)))

	perms = sorted(occurrences, key=lambda order: (-first_counts[order], -occurrences[order], order))
	perm_index = dict((order, index) for index, order in enumerate(perms))
	gap_corpora = dict(((perm_index[order], j), corpus) for (order, j), corpus in gaps.items())
	block_sequences = [[perm_index[order] for order in orders] for orders in raw_blocks]
	n_regular = len(block_sequences)
	if n_regular:
		n_blocks = [len(blocks) for blocks in block_sequences]
		escape_stats = EscapeStats(n_blocks.count(1) / float(n_regular), float(numpy.mean(n_blocks)))
	else:
		escape_stats = EscapeStats(0.0, 0.0)
	return PermutationTable(perms, [first_counts[order] for order in perms], [occurrences[order] for order in perms],
	                        gap_corpora, block_sequences, escape_stats, irregular)


def _occurrence_shares(entries, alternatives):
	counts = collections.Counter(token for entry in entries for token in entry)
	total = float(sum(counts[alternative] for alternative in alternatives))
	return [counts[alternative] / total for alternative in alternatives]


def recursive_group_prob(entries, alternatives, forbid_repeat=None, smoothing=0.0):
	"""
	RecursiveProb of a group from its filtered sub-sequences (ε entries included).

	With smoothing, every alternative gets smoothing pseudo-counts as first step
	and as continuation.
	"""
	entries = [tuple(entry) for entry in entries]
	n_entries = float(len(entries))
	first_counts = collections.Counter(entry[0] for entry in entries if entry)
	n_escape = sum(1 for entry in entries if not entry)
	total = n_entries + smoothing * len(alternatives)
	first_step = [(first_counts[alternative] + smoothing) / total for alternative in alternatives]
	first_escape = n_escape / total
	non_empty = [len(entry) for entry in entries if entry]
	avg_len = float(numpy.mean(non_empty)) if non_empty else 1.0
	if smoothing > 0.0:
		counts = collections.Counter(token for entry in entries for token in entry)
		follow = [counts[alternative] + smoothing for alternative in alternatives]
	elif all(p > 0.0 for p in first_step):
		follow = None
	else:
		follow = _occurrence_shares(entries, alternatives)
	if forbid_repeat is None:
		forbid_repeat = not any(a == b for entry in entries for a, b in zip(entry, entry[1:]))
	return RecursiveProb(first_step, first_escape, avg_len, follow=follow, forbid_repeat=forbid_repeat)


def _group_rule(variable, actions, entries, recursive):
	spec = recursive_group_prob(entries, actions)
	if not recursive:
		return Or([Alternative([action], p) for action, p in zip(actions, spec.first_step)] + [Alternative([], spec.first_escape)])
	return Or([Alternative([action, variable], spec) for action in actions] + [Alternative([], spec)])


def part_rules(variable, part, recursive=True):
	"""
	(variable or None, rules) of one part: an AND rule over its action groups.

	Parts without any action collapse to ε, no rule is emitted.
	"""
	groups = build_action_groups(part)
	rules = collections.OrderedDict()
	if not groups.groups:
		return None, rules
	names = ["{0}_{1}".format(variable, number) for number in range(1, len(groups.groups) + 1)]
	rules[variable] = And(names)
	for name, group, entries in zip(names, groups.groups, groups.h_lists):
		rules[name] = _group_rule(name, sorted(group), entries, recursive)
	return variable, rules


def _permutation_symbols(table, index, rules, recursive):
	order = table.perms[index]
	symbols = []
	for j, key in enumerate(order, start=1):
		symbols.append(key)
		gap = table.gap_corpora.get((index, j), [])
		gap_variable, gap_rules = part_rules("V^M({0},{1})".format(index + 1, j), gap, recursive)
		if gap_variable is not None:
			symbols.append(gap_variable)
			rules.update(gap_rules)
	return symbols


def middle_rules(table, keys, perms="observed", recursive=True, variable="V^M"):
	"""
	Rules of the middle part.

	When every middle passes the keys once (or recursion is off), V^M is a plain
	OR over the permutation bodies. Otherwise V^M is a recursive OR over the
	permutation variables V^M_i -> keys and gaps of permutation i, then V^M.
	"""
	if perms not in PERMUTATION_POLICIES:
		raise InductionError("unknown permutation policy {0}".format(perms))
	if not table.perms:
		raise InductionError("no middle part passes every key action")
	table_perms = list(table.perms)
	first_counts = list(table.counts)
	occurrences = list(table.occurrences)
	if perms == "all":
		if len(keys) > MAX_ENUMERATED_KEYS:
			raise InductionError("cannot enumerate all orders of {0} key actions".format(len(keys)))
		unseen = sorted(set(itertools.permutations(keys)) - set(table_perms))
		table = table._replace(perms=table_perms + unseen)
		first_counts = [count + 1 for count in first_counts] + [1] * len(unseen)
		occurrences = [count + 1 for count in occurrences] + [1] * len(unseen)

	rules = collections.OrderedDict()
	n_perms = len(table.perms)
	total = float(sum(first_counts))
	first_step = [count / total for count in first_counts]
	bodies = [_permutation_symbols(table, index, rules, recursive) for index in range(n_perms)]

	if not recursive or table.escape_stats.avg_blocks <= 1.0:
		middle = collections.OrderedDict([(variable, Or([Alternative(body, p) for body, p in zip(bodies, first_step)]))])
		middle.update(rules)
		return middle

	follow = None if all(p > 0.0 for p in first_step) else [count / float(sum(occurrences)) for count in occurrences]
	# every regular middle passes the keys at least once, the first pass never escapes
	spec = RecursiveProb(first_step, 0.0, table.escape_stats.avg_blocks, follow=follow, forbid_repeat=False)
	names = ["{0}_{1}".format(variable, index + 1) for index in range(n_perms)]
	middle = collections.OrderedDict([(variable, Or([Alternative([name], spec) for name in names] + [Alternative([], spec)]))])
	for name, body in zip(names, bodies):
		middle[name] = And(body + [variable])
	middle.update(rules)
	return middle


def _boundaries(sequences, boundary_token):
	if boundary_token is None:
		return False
	return all(len(sequence) >= 3 and sequence[0] == boundary_token and sequence[-1] == boundary_token for sequence in sequences)


def induce(corpus, n_key, perms="observed", recursive=True, boundary_token=BOUNDARY_TOKEN):
	"""
	Activity grammar of a corpus.

	n_key = 0 skips the key action split; the whole sequences then form a single
	part V^S. recursive=False replaces the recursive group rules by one-step ORs.
	"""
	sequences = list(corpus.sequences)
	if not sequences:
		raise InductionError("cannot induce a grammar from an empty corpus")
	if n_key < 0:
		raise InductionError("number of key actions must not be negative, got {0}".format(n_key))

	lifted = _boundaries(sequences, boundary_token)
	if lifted:
		sequences = [sequence[1:-1] for sequence in sequences]
		log.debug("Lifting boundary token {0} into the start rule.".format(boundary_token))

	rules = collections.OrderedDict()
	body = []
	if n_key == 0:
		whole, whole_rules = part_rules("V^S", sequences, recursive)
		body.append(whole)
		rules.update(whole_rules)
	else:
		selection = select_key_actions(Corpus(sequences, activity=corpus.activity), n_key)
		split = split_corpus(sequences, selection.keys)
		if not split.middle:
			raise InductionError("no sequence of {0} contains every key action".format(corpus.activity))
		left, left_rules = part_rules("V^L", split.left, recursive)
		table = build_permutation_table(split.middle, selection.keys)
		right, right_rules = part_rules("V^R", split.right, recursive)
		log.debug("{0}: {1} key orders, {2:.3g} passes per middle on average.".format(
				corpus.activity, len(table.perms), table.escape_stats.avg_blocks
		))
		body.extend(symbol for symbol in (left, "V^M", right) if symbol is not None)
		rules.update(left_rules)
		rules.update(middle_rules(table, selection.keys, perms=perms, recursive=recursive))
		rules.update(right_rules)

	if lifted:
		body = [boundary_token] + body + [boundary_token]
	all_rules = collections.OrderedDict([(START, And(body))])
	all_rules.update(rules)

	clashes = sorted(set(all_rules) & corpus.alphabet)
	if clashes:
		raise InductionError("action {0} collides with a grammar variable name".format(clashes[0]))
	grammar = Grammar(all_rules, START, terminals=corpus.alphabet)
	log.info("Induced grammar for {0} with {1} rules from {2} sequences.".format(corpus.activity, len(all_rules), len(corpus)))
	return grammar


def induce_corpora(corpora, n_key, **kwargs):
	"""One grammar per activity, merged with weights proportional to the sequence counts."""
	corpora = list(corpora)
	if not corpora:
		raise InductionError("no corpora to induce from")
	if len(corpora) == 1:
		return induce(corpora[0], n_key, **kwargs)
	grammars = [(induce(corpus, n_key, **kwargs), len(corpus)) for corpus in corpora]
	return merge_grammars(grammars, names=[activity_name(corpus.activity) for corpus in corpora])


def activity_name(activity):
	return "_".join(activity.split())
