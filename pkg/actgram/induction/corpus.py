# -*- coding: utf-8 -*-

"""
Training corpora of action sequences.

File format: UTF-8 text, one sequence per line with whitespace-separated action
tokens. A line "%activity <label>" starts the sequences of a new activity,
"#" starts a comment.
"""

import logging
log = logging.getLogger(__name__)

import collections
import itertools

from actgram.errors import FileFormatError, InductionError


DEFAULT_ACTIVITY = "activity"


def dedup_adjacent(sequence):
	"""Collapse runs of repeated adjacent tokens."""
	return tuple(token for token, group in itertools.groupby(sequence))


class Corpus(object):
	def __init__(self, sequences, activity=DEFAULT_ACTIVITY, alphabet=None):
		super(Corpus, self).__init__()
		self.activity = activity
		self.sequences = tuple(tuple(sequence) for sequence in sequences)
		if any(len(sequence) == 0 for sequence in self.sequences):
			raise InductionError("corpus {0} contains an empty sequence".format(activity))
		observed = frozenset(token for sequence in self.sequences for token in sequence)
		self.alphabet = observed if alphabet is None else frozenset(alphabet)
		if not observed <= self.alphabet:
			raise InductionError("corpus {0} uses tokens outside its alphabet: {1}".format(activity, sorted(observed - self.alphabet)))

	def __len__(self):
		return len(self.sequences)

	def __iter__(self):
		return iter(self.sequences)

	def counts(self):
		return collections.Counter(token for sequence in self.sequences for token in sequence)

	def deduplicated(self):
		return Corpus([dedup_adjacent(sequence) for sequence in self.sequences], activity=self.activity, alphabet=self.alphabet)

	def __eq__(self, other):
		if not isinstance(other, Corpus):
			return NotImplemented
		return self.activity == other.activity and self.sequences == other.sequences

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	__hash__ = None

	def __repr__(self):
		return "Corpus({0!r}, {1} sequences, {2} actions)".format(self.activity, len(self.sequences), len(self.alphabet))


def load_corpora(text, source="<string>", dedup=False):
	"""Corpora of a corpus file in order of appearance, one per activity."""
	sections = collections.OrderedDict()
	activity = None
	for line_number, line in enumerate(text.splitlines(), start=1):
		line = line.split("#", 1)[0].strip()
		if not line:
			continue
		if line.startswith("%"):
			directive, _, label = line.partition(" ")
			if directive != "%activity" or not label.strip():
				raise FileFormatError("{0}:{1}: expected \"%activity <label>\"".format(source, line_number))
			activity = label.strip()
			if activity in sections:
				raise FileFormatError("{0}:{1}: activity {2} appears twice".format(source, line_number, activity))
			sections[activity] = []
			continue
		if activity is None:
			activity = DEFAULT_ACTIVITY
			sections[activity] = []
		sequence = tuple(line.split())
		sections[activity].append(dedup_adjacent(sequence) if dedup else sequence)

	if not sections or not any(sections.values()):
		raise FileFormatError("{0}: no action sequences".format(source))
	corpora = []
	for activity, sequences in sections.items():
		if not sequences:
			log.warning("{0}: activity {1} has no sequences, skipping it.".format(source, activity))
			continue
		corpora.append(Corpus(sequences, activity=activity))
	return corpora


def read_corpora(filename, dedup=False):
	with open(filename, encoding="utf-8") as corpus_file:
		return load_corpora(corpus_file.read(), source=filename, dedup=dedup)


def save_corpora(corpora, with_header=None):
	"""Text of a corpus file; activity headers are written for several corpora or on request."""
	corpora = list(corpora)
	if with_header is None:
		with_header = len(corpora) > 1 or any(corpus.activity != DEFAULT_ACTIVITY for corpus in corpora)
	lines = []
	for corpus in corpora:
		if with_header:
			lines.append("%activity " + corpus.activity)
		lines.extend(" ".join(sequence) for sequence in corpus.sequences)
	return "\n".join(lines) + "\n"
