# -*- coding: utf-8 -*-

"""
Grammar evaluation on synthetic grammars.

For every synthetic grammar, sequences are sampled and split into a seen and
an unseen set. A grammar is induced from the seen set and asked to parse the
unseen sets of all grammars: confusion[i][j] is the fraction of grammar j's
unseen sequences accepted by the grammar induced for grammar i.
"""

import logging
log = logging.getLogger(__name__)

import collections
import csv
import io

import numpy

from actgram.errors import ActGramError, EvaluationError, GrammarError
from actgram.evaluation.synthetic import generate_synthetic_grammar
from actgram.grammar.sampling import sample_sequences
from actgram.induction.baselines import induce_flat, induce_right_regular, NGramConfig
from actgram.induction.corpus import Corpus
from actgram.induction.kari import induce
from actgram.parsing.bep import BreadthFirstEarleyParser
import actgram.utility.tools as tools


ALGORITHMS = ("kari", "flat", "right-regular")
MAX_GRAMMAR_DRAWS = 10

SyntheticCase = collections.namedtuple("SyntheticCase", ["name", "grammar", "seen", "unseen"])


def induce_with(algorithm, corpus, n_key=2, ngram=None, recursive=True, perms="observed"):
	if algorithm == "kari":
		return induce(corpus, n_key, perms=perms, recursive=recursive)
	if algorithm == "flat":
		return induce_flat([corpus])
	if algorithm == "right-regular":
		return induce_right_regular(corpus, ngram if ngram is not None else NGramConfig())
	raise EvaluationError("unknown induction algorithm {0}".format(algorithm))


def make_case(arguments):
	"""
	SyntheticCase number index: a grammar and its seen and unseen samples.

	A grammar whose sequences cannot be sampled is drawn again, up to
	MAX_GRAMMAR_DRAWS times; after that the case keeps empty sample sets and
	counts as a failure of every induction algorithm.
	"""
	cfg, index, seed = arguments
	rng = numpy.random.default_rng(seed)
	name = "grammar_{0:03d}".format(index + 1)
	for draw in range(MAX_GRAMMAR_DRAWS):
		grammar = generate_synthetic_grammar(cfg, index, rng)
		try:
			sequences = sample_sequences(grammar, rng, cfg.seq_per_grammar, cfg.max_len, distinct_adjacent=True)
		except GrammarError as error:
			log.debug("{0}: drawing a new grammar ({1}).".format(name, error))
			continue
		n_seen = min(max(1, int(round(cfg.seen_fraction * len(sequences)))), len(sequences) - 1)
		order = rng.permutation(len(sequences))
		seen = [sequences[position] for position in order[:n_seen]]
		unseen = [sequences[position] for position in order[n_seen:]]
		return SyntheticCase(name, grammar, seen, unseen)
	log.warning("{0}: no sequences could be sampled from {1} grammar draws.".format(name, MAX_GRAMMAR_DRAWS))
	return SyntheticCase(name, grammar, [], [])


def make_cases(cfg, n_processes=1):
	seeds = numpy.random.SeedSequence(cfg.seed).spawn(cfg.n_grammars)
	return tools.parallelize(make_case, [(cfg, index, seed) for index, seed in enumerate(seeds)], n_processes=n_processes,
	                         description="Generating synthetic grammars")


def _induce_case(arguments):
	case, algorithm, options = arguments
	if not case.seen:
		log.warning("No seen sequences for {0}, nothing to induce from.".format(case.name))
		return None
	try:
		return induce_with(algorithm, Corpus(case.seen, activity=case.name), **options)
	except ActGramError as error:
		log.warning("Induction failed for {0}: {1}".format(case.name, error))
		return None


def _membership_row(arguments):
	grammar, unseen_sets = arguments
	if grammar is None:
		return [0.0] * len(unseen_sets)
	parser = BreadthFirstEarleyParser(grammar, n_queue=None)
	return [float(numpy.mean([parser.accepts(sequence) for sequence in unseen])) if unseen else 0.0 for unseen in unseen_sets]


class EvalReport(object):
	def __init__(self, config, algorithm, names, confusion, n_unseen, failed):
		super(EvalReport, self).__init__()
		self.config = config
		self.algorithm = algorithm
		self.names = list(names)
		self.confusion = numpy.array(confusion, dtype=float)
		self.n_unseen = numpy.array(n_unseen, dtype=float)
		self.failed = list(failed)

		accepted = self.confusion * self.n_unseen[numpy.newaxis, :]
		self.recall = numpy.diag(self.confusion).copy()
		true_positives = numpy.diag(accepted)
		all_positives = accepted.sum(axis=1)
		self.precision = numpy.where(all_positives > 0, true_positives / numpy.where(all_positives > 0, all_positives, 1.0), 0.0)

	@property
	def macro_precision(self):
		return float(numpy.mean(self.precision))

	@property
	def macro_recall(self):
		return float(numpy.mean(self.recall))

	def _header(self):
		lines = ["# algorithm = {0}".format(self.algorithm)]
		lines.extend("# {0} = {1}".format(key, value) for key, value in self.config.items())
		return "\n".join(lines) + "\n"

	def to_csv(self):
		output = io.StringIO()
		output.write(self._header())
		writer = csv.writer(output, lineterminator="\n")
		writer.writerow(["grammar", "precision", "recall", "n_unseen", "induction_failed"])
		for index, name in enumerate(self.names):
			writer.writerow([name, "{0:.6f}".format(self.precision[index]), "{0:.6f}".format(self.recall[index]),
			                 int(self.n_unseen[index]), int(name in self.failed)])
		writer.writerow(["macro", "{0:.6f}".format(self.macro_precision), "{0:.6f}".format(self.macro_recall), int(self.n_unseen.sum()), len(self.failed)])
		return output.getvalue()

	def confusion_csv(self):
		output = io.StringIO()
		output.write(self._header())
		writer = csv.writer(output, lineterminator="\n")
		writer.writerow(["induced \\ sampled"] + self.names)
		for name, row in zip(self.names, self.confusion):
			writer.writerow([name] + ["{0:.6f}".format(value) for value in row])
		return output.getvalue()

	def summary(self):
		lines = [
			"algorithm: {0}".format(self.algorithm),
			"grammars: {0} ({1} induction failures)".format(len(self.names), len(self.failed)),
			"macro precision: {0:.4f}".format(self.macro_precision),
			"macro recall: {0:.4f}".format(self.macro_recall),
		]
		return "\n".join(lines) + "\n"


def run_grammar_eval(cfg, algorithm="kari", n_processes=1, n_key=None, ngram=None, recursive=True, perms="observed"):
	"""EvalReport of one induction algorithm on the synthetic grammars of cfg."""
	if algorithm not in ALGORITHMS:
		raise EvaluationError("unknown induction algorithm {0}".format(algorithm))
	cases = make_cases(cfg, n_processes=n_processes)
	options = {}
	if algorithm == "kari":
		options = {"n_key": cfg.n_key_terminals if n_key is None else n_key, "recursive": recursive, "perms": perms}
	elif algorithm == "right-regular":
		options = {"ngram": ngram}

	induced = tools.parallelize(_induce_case, [(case, algorithm, options) for case in cases], n_processes=n_processes,
	                            description="Inducing grammars ({0})".format(algorithm))
	unseen_sets = [case.unseen for case in cases]
	confusion = tools.parallelize(_membership_row, [(grammar, unseen_sets) for grammar in induced], n_processes=n_processes,
	                              description="Parsing unseen sequences")

	failed = [case.name for case, grammar in zip(cases, induced) if grammar is None]
	header = cfg.header()
	header.update(options)
	report = EvalReport(header, algorithm, [case.name for case in cases], confusion, [len(unseen) for unseen in unseen_sets], failed)
	log.info("{0}: macro precision {1:.4f}, macro recall {2:.4f}.".format(algorithm, report.macro_precision, report.macro_recall))
	return report
