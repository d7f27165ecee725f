# -*- coding: utf-8 -*-

import os

import pytest

import actgram
from actgram.grammar.grammarfile import load_grammar, read_grammar
from actgram.induction.corpus import load_corpora, read_corpora
from actgram.induction.kari import induce
from actgram.scripts.actgram import main


@pytest.fixture
def coffee_file(data_dir):
	return os.path.join(data_dir, "coffee.txt")


@pytest.fixture
def toy_file(data_dir):
	return os.path.join(data_dir, "toy.pcfg")


def write(path, text):
	path.write_text(text, encoding="utf-8")
	return str(path)


def test_induce_to_stdout(coffee_file, capsys):
	assert main(["induce", coffee_file, "--n-key", "1"]) == 0
	out = capsys.readouterr().out
	assert out.startswith("%start S\n")
	assert load_grammar(out) == induce(read_corpora(coffee_file)[0], 1)


def test_induce_then_validate(coffee_file, tmp_path, capsys):
	output = str(tmp_path / "coffee.pcfg")
	assert main(["induce", coffee_file, "--n-key", "1", "-o", output]) == 0
	assert capsys.readouterr().out == ""
	assert main(["validate", "-g", output]) == 0
	assert capsys.readouterr().out == "coffee: OK\n"


@pytest.mark.parametrize("algorithm", ["flat", "right-regular"])
def test_baseline_induction(coffee_file, tmp_path, capsys, algorithm):
	output = str(tmp_path / "baseline.pcfg")
	assert main(["induce", coffee_file, "--algo", algorithm, "--output", output]) == 0
	assert "V^M" not in read_grammar(output).rules


def test_invalid_grammar_fails_validation(tmp_path, capsys):
	grammar_file = write(tmp_path / "unreachable.pcfg", "S -> 'a'\nX -> 'b'\n")
	assert main(["validate", "-g", grammar_file]) == 1
	out = capsys.readouterr().out
	assert out.startswith("unreachable: 1 issue(s)\n")
	assert "variable X is unreachable from S" in out


def test_parse_toy_grammar(toy_file, data_dir, capsys):
	assert main(["parse", "-g", toy_file, "-p", os.path.join(data_dir, "uniform.csv")]) == 0
	lines = capsys.readouterr().out.splitlines()
	assert lines[0] == "sequence: x1 x5 x6"
	assert lines[2] == "grammar_prob: 0.245000"
	assert lines[3] in ("runner_up: x1 x5 x7 (grammar_prob 0.105000)", "runner_up: x2 x5 x6 (grammar_prob 0.105000)")
	assert lines[4].startswith("explored_states: ")


def test_parse_writes_labels(toy_file, tmp_path, capsys):
	classes = ["x{0}".format(number) for number in range(1, 8)]
	rows = [",".join("1.0" if token == label else "0.0" for token in classes) for label in ["x2", "x2", "x5", "x7", "x7", "x7"]]
	probs_file = write(tmp_path / "video.csv", ",".join(classes) + "\n" + "\n".join(rows) + "\n")
	labels_dir = tmp_path / "labels"
	assert main(["parse", "-g", toy_file, "-p", probs_file, "--labels-dir", str(labels_dir), "--trace"]) == 0
	out = capsys.readouterr().out
	assert "sequence: x2 x5 x7\n" in out
	assert "order\tset\trule\tprefix\toperation\tprobability\tqueued_depth\n" in out
	assert (labels_dir / "video.labels").read_text(encoding="utf-8") == "x2\nx2\nx5\nx7\nx7\nx7\n"


def test_refine(toy_file, tmp_path, capsys):
	classes = ["x{0}".format(number) for number in range(1, 8)]
	labels = ["x1", "x1", "x5", "x6", "x6"]
	rows = [",".join("0.9" if token == label else "{0!r}".format(0.1 / 6) for token in classes) for label in labels]
	probs_file = write(tmp_path / "video.csv", ",".join(classes) + "\n" + "\n".join(rows) + "\n")
	gt_file = write(tmp_path / "video.labels", "\n".join(labels) + "\n")
	report_dir = tmp_path / "reports"
	assert main(["refine", "-g", toy_file, "-p", probs_file, "--gt-labels", gt_file, "--report-dir", str(report_dir)]) == 0
	out = capsys.readouterr().out
	assert out.startswith("videos: 1 (0 parse failures)\n")
	assert "edit 100.00 100.00".split() in [line.split() for line in out.splitlines()]
	assert (report_dir / "refine_videos.csv").exists()


def test_metrics_of_identical_labels(tmp_path, capsys):
	prediction = write(tmp_path / "pred.labels", "a\na\nb\nb\nc\n")
	ground_truth = write(tmp_path / "gt.labels", "a\na\nb\nb\nc\n")
	assert main(["metrics", prediction, ground_truth]) == 0
	lines = capsys.readouterr().out.splitlines()
	assert lines[0].split() == ["labels", "edit", "f1@10", "f1@25", "f1@50", "accuracy"]
	assert lines[1].split() == ["pred"] + ["100.00"] * 5
	assert len(lines) == 2


def test_metrics_with_ground_truth_option(tmp_path, capsys):
	predictions = [write(tmp_path / "p1.labels", "a\nb\n"), write(tmp_path / "p2.labels", "a\na\n")]
	ground_truth = [write(tmp_path / "g1.labels", "a\nb\n"), write(tmp_path / "g2.labels", "b\nb\n")]
	assert main(["metrics"] + predictions + ["--gt-labels"] + ground_truth) == 0
	lines = capsys.readouterr().out.splitlines()
	assert [line.split()[0] for line in lines] == ["labels", "p1", "p2", "mean"]
	assert lines[2].split()[1:] == ["0.00"] * 5
	assert lines[3].split()[1:] == ["50.00"] * 5


def test_sample_is_deterministic(toy_file, capsys):
	assert main(["sample", "-g", toy_file, "--n-sequences", "5", "--seed", "3"]) == 0
	first = capsys.readouterr().out
	assert main(["sample", "-g", toy_file, "--n-sequences", "5", "--seed", "3"]) == 0
	assert capsys.readouterr().out == first
	assert len(load_corpora(first)[0]) == 5


def test_merge(toy_file, capsys):
	assert main(["merge", "-g", toy_file, toy_file, "--nicks", "a", "b", "--weights", "3", "1"]) == 0
	grammar = load_grammar(capsys.readouterr().out)
	assert [alternative.symbols for alternative in grammar.rules["S"].alternatives] == [("a::S",), ("b::S",)]
	assert [alternative.prob.p for alternative in grammar.rules["S"].alternatives] == pytest.approx([0.75, 0.25])


def test_synth_and_eval(tmp_path, capsys):
	common = ["--n-grammars", "2", "--n-variables", "5", "--n-terminals", "5", "--seq-per-grammar", "10", "--seed", "1"]
	assert main(["synth", "--output-dir", str(tmp_path)] + common) == 0
	assert sorted(os.listdir(str(tmp_path))) == ["grammar_001.pcfg", "grammar_001.txt", "grammar_002.pcfg", "grammar_002.txt"]
	corpora = read_corpora(str(tmp_path / "grammar_001.txt"))
	assert [corpus.activity for corpus in corpora] == ["seen", "unseen"]
	assert [len(corpus) for corpus in corpora] == [5, 5]

	assert main(["eval", "--report-dir", str(tmp_path / "reports")] + common) == 0
	out = capsys.readouterr().out
	assert out.startswith("algorithm: kari\n")
	assert sorted(os.listdir(str(tmp_path / "reports"))) == ["eval_confusion.csv", "eval_grammars.csv"]


def output_files(directory):
	"""Relative path -> bytes of every file below directory."""
	files = {}
	for root, dirs, names in os.walk(str(directory)):
		for name in names:
			path = os.path.join(root, name)
			with open(path, "rb") as handle:
				files[os.path.relpath(path, str(directory))] = handle.read()
	return files


@pytest.mark.parametrize("command", ["induce", "synth", "eval", "refine"])
def test_reruns_write_identical_files(command, coffee_file, toy_file, tmp_path, capsys):
	classes = ["x{0}".format(number) for number in range(1, 8)]
	labels = ["x1", "x1", "x5", "x6", "x6"]
	rows = [",".join("0.6" if token == label else "{0!r}".format(0.4 / 6) for token in classes) for label in labels]
	probs_file = write(tmp_path / "video.csv", ",".join(classes) + "\n" + "\n".join(rows) + "\n")
	gt_file = write(tmp_path / "video.labels", "\n".join(labels) + "\n")
	synthetic = ["--n-grammars", "2", "--n-variables", "5", "--n-terminals", "5", "--seq-per-grammar", "10", "--seed", "4"]

	def arguments(output):
		if command == "induce":
			return ["induce", coffee_file, "--n-key", "1", "-o", str(output / "coffee.pcfg")]
		if command == "synth":
			return ["synth", "--output-dir", str(output)] + synthetic
		if command == "eval":
			return ["eval", "--report-dir", str(output / "reports")] + synthetic
		return ["refine", "-g", toy_file, "-p", probs_file, "--gt-labels", gt_file,
		        "--report-dir", str(output / "reports"), "--labels-dir", str(output / "labels")]

	runs = []
	for name in ("first", "second"):
		output = tmp_path / name
		output.mkdir()
		assert main(arguments(output)) == 0
		runs.append(output_files(output))
	assert runs[0]
	assert runs[0] == runs[1]


def test_config_file_defaults(coffee_file, tmp_path, capsys):
	config = write(tmp_path / "run.cfg", "# induction settings\nn-key = 0\nboundary-token = none\n")
	assert main(["induce", coffee_file, "--config", config]) == 0
	assert "V^S" in load_grammar(capsys.readouterr().out).rules
	assert main(["induce", coffee_file, "--config", config, "--n-key", "1"]) == 0
	rules = load_grammar(capsys.readouterr().out).rules
	assert "V^M" in rules
	assert "V^S" not in rules


def test_version(capsys):
	with pytest.raises(SystemExit) as exit_info:
		main(["--version"])
	assert exit_info.value.code == 0
	assert capsys.readouterr().out.strip() == "actgram " + actgram.__version__


def test_unknown_option(coffee_file, capsys):
	with pytest.raises(SystemExit) as exit_info:
		main(["induce", coffee_file, "--n-keys", "1"])
	assert exit_info.value.code == 2


def test_library_errors_end_with_status_one(tmp_path, capsys):
	assert main(["validate", "-g", str(tmp_path / "missing.pcfg")]) == 1
	assert "actgram: error: ConfigError" in capsys.readouterr().err
	assert main([]) == 1
	assert main(["induce", str(tmp_path / "missing.txt")]) == 1
	bad_grammar = write(tmp_path / "bad.pcfg", "S -> 'a' [0.5] |\n")
	assert main(["validate", "-g", bad_grammar]) == 1
	assert "GrammarSyntaxError" in capsys.readouterr().err


def test_output_needs_a_single_grammar(tmp_path, capsys):
	assert main(["synth", "--n-grammars", "2", "--n-variables", "5", "--n-terminals", "5", "--seq-per-grammar", "10",
	             "-o", str(tmp_path / "one.pcfg"), "--corpus-output", str(tmp_path / "one.txt")]) == 1
	assert not os.listdir(str(tmp_path))


def test_list_available_modules(capsys):
	assert main(["--list-available-modules"]) == 0
	out = capsys.readouterr().out
	assert "InduceGrammar" in out
	assert "parse: InputGrammar => InputProbabilities => ParseProbabilities => PrintParse => ExportLabels" in out
