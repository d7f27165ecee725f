# -*- coding: utf-8 -*-

"""
"""

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import collections
import importlib
import importlib.util
import inspect
import os
import pkgutil
import sys

import actgram.actgramparser as actgramparser
import actgram.pipelinedata as pipelinedata

from actgram.analysisbase import AnalysisBase
from actgram.inputbase import InputBase
from actgram.outputbase import OutputBase

from actgram.errors import ConfigError
from actgram.utility.configfile import ConfigDict
import actgram.utility.tools as tools


ModuleChain = collections.namedtuple("ModuleChain", ["input_modules", "analysis_modules", "output_modules"])

# default processor chain per command
COMMANDS = collections.OrderedDict([
	("induce", ModuleChain(["InputCorpus"], ["InduceGrammar"], ["ExportGrammar"])),
	("validate", ModuleChain(["InputGrammar"], ["ValidateGrammar"], ["PrintValidation"])),
	("sample", ModuleChain(["InputGrammar"], ["SampleSequences"], ["ExportCorpus"])),
	("merge", ModuleChain(["InputGrammar"], ["MergeGrammars"], ["ExportGrammar"])),
	("parse", ModuleChain(["InputGrammar", "InputProbabilities"], ["ParseProbabilities"], ["PrintParse", "ExportLabels"])),
	("refine", ModuleChain(["InputGrammar", "InputProbabilities", "InputLabels"], ["RefineSegmentation"], ["ExportLabels", "ExportReport"])),
	("synth", ModuleChain([], ["SynthesizeGrammars"], ["ExportGrammar", "ExportCorpus"])),
	("eval", ModuleChain([], ["GrammarEvaluation"], ["ExportReport"])),
	("metrics", ModuleChain(["InputLabels"], ["SegmentationMetrics"], ["PrintMetrics"])),
])

BASE_CLASSES = collections.OrderedDict([
	("input_modules", InputBase),
	("analysis_modules", AnalysisBase),
	("output_modules", OutputBase),
])

MODULE_PACKAGES = ["actgram.input_modules", "actgram.analysis_modules", "actgram.output_modules"]


class ActGramCore(object):

	def __init__(self, args=None, parser=None, additional_modules_dirs=None):
		super(ActGramCore, self).__init__()

		# Dict of all available processors
		self.available_processors = {}
		# List of active processors
		self.processors = []
		# Additional directories searched for processor files
		self._modules_dirs = []

		# First time parsing of cmd arguments
		if parser is None:
			parser = actgramparser.ActGramParser(commands=list(COMMANDS.keys()))
		self.parser = parser
		self._args_list = list(sys.argv[1:] if args is None else args)
		log.debug("First parsing of arguments...")
		known_args, unknown_args = self.parser.parse_known_args(self._args_list)
		self.args = vars(known_args)

		modules_dirs = list(self.args["modules_search_paths"] or [])
		if os.environ.get("ACTGRAM_MODULES_SEARCH_PATH"):
			modules_dirs += os.environ["ACTGRAM_MODULES_SEARCH_PATH"].split(":")
		if additional_modules_dirs:
			modules_dirs += additional_modules_dirs
		for directory in modules_dirs:
			self.register_modules_dir(directory)

	def _detect_available_processors(self):
		"""Detect all valid processors in the module packages and search directories."""
		modules = []
		for package_name in MODULE_PACKAGES:
			package = importlib.import_module(package_name)
			for module_info in pkgutil.iter_modules(package.__path__):
				modules.append(importlib.import_module(package_name + "." + module_info.name))

		for module_dir in self._modules_dirs:
			for filename in sorted(os.listdir(module_dir)):
				if not filename.endswith(".py") or filename.startswith("_"):
					continue
				module_name = os.path.splitext(filename)[0]
				log.debug("Importing modules from path {0}.".format(os.path.join(module_dir, filename)))
				try:
					module_spec = importlib.util.spec_from_file_location(module_name, os.path.join(module_dir, filename))
					module = importlib.util.module_from_spec(module_spec)
					module_spec.loader.exec_module(module)
				except ImportError as error:
					log.warning("Failed to import module {0} from {1}: {2}".format(module_name, module_dir, error))
					continue
				modules.append(module)

		for module in modules:
			for name, obj in inspect.getmembers(module, inspect.isclass):
				if issubclass(obj, tuple(BASE_CLASSES.values())) and obj not in BASE_CLASSES.values():
					self.available_processors[obj.name()] = obj

	def register_modules_dir(self, module_dir):
		"""Add directory to list of searched directories for modules."""
		module_dir = os.path.expandvars(module_dir)
		if os.path.isdir(module_dir):
			self._modules_dirs.append(module_dir)
		else:
			log.warning("Couldn't append {0} to list of module directories!".format(module_dir))

	def _isvalid_processor(self, processor_name, processor_type):
		return (processor_name in self.available_processors and
		        issubclass(self.available_processors[processor_name], processor_type))

	def _chain(self, command):
		default_chain = COMMANDS[command] if command is not None else ModuleChain([], [], [])
		chain = []
		for key, baseclass in BASE_CLASSES.items():
			module_names = self.args[key]
			if module_names is None:
				module_names = getattr(default_chain, key)
			for module in module_names:
				if not self._isvalid_processor(module, baseclass):
					raise ConfigError("{0} \"{1}\" cannot be found or imported".format(
						key.replace("_modules", " module").capitalize(), module))
				chain.append(self.available_processors[module])
		return chain

	def run(self):
		"""
		Add all requested processors, then reparse all command line arguments.
		Finally prepare and run all processors and write their outputs.

		Returns the exit status of the command.
		"""
		self._detect_available_processors()

		config = ConfigDict(self.args["config"]) if self.args["config"] is not None else None

		if self.args["list_available_modules"]:
			self._print_available_modules()
			return 0

		command = self.args["command"]
		if command is None and not any(self.args[key] for key in BASE_CLASSES):
			if self.args["help"]:
				self.parser.print_help()
				return 0
			raise ConfigError("no command given, choose from {0}".format(", ".join(COMMANDS.keys())))

		self.processors = [processor_class() for processor_class in self._chain(command)]

		# let processors modify the parser and then parse the arguments again
		for processor in self.processors:
			processor.modify_argument_parser(self.parser, self.args)

		# config file values are defaults, command line flags win
		if config is not None:
			config.pop("config", None)
			config.pop("command", None)
			self.parser.set_config_defaults(config)

		log.debug("Second parsing of arguments...")
		self.args = vars(self.parser.parse_args(self._args_list))
		log.debug("\tdone.")
		pipelineData = pipelinedata.PipelineData(self.args)

		# print the final processor chain
		log.debug("Processors will be run in the following order")
		log.debug(" => ".join([processor.name() for processor in self.processors]))

		# prepare arguments for all processors before running any of them
		for processor in self.processors:
			processor.prepare_args(self.parser, pipelineData)
		for processor in self.processors:
			processor.run(pipelineData)

		pipelineData.save()
		return pipelineData.exit_status

	def _print_available_modules(self):
		"""Prints all available modules to stdout."""
		title_strings = ["Input modules:", "Analysis modules:", "Output modules:"]
		color = sys.stdout.isatty()
		for index, (title_string, baseclass) in enumerate(zip(title_strings, BASE_CLASSES.values())):
			print(("\n" if index > 0 else "") + (tools.get_colored_string(title_string, "yellow") if color else title_string))
			self._print_module_list(sorted([module for module in self.available_processors if issubclass(self.available_processors[module], baseclass)]), color)
		print("\nCommands:")
		for command, chain in COMMANDS.items():
			print("\t{0}: {1}".format(command, " => ".join(tools.flattenList(chain))))

	def _print_module_list(self, module_list, color=False):
		"""Print a list of modules (name and docstring)"""
		for module in module_list:
			print("\t" + (tools.get_colored_string(module, "green") if color else module))
			if inspect.getdoc(self.available_processors[module]):
				print(tools.get_indented_text("\t\t", inspect.getdoc(self.available_processors[module])))
