# -*- coding: utf-8 -*-

import logging
log = logging.getLogger(__name__)

import os

from actgram.errors import ConfigError


class ConfigDict(dict):
	"""
	Run settings read from plain "key = value" text files.

	Keys are normalised to argument destinations ("queue-size" -> "queue_size"),
	values stay strings so that the argument parser converts them like command
	line input. Lines starting with COMMENT_DELIMITER are ignored, as is
	everything after the delimiter on a line.
	"""

	COMMENT_DELIMITER = "#"

	def __init__(self, config=None):
		if config is None:
			dict.__init__(self)
		elif isinstance(config, dict):
			dict.__init__(self, config)
		elif isinstance(config, str):
			if not os.path.exists(os.path.expandvars(config)):
				raise ConfigError("config file \"{0}\" does not exist".format(config))
			dict.__init__(self, ConfigDict.readConfigFile(os.path.expandvars(config)))
		else:
			raise TypeError("Unsupported type \"%s\" in ConfigDict constructor" % type(config))

	@staticmethod
	def readConfigFile(filename):
		config = {}
		with open(filename, encoding="utf-8") as config_file:
			for line_number, line in enumerate(config_file, start=1):
				line = line.split(ConfigDict.COMMENT_DELIMITER, 1)[0].strip()
				if not line:
					continue
				key, separator, value = line.partition("=")
				if not separator or not key.strip():
					raise ConfigError("{0}:{1}: expected \"key = value\", got \"{2}\"".format(filename, line_number, line))
				config[key.strip().replace("-", "_")] = value.strip()
		log.debug("Read {0} settings from \"{1}\".".format(len(config), filename))
		return config
