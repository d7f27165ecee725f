#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
import actgram.utility.logger as logger
log = logging.getLogger(__name__)

import sys

import actgram.core as actgramcore
from actgram.errors import ActGramError


def main(argv=None):
	"""
	Command line entry point.

	Library errors end the run with one "actgram: error: ..." line on stderr and
	exit status 1, argument errors with the argparse usage and status 2.
	"""
	try:
		return actgramcore.ActGramCore(args=argv).run()
	except ActGramError as error:
		if not logging.getLogger().handlers:
			logger.initLogger()
		log.critical("actgram: error: {0}: {1}".format(error.__class__.__name__, error))
		return 1


if __name__ == "__main__":
	sys.exit(main())
