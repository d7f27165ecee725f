# -*- coding: utf-8 -*-

"""
Log-space probability arithmetic.
"""

import math

import numpy


NEG_INF = float("-inf")


def log_sum(a, b):
	"""log(exp(a) + exp(b)) via the max-shift identity; -inf is the neutral element."""
	z = max(a, b)
	if z == NEG_INF:
		return NEG_INF
	return z + math.log(math.exp(a - z) + math.exp(b - z))


def safe_log(value):
	"""Natural logarithm mapping 0 to -inf (scalars and arrays)."""
	if numpy.ndim(value) == 0:
		return math.log(value) if value > 0.0 else NEG_INF
	with numpy.errstate(divide="ignore"):
		return numpy.log(numpy.asarray(value, dtype=float))
