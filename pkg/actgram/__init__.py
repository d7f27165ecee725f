# -*- coding: utf-8 -*-

"""
Activity grammars: induction from action-sequence corpora, breadth-first Earley
parsing of frame-wise class probabilities and grammar evaluation.
"""

__version__ = "1.0.0"
