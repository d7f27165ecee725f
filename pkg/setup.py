# -*- coding: utf-8 -*-

import os
import re

import setuptools

with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), "actgram", "__init__.py"), encoding="utf-8") as init_file:
    version = re.search(r"__version__\s*=\s*\"([^\"]+)\"", init_file.read()).group(1)

setuptools.setup(
    name="actgram",
    version=version,
    description="Activity grammar induction and grammar-constrained parsing of action segmentations",
    long_description="Induction of probabilistic activity grammars from action sequences, breadth-first Earley parsing of frame-wise class probabilities and temporal action segmentation refinement.",
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.17",
    ],
    extras_require={
        "test": ["pytest", "hypothesis", "scipy"],
    },
    entry_points={
        "console_scripts": [
            "actgram=actgram.scripts.actgram:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.7",
)
