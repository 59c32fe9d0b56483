# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()
with open("version", "r") as fh:
    version = fh.read().strip()

setup(
    name="pframe",
    version=version,
    author="The pframe developers",
    description="Parseval frames of piecewise constant functions and their dilation to Cuntz isometries",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=['pframe*']),
    install_requires=['numpy'],
    extras_require={
        'test': ['pytest'],
        'docs': ['sphinx'],
        'benchmark': ['asv'],
    },
    entry_points={
        'console_scripts': ['pframe=pframe.cli:main'],
    },
    python_requires=">=3.8",
    classifiers=(
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v2 or later (GPLv2+)",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent")
)
