#!/usr/bin/env python
from pathlib import Path

from setuptools import setup

exec(Path("negacyclic", "__version__.py").read_text())  # Load __version__ into locals

setup(
    name="negacyclic",
    version=locals()["__version__"],
    license="BSD",
    author="negacyclic developers",
    keywords=["coding theory", "negacyclic codes", "finite rings", "minimum distance"],
    description=(
        "Structure, rank and minimum distance of negacyclic codes over "
        "F_p + uF_p + vF_p + uvF_p."
    ),
    long_description=Path("README.md").read_text("utf-8"),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=["negacyclic"],
    package_data={"negacyclic": ["py.typed"]},
    entry_points={
        "pytest11": ["negacyclic = negacyclic.plugin"],
        "console_scripts": ["negacyclic = negacyclic.cli:main"],
    },
    include_package_data=True,
    zip_safe=False,
    python_requires=">=3.8",
    install_requires=["numpy>=1.20", "pyparsing>=3.0", "sympy>=1.7"],
    extras_require={"test": ["pytest", "pytest-cov", "hypothesis"]},
)
