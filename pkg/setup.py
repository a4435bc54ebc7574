#!/usr/bin/env python

import os
import sys

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


if sys.argv[-1] == 'publish':
    os.system('python setup.py sdist upload')
    sys.exit()

readme = open('README.rst').read()
doclink = """
Documentation
-------------

The full documentation is in the docs folder and builds with Sphinx."""
history = open('HISTORY.rst').read().replace('.. :changelog:', '')

setup(
    name='codedit',
    version='0.1.0',
    description=(
        'Variable-length codes under edit relations: decipherability, '
        'completeness, independence and closed codes.'
    ),
    long_description=readme + '\n\n' + doclink + '\n\n' + history,
    author='codedit developers',
    packages=[
        'codedit',
    ],
    package_dir={'codedit': 'codedit'},
    include_package_data=True,
    install_requires=[
        'pandas',
        'numpy',
    ],
    python_requires='>=3.8',
    entry_points={
        'console_scripts': ['codedit=codedit.cli:main'],
    },
    license='MIT',
    zip_safe=False,
    keywords='codes edit-distance automata combinatorics-on-words',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
