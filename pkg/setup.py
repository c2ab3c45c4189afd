#!/usr/bin/env python
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from setuptools import find_packages
from setuptools import setup

with open('README.rst') as f:
    readme = f.read()

setup(
    name='seedprice',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    description='Revenue maximization with a quantity constraint on monetizing social networks',
    long_description=readme,
    license='MIT',
    author='The seedprice authors',
    python_requires='>=3.8',
    install_requires=['pyyaml', 'networkx', 'numpy'],
    tests_require=['pytest', 'mock', 'hypothesis'],
    entry_points={
        'console_scripts': ['seedprice=seedprice.cli:run'],
    },
    keywords=['pricing', 'viral marketing', 'influence', 'social network', 'seed selection'],
)
