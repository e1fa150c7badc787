#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Create the pipy:
# python setup.py sdist
# twine check dist/*
# twine upload dist/*

from setuptools import setup, find_packages


setup(
    name='herbrand_lab',
    version='0.3.0',
    packages=find_packages(),
    description='Herbrand_lab computes Herbrand functions, Swan conductors '
                'and adjoint slopes from abstract ramification data.',
    long_description=open('README.rst', encoding='utf-8').read(),
    long_description_content_type='text/x-rst',
    author='Herbrand Lab developers',
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.6",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=[
        "numpy",
        "os_command_py==1.1.0",
    ],
    entry_points={
        'console_scripts': ['herbrand_lab = herbrand_lab.cli:main'],
    },
    package_data={'herbrand_lab': ['test/input/*.json']},
    include_package_data=True,
)
