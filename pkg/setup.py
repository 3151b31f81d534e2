#!/usr/bin/env python
# -*- coding: utf-8 -*-
import codecs
import importlib.util
import os
from setuptools import setup, find_packages


def load_metadata(path):
    spec = importlib.util.spec_from_file_location('metadata', path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


# load metadata.
metadata = load_metadata(os.path.join('forestf', 'metadata.py'))


def read(fname):
    file_path = os.path.join(os.path.dirname(__file__), fname)
    return codecs.open(file_path, encoding='utf-8').read()


def load_requirements(fname):
    # only handles a simple subset of requirements format.
    pkgs = []
    for line in read(fname).splitlines():
        if not line or line.startswith('#'):
            continue
        pkgs.append(line)
    return pkgs


setup(
    # informations.
    name=metadata.NAME,
    version=metadata.VERSION,
    author=metadata.AUTHORS[0],
    author_email=metadata.EMAILS[0],
    maintainer=metadata.AUTHORS[0],
    maintainer_email=metadata.EMAILS[0],
    license=metadata.LICENSE,
    url=metadata.URL,
    description=metadata.DESCRIPTION,
    long_description=read('README.md'),
    long_description_content_type='text/markdown',
    # https://pypi.python.org/pypi?:action=list_classifiers
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3.6',
    ],
    # critical configurations.
    packages=find_packages(
        exclude=['tests', 'tests.*', 'examples', 'examples.*'],
    ),
    package_data={'forestf': ['schemas/*.json']},
    python_requires='>=3.6',
    install_requires=load_requirements('requirements.txt'),
    entry_points={
        'console_scripts': [
            'forestf = forestf.cli:entry_point',
        ],
    },
)
