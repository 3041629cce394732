#!/usr/bin/env python

from setuptools import setup, find_packages
import os

from version import __version__

here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'README.md')) as f:
    README = f.read()

# Read a requirements file, filtering out comments and empty lines
def read_requirements(name):
    with open(os.path.join(here, name)) as f:
        return [
            line.split('#')[0].strip()
            for line in f.read().splitlines()
            if line.strip() and not line.strip().startswith("#")
        ]

requires = read_requirements('requirements.txt')
test_requires = read_requirements('test-requirements.txt')

setup(name='python-casimirpolder',
        version=__version__,
        description='Thermal Casimir-Polder free energy and entropy of an atom near a plasma sphere',
        long_description=README,
        long_description_content_type='text/markdown',
        classifiers=[
            "Programming Language :: Python",
            "Topic :: Scientific/Engineering :: Physics",
            "License :: OSI Approved :: GNU Lesser General Public License v3 or later (LGPLv3+)",
        ],
        keywords='casimir-polder lifshitz matsubara entropy',
        packages=find_packages(exclude=['examples', 'examples.*']),
        package_data={
            'casimirpolder': ['data/*.json', 'data/*.conf'],
            'casimirpolder.tests': ['data/*.json'],
        },
        zip_safe=False,
        install_requires=requires,
        extras_require={'test': test_requires},
        tests_require=test_requires,
        entry_points={
            'console_scripts': ['casimirpolder = casimirpolder.cli:main'],
        },
        test_suite="casimirpolder.tests"
    )
