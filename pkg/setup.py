import os

from setuptools import setup, find_packages

DESCRIPTION = "BHLab - combinatorial dimension profiles and numerical checks of the restricted Bohnenblust-Hille inequality"
NAME = "bhlab"
AUTHOR = "BHLab Development Team"
AUTHOR_EMAIL = "bhlab-dev@googlegroups.com"
LICENSE = 'BSD License'

here = os.path.abspath(os.path.dirname(__file__))
README = open(os.path.join(here, 'README.md'), encoding='utf-8').read()

VERSION = '0.1.0'

install_requires = [
    'numpy>=1.22',
    'scipy>=1.8',
    'sympy>=1.10',
    'pandas>=1.4',
    'prettytable',
    'ipython>=7.0',
    'traitlets'
]

setup(name=NAME,
      version=VERSION,
      description=DESCRIPTION,
      long_description=README,
      long_description_content_type='text/markdown',
      author=AUTHOR,
      author_email=AUTHOR_EMAIL,
      license=LICENSE,
      packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
      python_requires='>=3.8',
      classifiers=[
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: BSD License',
          'Programming Language :: Python',
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.8',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
          'Programming Language :: Python :: 3.11',
          'Topic :: Scientific/Engineering :: Mathematics'],
      install_requires=install_requires,
      entry_points={
          'console_scripts': [
              'bhlab=bhlab.bhcli.main:main'
          ]
      },
      test_suite='tests',
      extras_require={
          'dev': [
              'pycodestyle'
          ]
      })
