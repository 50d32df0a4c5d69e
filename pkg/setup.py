""" Power indices of linear threshold functions

.. moduleauthor:: powindex team


"""

from setuptools import setup, find_packages

version_tag = '0.1.0'

setup(name='powindex',
      version=version_tag,
      author='powindex team',
      install_requires=['numpy',
                        'scipy',
                        'pandas',
                        'optlang',
                        'sympy',
                        'pyyaml',
                        'tqdm'],
      extras_require={'test': ['pytest']},
      packages=find_packages(exclude=['tests']),
      entry_points={
          'console_scripts': ['powindex=powindex.cli:main'],
      },
      python_requires='>=3.7, <4',
      description='powindex, Chow parameters, Shapley indices and their '
                  'partial inverses for linear threshold functions',
      keywords=['powindex', 'ltf', 'shapley', 'chow parameters',
                'weighted voting games'],

      license='Apache 2.0',

      # See https://PyPI.python.org/PyPI?%3Aaction=list_classifiers
      classifiers=[
            'Development Status :: 3 - Alpha',

            'Intended Audience :: Science/Research',
            'Topic :: Scientific/Engineering :: Mathematics',
            'Environment :: Console',

            'License :: OSI Approved :: Apache Software License',

            'Programming Language :: Python :: 3.7',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
      ],
     )
