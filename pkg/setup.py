#!/usr/bin/env python

"""``Setup.py`` for PyENM."""

import os
import sys
import setuptools
from setuptools.command.install import install

from pyenm.info import __version__, __author__, __email__, __url__, DOWNLOAD_URL


directory = os.path.dirname(os.path.abspath(__file__))

if os.path.exists('MANIFEST'):
    os.remove('MANIFEST')

packages = ["pyenm",
            "pyenm.cli",
            "pyenm.interfaces",
            "pyenm.pipelines",
            "pyenm.tests"]

package_data = {"pyenm.tests": ['data/*.csv']}

# Extract package requirements from Conda environment.yml
# Test and documentation tools from the pip section go to extras_require
install_requires = []
extras_require = {'test': [], 'doc': []}
path = os.path.join(directory, 'environment.yml')
with open(path) as read_file:
    state = "PREAMBLE"
    for line in read_file:
        line = line.rstrip().lstrip(" -")
        if line == "dependencies:":
            state = "CONDA_DEPS"
        elif line == "pip:":
            state = "PIP_DEPS"
        elif not line:
            continue
        elif state == "CONDA_DEPS":
            line = '=='.join(line.split('='))
            line = line.split('==')[0]
            # Python and pip are valid dependencies for Conda but not setuptools, so skip them
            if line not in ("python", "pip"):
                install_requires.append(line)
        elif state == "PIP_DEPS":
            line = line.split('==')[0]
            if line.startswith('sphinx'):
                extras_require['doc'].append(line)
            else:
                extras_require['test'].append(line)


class VerifyVersionCommand(install):
    """Custom command to verify that the git tag matches our version"""
    description = 'verify that the git tag matches our version'

    def run(self):
        tag = os.getenv('CIRCLE_TAG')
        version = f'v{__version__}'

        if tag != version:
            info = f'Git tag: {tag} does not match the version of this app: {version}'
            sys.exit(info)


def main():
    """Main function of the PyENM ``setup.py``"""
    setuptools.setup(
            name='pyenm',
            version=__version__,
            description='PyENM: qubit dynamics of eternally non-Markovian covariant channels',
            long_description="""PyENM integrates time-local master equations of a qubit,
                              builds the closed-form phase-covariant channel family, tracks
                              entanglement, discord, coherence and quantum Fisher information along
                              the evolution, and reproduces the wave-plate emulation of the channel.
                              Batch runs and self-checks are wired as Nipype interfaces. """,
            author=__author__,
            author_email=__email__,
            url=__url__,
            download_url=DOWNLOAD_URL,
            entry_points={
                 "console_scripts": [
                     'enmtoolkit = pyenm.cli.enmtoolkit:main',
                 ]
            },
            license='BSD-3-Clause',
            classifiers=[
                'Development Status :: 3 - Alpha',
                'Intended Audience :: Science/Research',
                'Intended Audience :: Developers',
                'License :: OSI Approved',
                'Programming Language :: Python',
                'Topic :: Software Development',
                'Topic :: Scientific/Engineering :: Physics',
                'Operating System :: POSIX',
                'Operating System :: Unix',
                'Operating System :: MacOS',
                'Programming Language :: Python :: 3.8',
                'Programming Language :: Python :: 3.9',
            ],
            maintainer=__author__,
            maintainer_email=__email__,
            packages=packages,
            include_package_data=True,
            package_data=package_data,
            install_requires=install_requires,
            extras_require=extras_require,
            python_requires='>=3.8',
            cmdclass={
                'verify': VerifyVersionCommand,
            }
            )


if __name__ == "__main__":
    main()
