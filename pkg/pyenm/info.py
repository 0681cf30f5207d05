"""This file contains PyENM package information."""

_version_major = 1
_version_minor = 0
_version_micro = 0
_version_extra = ''

__release_date__ = '17.10.2026'

__minor_version__ = "%s.%s" % (_version_major,
                               _version_minor)

__version__ = "%s.%s.%s%s" % (_version_major,
                              _version_minor,
                              _version_micro,
                              _version_extra)

__current_year__ = '2026'

__author__ = 'The PyENM developers'
__copyright__ = 'Copyright 2026-{}, The PyENM developers'.format(__current_year__)
__credits__ = ('Contributors: please check the ``contributors.txt`` file at the top-level folder '
               'of the repository')
__license__ = '3-clause BSD'
__maintainer__ = 'The PyENM developers'
__email__ = 'pyenm-developers@users.noreply.github.com'
__status__ = 'Prototype'

__packagename__ = 'pyenm'

__url__ = 'https://github.com/pyenm/{name}'.format(name=__packagename__)

DOWNLOAD_URL = (
    'https://github.com/pyenm/{name}/archive/{ver}.tar.gz'.format(
        name=__packagename__, ver=__version__))
