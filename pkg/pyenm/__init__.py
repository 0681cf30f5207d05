"""PyENM: eternally non-Markovian qubit dynamics and their correlation measures."""

import os

# No nipype telemetry check.
os.environ.setdefault('NIPYPE_NO_ET', '1')

from pyenm.info import __version__  # noqa: E402,F401
