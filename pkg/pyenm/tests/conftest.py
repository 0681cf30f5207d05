# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Shared pytest fixtures."""

import logging as stdlib_logging
import sys

import pytest


@pytest.fixture(autouse=True)
def reset_nipype_stream_handlers():
    """Detach nipype stream handlers from per-test captured streams.

    ``setup_logging`` binds handlers to the current ``sys.stderr``, which under
    ``capsys`` is closed when the test ends; rebind to the real stderr so the
    next test does not flush a closed file.
    """
    yield
    for handler in stdlib_logging.getLogger('nipype').handlers:
        if type(handler) is stdlib_logging.StreamHandler:
            handler.stream = sys.__stderr__
