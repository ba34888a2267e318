# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging

import pytest

from remora.config import Config
from remora.session import Session

try:
    from unittest import mock
except ImportError:
    import mock

logging.basicConfig(
    level=logging.DEBUG,
    format='%(asctime)s:%(levelname)s:%(filename)s:%(lineno)d:%(message)s')


@pytest.yield_fixture()
def config():
    conf = Config()
    with mock.patch.object(conf, 'save_history'),      \
            mock.patch.object(conf, 'load_history'),   \
            mock.patch.object(conf, 'delete_history'):
        yield conf


@pytest.yield_fixture()
def session():
    with Session() as sess:
        yield sess


@pytest.yield_fixture()
def typed_session():
    with Session(dialect='typed') as sess:
        yield sess


@pytest.fixture()
def run(session):
    """
    Run source text in a fresh dynamic session with the prelude loaded and
    return the printed results, one per line.
    """

    def run_source(source):
        return '\n'.join(session.output(session.run_source(source)))
    return run_source


@pytest.fixture()
def run_typed(typed_session):

    def run_source(source):
        return '\n'.join(typed_session.output(
            typed_session.run_source(source)))
    return run_source
