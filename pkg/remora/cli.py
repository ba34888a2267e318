# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import sys
import logging

import six

from . import corpus
from .repl import Repl
from .session import Session, read_source
from .exceptions import RemoraError

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


def open_session(config):
    return Session(dialect=config['dialect'],
                   prelude=config['prelude'],
                   parallel=bool(config['parallel_cells']),
                   workers=config['parallel_workers'])


def run_file(path, session, check_only=False, stdout=None, stderr=None):
    """
    Run a source file in the session, printing each non-definition result
    as soon as its form has run.

    Returns the exit status: 0 on success, 1 when a Remora error stopped
    the file and 2 when the file could not be read.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        source = read_source(path)
    except (IOError, OSError) as e:
        stderr.write('Cannot read {0}: {1}\n'.format(path, e.strerror or e))
        return EXIT_USAGE
    except UnicodeError as e:
        stderr.write('Cannot decode {0}: {1}\n'.format(path, e))
        return EXIT_USAGE

    try:
        for result in session.iter_source(source, check_only):
            if not result.definition:
                stdout.write(result.format() + '\n')
    except RemoraError as e:
        _logger.debug('%s stopped with %s', path, e.code)
        stderr.write('{0}: {1}\n'.format(path, six.text_type(e)))
        return EXIT_ERROR
    return EXIT_OK


def run_files(paths, config, stdout=None, stderr=None):
    """
    Run the files one after another in a single session, so later files
    see the definitions of earlier ones. Stops at the first failure.
    """
    with open_session(config) as session:
        for path in paths:
            status = run_file(path, session, bool(config['check_only']),
                              stdout, stderr)
            if status != EXIT_OK:
                return status
    return EXIT_OK


def run_corpus(directory, config, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        results = corpus.run_corpus(
            directory, bool(config['parallel_cells']),
            config['parallel_workers'])
    except RemoraError as e:
        stderr.write(six.text_type(e) + '\n')
        return EXIT_ERROR
    stdout.write(corpus.report(results) + '\n')
    return EXIT_OK if all(r.passed for r in results) else EXIT_ERROR


def repl(config, input_func=None, stdout=None, stderr=None):
    with open_session(config) as session:
        return Repl(session, config, input_func, stdout, stderr).loop()
