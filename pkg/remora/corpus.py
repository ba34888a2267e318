# -*- coding: utf-8 -*-
"""
Golden test cases: a directory of ``NAME.rem`` programs, each next to a
``NAME.expected`` file holding the printed results of the program, one
result per line, followed by ``ERROR <code>`` if the program stops with
an error.

A program whose first line is ``;; dialect: typed`` runs in the typed
dialect.
"""
from __future__ import unicode_literals

import os
import re
import glob
import difflib
import logging
from collections import namedtuple

from . import docs
from .session import Session, DYNAMIC, read_source
from .exceptions import RemoraError, MissingExpectation

_logger = logging.getLogger(__name__)

DIALECT_RE = re.compile(r'^;+\s*dialect:\s*(\S+)')


class CaseResult(namedtuple('CaseResult', ['name', 'expected', 'actual'])):
    __slots__ = ()

    @property
    def passed(self):
        return self.expected == self.actual

    def diff(self):
        lines = difflib.unified_diff(
            self.expected.split('\n'), self.actual.split('\n'),
            'expected', 'actual', lineterm='')
        return '\n'.join(lines)


def case_dialect(source):
    match = DIALECT_RE.match(source)
    return match.group(1) if match else DYNAMIC


def run_program(source, dialect=DYNAMIC, parallel=False, workers=None):
    """
    The printed output of a whole program, as compared against an
    ``.expected`` file.
    """
    lines = []
    with Session(dialect, parallel=parallel, workers=workers) as session:
        try:
            for result in session.iter_source(source):
                if not result.definition:
                    lines.append(result.format())
        except RemoraError as e:
            lines.append('ERROR {0}'.format(e.code))
    return '\n'.join(lines)


def run_case(path, parallel=False, workers=None):
    name = os.path.splitext(os.path.basename(path))[0]
    expected_path = os.path.splitext(path)[0] + '.expected'
    if not os.path.exists(expected_path):
        raise MissingExpectation(
            '{0} has no .expected file'.format(path))

    source = read_source(path)
    expected = read_source(expected_path).rstrip('\n')
    actual = run_program(source, case_dialect(source), parallel, workers)
    result = CaseResult(name, expected, actual)
    _logger.debug('Case %s: %s', name, 'pass' if result.passed else 'FAIL')
    return result


def run_corpus(directory, parallel=False, workers=None):
    """
    Run every case of the directory in name order.

    Raises MissingExpectation before running anything when a program has
    no expected output.
    """
    paths = sorted(glob.glob(os.path.join(directory, '*.rem')))
    for path in paths:
        if not os.path.exists(os.path.splitext(path)[0] + '.expected'):
            raise MissingExpectation(
                '{0} has no .expected file'.format(path))
    return [run_case(path, parallel, workers) for path in paths]


def report(results):
    lines = []
    for result in results:
        if result.passed:
            lines.append('PASS {0}'.format(result.name))
        else:
            lines.append('FAIL {0}'.format(result.name))
            lines.append(result.diff())
    passed = sum(1 for r in results if r.passed)
    lines.append(docs.CORPUS_REPORT.format(
        passed=passed, failed=len(results) - passed).rstrip('\n'))
    return '\n'.join(lines)


def output_digest(results):
    """
    Concatenated actual output of all cases, for comparing runs.
    """
    return '\n'.join('{0}\n{1}'.format(r.name, r.actual) for r in results)

