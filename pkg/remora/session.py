# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import os
import logging
from collections import namedtuple

from kitchen.text.converters import to_unicode

from . import reader
from . import syntax as core
from .desugar import desugar
from .erasure import erase
from .evaluator import Evaluator
from .library import Library
from .printer import format_value
from .typecheck import Checker, TypeEnv
from .typeforms import show
from .exceptions import UsageError

_logger = logging.getLogger(__name__)

DYNAMIC = 'dynamic'
TYPED = 'typed'
DIALECTS = (DYNAMIC, TYPED)

TEMPLATES = os.path.join(os.path.dirname(__file__), 'templates')
PRELUDES = {
    DYNAMIC: os.path.join(TEMPLATES, 'prelude.rem'),
    TYPED: os.path.join(TEMPLATES, 'prelude-typed.rem'),
}


def read_source(path):
    _logger.debug('Reading %s', path)
    with open(path, 'rb') as fp:
        return to_unicode(fp.read(), encoding='utf-8', errors='strict')


class Result(namedtuple('Result', ['value', 'type', 'definition'])):
    """
    The outcome of one top-level form. ``value`` is None when the form was
    only type checked, ``type`` is None in the dynamic dialect.
    """

    def format(self):
        if self.value is None:
            return show(self.type)
        return format_value(self.value)


class Session(object):
    """
    A persistent top level: the global environment and, for the typed
    dialect, the global type environment.

    Params:
        dialect (str): ``dynamic`` or ``typed``.
        prelude (bool): Load the prelude of the dialect.
        parallel (bool): Spread independent cell applications over threads.
        workers (int): Number of threads when running in parallel.
    """

    def __init__(self, dialect=DYNAMIC, prelude=True, parallel=False,
                 workers=None):
        if dialect not in DIALECTS:
            raise UsageError('Unknown dialect `{0}`'.format(dialect))
        self.dialect = dialect
        self.evaluator = Evaluator(parallel=parallel, workers=workers)
        self.env = Library.environment(typed=self.typed)
        self.type_env = TypeEnv.initial() if self.typed else None
        _logger.debug('Started %s session', dialect)
        if prelude:
            _logger.debug('Loading prelude %s', PRELUDES[dialect])
            self.run_file(PRELUDES[dialect])

    @property
    def typed(self):
        return self.dialect == TYPED

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def close(self):
        self.evaluator.close()

    def run_form(self, form, check_only=False):
        expr = desugar(form)
        definition = isinstance(expr, core.Define)
        if not self.typed:
            value = self.evaluator.evaluate(expr, self.env)
            return Result(value, None, definition)

        checker = Checker()
        # Check against a copy so a form that fails leaves no definition
        env = self.type_env.extend()
        t = checker.check(expr, env)
        value = None
        if not check_only:
            value = self.evaluator.evaluate(erase(expr, checker.ranks),
                                            self.env)
        if definition:
            self.type_env.define(expr.name, t)
        return Result(value, t, definition)

    def iter_source(self, source, check_only=False):
        """
        Run the top-level forms of the source text one at a time, yielding
        each Result as soon as its form has run. The whole text is read
        before the first form runs.
        """
        for form in reader.read(source):
            yield self.run_form(form, check_only)

    def run_source(self, source, check_only=False):
        return list(self.iter_source(source, check_only))

    def run_file(self, path, check_only=False):
        return self.run_source(read_source(path), check_only)

    def check(self, source):
        return self.run_source(source, check_only=True)

    def type_of(self, source):
        """
        The type of a single expression, without defining anything.
        """
        if not self.typed:
            raise UsageError('Types are only checked in the typed dialect')
        forms = reader.read(source)
        if len(forms) != 1:
            raise UsageError('Expected exactly one expression')
        t = Checker().check(desugar(forms[0]), self.type_env.extend())
        return show(t)

    def output(self, results):
        """
        The printed lines for a list of results. Definitions print nothing.
        """
        return [r.format() for r in results if not r.definition]
