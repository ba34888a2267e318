# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import sys
import logging

import six

from . import docs
from .reader import is_incomplete
from .exceptions import RemoraError, UsageError
from .__version__ import __version__

try:
    import readline
except ImportError:
    readline = None

_logger = logging.getLogger(__name__)


class ReplController(object):
    """
    Registry of the colon commands understood by the REPL.

    >>> @ReplController.register('type', 't')
    >>> def show_type(self, text)
    >>>     ...

    A command returns False to end the loop.
    """

    command_map = {}

    @classmethod
    def register(cls, *names):
        def inner(f):
            for name in names:
                cls.command_map[name] = f
            return f
        return inner

    @classmethod
    def lookup(cls, name):
        return cls.command_map.get(name)


class Repl(object):
    """
    Interactive read-eval-print loop over a persistent Session.

    Params:
        session (Session): Top level the forms are run in.
        config (Config): Supplies the prompt, check-only mode and the
            input history.
        input_func (callable): Reads one line given a prompt, raising
            EOFError at the end of input. Defaults to ``input``.
    """

    continuation = '... '

    def __init__(self, session, config, input_func=None, stdout=None,
                 stderr=None):
        self.session = session
        self.config = config
        self.input_func = input_func or six.moves.input
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    @property
    def prompt(self):
        return (self.config['prompt'] or 'remora>') + ' '

    def write(self, text):
        self.stdout.write(text + '\n')

    def error(self, text):
        self.stderr.write(text + '\n')

    def read(self):
        """
        Read one complete entry, asking for more lines while a delimiter or
        a string is left open.
        """
        lines = [self.input_func(self.prompt)]
        while is_incomplete('\n'.join(lines)):
            lines.append(self.input_func(self.continuation))
        return '\n'.join(lines)

    def loop(self):
        self.write(docs.BANNER.format(
            version=__version__, dialect=self.session.dialect).rstrip('\n'))
        self.load_history()
        try:
            while True:
                try:
                    text = self.read()
                except EOFError:
                    self.write('')
                    break
                except KeyboardInterrupt:
                    # Abandon the entry that was being typed
                    self.write('')
                    continue
                if not self.handle(text):
                    break
        finally:
            self.config.save_history()
        return 0

    def handle(self, text):
        """
        Run one entry. Returns False when the loop should stop.
        """
        text = text.strip()
        if not text:
            return True

        self.config.history.append(text.replace('\n', ' '))
        if text.startswith(':'):
            name, _, rest = text[1:].partition(' ')
            func = ReplController.lookup(name)
            if func is None:
                self.error('Unknown command `:{0}`, try :help'.format(name))
                return True
            return func(self, rest.strip()) is not False

        try:
            for result in self.session.iter_source(
                    text, check_only=bool(self.config['check_only'])):
                if not result.definition:
                    self.write(self.format_result(result.format()))
        except RemoraError as e:
            _logger.debug('REPL entry failed: %s', e.code)
            self.error(six.text_type(e))
        return True

    @staticmethod
    def format_result(text):
        lines = text.split('\n')
        rest = ['  ' + line if line else line for line in lines[1:]]
        return '\n'.join(['⇒ ' + lines[0]] + rest)

    def load_history(self):
        self.config.load_history()
        if readline is not None:
            for line in self.config.history:
                readline.add_history(line)

    @ReplController.register('quit', 'q')
    def quit(self, text):
        return False

    @ReplController.register('help', 'h', '?')
    def show_help(self, text):
        self.write(docs.HELP.rstrip('\n'))

    @ReplController.register('type', 't')
    def show_type(self, text):
        if not text:
            self.error('usage: :type EXPR')
            return
        try:
            self.write(self.session.type_of(text))
        except (UsageError, RemoraError) as e:
            self.error(six.text_type(e))
