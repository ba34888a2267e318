# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import os
import codecs
import shutil
import argparse
from functools import partial

import six
from six.moves import configparser

from . import docs, __version__
from .session import DIALECTS, TEMPLATES
from .exceptions import UsageError, ConfigError

PACKAGE = os.path.dirname(__file__)
HOME = os.path.expanduser('~')
DEFAULT_CONFIG = os.path.join(TEMPLATES, 'remora.cfg')
XDG_CONFIG_HOME = os.getenv('XDG_CONFIG_HOME', os.path.join(HOME, '.config'))
XDG_DATA_HOME = os.getenv('XDG_DATA_HOME', os.path.join(HOME, '.local', 'share'))
CONFIG = os.path.join(XDG_CONFIG_HOME, 'remora', 'remora.cfg')
HISTORY = os.path.join(XDG_DATA_HOME, 'remora', 'history.log')

CORPUS_COMMAND = 'corpus'


def build_parser():
    parser = argparse.ArgumentParser(
        prog='remora', description=docs.SUMMARY,
        epilog=docs.EXAMPLES,
        usage=docs.USAGE,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument(
        'files', metavar='FILE', nargs='*',
        help='[optional] Source files to run, or `corpus DIR` to run a '
             'directory of test cases. Starts the REPL when omitted')
    parser.add_argument(
        '--dialect', choices=DIALECTS, action='store',
        help='Run the dynamic dialect or check and run the typed dialect')
    parser.add_argument(
        '--check-only', dest='check_only', action='store_const', const=True,
        help='Type check the files without running them (typed dialect)')
    parser.add_argument(
        '--no-prelude', dest='prelude', action='store_const', const=False,
        help='Do not load the prelude of standard definitions')
    parser.add_argument(
        '--parallel-cells', dest='parallel_cells', action='store_const',
        const=True,
        help='Apply functions to independent cells on a thread pool')
    parser.add_argument(
        '--workers', dest='parallel_workers', metavar='N', type=int,
        action='store',
        help='Number of threads used by --parallel-cells')
    parser.add_argument(
        '--log', metavar='FILE', action='store',
        help='Log debug messages to the given file')
    parser.add_argument(
        '--config', metavar='FILE', action='store',
        help='Load configuration settings from the given file')
    parser.add_argument(
        '--copy-config', dest='copy_config', action='store_const', const=True,
        help='Copy the default configuration to {HOME}/.config/remora/remora.cfg')
    parser.add_argument(
        '-V', '--version', action='version', version='remora ' + __version__)
    parser.add_argument(
        '--debug-info', dest='debug_info', action='store_const', const=True,
        help='Show system and environment information and exit')
    return parser


def copy_default_config(filename=CONFIG):
    """
    Copy the default remora user configuration to the specified file.
    """
    return _copy_settings_file(DEFAULT_CONFIG, filename, 'config')


def _copy_settings_file(source, destination, name):
    """
    Copy a file from the repo to the user's home directory.
    """

    if os.path.exists(destination):
        try:
            ch = six.moves.input(
                'File %s already exists, overwrite? y/[n]):' % destination)
            if ch not in ('Y', 'y'):
                return
        except KeyboardInterrupt:
            return

    filepath = os.path.dirname(destination)
    if not os.path.exists(filepath):
        os.makedirs(filepath)

    print('Copying default %s to %s' % (name, destination))
    shutil.copy(source, destination)
    os.chmod(destination, 0o664)


class Config(object):
    """
    This class manages the loading and saving of configs and the REPL
    history.
    """

    def __init__(self, history_file=HISTORY, **kwargs):

        self.history_file = history_file
        self.config = kwargs

        self.default = self.get_file(DEFAULT_CONFIG)

        # The history is saved/loaded at a separate location, so it is
        # treated differently from the rest of the config options.
        self.history = []

    def __getitem__(self, item):
        if item in self.config:
            return self.config[item]
        else:
            return self.default.get(item, None)

    def __setitem__(self, key, value):
        self.config[key] = value

    def __delitem__(self, key):
        self.config.pop(key, None)

    def update(self, **kwargs):
        self.config.update(kwargs)

    def validate(self):
        """
        Reject option combinations that can't be used together.
        """
        if self['dialect'] not in DIALECTS:
            raise UsageError('Unknown dialect `{0}`'.format(self['dialect']))
        if self['check_only'] and self['dialect'] != 'typed':
            raise UsageError('--check-only requires --dialect typed')
        workers = self['parallel_workers']
        if workers is not None and workers < 1:
            raise UsageError('--workers must be at least 1')

    def load_history(self):
        if os.path.exists(self.history_file):
            with codecs.open(self.history_file, encoding='utf-8') as fp:
                self.history = [line.rstrip('\n') for line in fp if line.strip()]
        else:
            self.history = []

    def save_history(self):
        self._ensure_filepath(self.history_file)
        with codecs.open(self.history_file, 'w+', encoding='utf-8') as fp:
            fp.writelines('\n'.join(self.history[-self['history_size']:]))

    def delete_history(self):
        if os.path.exists(self.history_file):
            os.remove(self.history_file)
        self.history = []

    @staticmethod
    def get_args(argv=None):
        """
        Load settings from the command line.
        """

        parser = build_parser()
        args = vars(parser.parse_args(argv))

        # `remora corpus DIR` runs a test corpus instead of source files
        files = args.pop('files')
        if files and files[0] == CORPUS_COMMAND:
            if len(files) != 2:
                raise UsageError('usage: remora corpus DIR')
            args['corpus'] = files[1]
        elif files:
            args['files'] = files

        # Filter out argument values that weren't supplied
        return {key: val for key, val in args.items() if val is not None}

    @classmethod
    def get_file(cls, filename=None):
        """
        Load settings from a remora configuration file.
        """

        if filename is None:
            filename = CONFIG

        config = configparser.ConfigParser()
        if os.path.exists(filename):
            with codecs.open(filename, encoding='utf-8') as fp:
                # readfp is gone from newer pythons
                read = getattr(config, 'read_file', None) or config.readfp
                read(fp)

        return cls._parse_remora_file(config)

    @staticmethod
    def _parse_remora_file(config):

        remora = {}
        if config.has_section('remora'):
            remora = dict(config.items('remora'))

        # convert non-string params to their typed representation
        params = {
            'prelude': partial(config.getboolean, 'remora'),
            'check_only': partial(config.getboolean, 'remora'),
            'parallel_cells': partial(config.getboolean, 'remora'),
            'parallel_workers': partial(config.getint, 'remora'),
            'history_size': partial(config.getint, 'remora'),
        }

        # An empty value means "not set"
        for key in ('log', 'parallel_workers'):
            if remora.get(key) == '':
                remora.pop(key)

        for key, func in params.items():
            if key in remora:
                try:
                    remora[key] = func(key)
                except ValueError as e:
                    raise ConfigError(
                        'Bad value for `{0}`: {1}'.format(key, e))

        return remora

    @staticmethod
    def _ensure_filepath(filename):
        """
        Ensure that the directory exists before trying to write to the file.
        """

        filepath = os.path.dirname(filename)
        if not os.path.exists(filepath):
            os.makedirs(filepath)
