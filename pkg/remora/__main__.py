# -*- coding: utf-8 -*-
from __future__ import unicode_literals
from __future__ import print_function

import os
import sys
import logging

import six

from . import cli
from .config import Config, copy_default_config
from .exceptions import ConfigError, UsageError
from .__version__ import __version__

_logger = logging.getLogger(__name__)


def setup_logging(filename):
    if filename:
        logging.basicConfig(
            level=logging.DEBUG,
            filename=filename,
            format='%(asctime)s:%(levelname)s:%(filename)s:%(lineno)d:%(message)s')
    else:
        # Add an empty handler so the logger doesn't complain
        logging.root.addHandler(logging.NullHandler())


def debug_text(config):
    debug_info = [
        'remora version: remora {}'.format(__version__),
        'remora module path: {}'.format(os.path.abspath(__file__)),
        'python version: {}'.format(sys.version.replace('\n', ' ')),
        'python executable: {}'.format(sys.executable),
        'Configuration']
    for name in ('dialect', 'prelude', 'check_only', 'parallel_cells',
                 'parallel_workers', 'prompt', 'history_size', 'log'):
        value = config[name]
        debug_info.append('  {:<16}: {}'.format(
            name, '' if value is None else value))
    debug_info.append('Environment Variables')
    for name in ('XDG_CONFIG_HOME', 'XDG_DATA_HOME', 'LANG'):
        debug_info.append('  {:<16}: {}'.format(name, os.getenv(name) or ''))
    debug_info.append('')
    return '\n'.join(debug_info)


def main(argv=None):
    """Main entry point"""

    try:
        args = Config.get_args(argv)
        fargs = Config.get_file(args.get('config'))
    except (UsageError, ConfigError) as e:
        sys.stderr.write('remora: {0}\n'.format(e))
        return cli.EXIT_USAGE

    # Apply the file config first, then overwrite with any command line args
    config = Config()
    config.update(**fargs)
    config.update(**args)

    if config['copy_config']:
        copy_default_config()
        return cli.EXIT_OK

    setup_logging(config['log'])

    text = debug_text(config)
    _logger.info(text)
    if config['debug_info']:
        print(text)
        return cli.EXIT_OK

    try:
        config.validate()
    except UsageError as e:
        sys.stderr.write('remora: {0}\n'.format(e))
        return cli.EXIT_USAGE

    try:
        if config['corpus']:
            return cli.run_corpus(config['corpus'], config)
        if config['files']:
            return cli.run_files(config['files'], config)
        return cli.repl(config)
    except KeyboardInterrupt:
        return cli.EXIT_ERROR
    except Exception as e:
        _logger.exception(e)
        import traceback
        exit_message = '\n'.join([
            text,
            traceback.format_exc(),
            'remora has crashed. Please report this traceback.\n'])
        sys.stderr.write(six.text_type(exit_message))
        return 1  # General error exception code


if __name__ == '__main__':
    sys.exit(main())
