# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import codecs

import pytest
import six

from remora import cli
from remora.__main__ import main
from remora.session import Session

try:
    from unittest import mock
except ImportError:
    import mock


@pytest.fixture()
def write(tmpdir):

    def write_file(name, text):
        path = tmpdir.join(name)
        with codecs.open(str(path), 'w', encoding='utf-8') as fp:
            fp.write(text)
        return str(path)
    return write_file


@pytest.yield_fixture(autouse=True)
def no_user_config(tmpdir):
    with mock.patch('remora.config.CONFIG', str(tmpdir.join('missing.cfg'))):
        yield


def test_main_runs_file(write, capsys):

    path = write('ok.rem', '(define x 2)\n(+ x [1 2])\n(* x x)\n')
    assert main([path]) == cli.EXIT_OK
    out, err = capsys.readouterr()
    assert out == '[3 4]\n4\n'
    assert not err


def test_main_runs_files_in_one_session(write, capsys):

    first = write('first.rem', '(define (sq [x 0]) (* x x))')
    second = write('second.rem', '(sq 7)')
    assert main([first, second]) == cli.EXIT_OK
    out, _ = capsys.readouterr()
    assert out == '49\n'


def test_main_error_status(write, capsys):

    path = write('bad.rem', '(+ 1 2)\n(/ 1 0)\n(+ 3 4)\n')
    assert main([path]) == cli.EXIT_ERROR
    out, err = capsys.readouterr()
    # Results before the error are still printed
    assert out == '3\n'
    assert 'DivisionByZero at 2:1' in err
    assert path in err


def test_main_missing_file(tmpdir, capsys):

    assert main([str(tmpdir.join('nope.rem'))]) == cli.EXIT_USAGE
    _, err = capsys.readouterr()
    assert 'Cannot read' in err


def test_main_undecodable_file(tmpdir, capsys):

    path = tmpdir.join('latin.rem')
    path.write_binary(b'(+ 1 2) ; caf\xe9\n')
    assert main([str(path)]) == cli.EXIT_USAGE
    _, err = capsys.readouterr()
    assert 'Cannot decode' in err


def test_main_typed(write, capsys):

    path = write('typed.rem', '(double [3 2])\n')
    assert main(['--dialect', 'typed', path]) == cli.EXIT_OK
    out, _ = capsys.readouterr()
    assert out == '[6 4]\n'

    assert main(['--dialect', 'typed', '--check-only', path]) == cli.EXIT_OK
    out, _ = capsys.readouterr()
    assert out == '[int 2]\n'


def test_main_typed_error(write, capsys):

    path = write('typed.rem', '(double 4)\n(double #t)\n')
    assert main(['--dialect', 'typed', path]) == cli.EXIT_ERROR
    out, err = capsys.readouterr()
    assert out == '8\n'
    assert 'ArgumentTypeMismatch' in err


def test_main_no_prelude(write, capsys):

    path = write('vmag.rem', '(vmag [3 4])')
    assert main(['--no-prelude', path]) == cli.EXIT_ERROR
    _, err = capsys.readouterr()
    assert 'UnboundVariable' in err


def test_main_parallel(write, capsys):

    path = write('par.rem', '(+ (iota [2 3]) [10 20])')
    assert main(['--parallel-cells', '--workers', '2', path]) == cli.EXIT_OK
    out, _ = capsys.readouterr()
    assert out == '[[10 11 12]\n [23 24 25]]\n'


def test_main_usage_errors(write, capsys):

    path = write('ok.rem', '1')
    assert main(['--check-only', path]) == cli.EXIT_USAGE
    assert main(['--workers', '0', path]) == cli.EXIT_USAGE
    assert main(['corpus']) == cli.EXIT_USAGE
    _, err = capsys.readouterr()
    assert err.startswith('remora: ')


def test_main_debug_info(capsys):

    assert main(['--debug-info']) == cli.EXIT_OK
    out, _ = capsys.readouterr()
    assert 'remora version' in out
    assert 'dialect' in out


def test_main_copy_config():

    with mock.patch('remora.__main__.copy_default_config') as copy:
        assert main(['--copy-config']) == cli.EXIT_OK
        assert copy.called


def test_main_corpus(tmpdir, capsys):

    tmpdir.join('good.rem').write('(+ 1 2)')
    tmpdir.join('good.expected').write('3\n')
    assert main(['corpus', str(tmpdir)]) == cli.EXIT_OK
    out, _ = capsys.readouterr()
    assert 'PASS good' in out
    assert '1 passed, 0 failed' in out

    tmpdir.join('bad.rem').write('(+ 1 1)')
    tmpdir.join('bad.expected').write('3\n')
    assert main(['corpus', str(tmpdir)]) == cli.EXIT_ERROR
    out, _ = capsys.readouterr()
    assert 'FAIL bad' in out
    assert '-3' in out and '+2' in out


def test_main_corpus_missing_expectation(tmpdir, capsys):

    tmpdir.join('lonely.rem').write('1')
    assert main(['corpus', str(tmpdir)]) == cli.EXIT_ERROR
    _, err = capsys.readouterr()
    assert 'MissingExpectation' in err


def test_main_repl(capsys):

    with mock.patch('remora.cli.repl', return_value=0) as repl:
        assert main([]) == cli.EXIT_OK
        assert repl.called


def test_main_interrupt(write):

    path = write('ok.rem', '1')
    with mock.patch('remora.cli.run_files') as run:
        run.side_effect = KeyboardInterrupt
        assert main([path]) == cli.EXIT_ERROR


def test_main_crash(write, capsys):

    path = write('ok.rem', '1')
    with mock.patch('remora.cli.run_files') as run:
        run.side_effect = RuntimeError('boom')
        assert main([path]) == 1
    _, err = capsys.readouterr()
    assert 'remora has crashed' in err


def test_cli_run_file_streams(write):

    path = write('ok.rem', '(define y 1)\n(+ y 1)\n')
    stdout, stderr = six.StringIO(), six.StringIO()
    with Session() as session:
        status = cli.run_file(path, session, stdout=stdout, stderr=stderr)
    assert status == cli.EXIT_OK
    assert stdout.getvalue() == '2\n'


def test_cli_repl(config):

    stdout, stderr = six.StringIO(), six.StringIO()
    lines = ['(+ 1 2)']

    def input_func(prompt):
        if not lines:
            raise EOFError
        return lines.pop(0)

    assert cli.repl(config, input_func, stdout, stderr) == 0
    assert '⇒ 3' in stdout.getvalue()
