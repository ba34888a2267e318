# -*- coding: utf-8 -*-
"""
Lexer and parser for Remora source text.

The reader keeps the distinction between parentheses and square brackets,
since the two are notationally distinct in the language: ``[1 2 3]`` is a
frame while ``(f 1 2)`` is an application.
"""
from __future__ import unicode_literals

import re
import math
import unicodedata
from collections import namedtuple

import six

from .exceptions import (
    UnterminatedString, BadStringEscape, BadCharLiteral, UnknownHashSyntax,
    IllegalCodepoint, UnbalancedDelimiter, MismatchedDelimiter,
    DanglingRerank, FloatOutOfRange)

LPAREN = 'LPAREN'
RPAREN = 'RPAREN'
LBRACKET = 'LBRACKET'
RBRACKET = 'RBRACKET'
SYMBOL = 'SYMBOL'
INT = 'INT'
FLOAT = 'FLOAT'
BOOL = 'BOOL'
CHAR = 'CHAR'
STRING = 'STRING'
TILDE = 'TILDE'

# Both spellings of the keywords are accepted, the reader always hands the
# unicode spelling to the rest of the system.
ASCII_KEYWORDS = {
    'fn': 'λ',
    't-fn': 'Tλ',
    'i-fn': 'Iλ',
    '->': '→',
    'Forall': '∀',
    'Pi': 'Π',
    'Sigma': 'Σ',
}

CHAR_NAMES = {
    'space': ' ',
    'newline': '\n',
    'tab': '\t',
}

STRING_ESCAPES = {
    '\\': '\\',
    '"': '"',
    'n': '\n',
    't': '\t',
}

# Reserved for names generated by the desugarer
RESERVED_CHARS = '%'

DELIMITERS = '()[]";'
OPENERS = {'(': LPAREN, '[': LBRACKET}
CLOSERS = {')': RPAREN, ']': RBRACKET}
MATCHING = {LPAREN: RPAREN, LBRACKET: RBRACKET}

INT_RE = re.compile(r'^-?\d+$')
FLOAT_RE = re.compile(r'^-?\d+\.\d*([eE][-+]?\d+)?$')

# Floats outside the finite range
NONFINITE_FLOATS = {
    '+inf.0': float('inf'),
    '-inf.0': float('-inf'),
    '+nan.0': float('nan'),
}


class Position(namedtuple('Position', ['line', 'column'])):
    __slots__ = ()

    def __str__(self):
        return '{0}:{1}'.format(self.line, self.column)


class Token(namedtuple('Token', ['kind', 'text', 'position', 'value'])):
    """
    A lexeme. ``text`` is the slice of source it was read from and ``value``
    is the decoded payload (the integer for INT, the character for CHAR,
    the normalized name for SYMBOL, and so on).
    """
    __slots__ = ()


class SurfaceForm(object):
    """
    Node of the surface syntax tree.
    """
    __slots__ = ('position',)

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        raise NotImplementedError

    def __repr__(self):
        return write_form(self)


class Paren(SurfaceForm):
    __slots__ = ('children',)

    def __init__(self, children, position=None):
        self.children = tuple(children)
        self.position = position

    def _key(self):
        return self.children


class Bracket(SurfaceForm):
    __slots__ = ('children',)

    def __init__(self, children, position=None):
        self.children = tuple(children)
        self.position = position

    def _key(self):
        return self.children


class Leaf(SurfaceForm):
    __slots__ = ('token',)

    def __init__(self, token):
        self.token = token
        self.position = token.position

    @property
    def kind(self):
        return self.token.kind

    @property
    def value(self):
        return self.token.value

    def _key(self):
        return self.token.kind, self.token.value

    def is_symbol(self, *names):
        if self.token.kind != SYMBOL:
            return False
        return not names or self.token.value in names


class Rerank(SurfaceForm):
    """
    ``~(r ...)target``. ``bracketed`` only records which delimiter the rank
    list was spelled with so that the debug printer can reproduce it.
    """
    __slots__ = ('ranks', 'target', 'bracketed')

    def __init__(self, ranks, target, bracketed=False, position=None):
        self.ranks = tuple(ranks)
        self.target = target
        self.bracketed = bracketed
        self.position = position

    def _key(self):
        return self.ranks, self.target, self.bracketed


def is_symbol(form, *names):
    return isinstance(form, Leaf) and form.is_symbol(*names)


class _Scanner(object):
    """
    Character cursor that keeps track of line and column.
    """

    def __init__(self, source):
        self.source = source
        self.index = 0
        self.line = 1
        self.column = 1

    @property
    def done(self):
        return self.index >= len(self.source)

    def peek(self, offset=0):
        index = self.index + offset
        if index < len(self.source):
            return self.source[index]
        return ''

    def advance(self):
        ch = self.source[self.index]
        self.index += 1
        if ch == '\n':
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return ch

    @property
    def position(self):
        return Position(self.line, self.column)


def _check_codepoint(ch, position):
    if ch in RESERVED_CHARS:
        raise IllegalCodepoint(
            '`{0}` is reserved and cannot appear in a symbol'.format(ch),
            position)
    category = unicodedata.category(ch)
    if category in ('Cc', 'Cs', 'Co', 'Cn') and ch not in '\t\r\n':
        raise IllegalCodepoint(
            'U+{0:04X} is not allowed here'.format(ord(ch)), position)


def _is_delimiter(ch):
    return not ch or ch.isspace() or ch in DELIMITERS


def _read_string(scanner):
    start = scanner.position
    begin = scanner.index
    scanner.advance()
    chars = []
    while True:
        if scanner.done:
            raise UnterminatedString(position=start)
        ch = scanner.advance()
        if ch == '"':
            break
        if ch == '\\':
            if scanner.done:
                raise UnterminatedString(position=start)
            escape_position = scanner.position
            esc = scanner.advance()
            if esc not in STRING_ESCAPES:
                raise BadStringEscape(
                    'Unknown escape `\\{0}`'.format(esc), escape_position)
            chars.append(STRING_ESCAPES[esc])
        else:
            chars.append(ch)
    text = scanner.source[begin:scanner.index]
    return Token(STRING, text, start, ''.join(chars))


def _read_hash(scanner):
    start = scanner.position
    begin = scanner.index
    scanner.advance()
    nxt = scanner.peek()
    if nxt == '\\':
        scanner.advance()
        if scanner.done:
            raise BadCharLiteral('Character literal is missing its glyph', start)
        glyph = scanner.advance()
        name = [glyph]
        while not _is_delimiter(scanner.peek()):
            name.append(scanner.advance())
        name = ''.join(name)
        text = scanner.source[begin:scanner.index]
        if len(name) == 1:
            return Token(CHAR, text, start, name)
        if name in CHAR_NAMES:
            return Token(CHAR, text, start, CHAR_NAMES[name])
        raise BadCharLiteral('Unknown character name `{0}`'.format(text), start)

    word = ['#']
    while not _is_delimiter(scanner.peek()):
        word.append(scanner.advance())
    word = ''.join(word)
    if word == '#t':
        return Token(BOOL, word, start, True)
    if word == '#f':
        return Token(BOOL, word, start, False)
    raise UnknownHashSyntax('Unknown syntax `{0}`'.format(word), start)


def _read_atom(scanner):
    start = scanner.position
    chars = []
    while not _is_delimiter(scanner.peek()):
        position = scanner.position
        ch = scanner.advance()
        _check_codepoint(ch, position)
        chars.append(ch)
    text = ''.join(chars)
    if INT_RE.match(text):
        return Token(INT, text, start, int(text))
    if FLOAT_RE.match(text):
        value = float(text)
        if math.isinf(value):
            raise FloatOutOfRange(
                '`{0}` is too large for a float'.format(text), start)
        return Token(FLOAT, text, start, value)
    if text in NONFINITE_FLOATS:
        return Token(FLOAT, text, start, NONFINITE_FLOATS[text])
    return Token(SYMBOL, text, start, ASCII_KEYWORDS.get(text, text))


def tokenize(source):
    """
    Split source text into tokens.

    Comments (``;`` to the end of the line) and whitespace are dropped.
    Numerals with a leading minus sign are single INT/FLOAT tokens, so
    ``-7`` is the number and ``-`` alone is the subtraction symbol.
    """
    if isinstance(source, six.binary_type):
        source = source.decode('utf-8')

    scanner = _Scanner(source)
    tokens = []
    while not scanner.done:
        ch = scanner.peek()
        if ch.isspace():
            scanner.advance()
        elif ch == ';':
            while not scanner.done and scanner.peek() != '\n':
                scanner.advance()
        elif ch in OPENERS:
            tokens.append(Token(OPENERS[ch], ch, scanner.position, ch))
            scanner.advance()
        elif ch in CLOSERS:
            tokens.append(Token(CLOSERS[ch], ch, scanner.position, ch))
            scanner.advance()
        elif ch == '~':
            tokens.append(Token(TILDE, ch, scanner.position, ch))
            scanner.advance()
        elif ch == '"':
            tokens.append(_read_string(scanner))
        elif ch == '#':
            tokens.append(_read_hash(scanner))
        else:
            tokens.append(_read_atom(scanner))
    return tokens


class _Parser(object):

    def __init__(self, tokens):
        self.tokens = list(tokens)
        self.index = 0

    @property
    def done(self):
        return self.index >= len(self.tokens)

    def peek(self):
        return self.tokens[self.index] if not self.done else None

    def next(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def form(self):
        token = self.next()
        if token.kind in (LPAREN, LBRACKET):
            return self.sequence(token)
        if token.kind in (RPAREN, RBRACKET):
            raise UnbalancedDelimiter(
                'Unexpected `{0}`'.format(token.text), token.position)
        if token.kind == TILDE:
            return self.rerank(token)
        return Leaf(token)

    def sequence(self, opener):
        children = []
        closer = MATCHING[opener.kind]
        while True:
            token = self.peek()
            if token is None:
                raise UnbalancedDelimiter(
                    '`{0}` is never closed'.format(opener.text),
                    opener.position)
            if token.kind in (RPAREN, RBRACKET):
                self.next()
                if token.kind != closer:
                    raise MismatchedDelimiter(
                        '`{0}` opened at {1} is closed by `{2}`'.format(
                            opener.text, opener.position, token.text),
                        token.position)
                break
            children.append(self.form())
        if opener.kind == LPAREN:
            return Paren(children, opener.position)
        return Bracket(children, opener.position)

    def rerank(self, tilde):
        token = self.peek()
        if token is None or token.kind not in (LPAREN, LBRACKET):
            raise DanglingRerank(position=tilde.position)
        ranks = self.sequence(self.next())
        if not ranks.children:
            raise DanglingRerank('Rank list is empty', tilde.position)
        token = self.peek()
        if token is None or token.kind in (RPAREN, RBRACKET):
            raise DanglingRerank(
                'Rank list is not followed by a form', tilde.position)
        target = self.form()
        return Rerank(ranks.children, target, isinstance(ranks, Bracket),
                      tilde.position)


def parse(tokens):
    """
    Build the surface syntax tree for a token stream, returning the list of
    top-level forms.
    """
    parser = _Parser(tokens)
    forms = []
    while not parser.done:
        forms.append(parser.form())
    return forms


def read(source):
    return parse(tokenize(source))


def _write_leaf(token):
    if token.kind == STRING:
        escaped = token.value.replace('\\', '\\\\').replace('"', '\\"')
        escaped = escaped.replace('\n', '\\n').replace('\t', '\\t')
        return '"{0}"'.format(escaped)
    if token.kind == CHAR:
        return write_char(token.value)
    if token.kind == BOOL:
        return '#t' if token.value else '#f'
    if token.kind == FLOAT:
        return write_float(token.value)
    if token.kind == INT:
        return six.text_type(token.value)
    return token.value


def write_float(value):
    """
    The shortest text that reads back as ``value``. The decimal point is
    mandatory, so exponent forms get a ``.0`` mantissa: ``1.0e+20``.
    """
    if math.isnan(value):
        return '+nan.0'
    if math.isinf(value):
        return '+inf.0' if value > 0 else '-inf.0'
    mantissa, e, exponent = six.text_type(repr(value)).partition('e')
    if '.' not in mantissa:
        mantissa += '.0'
    return mantissa + e + exponent


def write_char(ch):
    for name, value in CHAR_NAMES.items():
        if ch == value:
            return '#\\' + name
    return '#\\' + ch


def write_form(form):
    """
    Debug printer. Re-reading the output gives back an equal tree.
    """
    if isinstance(form, Leaf):
        return _write_leaf(form.token)
    if isinstance(form, Paren):
        return '(' + ' '.join(write_form(f) for f in form.children) + ')'
    if isinstance(form, Bracket):
        return '[' + ' '.join(write_form(f) for f in form.children) + ']'
    if isinstance(form, Rerank):
        ranks = ' '.join(write_form(f) for f in form.ranks)
        left, right = ('[', ']') if form.bracketed else ('(', ')')
        return '~' + left + ranks + right + write_form(form.target)
    raise TypeError('Not a surface form: {0!r}'.format(form))


def is_incomplete(source):
    """
    True when the source ends inside a string or an open delimiter, so an
    interactive reader should keep asking for lines.
    """
    try:
        tokens = tokenize(source)
    except UnterminatedString:
        return True
    depth = 0
    for token in tokens:
        if token.kind in (LPAREN, LBRACKET):
            depth += 1
        elif token.kind in (RPAREN, RBRACKET):
            depth -= 1
    return depth > 0
