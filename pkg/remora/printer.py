# -*- coding: utf-8 -*-
"""
Canonical text form of values.

Arrays print as nested brackets. Every column of the last axis is right
aligned across the whole array, items of a rank k array are separated by
k - 1 newlines and continuation lines are indented by one space per
bracket:

    [[[ 4  6]
      [ 5  7]]

     [[32 33]
      [42 43]]]
"""
from __future__ import unicode_literals

import six
from kitchen.text.display import textual_width

from .model import Function, IndexClosure, atom_kind
from .reader import write_char, write_float

STRING_ESCAPES = {'\\': '\\\\', '"': '\\"', '\n': '\\n', '\t': '\\t'}


def format_string(chars):
    return '"{0}"'.format(''.join(STRING_ESCAPES.get(c, c) for c in chars))


def format_ranks(ranks):
    return '({0})'.format(' '.join(six.text_type(r) for r in ranks))


def format_witness(witness):
    if isinstance(witness, tuple):
        return '[{0}]'.format(' '.join(six.text_type(w) for w in witness))
    return six.text_type(witness)


def format_atom(atom):
    kind = atom_kind(atom)
    if kind == 'bool':
        return '#t' if atom else '#f'
    if kind == 'int':
        return six.text_type(atom)
    if kind == 'float':
        return write_float(atom)
    if kind == 'char':
        return write_char(atom)
    if isinstance(atom, IndexClosure):
        return '#<index-function {0} ({1})>'.format(
            atom.name or 'anonymous', ' '.join(atom.ivars))
    if isinstance(atom, Function):
        return '#<function {0} {1}>'.format(
            atom.name or 'anonymous', format_ranks(atom.ranks))
    return format_box(atom)


def format_box(box):
    witnesses = ' '.join(format_witness(w) for w in box.witnesses)
    contents = format_value(box.contents)
    if '\n' not in contents:
        return '(box ({0}) {1})'.format(witnesses, contents)
    return '(box ({0})\n{1})'.format(witnesses, _indent(contents, 2, True))


def _indent(text, width, first=False):
    pad = ' ' * width
    lines = text.split('\n')
    out = [(pad + lines[0]) if first else lines[0]]
    out.extend(pad + line if line else line for line in lines[1:])
    return '\n'.join(out)


def _align(texts, columns):
    widths = [0] * columns
    for i, text in enumerate(texts):
        if '\n' not in text:
            widths[i % columns] = max(widths[i % columns], textual_width(text))
    out = []
    for i, text in enumerate(texts):
        if '\n' in text:
            out.append(text)
        else:
            out.append(' ' * (widths[i % columns] - textual_width(text)) +
                       text)
    return out


def _nest(shape, texts):
    if len(shape) == 1:
        separator = '\n' if any('\n' in t for t in texts) else ' '
        return '[{0}]'.format(_indent(separator.join(texts), 1))
    step = len(texts) // shape[0]
    items = [_nest(shape[1:], texts[i:i + step])
             for i in six.moves.range(0, len(texts), step)]
    separator = '\n' * (len(shape) - 1)
    return '[{0}]'.format(_indent(separator.join(items), 1))


def format_value(array):
    """
    Format an array in its canonical printed form.
    """
    if array.is_scalar:
        return format_atom(array.value)
    if 0 in array.shape:
        return '#(shape {0})[]'.format(
            ' '.join(six.text_type(d) for d in array.shape))

    shape, atoms = array.shape, array.atoms
    if all(atom_kind(a) == 'char' for a in atoms):
        # The last axis prints as strings
        step = shape[-1]
        texts = [format_string(atoms[i:i + step])
                 for i in six.moves.range(0, len(atoms), step)]
        shape = shape[:-1]
        if not shape:
            return texts[0]
    else:
        texts = [format_atom(a) for a in atoms]
    return _nest(shape, _align(texts, shape[-1]))

