# -*- coding: utf-8 -*-
"""
Typed signatures of the builtin functions, written in source syntax.

The reduce/scan/fold/trace family takes the extra ``@item-pad`` shape so a
scalar operator can combine higher rank items. ``d-1`` reads as "d minus
one": writing the iteration dimension as ``(+ d-1 1)`` is how a signature
demands at least one item.
"""
from __future__ import unicode_literals

import logging
import threading
from collections import OrderedDict

from . import reader
from . import typeforms
from .exceptions import UnknownBuiltin

_logger = logging.getLogger(__name__)

INT_BINARY = '(→ (int int) int)'
INT_UNARY = '(→ (int) int)'
INT_PREDICATE = '(→ (int) bool)'
INT_COMPARE = '(→ (int int) bool)'
FLOAT_UNARY = '(→ (float) float)'
BOOL_BINARY = '(→ (bool bool) bool)'

REDUCER = ('(Π (d-1 @item-pad @cell-shape) (∀ (t) (→ ('
           '(→ ([t @cell-shape] [t @cell-shape]) [t @cell-shape]) '
           '[t (+ d-1 1) @item-pad @cell-shape]) {0})))')

SEEDED = ('(Π (d @item-pad @cell-shape) (∀ (t) (→ ('
          '(→ ([t @cell-shape] [t @cell-shape]) [t @cell-shape]) '
          '[t @item-pad @cell-shape] '
          '[t d @item-pad @cell-shape]) {0})))')

FOLDER = ('(Π (d @item @acc) (∀ (t u) (→ ('
          '(→ ([t @item] [u @acc]) [u @acc]) [u @acc] [t d @item]) {0})))')

SORTER = ('(Π (d @s) (∀ (t) (→ ((→ ([t @s] [t @s]) bool) [t d @s]) {0})))')

SIGNATURES = OrderedDict([
    ('+', INT_BINARY),
    ('-', INT_BINARY),
    ('*', INT_BINARY),
    ('/', '(→ (float float) float)'),
    ('expt', INT_BINARY),
    ('square', INT_UNARY),
    ('square-root', FLOAT_UNARY),
    ('add1', INT_UNARY),
    ('sub1', INT_UNARY),
    ('abs', INT_UNARY),
    ('min', INT_BINARY),
    ('max', INT_BINARY),
    ('floor', '(→ (float) int)'),
    ('ceiling', '(→ (float) int)'),
    ('modulo', INT_BINARY),
    ('sin', FLOAT_UNARY),
    ('cos', FLOAT_UNARY),
    ('tan', FLOAT_UNARY),
    ('exp', FLOAT_UNARY),
    ('log', FLOAT_UNARY),
    ('=', INT_COMPARE),
    ('<', INT_COMPARE),
    ('>', INT_COMPARE),
    ('<=', INT_COMPARE),
    ('>=', INT_COMPARE),
    ('zero?', INT_PREDICATE),
    ('negative?', INT_PREDICATE),
    ('positive?', INT_PREDICATE),
    ('even?', INT_PREDICATE),
    ('odd?', INT_PREDICATE),
    ('not', '(→ (bool) bool)'),
    ('and', BOOL_BINARY),
    ('or', BOOL_BINARY),
    ('char=?', '(→ (char char) bool)'),
    ('select', '(∀ (t) (→ (bool t t) t))'),
    ('append', '(Π (da db @rest) (∀ (t) (→ ([t da @rest] [t db @rest]) '
               '[t (+ da db) @rest])))'),
    ('length', '(Π (d1 @s) (∀ (t) (→ ([t d1 @s]) int)))'),
    ('shape-of', '(Π (@s) (∀ (t) (→ ([t @s]) (Σ (r) [int r]))))'),
    ('rank-of', '(Π (@s) (∀ (t) (→ ([t @s]) int)))'),
    ('iota', '(Π (r) (→ ([int r]) (Σ (@s) [int @s])))'),
    ('indices-of', '(Π (@s) (∀ (t) (→ ([t @s]) (Σ (r) [int @s r]))))'),
    ('rotate', '(Π (@s r) (∀ (t) (→ ([t @s] [int r]) [t @s])))'),
    ('with-shape', '(Π (@p @d) (∀ (s t) (→ ([s @p] [t @d]) [t @p])))'),
    ('take', '(Π (@s r) (∀ (t) (→ ([t @s] [int r]) (Σ (@k) [t @k]))))'),
    ('drop', '(Π (@s r) (∀ (t) (→ ([t @s] [int r]) (Σ (@k) [t @k]))))'),
    ('drop-right',
     '(Π (@s r) (∀ (t) (→ ([t @s] [int r]) (Σ (@k) [t @k]))))'),
    ('drop-right1',
     '(Π (d @s) (∀ (t) (→ ([t d @s] int) (Σ (e) [t e @s]))))'),
    ('mirror', '(Π (@s r) (∀ (t) (→ ([t @s] [bool r]) [t @s])))'),
    ('reverse', '(Π (d @s) (∀ (t) (→ ([t d @s]) [t d @s])))'),
    ('index', '(Π (@f @c k) (∀ (t) (→ ([t @f @c] [int k]) [t @c])))'),
    ('index-item', '(Π (d @s) (∀ (t) (→ ([t d @s] int) [t @s])))'),
    ('subarray', '(Π (@s r k) (∀ (t) (→ ([t @s] [int r] [int k]) '
                 '(Σ (@o) [t @o]))))'),
    ('subarray/wrap', '(Π (@s r k) (∀ (t) (→ ([t @s] [int r] [int k]) '
                      '(Σ (@o) [t @o]))))'),
    ('subarray/fill', '(Π (@s r k) (∀ (t) (→ ([t @s] [int r] [int k] t) '
                      '(Σ (@o) [t @o]))))'),
    ('filter', '(Π (da @s) (∀ (t) (→ ([bool da] [t da @s]) '
               '(Σ (db) [t db @s]))))'),
    ('partition', '(Π (da @s) (∀ (t) (→ ([bool da] [t da @s]) '
                  '[(Σ (db) [t db @s]) 2])))'),
    ('replicate', '(Π (da @s) (∀ (t) (→ ([int da] [t da @s]) '
                  '(Σ (db) [t db @s]))))'),
    ('reduce', REDUCER.format('[t @item-pad @cell-shape]')),
    ('iscan', REDUCER.format('[t (+ d-1 1) @item-pad @cell-shape]')),
    ('reduce/zero', SEEDED.format('[t @item-pad @cell-shape]')),
    ('scan/zero', SEEDED.format('[t (+ d 1) @item-pad @cell-shape]')),
    ('open-scan/zero', SEEDED.format('[t d @item-pad @cell-shape]')),
    ('fold', FOLDER.format('[u @acc]')),
    ('fold-right', FOLDER.format('[u @acc]')),
    ('trace', FOLDER.format('[u (+ d 1) @acc]')),
    ('trace-right', FOLDER.format('[u (+ d 1) @acc]')),
    ('grade', SORTER.format('[int d]')),
    ('sort', SORTER.format('[t d @s]')),
])


def _dims(prefix, count):
    return ' '.join('{0}{1}'.format(prefix, i) for i in range(1, count + 1))


for _rank in range(10):
    _names = _dims('d', _rank)
    SIGNATURES['iota{0}'.format(_rank)] = '(→ ({0}) (Σ ({1}) [int {1}]))'.format(
        ' '.join(['int'] * _rank), _names)

for _rank in range(1, 10):
    _names = _dims('d', _rank)
    SIGNATURES['indices-of/{0}'.format(_rank)] = (
        '(Π ({0}) (∀ (t) (→ ([t {0}]) [int {0} {1}])))'.format(
            _names, _rank))

_cache = {}
_lock = threading.Lock()


def signature(name):
    """
    The type of the builtin bound to ``name``, as a scalar array type.
    """
    with _lock:
        if name not in _cache:
            if name not in SIGNATURES:
                raise UnknownBuiltin(
                    'No typed signature for `{0}`'.format(name))
            _logger.debug('Parsing signature of %s', name)
            form, = reader.read(SIGNATURES[name])
            _cache[name] = typeforms.scalar(typeforms.parse_type(form))
        return _cache[name]


def builtin_signatures():
    return OrderedDict((name, signature(name)) for name in SIGNATURES)
