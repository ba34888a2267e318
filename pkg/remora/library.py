# -*- coding: utf-8 -*-
"""
The primitive function library.

Builtins are registered against a name and one cell rank per parameter:

    >>> @Library.register('length', ALL)
    >>> def length(evaluator, a):
    >>>     ...

Scalar functions can be registered with ``Library.scalar``, which checks
the atom kinds of the arguments and unwraps them to plain python values.

The typed dialect runs erased programs against a second table in which the
functions whose typed signature returns a box (``iota``, ``filter``, ...)
really do return a scalar box.
"""
from __future__ import unicode_literals

import math
import logging
from collections import OrderedDict

import six
import decorator

from .model import (
    Array, Box, Builtin, ALL, product, iter_indices, flat_index, atom_kind,
    stack)
from .evaluator import Environment
from .exceptions import (
    TypeMismatchAtom, DivisionByZero, NegativeSqrt, NumericOverflow,
    RankZeroAppend, TrailingShapeMismatch, RankZeroLength, NegativeDimension,
    RotationArity, EmptyDataSource, CountOutOfRange, IndexOutOfBounds,
    IndexTooLong, RankZeroSource, RegionOutOfBounds, SelectorLengthMismatch,
    RankZeroData, NegativeCount, EmptyReduce, ArityMismatch, UnknownBuiltin)

_logger = logging.getLogger(__name__)

NUMBER_KINDS = ('int', 'float')


class Library(object):
    """
    Registry of builtin functions.
    """

    dynamic = OrderedDict()
    typed = OrderedDict()

    @classmethod
    def register(cls, name, *ranks, **kwargs):
        """
        Params:
            name (str): The global name of the builtin.
            ranks: One cell rank (natural or ALL) per parameter.
            typed_only (bool): Only override the function in the typed
                runtime table.
        """
        typed_only = kwargs.pop('typed_only', False)

        def inner(f):
            if not typed_only:
                cls.dynamic[name] = (ranks, f)
            cls.typed[name] = (ranks, f)
            return f
        return inner

    @classmethod
    def scalar(cls, name, *kinds):
        """
        Register a function of scalar cells. ``kinds`` gives the accepted
        atom kind of each argument: ``num``, ``int``, ``bool``, ``char``,
        ``any`` or a tuple of those.
        """
        def inner(f):
            @cls.register(name, *([0] * len(kinds)))
            def wrapper(evaluator, *cells):
                values = []
                for cell, kind in zip(cells, kinds):
                    values.append(_check_atom(name, cell.value, kind))
                return Array.scalar(f(*values))
            wrapper.__name__ = str(f.__name__)
            return f
        return inner

    @classmethod
    def builtin(cls, name, typed=False):
        table = cls.typed if typed else cls.dynamic
        if name not in table:
            raise UnknownBuiltin('No builtin named `{0}`'.format(name))
        ranks, impl = table[name]
        return Builtin(name, ranks, impl)

    @classmethod
    def names(cls):
        return list(cls.dynamic)

    @classmethod
    def environment(cls, typed=False):
        """
        A fresh global environment holding every builtin as a scalar array.
        """
        env = Environment()
        for name in (cls.typed if typed else cls.dynamic):
            env.define(name, Array.scalar(cls.builtin(name, typed)))
        _logger.debug('Built %s environment with %s builtins',
                      'typed' if typed else 'dynamic', len(env.bindings))
        return env


def _check_atom(name, atom, kind):
    actual = atom_kind(atom)
    kinds = kind if isinstance(kind, tuple) else (kind,)
    expanded = set()
    for k in kinds:
        if k == 'num':
            expanded.update(NUMBER_KINDS)
        elif k == 'any':
            return atom
        else:
            expanded.add(k)
    if actual not in expanded:
        raise TypeMismatchAtom(
            '{0} expects {1}, got {2} {3!r}'.format(
                name, ' or '.join(sorted(expanded)), actual, atom))
    return atom


@decorator.decorator
def numeric(function, *args, **kwargs):
    """
    Translate python arithmetic failures into Remora errors.
    """
    try:
        result = function(*args, **kwargs)
    except ZeroDivisionError:
        raise DivisionByZero()
    except OverflowError:
        raise NumericOverflow()
    except ValueError as e:
        raise NumericOverflow('Math domain error: {0}'.format(e))
    # Finite operands never give an infinite result
    if isinstance(result, float) and math.isinf(result) and \
            all(not isinstance(a, float) or not math.isinf(a) for a in args):
        raise NumericOverflow('Result is out of the float range')
    return result


def _ints(name, cell):
    return [_check_atom(name, atom, 'int') for atom in cell.atoms]


def _bools(name, cell):
    return [_check_atom(name, atom, 'bool') for atom in cell.atoms]


def _same_kind(name, x, y):
    kx, ky = atom_kind(x), atom_kind(y)
    if kx in NUMBER_KINDS and ky in NUMBER_KINDS:
        return
    if kx != ky or kx in ('function', 'box'):
        raise TypeMismatchAtom(
            '{0} cannot compare {1} with {2}'.format(name, kx, ky))


def _remap(a, shape, source):
    """
    Build an array of the given shape whose atom at each position is the
    atom of ``a`` at ``source(position)``. ``source`` may return a Fill instead of a
    coordinate to supply a fill value.
    """
    atoms = []
    for position in iter_indices(shape):
        coordinate = source(position)
        if isinstance(coordinate, Fill):
            atoms.append(coordinate.atom)
        else:
            atoms.append(a.atoms[flat_index(a.shape, coordinate)])
    return Array(shape, atoms)


class Fill(object):
    __slots__ = ('atom',)

    def __init__(self, atom):
        self.atom = atom


# Arithmetic

@Library.scalar('+', 'num', 'num')
@numeric
def add(x, y):
    return x + y


@Library.scalar('-', 'num', 'num')
@numeric
def subtract(x, y):
    return x - y


@Library.scalar('*', 'num', 'num')
@numeric
def multiply(x, y):
    return x * y


@Library.scalar('/', 'num', 'num')
@numeric
def divide(x, y):
    if y == 0:
        raise DivisionByZero('{0} / {1}'.format(x, y))
    if isinstance(x, six.integer_types) and isinstance(y, six.integer_types):
        if x % y == 0:
            return x // y
    return float(x) / y


@Library.scalar('expt', 'num', 'num')
@numeric
def expt(base, exponent):
    if isinstance(base, six.integer_types) and \
            isinstance(exponent, six.integer_types) and exponent < 0:
        if base == 0:
            raise DivisionByZero('0 raised to a negative power')
        return float(base) ** exponent
    result = base ** exponent
    if isinstance(result, complex):
        raise NumericOverflow('Result is not a real number')
    return result


@Library.scalar('square', 'num')
@numeric
def square(x):
    return x * x


@Library.scalar('square-root', 'num')
@numeric
def square_root(x):
    if x < 0:
        raise NegativeSqrt('square-root of {0}'.format(x))
    if isinstance(x, six.integer_types):
        root = int(math.sqrt(x))
        # Correct float rounding for large ints
        while root * root > x:
            root -= 1
        while (root + 1) * (root + 1) <= x:
            root += 1
        if root * root == x:
            return root
    return math.sqrt(x)


@Library.scalar('add1', 'num')
def add1(x):
    return x + 1


@Library.scalar('sub1', 'num')
def sub1(x):
    return x - 1


@Library.scalar('abs', 'num')
def absolute(x):
    return abs(x)


@Library.scalar('min', 'num', 'num')
def minimum(x, y):
    return min(x, y)


@Library.scalar('max', 'num', 'num')
def maximum(x, y):
    return max(x, y)


@Library.scalar('floor', 'num')
@numeric
def floor(x):
    return int(math.floor(x))


@Library.scalar('ceiling', 'num')
@numeric
def ceiling(x):
    return int(math.ceil(x))


@Library.scalar('modulo', 'num', 'num')
@numeric
def modulo(x, y):
    return x % y


def _float_function(name, function):
    @Library.scalar(name, 'num')
    @numeric
    def wrapper(x):
        return function(x)
    return wrapper


sin = _float_function('sin', math.sin)
cos = _float_function('cos', math.cos)
tan = _float_function('tan', math.tan)
exp = _float_function('exp', math.exp)
log = _float_function('log', math.log)


# Predicates and logic

@Library.scalar('=', 'any', 'any')
def equal(x, y):
    _same_kind('=', x, y)
    return x == y


@Library.scalar('<', ('num', 'char'), ('num', 'char'))
def less(x, y):
    _same_kind('<', x, y)
    return x < y


@Library.scalar('>', ('num', 'char'), ('num', 'char'))
def greater(x, y):
    _same_kind('>', x, y)
    return x > y


@Library.scalar('<=', ('num', 'char'), ('num', 'char'))
def less_equal(x, y):
    _same_kind('<=', x, y)
    return x <= y


@Library.scalar('>=', ('num', 'char'), ('num', 'char'))
def greater_equal(x, y):
    _same_kind('>=', x, y)
    return x >= y


@Library.scalar('zero?', 'num')
def is_zero(x):
    return x == 0


@Library.scalar('negative?', 'num')
def is_negative(x):
    return x < 0


@Library.scalar('positive?', 'num')
def is_positive(x):
    return x > 0


@Library.scalar('even?', 'int')
def is_even(x):
    return x % 2 == 0


@Library.scalar('odd?', 'int')
def is_odd(x):
    return x % 2 == 1


@Library.scalar('not', 'bool')
def logical_not(x):
    return not x


@Library.scalar('and', 'bool', 'bool')
def logical_and(x, y):
    return x and y


@Library.scalar('or', 'bool', 'bool')
def logical_or(x, y):
    return x or y


@Library.scalar('char=?', 'char', 'char')
def char_equal(x, y):
    return x == y


@Library.register('select', 0, 0, 0)
def select(evaluator, flag, consequent, alternative):
    if _check_atom('select', flag.value, 'bool'):
        return consequent
    return alternative


# Whole-array structure

@Library.register('append', ALL, ALL)
def append(evaluator, a, b):
    if a.is_scalar or b.is_scalar:
        raise RankZeroAppend('append needs arrays of rank 1 or more')
    if a.item_shape != b.item_shape:
        raise TrailingShapeMismatch(
            'Cannot append items of shape {0} and {1}'.format(
                list(a.item_shape), list(b.item_shape)))
    return Array((a.length + b.length,) + a.item_shape, a.atoms + b.atoms)


@Library.register('length', ALL)
def length(evaluator, a):
    if a.is_scalar:
        raise RankZeroLength()
    return Array.scalar(a.length)


@Library.register('shape-of', ALL)
def shape_of(evaluator, a):
    return Array.vector(a.shape)


@Library.register('rank-of', ALL)
def rank_of(evaluator, a):
    return Array.scalar(a.rank)


def make_iota(shape):
    for dim in shape:
        if dim < 0:
            raise NegativeDimension('iota of shape {0}'.format(list(shape)))
    return Array(shape, six.moves.range(product(shape)))


@Library.register('iota', 1)
def iota(evaluator, shape):
    return make_iota(tuple(_ints('iota', shape)))


def _register_iota_k(rank):
    name = 'iota{0}'.format(rank)

    @Library.register(name, *([0] * rank))
    def iota_k(evaluator, *dims):
        return make_iota(tuple(_check_atom(name, d.value, 'int')
                               for d in dims))
    return iota_k


for _rank in range(10):
    _register_iota_k(_rank)


@Library.register('indices-of', ALL)
def indices_of(evaluator, a):
    atoms = []
    for position in iter_indices(a.shape):
        atoms.extend(position)
    return Array(a.shape + (a.rank,), atoms)


for _rank in range(1, 10):
    Library.register('indices-of/{0}'.format(_rank), _rank)(indices_of)


@Library.register('rotate', ALL, 1)
def rotate(evaluator, a, amounts):
    amounts = _ints('rotate', amounts)
    if len(amounts) != a.rank:
        raise RotationArity(
            '{0} rotation amounts for a rank {1} array'.format(
                len(amounts), a.rank))

    def source(position):
        return tuple((p + k) % d for p, k, d in
                     zip(position, amounts, a.shape))
    return _remap(a, a.shape, source)


@Library.register('with-shape', ALL, ALL)
def with_shape(evaluator, pattern, data):
    count = product(pattern.shape)
    if count and not data.atoms:
        raise EmptyDataSource()
    atoms = [data.atoms[i % data.size] for i in six.moves.range(count)]
    return Array(pattern.shape, atoms)


def _counts(name, a, counts):
    counts = _ints(name, counts)
    if len(counts) > a.rank:
        raise ArityMismatch(
            '{0} got {1} counts for a rank {2} array'.format(
                name, len(counts), a.rank))
    for count, dim in zip(counts, a.shape):
        if count < 0 or count > dim:
            raise CountOutOfRange(
                '{0} count {1} for a dimension of {2}'.format(
                    name, count, dim))
    return counts + [0] * (a.rank - len(counts))


@Library.register('take', ALL, 1)
def take(evaluator, a, counts):
    kept = _counts('take', a, counts)[:counts.size]
    shape = tuple(kept) + a.shape[len(kept):]
    return _remap(a, shape, lambda position: position)


@Library.register('drop', ALL, 1)
def drop(evaluator, a, counts):
    counts = _counts('drop', a, counts)
    shape = tuple(d - k for d, k in zip(a.shape, counts))
    return _remap(a, shape, lambda position: tuple(
        p + k for p, k in zip(position, counts)))


@Library.register('drop-right', ALL, 1)
def drop_right(evaluator, a, counts):
    counts = _counts('drop-right', a, counts)
    shape = tuple(d - k for d, k in zip(a.shape, counts))
    return _remap(a, shape, lambda position: position)


@Library.register('drop-right1', ALL, 0)
def drop_right1(evaluator, a, count):
    if a.is_scalar:
        raise RankZeroData('drop-right1 of a scalar')
    count = _check_atom('drop-right1', count.value, 'int')
    return drop_right(evaluator, a, Array.vector([count]))


@Library.register('mirror', ALL, 1)
def mirror(evaluator, a, flags):
    flags = _bools('mirror', flags)
    if len(flags) != a.rank:
        raise ArityMismatch(
            'mirror got {0} flags for a rank {1} array'.format(
                len(flags), a.rank))
    return _remap(a, a.shape, lambda position: tuple(
        d - 1 - p if flag else p
        for p, d, flag in zip(position, a.shape, flags)))


@Library.register('reverse', ALL)
def reverse(evaluator, a):
    if a.is_scalar:
        raise RankZeroData('reverse of a scalar')
    return stack(a.items()[::-1], a.item_shape)


# Indexing

@Library.register('index', ALL, 1)
def index(evaluator, a, idx):
    idx = _ints('index', idx)
    if len(idx) > a.rank:
        raise IndexTooLong(
            'Index {0} into a rank {1} array'.format(idx, a.rank))
    for i, dim in zip(idx, a.shape):
        if not 0 <= i < dim:
            raise IndexOutOfBounds(
                'Index {0} into shape {1}'.format(idx, list(a.shape)))
    rest = a.shape[len(idx):]
    step = product(rest)
    start = flat_index(a.shape[:len(idx)], idx) * step
    return Array(rest, a.atoms[start:start + step])


@Library.register('index-item', ALL, 0)
def index_item(evaluator, a, i):
    if a.is_scalar:
        raise RankZeroSource()
    i = _check_atom('index-item', i.value, 'int')
    if not 0 <= i < a.length:
        raise IndexOutOfBounds(
            'Item {0} of an array with {1} items'.format(i, a.length))
    return a.item(i)


def _region(name, a, start, shape):
    start = _ints(name, start)
    shape = _ints(name, shape)
    if len(start) != a.rank:
        raise ArityMismatch(
            '{0} start {1} for a rank {2} array'.format(name, start, a.rank))
    if len(shape) > a.rank:
        raise ArityMismatch(
            '{0} shape {1} for a rank {2} array'.format(name, shape, a.rank))
    for extent in shape:
        if extent < 0:
            raise NegativeDimension(
                '{0} shape {1}'.format(name, shape))
    extents = shape + [max(d - s, 0) for d, s in
                       zip(a.shape[len(shape):], start[len(shape):])]
    return start, tuple(extents)


@Library.register('subarray', ALL, 1, 1)
def subarray(evaluator, a, start, shape):
    start, extents = _region('subarray', a, start, shape)
    for s, e, d in zip(start, extents, a.shape):
        if s < 0 or s + e > d:
            raise RegionOutOfBounds(
                'Region at {0} of shape {1} in shape {2}'.format(
                    start, list(extents), list(a.shape)))
    return _remap(a, extents, lambda position: tuple(
        s + p for s, p in zip(start, position)))


@Library.register('subarray/wrap', ALL, 1, 1)
def subarray_wrap(evaluator, a, start, shape):
    start, extents = _region('subarray/wrap', a, start, shape)
    if product(extents) and not a.atoms:
        raise EmptyDataSource('subarray/wrap of an empty array')
    return _remap(a, extents, lambda position: tuple(
        (s + p) % d for s, p, d in zip(start, position, a.shape)))


@Library.register('subarray/fill', ALL, 1, 1, 0)
def subarray_fill(evaluator, a, start, shape, fill):
    start, extents = _region('subarray/fill', a, start, shape)

    def source(position):
        coordinate = tuple(s + p for s, p in zip(start, position))
        if all(0 <= c < d for c, d in zip(coordinate, a.shape)):
            return coordinate
        return Fill(fill.value)
    return _remap(a, extents, source)


# Selection

def _selected_items(name, keep, a):
    if a.is_scalar:
        raise RankZeroData('{0} of a scalar'.format(name))
    if keep.length != a.length:
        raise SelectorLengthMismatch(
            '{0} selector of length {1} for {2} items'.format(
                name, keep.length, a.length))
    return a.items()


@Library.register('filter', 1, ALL)
def filter_items(evaluator, keep, a):
    items = _selected_items('filter', keep, a)
    flags = _bools('filter', keep)
    return stack([item for item, flag in zip(items, flags) if flag],
                 a.item_shape)


@Library.register('partition', 1, ALL)
def partition(evaluator, keep, a):
    items = _selected_items('partition', keep, a)
    flags = _bools('partition', keep)
    kept = stack([i for i, f in zip(items, flags) if f], a.item_shape)
    rest = stack([i for i, f in zip(items, flags) if not f], a.item_shape)
    return Array.vector([Box(kept, [kept.length]), Box(rest, [rest.length])])


@Library.register('replicate', 1, ALL)
def replicate(evaluator, counts, a):
    items = _selected_items('replicate', counts, a)
    counts = _ints('replicate', counts)
    out = []
    for item, count in zip(items, counts):
        if count < 0:
            raise NegativeCount('replicate count {0}'.format(count))
        out.extend([item] * count)
    return stack(out, a.item_shape)


# Reduction and iteration

def _items(name, a):
    if a.is_scalar:
        raise RankZeroData('{0} of a scalar'.format(name))
    return a.items()


def tree_reduce(evaluator, op, items):
    """
    Combine items pairwise in a balanced tree. The tree shape depends only
    on the number of items.
    """
    items = list(items)
    while len(items) > 1:
        paired = [evaluator.apply(op, [items[i], items[i + 1]])
                  for i in six.moves.range(0, len(items) - 1, 2)]
        if len(items) % 2:
            paired.append(items[-1])
        items = paired
    return items[0]


@Library.register('reduce', 0, ALL)
def reduce_items(evaluator, op, a):
    items = _items('reduce', a)
    if not items:
        raise EmptyReduce()
    return tree_reduce(evaluator, op, items)


@Library.register('reduce/zero', 0, ALL, ALL)
def reduce_zero(evaluator, op, zero, a):
    return tree_reduce(evaluator, op, [zero] + _items('reduce/zero', a))


def _prefixes(evaluator, op, start, items):
    out = [start]
    for item in items:
        out.append(evaluator.apply(op, [out[-1], item]))
    return out


@Library.register('iscan', 0, ALL)
def iscan(evaluator, op, a):
    items = _items('iscan', a)
    if not items:
        raise EmptyReduce('iscan of an empty array')
    out = _prefixes(evaluator, op, items[0], items[1:])
    return stack(out, out[0].shape)


@Library.register('scan/zero', 0, ALL, ALL)
def scan_zero(evaluator, op, zero, a):
    out = _prefixes(evaluator, op, zero, _items('scan/zero', a))
    return stack(out, zero.shape)


@Library.register('open-scan/zero', 0, ALL, ALL)
def open_scan_zero(evaluator, op, zero, a):
    out = _prefixes(evaluator, op, zero, _items('open-scan/zero', a))
    return stack(out[:-1], zero.shape)


def _accumulators(evaluator, op, zero, items):
    out = [zero]
    for item in items:
        out.append(evaluator.apply(op, [item, out[-1]]))
    return out


@Library.register('fold', 0, ALL, ALL)
def fold(evaluator, op, zero, a):
    return _accumulators(evaluator, op, zero, _items('fold', a))[-1]


@Library.register('fold-right', 0, ALL, ALL)
def fold_right(evaluator, op, zero, a):
    items = _items('fold-right', a)[::-1]
    return _accumulators(evaluator, op, zero, items)[-1]


@Library.register('trace', 0, ALL, ALL)
def trace(evaluator, op, zero, a):
    out = _accumulators(evaluator, op, zero, _items('trace', a))
    return stack(out, zero.shape)


@Library.register('trace-right', 0, ALL, ALL)
def trace_right(evaluator, op, zero, a):
    items = _items('trace-right', a)[::-1]
    out = _accumulators(evaluator, op, zero, items)
    return stack(out, zero.shape)


# Sorting

def merge_sort(indices, less):
    """
    Stable merge sort of a list of indices. An element from the right run
    is only taken first when it is strictly less.
    """
    if len(indices) <= 1:
        return list(indices)
    middle = len(indices) // 2
    left = merge_sort(indices[:middle], less)
    right = merge_sort(indices[middle:], less)
    merged, i, j = [], 0, 0
    while i < len(left) and j < len(right):
        if less(right[j], left[i]):
            merged.append(right[j])
            j += 1
        else:
            merged.append(left[i])
            i += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged


def _grade(evaluator, cmp, a, name):
    items = _items(name, a)

    def less(i, j):
        result = evaluator.apply(cmp, [items[i], items[j]])
        if not result.is_scalar:
            raise TypeMismatchAtom(
                '{0} comparator returned an array of shape {1}'.format(
                    name, list(result.shape)))
        return _check_atom(name, result.value, 'bool')

    return items, merge_sort(list(six.moves.range(len(items))), less)


@Library.register('grade', 0, ALL)
def grade(evaluator, cmp, a):
    _, order = _grade(evaluator, cmp, a, 'grade')
    return Array.vector(order)


@Library.register('sort', 0, ALL)
def sort(evaluator, cmp, a):
    items, order = _grade(evaluator, cmp, a, 'sort')
    return stack([items[i] for i in order], a.item_shape)


# Typed runtime: results whose signature is an existential come boxed

def _witness_shape(result):
    return [result.shape]


def _witness_dims(result):
    return list(result.shape)


def _witness_first(result):
    return [result.shape[0]]


def _witness_last(result):
    return [result.shape[-1]]


def _boxed(name, witnesses):
    ranks, impl = Library.dynamic[name]

    @Library.register(name, *ranks, typed_only=True)
    def boxing(evaluator, *cells):
        result = impl(evaluator, *cells)
        return Array.scalar(Box(result, witnesses(result)))
    return boxing


for _name, _witnesses in [
        ('iota', _witness_shape),
        ('indices-of', _witness_last),
        ('filter', _witness_first),
        ('replicate', _witness_first),
        ('take', _witness_shape),
        ('drop', _witness_shape),
        ('drop-right', _witness_shape),
        ('drop-right1', _witness_first),
        ('shape-of', _witness_first),
        ('subarray', _witness_shape),
        ('subarray/wrap', _witness_shape),
        ('subarray/fill', _witness_shape)]:
    _boxed(_name, _witnesses)

for _rank in range(10):
    _boxed('iota{0}'.format(_rank), _witness_dims)
