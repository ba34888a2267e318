# -*- coding: utf-8 -*-
"""
The runtime value universe.

Every value is an ``Array``: a shape plus a flat, row-major tuple of atoms.
Atoms are plain python values (``int``, ``float``, ``bool``, a one character
string for chars) or instances of ``Function`` and ``Box``.
"""
from __future__ import unicode_literals

import itertools
from functools import reduce as _fold
from operator import mul

import six

from .exceptions import RankTooLow, CellShapeMismatch, EmptyFrameUnknownCell


class _All(object):
    """
    Cell rank of a parameter that consumes its whole argument.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_All, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'all'

    __str__ = __repr__

    def __reduce__(self):
        return (_All, ())


ALL = _All()


def product(dims):
    return _fold(mul, dims, 1)


def iter_indices(shape):
    """
    Yield every index tuple of the shape in row-major order.
    """
    return itertools.product(*[six.moves.range(d) for d in shape])


def flat_index(shape, position):
    index = 0
    for dim, coordinate in zip(shape, position):
        index = index * dim + coordinate
    return index


def atom_kind(atom):
    # bool must be tested before int
    if isinstance(atom, bool):
        return 'bool'
    if isinstance(atom, six.integer_types):
        return 'int'
    if isinstance(atom, float):
        return 'float'
    if isinstance(atom, six.text_type):
        return 'char'
    if isinstance(atom, Function):
        return 'function'
    if isinstance(atom, Box):
        return 'box'
    raise TypeError('Not an atom: {0!r}'.format(atom))


def atoms_equal(a, b):
    if isinstance(a, Function) or isinstance(b, Function):
        return a is b
    if isinstance(a, Box) or isinstance(b, Box):
        return isinstance(a, Box) and isinstance(b, Box) and a == b
    return atom_kind(a) == atom_kind(b) and a == b


class Array(object):
    """
    Immutable rectangular array.

    Params:
        shape (tuple): The dimensions, ``()`` for a scalar.
        atoms (tuple): product(shape) atoms in row-major order.
    """
    __slots__ = ('shape', 'atoms')

    def __init__(self, shape, atoms):
        shape = tuple(shape)
        atoms = tuple(atoms)
        if any(d < 0 for d in shape):
            raise ValueError('Negative dimension in {0!r}'.format(shape))
        if len(atoms) != product(shape):
            raise ValueError('Shape {0!r} needs {1} atoms, got {2}'.format(
                shape, product(shape), len(atoms)))
        self.shape = shape
        self.atoms = atoms

    @classmethod
    def scalar(cls, atom):
        return cls((), (atom,))

    @classmethod
    def vector(cls, atoms):
        atoms = tuple(atoms)
        return cls((len(atoms),), atoms)

    @classmethod
    def string(cls, text):
        return cls.vector(six.text_type(text))

    @property
    def rank(self):
        return len(self.shape)

    @property
    def size(self):
        return len(self.atoms)

    @property
    def is_scalar(self):
        return not self.shape

    @property
    def value(self):
        """
        The single atom of a scalar array.
        """
        if self.shape:
            raise ValueError('Array of shape {0!r} is not a scalar'.format(
                self.shape))
        return self.atoms[0]

    @property
    def length(self):
        return self.shape[0]

    @property
    def item_shape(self):
        return self.shape[1:]

    def items(self):
        """
        The rank r-1 subarrays along the leading dimension.
        """
        return split_cells(self, self.rank - 1)[1]

    def item(self, i):
        step = product(self.shape[1:])
        return Array(self.shape[1:], self.atoms[i * step:(i + 1) * step])

    def reshape(self, shape):
        return Array(shape, self.atoms)

    def __eq__(self, other):
        if not isinstance(other, Array):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(atoms_equal(a, b) for a, b in zip(self.atoms, other.atoms))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return 'Array({0!r}, {1!r})'.format(self.shape, self.atoms)


class Function(object):
    """
    Base class for function atoms.

    Function atoms compare by identity.
    """
    name = None

    def __init__(self, ranks):
        self.ranks = tuple(ranks)

    @property
    def arity(self):
        return len(self.ranks)

    def __repr__(self):
        return '<{0} {1} {2!r}>'.format(
            type(self).__name__, self.name or 'anonymous', self.ranks)


class Closure(Function):
    """
    A user defined function.

    Params:
        params (tuple): Parameter names.
        ranks (tuple): One cell rank (natural or ALL) per parameter.
        body: The CoreExpr evaluated on each set of argument cells.
        env: The Environment the lambda was evaluated in.
    """

    def __init__(self, params, ranks, body, env, name=None):
        super(Closure, self).__init__(ranks)
        self.params = tuple(params)
        self.body = body
        self.env = env
        self.name = name


class IndexClosure(Function):
    """
    An index abstraction waiting for its indices. It takes no array
    arguments, ``i-app`` binds ``ivars`` and evaluates ``body``.
    """

    def __init__(self, ivars, body, env, name=None):
        super(IndexClosure, self).__init__(())
        self.ivars = tuple(ivars)
        self.body = body
        self.env = env
        self.name = name


class Builtin(Function):
    """
    A primitive implemented in python. ``impl`` takes one Array per
    parameter (already split to cells) plus the calling evaluator and
    returns an Array.
    """

    def __init__(self, name, ranks, impl, signature=None):
        super(Builtin, self).__init__(ranks)
        self.name = name
        self.impl = impl
        self.signature = signature

    def __call__(self, evaluator, *cells):
        return self.impl(evaluator, *cells)


@six.python_2_unicode_compatible
class Box(object):
    """
    An array packaged as a single atom, together with the witness indices
    of its existential type. A dimension witness is an int, a shape witness
    a tuple of ints.
    """
    __slots__ = ('contents', 'witnesses')

    def __init__(self, contents, witnesses=()):
        self.contents = contents
        self.witnesses = tuple(
            tuple(w) if isinstance(w, (list, tuple)) else w
            for w in witnesses)

    def __eq__(self, other):
        if not isinstance(other, Box):
            return NotImplemented
        return (self.witnesses == other.witnesses
                and self.contents == other.contents)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        return 'Box({0!r}, {1!r})'.format(self.contents, self.witnesses)

    __repr__ = __str__


def split_cells(array, cell_rank):
    """
    View an array as a frame of cells.

    Returns the frame shape and the list of cells in row-major frame order.
    An ALL-ranked view is the scalar frame holding the whole array.
    """
    if cell_rank is ALL:
        return (), [array]
    if cell_rank > array.rank:
        raise RankTooLow(
            'Cell rank {0} is larger than the rank {1} argument of '
            'shape {2}'.format(cell_rank, array.rank, list(array.shape)))

    split = array.rank - cell_rank
    frame, cell_shape = array.shape[:split], array.shape[split:]
    step = product(cell_shape)
    if step == 1:
        cells = [Array(cell_shape, (atom,)) for atom in array.atoms]
    else:
        count = product(frame)
        cells = [Array(cell_shape, array.atoms[i * step:(i + 1) * step])
                 for i in six.moves.range(count)]
    return frame, cells


def collect_frame(frame, cells, cell_shape=None):
    """
    Assemble result cells, given in row-major order, into a frame.

    An empty frame has no cells to take the cell shape from, so the caller
    has to pass ``cell_shape`` in that case.
    """
    frame = tuple(frame)
    cells = list(cells)
    if not cells:
        if cell_shape is None:
            raise EmptyFrameUnknownCell(
                'Frame {0} has no cells'.format(list(frame)))
        return Array(frame + tuple(cell_shape), ())

    shape = cells[0].shape
    if cell_shape is not None and tuple(cell_shape) != shape:
        raise CellShapeMismatch(
            'Expected cells of shape {0}, got {1}'.format(
                list(cell_shape), list(shape)))
    atoms = []
    for cell in cells:
        if cell.shape != shape:
            raise CellShapeMismatch(
                'Result cells have shapes {0} and {1}'.format(
                    list(shape), list(cell.shape)))
        atoms.extend(cell.atoms)
    return Array(frame + shape, atoms)


def replicate_to_frame(array, own_frame, principal, cell_rank):
    """
    Produce one cell of ``array`` per position of the principal frame.

    The cell used for principal index (i1 ... in) is the array's own cell at
    (i1 ... ik), where k is the rank of its own frame.
    """
    frame, cells = split_cells(array, cell_rank)
    own_frame = tuple(own_frame)
    principal = tuple(principal)
    assert frame == own_frame, (frame, own_frame)
    assert principal[:len(own_frame)] == own_frame, (own_frame, principal)

    repeat = product(principal[len(own_frame):])
    if repeat == 1:
        return cells
    return [cell for cell in cells for _ in six.moves.range(repeat)]


def frame_of(array, cell_rank):
    if cell_rank is ALL:
        return ()
    if cell_rank > array.rank:
        raise RankTooLow(
            'Cell rank {0} is larger than the rank {1} argument of '
            'shape {2}'.format(cell_rank, array.rank, list(array.shape)))
    return array.shape[:array.rank - cell_rank]


def stack(items, item_shape):
    """
    Build an array from its items along a new leading dimension.
    """
    return collect_frame((len(items),), items, item_shape)
