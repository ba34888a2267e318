# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import pickle

import pytest

from remora.model import (
    ALL, Array, Box, Builtin, product, iter_indices, flat_index, atom_kind,
    atoms_equal, split_cells, collect_frame, replicate_to_frame, frame_of,
    stack)
from remora.exceptions import (
    RankTooLow, EmptyFrameUnknownCell, CellShapeMismatch)


def matrix():
    return Array((2, 3), range(6))


def test_array_construction():

    a = matrix()
    assert a.shape == (2, 3)
    assert a.rank == 2
    assert a.size == 6
    assert a.length == 2
    assert a.item_shape == (3,)
    assert not a.is_scalar

    s = Array.scalar(7)
    assert s.is_scalar
    assert s.rank == 0
    assert s.value == 7

    assert Array.string('abc') == Array((3,), 'abc')
    assert Array((0, 3), ()).size == 0

    with pytest.raises(ValueError):
        Array((2, 2), [1, 2, 3])
    with pytest.raises(ValueError):
        Array((-1,), [])
    with pytest.raises(ValueError):
        a.value


def test_array_items():

    a = matrix()
    assert a.items() == [Array.vector([0, 1, 2]), Array.vector([3, 4, 5])]
    assert a.item(1) == Array.vector([3, 4, 5])
    assert Array.vector([4, 5]).items() == [Array.scalar(4),
                                           Array.scalar(5)]
    assert a.reshape((3, 2)).items()[2] == Array.vector([4, 5])


def test_array_equality():

    assert matrix() == Array((2, 3), [0, 1, 2, 3, 4, 5])
    assert matrix() != Array((3, 2), range(6))
    assert matrix() != Array((6,), range(6))
    # bool and int atoms are never equal
    assert Array.scalar(True) != Array.scalar(1)
    assert Array.scalar(1) != Array.scalar(1.0)

    f = Builtin('f', (0,), None)
    g = Builtin('f', (0,), None)
    assert Array.scalar(f) == Array.scalar(f)
    assert Array.scalar(f) != Array.scalar(g)


def test_atom_kind():

    assert atom_kind(True) == 'bool'
    assert atom_kind(3) == 'int'
    assert atom_kind(3.5) == 'float'
    assert atom_kind('x') == 'char'
    assert atom_kind(Box(Array.scalar(1))) == 'box'
    assert atom_kind(Builtin('f', (0,), None)) == 'function'
    with pytest.raises(TypeError):
        atom_kind(None)


def test_box_equality():

    a = Box(Array.vector([1, 2]), [2])
    assert a == Box(Array.vector([1, 2]), (2,))
    assert a != Box(Array.vector([1, 2]), [3])
    assert a != Box(Array.vector([1, 3]), [2])
    assert Box(Array.scalar(1), [[2, 3]]).witnesses == ((2, 3),)
    assert atoms_equal(a, Box(Array.vector([1, 2]), [2]))
    assert not atoms_equal(a, 1)


def test_helpers():

    assert product([]) == 1
    assert product([2, 3, 4]) == 24
    assert list(iter_indices((2, 2))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(iter_indices(())) == [()]
    assert flat_index((2, 3), (1, 2)) == 5
    assert flat_index((), ()) == 0


def test_all_rank_singleton():

    assert pickle.loads(pickle.dumps(ALL)) is ALL
    assert repr(ALL) == 'all'


def test_split_cells():

    a = matrix()
    frame, cells = split_cells(a, 0)
    assert frame == (2, 3)
    assert cells == [Array.scalar(i) for i in range(6)]

    frame, cells = split_cells(a, 1)
    assert frame == (2,)
    assert cells == a.items()

    frame, cells = split_cells(a, 2)
    assert frame == ()
    assert cells == [a]

    frame, cells = split_cells(a, ALL)
    assert frame == ()
    assert cells == [a]

    with pytest.raises(RankTooLow):
        split_cells(a, 3)


def test_frame_of():

    a = matrix()
    assert frame_of(a, 0) == (2, 3)
    assert frame_of(a, 1) == (2,)
    assert frame_of(a, ALL) == ()
    with pytest.raises(RankTooLow):
        frame_of(Array.scalar(0), 1)


def test_collect_frame():

    cells = [Array.vector([i, i]) for i in range(3)]
    assert collect_frame((3,), cells) == Array((3, 2), [0, 0, 1, 1, 2, 2])
    assert collect_frame((), [Array.scalar(1)]) == Array.scalar(1)

    # An empty frame needs the cell shape from somewhere else
    assert collect_frame((0,), [], (2,)).shape == (0, 2)
    with pytest.raises(EmptyFrameUnknownCell):
        collect_frame((0,), [])

    with pytest.raises(CellShapeMismatch):
        collect_frame((2,), [Array.vector([1]), Array.vector([1, 2])])
    with pytest.raises(CellShapeMismatch):
        collect_frame((1,), [Array.vector([1])], (2,))


def test_collect_inverts_split():

    a = Array((2, 3, 2), range(12))
    for rank in range(4):
        frame, cells = split_cells(a, rank)
        assert collect_frame(frame, cells) == a


def test_replicate_to_frame():

    v = Array.vector([10, 20])
    # Each cell of a shorter frame is repeated for the extra dimensions
    cells = replicate_to_frame(v, (2,), (2, 3), 0)
    assert [c.value for c in cells] == [10, 10, 10, 20, 20, 20]

    cells = replicate_to_frame(v, (), (3,), 1)
    assert cells == [v, v, v]

    cells = replicate_to_frame(v, (2,), (2,), 0)
    assert [c.value for c in cells] == [10, 20]


def test_stack():

    assert stack([Array.scalar(1), Array.scalar(2)], ()) == \
        Array.vector([1, 2])
    assert stack([], (3,)).shape == (0, 3)
