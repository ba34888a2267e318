# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import random
import operator
from collections import OrderedDict

import pytest

from remora.model import Array, ALL
from remora.printer import format_value
from remora.library import Library, merge_sort, tree_reduce, make_iota
from remora.exceptions import (
    TypeMismatchAtom, DivisionByZero, NegativeSqrt, RankZeroAppend,
    TrailingShapeMismatch, RankZeroLength, NegativeDimension, RotationArity,
    EmptyDataSource, CountOutOfRange, IndexOutOfBounds, IndexTooLong,
    RankZeroSource, RegionOutOfBounds, SelectorLengthMismatch, RankZeroData,
    NegativeCount, EmptyReduce, ArityMismatch, UnknownBuiltin,
    NumericOverflow)

try:
    from unittest import mock
except ImportError:
    import mock


def test_registry():

    assert '+' in Library.names()
    assert 'filter' in Library.names()
    assert 'iota3' in Library.names()
    assert 'indices-of/2' in Library.names()

    builtin = Library.builtin('reduce')
    assert builtin.ranks == (0, ALL)
    assert builtin.name == 'reduce'

    with pytest.raises(UnknownBuiltin):
        Library.builtin('no-such-function')


def test_environment_is_logged():

    with mock.patch('remora.library._logger') as logger:
        env = Library.environment(typed=True)
    assert set(env.names()) == set(Library.typed)
    logger.debug.assert_called_once_with(
        'Built %s environment with %s builtins', 'typed', len(Library.typed))


def test_typed_table_boxes_results():

    dynamic = Library.builtin('filter')
    typed = Library.builtin('filter', typed=True)
    assert dynamic.impl is not typed.impl
    # Functions without an existential result share the implementation
    assert Library.builtin('+').impl is Library.builtin('+', typed=True).impl


def test_environment_is_fresh():

    env = Library.environment()
    env.define('+', Array.scalar(1))
    assert Library.environment().lookup('+').value.name == '+'


def test_make_iota():

    assert make_iota((2, 2)) == Array((2, 2), [0, 1, 2, 3])
    assert make_iota(()) == Array.scalar(0)
    with pytest.raises(NegativeDimension):
        make_iota((-1,))


def test_merge_sort_is_stable():

    keys = [3, 1, 3, 1, 2]
    order = merge_sort(list(range(5)), lambda i, j: keys[i] < keys[j])
    assert order == [1, 3, 4, 0, 2]


def test_tree_reduce_shape(evaluator_stub):

    # ((a b) (c d)) e
    items = ['a', 'b', 'c', 'd', 'e']
    assert tree_reduce(evaluator_stub, None, items) == '(((a b) (c d)) e)'


@pytest.fixture()
def evaluator_stub():

    class Stub(object):
        def apply(self, op, args):
            return '({0} {1})'.format(*args)
    return Stub()


RESULTS = OrderedDict([
    # Arithmetic
    ('add', ('(+ 2 3)', '5')),
    ('subtract-float', ('(- 2.5 1)', '1.5')),
    ('divide-exact', ('(/ 6 3)', '2')),
    ('divide-inexact', ('(/ 1 4)', '0.25')),
    ('expt', ('(expt 2 [0 1 10])', '[1 2 1024]')),
    ('expt-negative', ('(expt 2 -1)', '0.5')),
    ('square', ('(square [1 2 3])', '[1 4 9]')),
    ('sqrt-exact', ('(square-root [4 9 10000000000])', '[2 3 100000]')),
    ('sqrt-inexact', ('(square-root 2)', '1.4142135623730951')),
    ('add1-sub1', ('[(add1 1) (sub1 1)]', '[2 0]')),
    ('abs', ('(abs [-3 0 3])', '[3 0 3]')),
    ('min-max', ('[(min 3 7) (max 3 7)]', '[3 7]')),
    ('floor-ceiling', ('[(floor 2.5) (ceiling 2.5) (floor -2.5)]',
                       '[2 3 -3]')),
    ('modulo', ('(modulo [7 -7] 3)', '[1 2]')),
    ('exp-log', ('(log (exp 0.0))', '0.0')),
    ('float-exponent', ('(* 1.0e10 1.0e10)', '1.0e+20')),
    ('infinite-operand', ('(+ +inf.0 1)', '+inf.0')),
    ('cos', ('(cos 0.0)', '1.0')),
    # Predicates
    ('equal', ('(= [1 2 3] 2)', '[#f #t #f]')),
    ('equal-mixed-numbers', ('(= 1 1.0)', '#t')),
    ('compare', ('[(< 1 2) (> 1 2) (<= 2 2) (>= 1 2)]', '[#t #f #t #f]')),
    ('compare-chars', ('(< #\\a #\\b)', '#t')),
    ('number-predicates', ('[(zero? 0) (negative? -1) (positive? 0)]',
                           '[#t #t #f]')),
    ('parity', ('[(even? 4) (odd? 4) (odd? -3)]', '[#t #f #t]')),
    ('logic', ('[(not #t) (and #t #f) (or #t #f)]', '[#f #f #t]')),
    ('char-equal', ('(char=? #\\a "aba")', '[#t #f #t]')),
    ('select', ('(select [#t #f] [1 2] [3 4])', '[1 4]')),
    # Structure
    ('append', ('(append [1 2] [3])', '[1 2 3]')),
    ('append-matrices', ('(append [[1 2]] [[3 4] [5 6]])',
                         '[[1 2]\n [3 4]\n [5 6]]')),
    ('length', ('(length [[1 2 3] [4 5 6]])', '2')),
    ('shape-of', ('(shape-of (iota [2 3 4]))', '[2 3 4]')),
    ('shape-of-scalar', ('(shape-of 5)', '#(shape 0)[]')),
    ('rank-of', ('(rank-of 5)', '0')),
    ('iota', ('(iota [2 2])', '[[0 1]\n [2 3]]')),
    ('iota-k', ('(iota2 2 3)', '[[0 1 2]\n [3 4 5]]')),
    ('iota0', ('(iota0)', '0')),
    ('indices-of', ('(indices-of [7 8 9])', '[[0]\n [1]\n [2]]')),
    ('indices-of-k', ('(indices-of/1 "ab")', '[[0]\n [1]]')),
    ('rotate', ('(rotate [1 2 3 4] [-1])', '[4 1 2 3]')),
    ('with-shape', ('(with-shape [0 0 0 0 0] [1 2])', '[1 2 1 2 1]')),
    ('with-shape-empty', ('(with-shape (iota [0]) (iota [0]))',
                          '#(shape 0)[]')),
    ('take', ('(take (iota [3 3]) [2])', '[[0 1 2]\n [3 4 5]]')),
    ('take-both', ('(take (iota [3 3]) [2 1])', '[[0]\n [3]]')),
    ('take-short-prefix', ('(take [[1 2] [3 4]] [1])', '[[1 2]]')),
    ('take-full-prefix', ('(take [[1 2] [3 4]] [1 2])', '[[1 2]]')),
    ('drop', ('(drop (iota [3 3]) [1 2])', '[[5]\n [8]]')),
    ('drop-right', ('(drop-right [1 2 3 4] [3])', '[1]')),
    ('drop-right1', ('(drop-right1 [1 2 3] 1)', '[1 2]')),
    ('mirror', ('(mirror [1 2 3] [#t])', '[3 2 1]')),
    ('reverse', ('(reverse [[1 2] [3 4]])', '[[3 4]\n [1 2]]')),
    # Indexing
    ('index-scalar', ('(index [[1 2] [3 4]] [1 0])', '3')),
    ('index-row', ('(index [[1 2] [3 4]] [1])', '[3 4]')),
    ('index-empty', ('(index [1 2] (iota [0]))', '[1 2]')),
    ('index-item', ('(index-item [[1 2] [3 4]] 0)', '[1 2]')),
    ('subarray', ('(subarray [1 2 3 4 5] [1] [3])', '[2 3 4]')),
    ('subarray-rest', ('(subarray (iota [3 3]) [1 1] [1])', '[[4 5]]')),
    ('subarray-wrap', ('(subarray/wrap [1 2 3] [2] [5])', '[3 1 2 3 1]')),
    ('subarray-fill', ('(subarray/fill [1 2 3] [-1] [5] 0)',
                       '[0 1 2 3 0]')),
    # Selection
    ('filter', ('(filter [#t #f #t] [1 2 3])', '[1 3]')),
    ('filter-none', ('(filter [#f #f] [[1 2] [3 4]])', '#(shape 0 2)[]')),
    ('partition', ('(partition [#f #t] "ab")',
                   '[(box (1) "b") (box (1) "a")]')),
    ('replicate', ('(replicate [2 0 1] "abc")', '"aac"')),
    # Reduction and iteration
    ('reduce', ('(reduce + [1 2 3 4])', '10')),
    ('reduce-single', ('(reduce + [7])', '7')),
    ('reduce-rows', ('(reduce + [[1 2] [3 4]])', '[4 6]')),
    ('reduce-zero', ('(reduce/zero + 100 [1 2])', '103')),
    ('iscan', ('(iscan * [1 2 3 4])', '[1 2 6 24]')),
    ('scan-zero', ('(scan/zero - 0 [1 2])', '[0 -1 -3]')),
    ('open-scan-zero', ('(open-scan/zero + 0 (iota [0]))',
                        '#(shape 0)[]')),
    ('fold', ('(fold - 0 [1 2 3])', '2')),
    ('fold-right', ('(fold-right - 0 [1 2 3])', '2')),
    ('fold-order', ('(fold (λ ([x 0] [acc 1]) (append acc [x])) '
                    '(iota [0]) [1 2 3])', '[1 2 3]')),
    ('fold-right-order', ('(fold-right (λ ([x 0] [acc 1]) (append acc [x])) '
                          '(iota [0]) [1 2 3])', '[3 2 1]')),
    ('trace', ('(trace (λ (x acc) (+ acc x)) 10 [1 2])', '[10 11 13]')),
    ('trace-right', ('(trace-right (λ (x acc) (+ acc x)) 10 [1 2])',
                     '[10 12 13]')),
    # Sorting
    ('grade', ('(grade < [30 10 20])', '[1 2 0]')),
    ('grade-down', ('(grade > [30 10 20])', '[0 2 1]')),
    ('sort', ('(sort < [3 1 2])', '[1 2 3]')),
    ('sort-strings', ('(sort (λ ([a 1] [b 1]) (< (index a [0]) (index b [0]))) '
                      '["cb" "ab" "ba"])', '["ab" "ba" "cb"]')),
])


@pytest.mark.parametrize('source,expected', RESULTS.values(),
                         ids=list(RESULTS))
def test_builtin_results(run, source, expected):

    assert run(source) == expected


ERRORS = OrderedDict([
    ('add-bool', ('(+ 1 #t)', TypeMismatchAtom)),
    ('compare-char-int', ('(< #\\a 1)', TypeMismatchAtom)),
    ('equal-function', ('(= + +)', TypeMismatchAtom)),
    ('divide-zero', ('(/ 1 0)', DivisionByZero)),
    ('modulo-zero', ('(modulo 1 0)', DivisionByZero)),
    ('expt-zero', ('(expt 0 -1)', DivisionByZero)),
    ('negative-sqrt', ('(square-root -4)', NegativeSqrt)),
    ('float-overflow', ('(* 1.0e200 1.0e200)', NumericOverflow)),
    ('exp-overflow', ('(exp 1000.0)', NumericOverflow)),
    ('append-scalar', ('(append 1 [2])', RankZeroAppend)),
    ('append-items', ('(append [[1 2]] [[1 2 3]])', TrailingShapeMismatch)),
    ('length-scalar', ('(length 1)', RankZeroLength)),
    ('iota-negative', ('(iota [2 -1])', NegativeDimension)),
    ('rotate-arity', ('(rotate [1 2] [1 1])', RotationArity)),
    ('with-shape-empty', ('(with-shape [0 0] (iota [0]))', EmptyDataSource)),
    ('take-too-many', ('(take [1 2] [3])', CountOutOfRange)),
    ('drop-arity', ('(drop [1 2] [1 1])', ArityMismatch)),
    ('index-bounds', ('(index [[1 2] [3 4]] [0 2])', IndexOutOfBounds)),
    ('index-too-long', ('(index [1 2] [0 0])', IndexTooLong)),
    ('index-item-scalar', ('(index-item 5 0)', RankZeroSource)),
    ('index-item-bounds', ('(index-item [1 2] 2)', IndexOutOfBounds)),
    ('subarray-bounds', ('(subarray [1 2 3] [2] [2])', RegionOutOfBounds)),
    ('subarray-negative', ('(subarray [1 2 3] [0] [-1])',
                           NegativeDimension)),
    ('subarray-arity', ('(subarray [1 2 3] [0 0] [1])', ArityMismatch)),
    ('filter-length', ('(filter [#t] [1 2])', SelectorLengthMismatch)),
    ('filter-scalar', ('(filter [#t] 1)', RankZeroData)),
    ('filter-flags', ('(filter [1 0] [1 2])', TypeMismatchAtom)),
    ('replicate-negative', ('(replicate [-1] [1])', NegativeCount)),
    ('reduce-empty', ('(reduce + (iota [0]))', EmptyReduce)),
    ('iscan-empty', ('(iscan + (iota [0]))', EmptyReduce)),
    ('reduce-scalar', ('(reduce + 1)', RankZeroData)),
    ('reverse-scalar', ('(reverse 1)', RankZeroData)),
    ('grade-non-bool', ('(grade + [1 2])', TypeMismatchAtom)),
    ('mirror-arity', ('(mirror [1 2] [#t #t])', ArityMismatch)),
])


@pytest.mark.parametrize('source,error', ERRORS.values(), ids=list(ERRORS))
def test_builtin_errors(run, source, error):

    with pytest.raises(error):
        run(source)


def test_reductions_agree_with_python(run):
    """Reductions and scans of random vectors match a plain Python fold"""

    rng = random.Random(1234)
    for _ in range(500):
        atoms = [rng.randint(-20, 20) for _ in range(rng.randint(1, 8))]
        vector = format_value(Array.vector(atoms))

        prefixes, acc = [], 0
        for atom in atoms:
            acc += atom
            prefixes.append(acc)
        products, acc = [], 1
        for atom in atoms:
            acc *= atom
            products.append(acc)
        alternating = 0
        for atom in atoms:
            alternating = atom - alternating

        source = '\n'.join([
            '(reduce + {0})',
            '(reduce/zero + 0 {0})',
            '(iscan + {0})',
            '(fold - 0 {0})',
            '(reduce max {0})',
            '(scan/zero + 0 {0})',
            '(open-scan/zero + 0 {0})',
            '(trace + 0 {0})',
            '(reduce/zero * 1 {0})',
            '(scan/zero * 1 {0})',
            '(trace * 1 {0})',
        ]).format(vector)
        expected = '\n'.join([
            str(sum(atoms)),
            str(sum(atoms)),
            format_value(Array.vector(prefixes)),
            str(alternating),
            str(max(atoms)),
            format_value(Array.vector([0] + prefixes)),
            format_value(Array.vector([0] + prefixes[:-1])),
            format_value(Array.vector([0] + prefixes)),
            str(products[-1]),
            format_value(Array.vector([1] + products)),
            format_value(Array.vector([1] + products)),
        ])
        assert run(source) == expected, vector


# Each operator with a zero that is neutral for atoms in -3..3
OPERATORS = OrderedDict([
    ('+', (0, operator.add)),
    ('*', (1, operator.mul)),
    ('max', (-99, max)),
    ('min', (99, min)),
])


def test_matrix_reductions_agree_with_python(run):
    """Reductions and scans of random matrices run down the columns"""

    rng = random.Random(4321)
    for _ in range(300):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        grid = [[rng.randint(-3, 3) for _ in range(cols)]
                for _ in range(rows)]
        name = rng.choice(list(OPERATORS))
        zero, function = OPERATORS[name]

        def table(lists):
            return format_value(Array((len(lists), cols), sum(lists, [])))

        def vector(atoms):
            return format_value(Array.vector(atoms))

        prefixes = [[zero] * cols]
        for row in grid:
            prefixes.append([function(acc, atom)
                             for acc, atom in zip(prefixes[-1], row)])
        alternating = [0] * cols
        for row in grid:
            alternating = [atom - acc for atom, acc in zip(row, alternating)]

        source = '\n'.join([
            '(reduce {op} {m})',
            '(reduce/zero {op} {z} {m})',
            '(iscan {op} {m})',
            '(scan/zero {op} {z} {m})',
            '(open-scan/zero {op} {z} {m})',
            '(trace {op} {z} {m})',
            '(fold {op} {z} {m})',
            '(fold-right {op} {z} {m})',
            '(fold - {zeros} {m})',
        ]).format(op=name, z=vector([zero] * cols), zeros=vector([0] * cols),
                  m=table(grid))
        expected = '\n'.join([
            vector(prefixes[-1]),
            vector(prefixes[-1]),
            table(prefixes[1:]),
            table(prefixes),
            table(prefixes[:-1]),
            table(prefixes),
            vector(prefixes[-1]),
            vector(prefixes[-1]),
            vector(alternating),
        ])
        assert run(source) == expected, (name, grid)


def test_reduce_zero_of_empty(run):

    assert run('(reduce/zero + 0 (iota [0]))') == '0'
    assert run('(scan/zero + 0 (iota [0]))') == '[0]'
