# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from functools import reduce
from operator import mul

import pytest

from remora import syntax as core
from remora.model import ALL
from remora.reader import read
from remora.desugar import desugar
from remora.erasure import erase
from remora.evaluator import INDEX_PREFIX
from remora.typecheck import Checker


def checked(typed_session, source):
    form, = read(source)
    expr = desugar(form)
    checker = Checker()
    checker.check(expr, typed_session.type_env.extend())
    return expr, checker.ranks


def test_type_forms_disappear(typed_session):

    expr, ranks = checked(typed_session, '(t-app identity [bool 2 3])')
    assert erase(expr, ranks) == core.Var('identity')

    expr, ranks = checked(typed_session, '(t-app fdouble int)')
    assert erase(expr, ranks) == core.Var('fdouble')

    expr, ranks = checked(typed_session, '(Tλ (t) (λ ([x t]) x))')
    erased = erase(expr, ranks)
    assert isinstance(erased, core.Lambda)
    assert erased.ranks == (0,)


def test_lambda_ranks_from_types(typed_session):

    expr, ranks = checked(
        typed_session, '(Iλ (len) (λ ([x [int len]] [y int]) x))')
    erased = erase(expr, ranks)
    assert erased.body.ranks == (1, 0)
    assert erased.body.types == (None, None)

    # A shape variable hides the rank, the parameter takes the whole array
    expr, ranks = checked(typed_session, '(Iλ (@s) (λ ([x [int @s]]) x))')
    assert erase(expr, ranks).body.ranks == (ALL,)


def test_index_forms_survive(typed_session):

    expr, ranks = checked(typed_session, '(i-app dot-product 3)')
    erased = erase(expr, ranks)
    assert isinstance(erased, core.IndexApplication)
    assert erased.fn == core.Var('dot-product')
    assert len(erased.indices) == 1

    expr, ranks = checked(typed_session, '(Iλ (n) (λ ([v [int n]]) v))')
    erased = erase(expr, ranks)
    assert isinstance(erased, core.IndexAbstraction)
    assert erased.ivars == ('n',)
    assert isinstance(erased.body, core.Lambda)


def test_application_is_reranked(typed_session):

    expr, ranks = checked(typed_session, '(+ [1 2] [[1 2] [3 4]])')
    erased = erase(expr, ranks)
    assert isinstance(erased, core.App)

    rerank = erased.fn
    assert isinstance(rerank, core.Let)
    (_, target), = rerank.bindings
    assert target == core.Var('+')
    assert rerank.body.ranks == (0, 0)


def test_function_frame_is_not_reranked(typed_session):

    expr, ranks = checked(typed_session, '([+ -] 1 2)')
    erased = erase(expr, ranks)
    assert isinstance(erased.fn, core.Frame)


def test_unbox_index_namespace(typed_session):

    expr, ranks = checked(
        typed_session,
        '(unbox (iota1 3) (xs len)'
        '  ((t-app (i-app reduce/zero len [] []) int) + 0 xs))')
    erased = erase(expr, ranks)
    assert isinstance(erased, core.Unbox)
    assert erased.name == 'xs'
    assert erased.ivars == (INDEX_PREFIX + 'len',)


@pytest.mark.parametrize('n', range(11))
def test_typed_fact(run_typed, n):

    expected = reduce(mul, range(1, n + 1), 1)
    assert run_typed('(fact {0})'.format(n)) == str(expected)


def test_typed_fact_lifts(run_typed):

    assert run_typed('(fact [0 3 5 10])') == '[1 6 120 3628800]'


def test_typed_programs(run_typed):

    assert run_typed('(double [3 2])') == '[6 4]'
    assert run_typed('((t-app identity [bool 2]) [#t #f])') == '[#t #f]'
    assert run_typed('((i-app dot-product 3) [1 2 3] [4 5 6])') == '32'
    assert run_typed('((i-app sum 2) [1 2 3])') == '6'
    assert run_typed(
        '((i-app vector-convolve 5 1) [1 2 3 4 5] [1 1])') == '[3 5 7 9 6]'


def test_typed_filter(run_typed):

    source = '''
        ((t-app (i-app filter 5 [3]) int)
         [#t #f #f #t #t]
         [[ 0  1  2] [16 17 18] [ 9 10 11] [22 23 24] [96 97 98]])'''
    assert run_typed(source) == (
        '(box (3)\n'
        '  [[ 0  1  2]\n'
        '   [22 23 24]\n'
        '   [96 97 98]])')


def test_typed_higher_order(run_typed):

    assert run_typed('(((t-app fdouble int) double) 5)') == '20'


def test_typed_matches_dynamic(run, run_typed):

    assert run('(+ [10 20] [[8 1 3] [5 0 9]])') == \
        run_typed('(+ [10 20] [[8 1 3] [5 0 9]])')


def test_box_witness_from_index_argument(run_typed):

    run_typed('''
        (define mk
          (Iλ (n) (λ ([v [int n]]) (box ((len n)) [int len] v))))''')
    assert run_typed('((i-app mk 3) [1 2 3])') == '(box (3) [1 2 3])'
    assert run_typed('''
        (unbox ((i-app mk 3) [1 2 3]) (xs len)
          ((t-app (i-app reduce/zero len [] []) int) + 0 xs))''') == '6'

    # The witness need not show up in the shape of the contents
    run_typed('''
        (define tag
          (Iλ (n) (λ ([x int]) (box ((k n)) int x))))''')
    assert run_typed('((i-app tag 4) 7)') == '(box (4) 7)'

    run_typed('''
        (define mk-shaped
          (Iλ (@s) (λ ([v [int @s]]) (box ((@t @s)) [int @t] v))))''')
    assert run_typed('((i-app mk-shaped [2 2]) [[1 2] [3 4]])') == (
        '(box ([2 2])\n'
        '  [[1 2]\n'
        '   [3 4]])')


def test_index_argument_from_unbox(run_typed):

    assert run_typed(
        '(unbox (iota1 3) (xs len) ((i-app dot-product len) xs xs))') == '5'


def test_instantiated_function_keeps_name(run_typed):

    assert run_typed('(i-app dot-product 3)') == \
        '#<function dot-product (1 1)>'
    assert run_typed('dot-product') == \
        '#<index-function dot-product (len)>'
