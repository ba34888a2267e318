# -*- coding: utf-8 -*-
"""
Core expressions produced by the desugarer.

Every node carries the source ``position`` of the form it came from so that
the evaluator and the checker can report errors against the source text.
"""
from __future__ import unicode_literals

import six


@six.python_2_unicode_compatible
class CoreExpr(object):
    _fields = ()

    def __init__(self, *args, **kwargs):
        position = kwargs.pop('position', None)
        if kwargs:
            raise TypeError('Unexpected arguments {0}'.format(list(kwargs)))
        if len(args) != len(self._fields):
            raise TypeError('{0} takes {1} fields, got {2}'.format(
                type(self).__name__, len(self._fields), len(args)))
        for name, value in zip(self._fields, args):
            setattr(self, name, value)
        self.position = position

    def fields(self):
        return [(name, getattr(self, name)) for name in self._fields]

    def __eq__(self, other):
        return (type(self) is type(other)
                and all(a == b for (_, a), (_, b) in
                        zip(self.fields(), other.fields())))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        args = ' '.join('{0}={1!r}'.format(n, v) for n, v in self.fields())
        return '({0} {1})'.format(type(self).__name__, args)

    __repr__ = __str__


class ArrayLit(CoreExpr):
    "A literal array. ``value`` is a model.Array."
    _fields = ('value',)


class Frame(CoreExpr):
    _fields = ('dims', 'exprs')


class Var(CoreExpr):
    _fields = ('name',)


class App(CoreExpr):
    _fields = ('fn', 'args')


class Lambda(CoreExpr):
    """
    ``ranks`` holds one cell rank (natural, ALL, or None when the parameter
    was declared with a type) and ``types`` one type or None per parameter.
    """
    _fields = ('params', 'ranks', 'types', 'body')


class If(CoreExpr):
    _fields = ('test', 'then', 'orelse')


class Cond(CoreExpr):
    "``clauses`` is a list of (test, expr) pairs, ``orelse`` the else arm."
    _fields = ('clauses', 'orelse')


class Let(CoreExpr):
    _fields = ('bindings', 'body')


class LetStar(CoreExpr):
    _fields = ('bindings', 'body')


class Define(CoreExpr):
    _fields = ('name', 'expr')


class TLambda(CoreExpr):
    _fields = ('tvars', 'body')


class ILambda(CoreExpr):
    _fields = ('ivars', 'body')


class TApp(CoreExpr):
    _fields = ('fn', 'types')


class IApp(CoreExpr):
    _fields = ('fn', 'indices')


class IndexAbstraction(CoreExpr):
    """
    An erased ``Iλ``. Unlike type abstractions it survives erasure: its
    index variables are bound at run time by ``IndexApplication``.
    """
    _fields = ('ivars', 'body')


class IndexApplication(CoreExpr):
    _fields = ('fn', 'indices')


class Boxes(CoreExpr):
    """
    ``shape`` is the tuple of literal dimensions of the box array, each
    clause a (witness indices, expr) pair in row-major order.
    """
    _fields = ('ivars', 'type', 'shape', 'clauses')


class Unbox(CoreExpr):
    _fields = ('subject', 'name', 'ivars', 'body')


def children(expr):
    """
    The immediate subexpressions of a core expression.
    """
    if isinstance(expr, (ArrayLit, Var)):
        return []
    if isinstance(expr, Frame):
        return list(expr.exprs)
    if isinstance(expr, App):
        return [expr.fn] + list(expr.args)
    if isinstance(expr, (Lambda, TLambda, ILambda, IndexAbstraction)):
        return [expr.body]
    if isinstance(expr, If):
        return [expr.test, expr.then, expr.orelse]
    if isinstance(expr, Cond):
        out = []
        for test, body in expr.clauses:
            out.extend([test, body])
        return out + [expr.orelse]
    if isinstance(expr, (Let, LetStar)):
        return [e for _, e in expr.bindings] + [expr.body]
    if isinstance(expr, Define):
        return [expr.expr]
    if isinstance(expr, (TApp, IApp, IndexApplication)):
        return [expr.fn]
    if isinstance(expr, Boxes):
        return [e for _, e in expr.clauses]
    if isinstance(expr, Unbox):
        return [expr.subject, expr.body]
    raise TypeError('Not a core expression: {0!r}'.format(expr))


def walk(expr):
    yield expr
    for child in children(expr):
        for node in walk(child):
            yield node
