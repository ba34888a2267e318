# -*- coding: utf-8 -*-
"""
Turn checked typed-dialect expressions into dynamic-dialect expressions.

Type abstractions and applications disappear. Index abstractions and
applications stay: they bind index variables at run time, which box
witnesses are computed from. Every application whose function position is a
scalar is wrapped in a rerank with the cell ranks the checker chose, so
arguments are split exactly where the typed application rule split them.
Index variables bound by ``unbox`` or ``Iλ`` live in a namespace of their
own and are only read back as box witnesses.
"""
from __future__ import unicode_literals

from . import syntax as core
from . import typeforms
from .model import ALL
from .desugar import desugar_rerank
from .evaluator import INDEX_PREFIX


class Eraser(object):
    """
    Params:
        ranks (dict): id() of an App node -> tuple of cell ranks, as
            recorded by the type checker.
    """

    def __init__(self, ranks=None):
        self.ranks = ranks or {}

    def erase(self, expr):
        method = getattr(self, '_' + type(expr).__name__.lower())
        return method(expr)

    def _arraylit(self, expr):
        return expr

    def _var(self, expr):
        return expr

    def _frame(self, expr):
        return core.Frame(expr.dims, [self.erase(e) for e in expr.exprs],
                          position=expr.position)

    def _app(self, expr):
        fn = self.erase(expr.fn)
        ranks = self.ranks.get(id(expr))
        if ranks is not None:
            fn = desugar_rerank(ranks, fn, expr.position)
        return core.App(fn, [self.erase(a) for a in expr.args],
                        position=expr.position)

    def _lambda(self, expr):
        ranks = []
        for rank, param_type in zip(expr.ranks, expr.types):
            if rank is None:
                rank = typeforms.type_rank(param_type)
            ranks.append(ALL if rank is None else rank)
        return core.Lambda(expr.params, tuple(ranks),
                           (None,) * len(ranks), self.erase(expr.body),
                           position=expr.position)

    def _if(self, expr):
        return core.If(self.erase(expr.test), self.erase(expr.then),
                       self.erase(expr.orelse), position=expr.position)

    def _cond(self, expr):
        clauses = [(self.erase(t), self.erase(b)) for t, b in expr.clauses]
        return core.Cond(clauses, self.erase(expr.orelse),
                         position=expr.position)

    def _let(self, expr):
        bindings = [(name, self.erase(e)) for name, e in expr.bindings]
        return core.Let(bindings, self.erase(expr.body),
                        position=expr.position)

    def _letstar(self, expr):
        bindings = [(name, self.erase(e)) for name, e in expr.bindings]
        return core.LetStar(bindings, self.erase(expr.body),
                            position=expr.position)

    def _define(self, expr):
        return core.Define(expr.name, self.erase(expr.expr),
                           position=expr.position)

    def _tlambda(self, expr):
        return self.erase(expr.body)

    def _ilambda(self, expr):
        return core.IndexAbstraction(expr.ivars, self.erase(expr.body),
                                     position=expr.position)

    def _tapp(self, expr):
        return self.erase(expr.fn)

    def _iapp(self, expr):
        return core.IndexApplication(self.erase(expr.fn), expr.indices,
                                     position=expr.position)

    def _boxes(self, expr):
        clauses = [(witnesses, self.erase(e))
                   for witnesses, e in expr.clauses]
        return core.Boxes(expr.ivars, expr.type, expr.shape, clauses,
                          position=expr.position)

    def _unbox(self, expr):
        ivars = tuple(INDEX_PREFIX + name for name in expr.ivars)
        return core.Unbox(self.erase(expr.subject), expr.name, ivars,
                          self.erase(expr.body), position=expr.position)


def erase(expr, ranks=None):
    return Eraser(ranks).erase(expr)
