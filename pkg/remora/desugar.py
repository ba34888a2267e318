# -*- coding: utf-8 -*-
"""
Rewrite surface forms into core expressions.
"""
from __future__ import unicode_literals

import itertools
import threading

from . import syntax as core
from . import typeforms
from .model import Array, ALL, product
from .reader import (
    Leaf, Paren, Bracket, Rerank, INT, FLOAT, BOOL, CHAR, STRING, SYMBOL,
    is_symbol)
from .exceptions import (
    MalformedForm, RaggedLiteral, BadFrameArity, MalformedBox,
    DuplicateParameter)

KEYWORDS = frozenset([
    'array', 'frame', 'λ', 'Tλ', 'Iλ', 't-app', 'i-app', 'if', 'cond',
    'let', 'let*', 'define', 'boxes', 'box', 'unbox', 'else'])

LITERAL_KINDS = (INT, FLOAT, BOOL, CHAR)


class Desugarer(object):
    """
    Turns surface forms into core expressions.

    Names invented by the desugarer start with ``%``, which the reader does
    not accept in user symbols, so they can never capture a user variable.
    """

    def __init__(self):
        self._counter = itertools.count(1)
        self._lock = threading.Lock()
        self._special = {
            'array': self._array,
            'frame': self._frame,
            'λ': self._lambda,
            'Tλ': self._tlambda,
            'Iλ': self._ilambda,
            't-app': self._tapp,
            'i-app': self._iapp,
            'if': self._if,
            'cond': self._cond,
            'let': self._let,
            'let*': self._let_star,
            'define': self._define,
            'boxes': self._boxes,
            'box': self.desugar_box,
            'unbox': self._unbox,
        }

    def fresh(self, hint):
        with self._lock:
            return '%{0}{1}'.format(hint, next(self._counter))

    def desugar(self, form):
        if isinstance(form, Leaf):
            return self._leaf(form)
        if isinstance(form, Bracket):
            exprs = [self.desugar(f) for f in form.children]
            return collapse_frame((len(exprs),), exprs, form.position)
        if isinstance(form, Rerank):
            ranks = [_rank(f, allow_all=False) for f in form.ranks]
            return self.desugar_rerank(ranks, self.desugar(form.target),
                                       form.position)
        if isinstance(form, Paren):
            if not form.children:
                raise MalformedForm('Empty application', form.position)
            head = form.children[0]
            if isinstance(head, Leaf) and head.kind == SYMBOL and \
                    head.value in self._special:
                return self._special[head.value](form)
            fn = self.desugar(head)
            args = [self.desugar(f) for f in form.children[1:]]
            return core.App(fn, args, position=form.position)
        raise TypeError('Not a surface form: {0!r}'.format(form))

    def desugar_rerank(self, ranks, target, position=None):
        """
        ``~(r ...)f`` becomes ``(let ((g f)) (λ ([v1 r1] ...) (g v1 ...)))``
        so that ``f`` is evaluated once.
        """
        fn = self.fresh('f')
        params = [self.fresh('v') for _ in ranks]
        body = core.App(core.Var(fn, position=position),
                        [core.Var(p, position=position) for p in params],
                        position=position)
        lam = core.Lambda(tuple(params), tuple(ranks), (None,) * len(ranks),
                          body, position=position)
        return core.Let([(fn, target)], lam, position=position)

    def desugar_box(self, form):
        """
        ``(box ((ivar idx) ...) τ e)`` is the scalar ``boxes`` form with a
        single clause.
        """
        _expect(form, 4, '(box ((ivar index) ...) type expr)')
        _, bindings, type_form, expr_form = form.children
        if not isinstance(bindings, Paren):
            raise MalformedBox('Expected a list of (ivar index) pairs',
                               bindings.position)
        ivars, witnesses = [], []
        for binding in bindings.children:
            if not isinstance(binding, (Paren, Bracket)) or \
                    len(binding.children) != 2:
                raise MalformedBox(
                    'Each binding pairs one index variable with one index',
                    binding.position)
            ivars.append(_name(binding.children[0]))
            witnesses.append(typeforms.parse_index(binding.children[1]))
        _check_distinct(ivars, bindings.position)
        box_type = typeforms.array_type(typeforms.parse_type(type_form))
        clause = (tuple(witnesses), self.desugar(expr_form))
        return core.Boxes(tuple(ivars), box_type, (), [clause],
                          position=form.position)

    # Leaves and special forms

    def _leaf(self, form):
        if form.kind in LITERAL_KINDS:
            return core.ArrayLit(Array.scalar(form.value),
                                 position=form.position)
        if form.kind == STRING:
            return core.ArrayLit(Array.string(form.value),
                                 position=form.position)
        if form.value in KEYWORDS:
            raise MalformedForm(
                '`{0}` is a keyword'.format(form.value), form.position)
        return core.Var(form.value, position=form.position)

    def _array(self, form):
        if len(form.children) < 2:
            raise MalformedForm('(array [d ...] atom ...)', form.position)
        dims = _dims(form.children[1])
        atoms = form.children[2:]
        if product(dims) != len(atoms):
            raise BadFrameArity(
                'Shape {0} needs {1} elements, got {2}'.format(
                    list(dims), product(dims), len(atoms)), form.position)
        if all(isinstance(a, Leaf) and a.kind in LITERAL_KINDS
               for a in atoms):
            value = Array(dims, [a.value for a in atoms])
            return core.ArrayLit(value, position=form.position)
        return core.Frame(dims, [self.desugar(a) for a in atoms],
                          position=form.position)

    def _frame(self, form):
        if len(form.children) < 2:
            raise MalformedForm('(frame [d ...] expr ...)', form.position)
        dims = _dims(form.children[1])
        exprs = [self.desugar(f) for f in form.children[2:]]
        if product(dims) != len(exprs):
            raise BadFrameArity(
                'Frame {0} needs {1} expressions, got {2}'.format(
                    list(dims), product(dims), len(exprs)), form.position)
        return collapse_frame(dims, exprs, form.position)

    def _lambda(self, form):
        _expect(form, 3, '(λ (param ...) body)')
        params, ranks, types = self._params(form.children[1])
        body = self.desugar(form.children[2])
        return core.Lambda(params, ranks, types, body,
                           position=form.position)

    def _params(self, form):
        if not isinstance(form, (Paren, Bracket)):
            raise MalformedForm('Expected a parameter list', form.position)
        names, ranks, types = [], [], []
        for param in form.children:
            if isinstance(param, Leaf):
                names.append(_name(param))
                ranks.append(0)
                types.append(None)
            elif isinstance(param, (Paren, Bracket)) and \
                    len(param.children) == 2:
                names.append(_name(param.children[0]))
                rank, param_type = _rank_or_type(param.children[1])
                ranks.append(rank)
                types.append(param_type)
            else:
                raise MalformedForm('Malformed parameter', param.position)
        _check_distinct(names, form.position)
        return tuple(names), tuple(ranks), tuple(types)

    def _tlambda(self, form):
        _expect(form, 3, '(Tλ (tvar ...) body)')
        tvars = typeforms.parse_binders(form.children[1])
        return core.TLambda(tvars, self.desugar(form.children[2]),
                            position=form.position)

    def _ilambda(self, form):
        _expect(form, 3, '(Iλ (ivar ...) body)')
        ivars = typeforms.parse_binders(form.children[1])
        return core.ILambda(ivars, self.desugar(form.children[2]),
                            position=form.position)

    def _tapp(self, form):
        if len(form.children) < 2:
            raise MalformedForm('(t-app f type ...)', form.position)
        types = [typeforms.parse_type(f) for f in form.children[2:]]
        return core.TApp(self.desugar(form.children[1]), types,
                         position=form.position)

    def _iapp(self, form):
        if len(form.children) < 2:
            raise MalformedForm('(i-app f index ...)', form.position)
        indices = [typeforms.parse_index(f) for f in form.children[2:]]
        return core.IApp(self.desugar(form.children[1]), indices,
                         position=form.position)

    def _if(self, form):
        _expect(form, 4, '(if test then else)')
        test, then, orelse = [self.desugar(f) for f in form.children[1:]]
        return core.If(test, then, orelse, position=form.position)

    def _cond(self, form):
        clauses, orelse = [], None
        for i, clause in enumerate(form.children[1:]):
            if not isinstance(clause, (Paren, Bracket)) or \
                    len(clause.children) != 2:
                raise MalformedForm('(cond (test expr) ... (else expr))',
                                    clause.position)
            test, expr = clause.children
            if is_symbol(test, 'else'):
                if i != len(form.children) - 2:
                    raise MalformedForm('`else` must be the last clause',
                                        clause.position)
                orelse = self.desugar(expr)
            else:
                clauses.append((self.desugar(test), self.desugar(expr)))
        if orelse is None:
            raise MalformedForm('cond requires an else clause', form.position)
        return core.Cond(clauses, orelse, position=form.position)

    def _bindings(self, form, allow_ranked):
        if not isinstance(form, (Paren, Bracket)):
            raise MalformedForm('Expected a binding list', form.position)
        bindings = []
        for binding in form.children:
            if not isinstance(binding, (Paren, Bracket)) or \
                    len(binding.children) not in (2, 3):
                raise MalformedForm('Malformed binding', binding.position)
            if len(binding.children) == 3 and not allow_ranked:
                raise MalformedForm('let* bindings take no rank',
                                    binding.position)
            name = _name(binding.children[0])
            rank, param_type = ALL, None
            if len(binding.children) == 3:
                rank, param_type = _rank_or_type(binding.children[1])
            expr = self.desugar(binding.children[-1])
            bindings.append((name, rank, param_type, expr,
                             len(binding.children) == 3))
        return bindings

    def _let(self, form):
        _expect(form, 3, '(let ((name expr) ...) body)')
        bindings = self._bindings(form.children[1], allow_ranked=True)
        names = [b[0] for b in bindings]
        _check_distinct(names, form.position)
        body = self.desugar(form.children[2])
        if any(b[4] for b in bindings):
            # A ranked binding makes the let a lifted application
            lam = core.Lambda(tuple(names), tuple(b[1] for b in bindings),
                              tuple(b[2] for b in bindings), body,
                              position=form.position)
            return core.App(lam, [b[3] for b in bindings],
                            position=form.position)
        return core.Let([(b[0], b[3]) for b in bindings], body,
                        position=form.position)

    def _let_star(self, form):
        _expect(form, 3, '(let* ((name expr) ...) body)')
        bindings = self._bindings(form.children[1], allow_ranked=False)
        body = self.desugar(form.children[2])
        return core.LetStar([(b[0], b[3]) for b in bindings], body,
                            position=form.position)

    def _define(self, form):
        _expect(form, 3, '(define name expr)')
        target = form.children[1]
        if isinstance(target, Paren):
            if not target.children:
                raise MalformedForm('Missing function name', target.position)
            name = _name(target.children[0])
            params, ranks, types = self._params(
                Paren(target.children[1:], target.position))
            body = self.desugar(form.children[2])
            expr = core.Lambda(params, ranks, types, body,
                               position=form.position)
        else:
            name = _name(target)
            expr = self.desugar(form.children[2])
        return core.Define(name, expr, position=form.position)

    def _boxes(self, form):
        if len(form.children) < 4:
            raise MalformedForm('(boxes (ivar ...) type [d ...] clause ...)',
                                form.position)
        ivars = typeforms.parse_binders(form.children[1])
        box_type = typeforms.array_type(
            typeforms.parse_type(form.children[2]))
        dims = _dims(form.children[3])
        clauses = []
        for clause in form.children[4:]:
            if not isinstance(clause, (Paren, Bracket)) or \
                    len(clause.children) != 2 or \
                    not isinstance(clause.children[0], (Paren, Bracket)):
                raise MalformedForm('Box clause is ((index ...) expr)',
                                    clause.position)
            witnesses = tuple(typeforms.parse_index(f)
                              for f in clause.children[0].children)
            clauses.append((witnesses, self.desugar(clause.children[1])))
        if product(dims) != len(clauses):
            raise BadFrameArity(
                'Box array {0} needs {1} clauses, got {2}'.format(
                    list(dims), product(dims), len(clauses)), form.position)
        return core.Boxes(ivars, box_type, dims, clauses,
                          position=form.position)

    def _unbox(self, form):
        _expect(form, 4, '(unbox subject (name ivar ...) body)')
        binders = form.children[2]
        if not isinstance(binders, (Paren, Bracket)) or \
                not binders.children:
            raise MalformedForm('Expected (name ivar ...)',
                                binders.position)
        names = [_name(f) for f in binders.children]
        _check_distinct(names, binders.position)
        subject = self.desugar(form.children[1])
        body = self.desugar(form.children[3])
        return core.Unbox(subject, names[0], tuple(names[1:]), body,
                          position=form.position)


def collapse_frame(dims, exprs, position=None):
    """
    A frame of literals is itself a literal. Literal siblings must share a
    shape.
    """
    dims = tuple(dims)
    literals = [e for e in exprs if isinstance(e, core.ArrayLit)]
    shapes = set(e.value.shape for e in literals)
    if len(shapes) > 1:
        raise RaggedLiteral(
            'Elements have shapes {0}'.format(
                ' and '.join(str(list(s)) for s in sorted(shapes))),
            position)
    if exprs and len(literals) == len(exprs):
        shape = literals[0].value.shape
        atoms = []
        for literal in literals:
            atoms.extend(literal.value.atoms)
        return core.ArrayLit(Array(dims + shape, atoms), position=position)
    if not exprs:
        return core.ArrayLit(Array(dims, ()), position=position)
    return core.Frame(dims, exprs, position=position)


def _expect(form, length, usage):
    if len(form.children) != length:
        raise MalformedForm('Expected {0}'.format(usage), form.position)


def _name(form):
    if not isinstance(form, Leaf) or form.kind != SYMBOL:
        raise MalformedForm('Expected a name', form.position)
    if form.value in KEYWORDS:
        raise MalformedForm('`{0}` is a keyword'.format(form.value),
                            form.position)
    return form.value


def _check_distinct(names, position):
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateParameter(
                '`{0}` is bound twice'.format(name), position)
        seen.add(name)


def _dims(form):
    if not isinstance(form, (Bracket, Paren)):
        raise MalformedForm('Expected a list of dimensions', form.position)
    dims = []
    for f in form.children:
        if not isinstance(f, Leaf) or f.kind != INT or f.value < 0:
            raise MalformedForm('Dimensions must be natural literals',
                                f.position)
        dims.append(f.value)
    return tuple(dims)


def _rank(form, allow_all=True):
    if isinstance(form, Leaf) and form.kind == INT and form.value >= 0:
        return form.value
    if allow_all and is_symbol(form, 'all'):
        return ALL
    raise MalformedForm('Expected a cell rank', form.position)


def _rank_or_type(form):
    if isinstance(form, Leaf) and form.kind == INT:
        return _rank(form), None
    if is_symbol(form, 'all'):
        return ALL, None
    return None, typeforms.array_type(typeforms.parse_type(form))


_desugarer = Desugarer()


def desugar(form):
    return _desugarer.desugar(form)


def desugar_rerank(ranks, target, position=None):
    return _desugarer.desugar_rerank(ranks, target, position)


def desugar_box(form):
    return _desugarer.desugar_box(form)


def desugar_all(forms):
    return [desugar(f) for f in forms]
