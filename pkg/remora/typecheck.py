# -*- coding: utf-8 -*-
"""
Type checker for the explicitly typed dialect.

Every expression has an array type. Function, polymorphic and dependent
values are scalar arrays whose element type is a ``Fn``, ``Forall`` or
``Pi``. There is no inference: polymorphic functions must be instantiated
with ``t-app`` and ``i-app`` before they are applied.

Applications are checked by lifting the frame/cell rule to types. Each
argument shape is factored into a frame and the declared cell shape, the
frames have to be prefixes of the longest one, and the result is the
declared result type under that principal frame. The cell rank chosen at
each application site is recorded in ``Checker.ranks`` for erasure.
"""
from __future__ import unicode_literals

import logging

from . import syntax as core
from . import typeforms as tf
from .model import ALL, atom_kind
from .signatures import builtin_signatures
from .exceptions import (
    RemoraError, UnboundName, KindError, SortError, NotPolymorphic,
    NotIndexed, InstantiationArity, BranchTypeMismatch, ArgumentTypeMismatch,
    CellSuffixMismatch, UnderdeterminedFactoring, ClauseTypeMismatch,
    EscapingIndexVariable, NotABox, WitnessArity, FrameDisagreement,
    NotAFunctionType, ApplicationArity, FrameTypeMismatch)

_logger = logging.getLogger(__name__)

ATOM_TYPES = {
    'int': tf.INT_T,
    'float': tf.FLOAT_T,
    'bool': tf.BOOL_T,
    'char': tf.CHAR_T,
}

BOOL_SCALAR = tf.scalar(tf.BOOL_T)


class TypeEnv(object):
    """
    Params:
        values (dict): Name -> array type of value variables.
        tvars (set): Type variables in scope. A leading ``@`` marks an array
            type variable, otherwise it ranges over element types.
        ivars (set): Index variables in scope, ``@`` marking shapes.
    """

    def __init__(self, values=None, tvars=(), ivars=()):
        self.values = dict(values or {})
        self.tvars = frozenset(tvars)
        self.ivars = frozenset(ivars)

    @classmethod
    def initial(cls):
        return cls(builtin_signatures())

    def extend(self, values=None, tvars=(), ivars=()):
        merged = dict(self.values)
        merged.update(values or {})
        return TypeEnv(merged, self.tvars | set(tvars),
                       self.ivars | set(ivars))

    def define(self, name, t):
        self.values[name] = t

    def lookup(self, name, position=None):
        if name in self.values:
            return self.values[name]
        if name in self.ivars:
            raise UnboundName(
                '`{0}` is an index variable, not a run-time value'.format(
                    name), position)
        raise UnboundName('`{0}` is not bound'.format(name), position)


def check_index(index, env, position=None):
    for name in tf.index_free_vars(index):
        if name not in env.ivars:
            raise UnboundName(
                'Index variable `{0}` is not bound'.format(name), position)


def check_type(t, env, position=None):
    """
    Raise unless every variable in ``t`` is bound in ``env``.
    """
    if isinstance(t, tf.Base):
        return
    if isinstance(t, (tf.ElemVar, tf.ArrVar)):
        if t.name not in env.tvars:
            raise UnboundName(
                'Type variable `{0}` is not bound'.format(t.name), position)
    elif isinstance(t, tf.Arr):
        if isinstance(t.elem, (tf.Arr, tf.ArrVar)):
            raise KindError('{0} is not an element type'.format(
                tf.show(t.elem)), position)
        check_type(t.elem, env, position)
        tf.require_sort(t.shape, tf.SHAPE, position)
        check_index(t.shape, env, position)
    elif isinstance(t, tf.Fn):
        for arg in t.args:
            check_type(arg, env, position)
        check_type(t.result, env, position)
    elif isinstance(t, tf.Forall):
        check_type(t.body, env.extend(tvars=t.names), position)
    else:
        check_type(t.body, env.extend(ivars=t.names), position)


def _lift(t, frame, position):
    """
    The type of a frame of results of type ``t``.
    """
    if isinstance(t, tf.ArrVar):
        if tf.normalize_shape(frame):
            raise KindError(
                'Cannot collect {0} results into frame {1}'.format(
                    tf.show(t), tf.show(frame)), position)
        return t
    return tf.simplify_type(
        tf.make_array(t.elem, tf.concat_shapes(frame, t.shape)))


def factor(arg, param, position=None):
    """
    Split an argument type into frame and declared cell.

    Returns the normalized frame segments and the cell rank.
    """
    if isinstance(param, tf.ArrVar) or isinstance(arg, tf.ArrVar):
        if not tf.type_equal(arg, param):
            raise ArgumentTypeMismatch(
                'Argument does not have the parameter type', position,
                expected=tf.show(param), actual=tf.show(arg))
        return (), ALL

    if not tf.type_equal(tf.scalar(arg.elem), tf.scalar(param.elem)):
        raise ArgumentTypeMismatch(
            'Element type {0} where {1} is expected'.format(
                tf.show(arg.elem), tf.show(param.elem)), position,
            expected=tf.show(param), actual=tf.show(arg))

    actual = tf.normalize_shape(arg.shape)
    cell = tf.normalize_shape(param.shape)
    split = len(actual) - len(cell)
    if split < 0 or actual[split:] != cell:
        compared = actual[max(split, 0):]
        if any(sort == tf.SHAPE for sort, _ in compared):
            raise UnderdeterminedFactoring(
                'Cannot tell whether {0} ends in {1}'.format(
                    tf.show(arg.shape), tf.show(param.shape)), position,
                expected=tf.show(param), actual=tf.show(arg))
        raise CellSuffixMismatch(
            'Shape {0} does not end in the cell shape {1}'.format(
                tf.show(arg.shape), tf.show(param.shape)), position,
            expected=tf.show(param), actual=tf.show(arg))

    frame = actual[:split]
    rank = tf.shape_rank(param.shape)
    if rank is None:
        if frame:
            raise UnderdeterminedFactoring(
                'Cell rank of {0} is not fixed'.format(tf.show(param)),
                position, expected=tf.show(param), actual=tf.show(arg))
        rank = ALL
    return frame, rank


def principal_frame(frames, position=None):
    principal = max(frames, key=len)
    for frame in frames:
        if principal[:len(frame)] != frame:
            raise FrameDisagreement(
                'Frame {0} is not a prefix of the principal frame {1}'.format(
                    tf.show(tf.denormalize_shape(frame)),
                    tf.show(tf.denormalize_shape(principal))), position)
    return principal


def check_application(fn_type, arg_types, position=None):
    """
    Type an application. Returns the result type and the cell rank of each
    argument, or None for the ranks when the function position has a
    non-scalar frame.
    """
    if not isinstance(fn_type, tf.Arr) or not isinstance(fn_type.elem, tf.Fn):
        hint = ''
        if isinstance(fn_type, tf.Arr) and \
                isinstance(fn_type.elem, (tf.Forall, tf.Pi)):
            hint = ', instantiate it with t-app or i-app first'
        raise NotAFunctionType(
            'Cannot apply a value of type {0}{1}'.format(
                tf.show(fn_type), hint), position)
    fn = fn_type.elem
    if len(arg_types) != len(fn.args):
        raise ApplicationArity(
            'Function of type {0} applied to {1} arguments'.format(
                tf.show(fn), len(arg_types)), position)

    fn_frame = tf.normalize_shape(fn_type.shape)
    frames, ranks = [fn_frame], []
    for arg, param in zip(arg_types, fn.args):
        frame, rank = factor(arg, param, position)
        frames.append(frame)
        ranks.append(rank)
    principal = principal_frame(frames, position)

    result = _lift(fn.result, tf.denormalize_shape(principal), position)
    return result, (tuple(ranks) if not fn_frame else None)


class Checker(object):
    """
    Checks core expressions of the typed dialect.
    """

    def __init__(self):
        self.ranks = {}
        self._dispatch = {
            core.ArrayLit: self._array_lit,
            core.Frame: self._frame,
            core.Var: self._var,
            core.App: self._app,
            core.Lambda: self._lambda,
            core.If: self._if,
            core.Cond: self._cond,
            core.Let: self._let,
            core.LetStar: self._let_star,
            core.Define: self._define,
            core.TLambda: self._tlambda,
            core.ILambda: self._ilambda,
            core.TApp: self._tapp,
            core.IApp: self._iapp,
            core.Boxes: self._boxes,
            core.Unbox: self._unbox,
        }

    def check(self, expr, env):
        try:
            return self._dispatch[type(expr)](expr, env)
        except RemoraError as e:
            raise e.at(expr.position)

    def _array_lit(self, expr, env):
        value = expr.value
        kinds = set(atom_kind(a) for a in value.atoms)
        if not kinds:
            raise KindError('Cannot type an empty literal', expr.position)
        if len(kinds) > 1:
            raise FrameTypeMismatch(
                'Literal mixes {0}'.format(' and '.join(sorted(kinds))),
                expr.position)
        elem = ATOM_TYPES[kinds.pop()]
        return tf.make_array(elem, tf.shape_of_dims(value.shape))

    def _frame(self, expr, env):
        types = [self.check(e, env) for e in expr.exprs]
        if not types:
            raise KindError('Cannot type an empty frame', expr.position)
        first = types[0]
        for other, e in zip(types[1:], expr.exprs[1:]):
            if not tf.type_equal(first, other):
                raise FrameTypeMismatch(
                    'Frame element has a different type', e.position,
                    expected=tf.show(first), actual=tf.show(other))
        return _lift(first, tf.shape_of_dims(expr.dims), expr.position)

    def _var(self, expr, env):
        return env.lookup(expr.name, expr.position)

    def _app(self, expr, env):
        fn_type = self.check(expr.fn, env)
        arg_types = [self.check(a, env) for a in expr.args]
        result, ranks = check_application(fn_type, arg_types, expr.position)
        self.ranks[id(expr)] = ranks
        return result

    def _lambda(self, expr, env):
        params = []
        for name, rank, param_type in zip(expr.params, expr.ranks,
                                          expr.types):
            if param_type is None:
                raise KindError(
                    'Parameter `{0}` needs a type'.format(name),
                    expr.position)
            check_type(param_type, env, expr.position)
            params.append(param_type)
        inner = env.extend(values=dict(zip(expr.params, params)))
        body = self.check(expr.body, inner)
        return tf.scalar(tf.Fn(params, body))

    def _test(self, expr, env):
        t = self.check(expr, env)
        if not tf.type_equal(t, BOOL_SCALAR):
            raise ArgumentTypeMismatch(
                'Condition must be a scalar boolean', expr.position,
                expected=tf.show(BOOL_SCALAR), actual=tf.show(t))

    def _branches(self, exprs, env):
        types = [self.check(e, env) for e in exprs]
        for other, e in zip(types[1:], exprs[1:]):
            if not tf.type_equal(types[0], other):
                raise BranchTypeMismatch(
                    'Branches have different types', e.position,
                    expected=tf.show(types[0]), actual=tf.show(other))
        return types[0]

    def _if(self, expr, env):
        self._test(expr.test, env)
        return self._branches([expr.then, expr.orelse], env)

    def _cond(self, expr, env):
        for test, _ in expr.clauses:
            self._test(test, env)
        bodies = [body for _, body in expr.clauses] + [expr.orelse]
        return self._branches(bodies, env)

    def _let(self, expr, env):
        values = dict((name, self.check(e, env)) for name, e in expr.bindings)
        return self.check(expr.body, env.extend(values=values))

    def _let_star(self, expr, env):
        for name, e in expr.bindings:
            env = env.extend(values={name: self.check(e, env)})
        return self.check(expr.body, env)

    def _define(self, expr, env):
        t = self.check(expr.expr, env)
        env.define(expr.name, t)
        _logger.debug('Defined %s : %s', expr.name, tf.show(t))
        return t

    def _tlambda(self, expr, env):
        body = self.check(expr.body, env.extend(tvars=expr.tvars))
        return tf.scalar(tf.Forall(expr.tvars, body))

    def _ilambda(self, expr, env):
        body = self.check(expr.body, env.extend(ivars=expr.ivars))
        return tf.scalar(tf.Pi(expr.ivars, body))

    def _binder(self, expr, env, cls, error, count):
        t = self.check(expr.fn, env)
        if not isinstance(t, tf.Arr) or not isinstance(t.elem, cls) or \
                tf.normalize_shape(t.shape):
            raise error('Cannot instantiate a value of type {0}'.format(
                tf.show(t)), expr.position)
        binder = t.elem
        if count != len(binder.names):
            raise InstantiationArity(
                '{0} takes {1} arguments, got {2}'.format(
                    tf.show(binder), len(binder.names), count),
                expr.position)
        return binder

    def _tapp(self, expr, env):
        binder = self._binder(expr, env, tf.Forall, NotPolymorphic,
                              len(expr.types))
        mapping = {}
        for name, t in zip(binder.names, expr.types):
            check_type(t, env, expr.position)
            if name.startswith('@'):
                mapping[name] = tf.array_type(t)
            else:
                mapping[name] = _element(t, expr.position)
        return tf.simplify_type(tf.subst_type(binder.body, types=mapping))

    def _iapp(self, expr, env):
        binder = self._binder(expr, env, tf.Pi, NotIndexed,
                              len(expr.indices))
        mapping = {}
        for name, index in zip(binder.names, expr.indices):
            tf.require_sort(index, tf.index_sort(name), expr.position)
            check_index(index, env, expr.position)
            mapping[name] = index
        return tf.simplify_type(tf.subst_type(binder.body, indices=mapping))

    def _boxes(self, expr, env):
        inner = env.extend(ivars=expr.ivars)
        check_type(expr.type, inner, expr.position)
        for witnesses, clause in expr.clauses:
            if len(witnesses) != len(expr.ivars):
                raise WitnessArity(
                    'Expected {0} witnesses, got {1}'.format(
                        len(expr.ivars), len(witnesses)), clause.position)
            mapping = {}
            for ivar, witness in zip(expr.ivars, witnesses):
                tf.require_sort(witness, tf.index_sort(ivar), clause.position)
                check_index(witness, env, clause.position)
                mapping[ivar] = witness
            expected = tf.subst_type(expr.type, indices=mapping)
            actual = self.check(clause, env)
            if not tf.type_equal(expected, actual):
                raise ClauseTypeMismatch(
                    'Box contents do not have the declared type',
                    clause.position, expected=tf.show(tf.simplify_type(
                        expected)), actual=tf.show(actual))
        sigma = tf.Sigma(expr.ivars, expr.type)
        return tf.make_array(sigma, tf.shape_of_dims(expr.shape))

    def _unbox(self, expr, env):
        subject = self.check(expr.subject, env)
        if not isinstance(subject, tf.Arr) or \
                not isinstance(subject.elem, tf.Sigma):
            raise NotABox('Cannot unbox a value of type {0}'.format(
                tf.show(subject)), expr.subject.position)
        sigma = subject.elem
        if len(expr.ivars) != len(sigma.names):
            raise WitnessArity(
                'Box type {0} has {1} witnesses, unbox binds {2}'.format(
                    tf.show(sigma), len(sigma.names), len(expr.ivars)),
                expr.position)
        mapping = {}
        for ivar, name in zip(expr.ivars, sigma.names):
            if tf.index_sort(ivar) != tf.index_sort(name):
                raise SortError(
                    '`{0}` binds the {1} witness `{2}`'.format(
                        ivar, tf.index_sort(name), name), expr.position,
                    expected=tf.index_sort(name), actual=tf.index_sort(ivar))
            mapping[name] = tf.index_var(ivar)
        contents = tf.subst_type(sigma.body, indices=mapping)
        inner = env.extend(values={expr.name: contents}, ivars=expr.ivars)
        body = self.check(expr.body, inner)
        _, escaped = tf.free_vars(body)
        escaped &= set(expr.ivars)
        if escaped:
            raise EscapingIndexVariable(
                '{0} escapes the unbox body type {1}'.format(
                    ', '.join(sorted(escaped)), tf.show(body)),
                expr.position)
        return _lift(body, subject.shape, expr.position)


def _element(t, position):
    if isinstance(t, tf.Arr):
        if tf.normalize_shape(t.shape):
            raise KindError(
                '{0} is not an element type'.format(tf.show(t)), position)
        return t.elem
    if isinstance(t, tf.ArrVar):
        raise KindError(
            '{0} is not an element type'.format(tf.show(t)), position)
    return t


def check(expr, env=None):
    """
    Type a single core expression, returning its type and the checker that
    holds the application-site ranks.
    """
    checker = Checker()
    return checker.check(expr, env or TypeEnv.initial()), checker
