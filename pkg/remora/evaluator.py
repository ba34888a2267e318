# -*- coding: utf-8 -*-
"""
Evaluator for core expressions of the dynamic dialect.

Function application follows the rank-polymorphic rule: each argument is cut
into a frame of cells according to the cell rank its parameter declares, the
longest frame is the principal frame, every other frame (including the
function array's own) must be a prefix of it, and shorter frames are
replicated up to the principal frame. The function is then applied once per
principal frame position and the results are collected into that frame.
"""
from __future__ import unicode_literals

import logging
import threading
from multiprocessing.pool import ThreadPool

import six

from . import syntax as core
from . import typeforms
from .model import (
    Array, Box, Closure, IndexClosure, Function, Builtin, collect_frame,
    frame_of, replicate_to_frame, atom_kind)
from .exceptions import (
    RemoraError, UnboundVariable, TypedFormInDynamicCode, NotAFunction,
    ArityMismatch, HeterogeneousFunctionArray, NonScalarCondition,
    FrameDisagreement, WitnessArity, TypeMismatchAtom)

_logger = logging.getLogger(__name__)

# Index variables bound by an erased unbox or index application live under
# this prefix so they can't shadow value variables.
INDEX_PREFIX = '%index:'


class Environment(object):
    """
    A chain of name -> Array frames. Lookup is innermost first and
    ``define`` only ever extends the current frame.
    """

    def __init__(self, bindings=None, parent=None):
        self.bindings = dict(bindings or {})
        self.parent = parent

    def child(self, bindings=None):
        return Environment(bindings, self)

    def lookup(self, name, position=None):
        env = self
        while env is not None:
            if name in env.bindings:
                return env.bindings[name]
            env = env.parent
        raise UnboundVariable('`{0}` is not bound'.format(name), position)

    def define(self, name, value):
        self.bindings[name] = value

    def __contains__(self, name):
        env = self
        while env is not None:
            if name in env.bindings:
                return True
            env = env.parent
        return False

    def names(self):
        seen = set()
        env = self
        while env is not None:
            seen.update(env.bindings)
            env = env.parent
        return seen


class Evaluator(object):
    """
    Params:
        parallel (bool): Fan the independent cell applications of the
            outermost lifted application out over a thread pool.
        workers (int): Size of the thread pool, defaults to the cpu count.
    """

    def __init__(self, parallel=False, workers=None):
        self.parallel = parallel
        self.workers = workers
        self._pool = None
        self._local = threading.local()
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
            core.Boxes: self._boxes,
            core.Unbox: self._unbox,
            core.IndexAbstraction: self._index_abstraction,
            core.IndexApplication: self._index_application,
            core.TLambda: self._typed_form,
            core.ILambda: self._typed_form,
            core.TApp: self._typed_form,
            core.IApp: self._typed_form,
        }

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def close(self):
        if self._pool is not None:
            _logger.debug('Stopping cell pool')
            self._pool.close()
            self._pool.join()
            self._pool = None

    @property
    def pool(self):
        if self._pool is None:
            _logger.debug('Starting cell pool with %s workers',
                          self.workers or 'default')
            self._pool = ThreadPool(self.workers)
        return self._pool

    def evaluate(self, expr, env):
        try:
            return self._dispatch[type(expr)](expr, env)
        except RemoraError as e:
            raise e.at(expr.position)

    # Application

    def apply(self, fn_array, args, position=None):
        """
        Apply an array of functions to argument arrays under the lifting
        rule.
        """
        functions = fn_array.atoms
        for atom in functions:
            if not isinstance(atom, Function):
                raise NotAFunction(
                    'Cannot apply {0} atom'.format(atom_kind(atom)), position)
        if not functions:
            # No function to take the cell ranks from. Arguments still have
            # to agree with the function frame on their leading axes.
            for arg in args:
                principal_frame([fn_array.shape, arg.shape[:fn_array.rank]],
                                position)
            return collect_frame(fn_array.shape, [], ())

        first = functions[0]
        for other in functions[1:]:
            if other.ranks != first.ranks:
                raise HeterogeneousFunctionArray(
                    '{0!r} and {1!r} differ in arity or cell ranks'.format(
                        first, other), position)
        if len(args) != first.arity:
            raise ArityMismatch(
                '{0} expects {1} arguments, got {2}'.format(
                    first.name or 'function', first.arity, len(args)),
                position)

        frames = [frame_of(arg, rank) for arg, rank in zip(args, first.ranks)]
        principal = principal_frame([fn_array.shape] + frames, position)

        if not principal:
            return self.call(first, list(args))

        fn_cells = [c.value for c in replicate_to_frame(
            fn_array, fn_array.shape, principal, 0)]
        arg_cells = [replicate_to_frame(arg, frame, principal, rank)
                     for arg, frame, rank in zip(args, frames, first.ranks)]
        jobs = [(fn_cells[i], [cells[i] for cells in arg_cells])
                for i in six.moves.range(len(fn_cells))]

        results = self._map(jobs)
        return collect_frame(principal, results, () if not results else None)

    def call(self, function, cells):
        """
        Apply a single function atom to one cell per parameter.
        """
        if isinstance(function, Builtin):
            return function(self, *cells)
        if isinstance(function, IndexClosure):
            raise NotAFunction(
                '{0} must be instantiated with i-app before it is '
                'applied'.format(function.name or 'Index function'))
        env = function.env.child(dict(zip(function.params, cells)))
        return self.evaluate(function.body, env)

    def _map(self, jobs):
        depth = getattr(self._local, 'depth', 0)
        if not self.parallel or depth > 0 or len(jobs) < 2:
            self._local.depth = depth + 1
            try:
                return [self.call(fn, cells) for fn, cells in jobs]
            finally:
                self._local.depth = depth
        return self.pool.map(self._run_job, jobs)

    def _run_job(self, job):
        # Runs on a pool thread; nested applications stay on this thread
        self._local.depth = 1
        try:
            fn, cells = job
            return self.call(fn, cells)
        finally:
            self._local.depth = 0

    # Core forms

    def _array_lit(self, expr, env):
        return expr.value

    def _frame(self, expr, env):
        values = [self.evaluate(e, env) for e in expr.exprs]
        return collect_frame(expr.dims, values, () if not values else None)

    def _var(self, expr, env):
        return env.lookup(expr.name, expr.position)

    def _app(self, expr, env):
        fn = self.evaluate(expr.fn, env)
        args = [self.evaluate(a, env) for a in expr.args]
        return self.apply(fn, args, expr.position)

    def _lambda(self, expr, env, name=None):
        ranks = []
        for rank, param_type in zip(expr.ranks, expr.types):
            if rank is None:
                rank = typeforms.type_rank(param_type)
                if rank is None:
                    raise TypedFormInDynamicCode(
                        'Parameter type {0} does not fix a rank'.format(
                            typeforms.show(param_type)), expr.position)
            ranks.append(rank)
        closure = Closure(expr.params, ranks, expr.body, env, name)
        return Array.scalar(closure)

    def _test(self, expr, env):
        value = self.evaluate(expr, env)
        if not value.is_scalar or atom_kind(value.value) != 'bool':
            raise NonScalarCondition(
                'Condition evaluated to an array of shape {0}'.format(
                    list(value.shape)), expr.position)
        return value.value

    def _if(self, expr, env):
        if self._test(expr.test, env):
            return self.evaluate(expr.then, env)
        return self.evaluate(expr.orelse, env)

    def _cond(self, expr, env):
        for test, body in expr.clauses:
            if self._test(test, env):
                return self.evaluate(body, env)
        return self.evaluate(expr.orelse, env)

    def _let(self, expr, env):
        bindings = dict((name, self.evaluate(e, env))
                        for name, e in expr.bindings)
        return self.evaluate(expr.body, env.child(bindings))

    def _let_star(self, expr, env):
        scope = env.child()
        for name, e in expr.bindings:
            scope.define(name, self.evaluate(e, scope))
        return self.evaluate(expr.body, scope)

    def _define(self, expr, env):
        if isinstance(expr.expr, core.Lambda):
            value = self._lambda(expr.expr, env, name=expr.name)
        elif isinstance(expr.expr, core.IndexAbstraction):
            value = self._index_abstraction(expr.expr, env, name=expr.name)
        else:
            value = self.evaluate(expr.expr, env)
        env.define(expr.name, value)
        return value

    def _boxes(self, expr, env):
        boxes = []
        for witnesses, clause in expr.clauses:
            if len(witnesses) != len(expr.ivars):
                raise WitnessArity(
                    'Expected {0} witnesses, got {1}'.format(
                        len(expr.ivars), len(witnesses)), clause.position)
            values = [self._witness(w, env, clause.position)
                      for w in witnesses]
            boxes.append(Box(self.evaluate(clause, env), values))
        return Array(expr.shape, boxes)

    def _witness(self, index, env, position):
        if isinstance(index, typeforms.DimLit):
            return index.value
        if isinstance(index, typeforms.DimSum):
            return sum(self._witness(p, env, position) for p in index.parts)
        if isinstance(index, typeforms.ShapeLit):
            return tuple(self._witness(d, env, position) for d in index.dims)
        if isinstance(index, typeforms.ShapeConcat):
            out = ()
            for part in index.parts:
                out += self._witness(part, env, position)
            return out

        name = index.name
        value = None
        for candidate in (INDEX_PREFIX + name, name):
            if candidate in env:
                value = env.lookup(candidate)
                break
        if value is None:
            raise UnboundVariable(
                'Index `{0}` has no run-time value'.format(name), position)
        if isinstance(index, typeforms.ShapeVar):
            return tuple(value.atoms)
        return value.value

    def _unbox(self, expr, env):
        subject = self.evaluate(expr.subject, env)
        results = []
        for atom in subject.atoms:
            if not isinstance(atom, Box):
                raise TypeMismatchAtom(
                    'unbox expects boxes, got {0}'.format(atom_kind(atom)),
                    expr.subject.position)
            if len(atom.witnesses) != len(expr.ivars):
                raise WitnessArity(
                    'Box has {0} witnesses, unbox binds {1}'.format(
                        len(atom.witnesses), len(expr.ivars)), expr.position)
            bindings = {expr.name: atom.contents}
            for ivar, witness in zip(expr.ivars, atom.witnesses):
                bindings[ivar] = witness_array(witness)
            results.append(self.evaluate(expr.body, env.child(bindings)))
        return collect_frame(subject.shape, results,
                             () if not results else None)

    def _index_abstraction(self, expr, env, name=None):
        return Array.scalar(IndexClosure(expr.ivars, expr.body, env, name))

    def _index_application(self, expr, env):
        fn = self.evaluate(expr.fn, env)
        if not fn.is_scalar or not isinstance(fn.value, IndexClosure):
            # Builtins are index polymorphic without binding anything
            return fn
        closure = fn.value
        bindings = {}
        for ivar, index in zip(closure.ivars, expr.indices):
            witness = self._witness(index, env, expr.position)
            bindings[INDEX_PREFIX + ivar] = witness_array(witness)
        scope = closure.env.child(bindings)
        if isinstance(closure.body, core.Lambda):
            return self._lambda(closure.body, scope, name=closure.name)
        if isinstance(closure.body, core.IndexAbstraction):
            return self._index_abstraction(closure.body, scope, closure.name)
        return self.evaluate(closure.body, scope)

    def _typed_form(self, expr, env):
        raise TypedFormInDynamicCode(
            '{0} must be erased before evaluation'.format(
                type(expr).__name__), expr.position)


def principal_frame(frames, position=None):
    """
    The longest of the frames, provided every other frame is a prefix of it.
    """
    principal = max(frames, key=len)
    for frame in frames:
        if tuple(principal[:len(frame)]) != tuple(frame):
            raise FrameDisagreement(
                'Frame {0} is not a prefix of the principal frame {1}'.format(
                    list(frame), list(principal)), position)
    return tuple(principal)


def witness_array(witness):
    if isinstance(witness, tuple):
        return Array.vector(witness)
    return Array.scalar(witness)
