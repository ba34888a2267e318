# -*- coding: utf-8 -*-
"""
Types and indices of the explicitly typed dialect.

Indices come in two sorts. A dimension is a natural literal, a variable, or
a sum ``(+ d ...)``. A shape is ``(shape d ...)``, a variable spelled with a
leading ``@``, or an append ``(++ s ...)``. In a shape position the bracket
notation ``[d1 @s 5]`` splices dimensions and shapes into one shape.

Two indices are equal exactly when their normal forms are identical. A
dimension normalizes to a constant plus a sorted tuple of variables, a shape
to a flat tuple of segments.
"""
from __future__ import unicode_literals

import itertools
from collections import namedtuple

import six

from .reader import Leaf, Paren, Bracket, INT, SYMBOL, is_symbol
from .exceptions import KindError, SortError

BASE_TYPES = ('int', 'float', 'bool', 'char')

DIM = 'dim'
SHAPE = 'shape'


def index_sort(name):
    return SHAPE if name.startswith('@') else DIM


@six.python_2_unicode_compatible
class _Node(object):
    _fields = ()

    def __eq__(self, other):
        return type(self) is type(other) and all(
            getattr(self, f) == getattr(other, f) for f in self._fields)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__,) + tuple(
            getattr(self, f) for f in self._fields))

    def __repr__(self):
        args = ', '.join(repr(getattr(self, f)) for f in self._fields)
        return '{0}({1})'.format(type(self).__name__, args)

    def __str__(self):
        return show(self)


# Indices

class Index(_Node):
    sort = None


class DimLit(Index):
    sort = DIM
    _fields = ('value',)

    def __init__(self, value):
        self.value = value


class DimVar(Index):
    sort = DIM
    _fields = ('name',)

    def __init__(self, name):
        self.name = name


class DimSum(Index):
    sort = DIM
    _fields = ('parts',)

    def __init__(self, parts):
        self.parts = tuple(parts)


class ShapeLit(Index):
    sort = SHAPE
    _fields = ('dims',)

    def __init__(self, dims):
        self.dims = tuple(dims)


class ShapeVar(Index):
    sort = SHAPE
    _fields = ('name',)

    def __init__(self, name):
        self.name = name


class ShapeConcat(Index):
    sort = SHAPE
    _fields = ('parts',)

    def __init__(self, parts):
        self.parts = tuple(parts)


SCALAR_SHAPE = ShapeLit(())


def index_var(name):
    return ShapeVar(name) if index_sort(name) == SHAPE else DimVar(name)


def shape_of_dims(dims):
    return ShapeLit(DimLit(d) for d in dims)


# Types

class Type(_Node):
    pass


class Base(Type):
    _fields = ('name',)

    def __init__(self, name):
        self.name = name


class ElemVar(Type):
    _fields = ('name',)

    def __init__(self, name):
        self.name = name


class ArrVar(Type):
    _fields = ('name',)

    def __init__(self, name):
        self.name = name


class Arr(Type):
    _fields = ('elem', 'shape')

    def __init__(self, elem, shape):
        self.elem = elem
        self.shape = shape


class Fn(Type):
    _fields = ('args', 'result')

    def __init__(self, args, result):
        self.args = tuple(args)
        self.result = result


class _Binder(Type):
    _fields = ('names', 'body')

    def __init__(self, names, body):
        self.names = tuple(names)
        self.body = body


class Forall(_Binder):
    keyword = '∀'


class Pi(_Binder):
    keyword = 'Π'


class Sigma(_Binder):
    keyword = 'Σ'


INT_T = Base('int')
FLOAT_T = Base('float')
BOOL_T = Base('bool')
CHAR_T = Base('char')


def is_array_type(t):
    return isinstance(t, (Arr, ArrVar))


def array_type(t):
    """
    An element type written where an array type is expected stands for the
    scalar array of that type.
    """
    if is_array_type(t):
        return t
    return Arr(t, SCALAR_SHAPE)


def scalar(elem):
    return Arr(elem, SCALAR_SHAPE)


def make_array(elem, shape):
    # [[int 3] 2] is [int 2 3]
    if isinstance(elem, Arr):
        return Arr(elem.elem, concat_shapes(shape, elem.shape))
    if isinstance(elem, ArrVar):
        raise KindError(
            'Array type variable {0} used as an element type'.format(
                elem.name))
    return Arr(elem, shape)


def concat_shapes(*shapes):
    parts = []
    for shape in shapes:
        if isinstance(shape, ShapeConcat):
            parts.extend(shape.parts)
        elif isinstance(shape, ShapeLit) and not shape.dims:
            continue
        else:
            parts.append(shape)
    if not parts:
        return SCALAR_SHAPE
    if len(parts) == 1:
        return parts[0]
    if all(isinstance(p, ShapeLit) for p in parts):
        return ShapeLit(itertools.chain.from_iterable(p.dims for p in parts))
    return ShapeConcat(parts)


# Parsing from surface forms

def _symbol_name(form, what):
    if not isinstance(form, Leaf) or form.kind != SYMBOL:
        raise KindError('Expected {0}, got {1!r}'.format(what, form),
                        getattr(form, 'position', None))
    return form.value


def require_sort(index, sort, position=None):
    if index.sort != sort:
        raise SortError(
            'Expected a {0} index, got {1}'.format(sort, show(index)),
            position, expected=sort, actual=index.sort)
    return index


def parse_index(form):
    """
    Read a dimension or shape index from a surface form.
    """
    position = getattr(form, 'position', None)
    if isinstance(form, Leaf):
        if form.kind == INT:
            if form.value < 0:
                raise KindError('Dimensions are natural numbers', position)
            return DimLit(form.value)
        if form.kind == SYMBOL:
            return index_var(form.value)
        raise KindError('{0!r} is not an index'.format(form), position)

    if isinstance(form, Bracket):
        return splice([parse_index(f) for f in form.children])

    if isinstance(form, Paren) and form.children:
        head, rest = form.children[0], form.children[1:]
        parts = [parse_index(f) for f in rest]
        if is_symbol(head, '+'):
            for part, f in zip(parts, rest):
                require_sort(part, DIM, f.position)
            return DimSum(parts)
        if is_symbol(head, 'shape'):
            for part, f in zip(parts, rest):
                require_sort(part, DIM, f.position)
            return ShapeLit(parts)
        if is_symbol(head, '++'):
            for part, f in zip(parts, rest):
                require_sort(part, SHAPE, f.position)
            return ShapeConcat(parts)
    raise KindError('{0!r} is not an index'.format(form), position)


def parse_shape(form):
    return require_sort(parse_index(form), SHAPE,
                        getattr(form, 'position', None))


def splice(indices):
    """
    Bracket notation: runs of dimensions become ``shape`` segments, shape
    indices are appended in place.
    """
    parts, run = [], []
    for index in indices:
        if index.sort == DIM:
            run.append(index)
        else:
            if run:
                parts.append(ShapeLit(run))
                run = []
            parts.append(index)
    if run or not parts:
        parts.append(ShapeLit(run))
    if len(parts) == 1:
        return parts[0]
    return ShapeConcat(parts)


def parse_binders(form):
    if isinstance(form, Leaf):
        return (_symbol_name(form, 'a variable'),)
    if not isinstance(form, (Paren, Bracket)):
        raise KindError('Expected a variable list', form.position)
    names = tuple(_symbol_name(f, 'a variable') for f in form.children)
    if len(set(names)) != len(names):
        raise KindError('Repeated variable in {0!r}'.format(form),
                        form.position)
    return names


def parse_type(form):
    """
    Read a type from a surface form. Element types are returned as they are;
    use ``array_type`` where an array type is expected.
    """
    position = getattr(form, 'position', None)
    if isinstance(form, Leaf):
        name = _symbol_name(form, 'a type')
        if name in BASE_TYPES:
            return Base(name)
        if name.startswith('@'):
            return ArrVar(name)
        return ElemVar(name)

    if isinstance(form, Bracket):
        if not form.children:
            raise KindError('Empty array type', position)
        elem = parse_type(form.children[0])
        shape = splice([parse_index(f) for f in form.children[1:]])
        return make_array(elem, shape)

    if isinstance(form, Paren) and form.children:
        head, rest = form.children[0], form.children[1:]
        if is_symbol(head, 'A') and len(rest) == 2:
            return make_array(parse_type(rest[0]), parse_shape(rest[1]))
        if is_symbol(head, '→') and len(rest) == 2:
            if not isinstance(rest[0], Paren):
                raise KindError('Function argument types must be a list',
                                rest[0].position)
            args = [array_type(parse_type(f)) for f in rest[0].children]
            return Fn(args, array_type(parse_type(rest[1])))
        for cls in (Forall, Pi, Sigma):
            if is_symbol(head, cls.keyword) and len(rest) == 2:
                names = parse_binders(rest[0])
                return cls(names, array_type(parse_type(rest[1])))
    raise KindError('{0!r} is not a type'.format(form), position)


# Normal forms

DimNormal = namedtuple('DimNormal', ['const', 'vars'])


def normalize_dim(index):
    if isinstance(index, DimLit):
        return DimNormal(index.value, ())
    if isinstance(index, DimVar):
        return DimNormal(0, (index.name,))
    if isinstance(index, DimSum):
        const, names = 0, []
        for part in index.parts:
            normal = normalize_dim(require_sort(part, DIM))
            const += normal.const
            names.extend(normal.vars)
        return DimNormal(const, tuple(sorted(names)))
    raise SortError('Expected a dim index, got {0}'.format(show(index)),
                    expected=DIM, actual=index.sort)


def normalize_shape(index):
    if isinstance(index, ShapeLit):
        return tuple((DIM, normalize_dim(d)) for d in index.dims)
    if isinstance(index, ShapeVar):
        return ((SHAPE, index.name),)
    if isinstance(index, ShapeConcat):
        segments = ()
        for part in index.parts:
            segments += normalize_shape(require_sort(part, SHAPE))
        return segments
    raise SortError('Expected a shape index, got {0}'.format(show(index)),
                    expected=SHAPE, actual=index.sort)


def normalize_index(index):
    if index.sort == DIM:
        return normalize_dim(index)
    return normalize_shape(index)


def denormalize_dim(normal):
    parts = [DimVar(n) for n in normal.vars]
    if normal.const or not parts:
        parts.insert(0, DimLit(normal.const))
    if len(parts) == 1:
        return parts[0]
    return DimSum(parts)


def denormalize_shape(segments):
    parts, run = [], []
    for sort, value in segments:
        if sort == DIM:
            run.append(denormalize_dim(value))
        else:
            if run:
                parts.append(ShapeLit(run))
                run = []
            parts.append(ShapeVar(value))
    if run or not parts:
        parts.append(ShapeLit(run))
    if len(parts) == 1:
        return parts[0]
    return ShapeConcat(parts)


def simplify_index(index):
    if index.sort == DIM:
        return denormalize_dim(normalize_dim(index))
    return denormalize_shape(normalize_shape(index))


def index_equal(a, b):
    return a.sort == b.sort and normalize_index(a) == normalize_index(b)


def literal_dims(shape):
    """
    The dimensions of a shape with no variables, or None.
    """
    dims = []
    for sort, value in normalize_shape(shape):
        if sort == SHAPE or value.vars:
            return None
        dims.append(value.const)
    return tuple(dims)


def shape_rank(shape):
    """
    Number of axes of a shape, or None when a shape variable hides it.
    """
    segments = normalize_shape(shape)
    if any(sort == SHAPE for sort, _ in segments):
        return None
    return len(segments)


def type_rank(t):
    """
    The rank of the arrays described by ``t``, or None when it depends on
    a variable.
    """
    if isinstance(t, ArrVar):
        return None
    if isinstance(t, Arr):
        return shape_rank(t.shape)
    return 0


# Free variables and substitution

def index_free_vars(index):
    if isinstance(index, (DimVar, ShapeVar)):
        return {index.name}
    if isinstance(index, DimLit):
        return set()
    children = index.dims if isinstance(index, ShapeLit) else index.parts
    names = set()
    for child in children:
        names |= index_free_vars(child)
    return names


def free_vars(t):
    """
    Return the free (type variables, index variables) of a type.
    """
    if isinstance(t, Base):
        return set(), set()
    if isinstance(t, (ElemVar, ArrVar)):
        return {t.name}, set()
    if isinstance(t, Arr):
        tvars, ivars = free_vars(t.elem)
        return tvars, ivars | index_free_vars(t.shape)
    if isinstance(t, Fn):
        tvars, ivars = free_vars(t.result)
        for arg in t.args:
            more_t, more_i = free_vars(arg)
            tvars |= more_t
            ivars |= more_i
        return tvars, ivars
    tvars, ivars = free_vars(t.body)
    if isinstance(t, Forall):
        return tvars - set(t.names), ivars
    return tvars, ivars - set(t.names)


def subst_index(index, indices):
    if isinstance(index, (DimVar, ShapeVar)):
        return indices.get(index.name, index)
    if isinstance(index, DimLit):
        return index
    if isinstance(index, ShapeLit):
        return ShapeLit(subst_index(d, indices) for d in index.dims)
    if isinstance(index, DimSum):
        return DimSum(subst_index(p, indices) for p in index.parts)
    return concat_shapes(*[subst_index(p, indices) for p in index.parts])


_fresh_counter = itertools.count()


def _fresh(name):
    base = name.split("'")[0]
    return "{0}'{1}".format(base, next(_fresh_counter))


def subst_type(t, types=None, indices=None):
    """
    Capture-avoiding substitution of types for type variables and indices
    for index variables.
    """
    types = types or {}
    indices = indices or {}
    if not types and not indices:
        return t

    if isinstance(t, Base):
        return t
    if isinstance(t, ElemVar):
        return types.get(t.name, t)
    if isinstance(t, ArrVar):
        return array_type(types[t.name]) if t.name in types else t
    if isinstance(t, Arr):
        elem = subst_type(t.elem, types, indices)
        return make_array(elem, subst_index(t.shape, indices))
    if isinstance(t, Fn):
        return Fn([subst_type(a, types, indices) for a in t.args],
                  subst_type(t.result, types, indices))

    # Binders: drop shadowed names and rename to avoid capture
    if isinstance(t, Forall):
        types = dict((k, v) for k, v in types.items() if k not in t.names)
    else:
        indices = dict((k, v) for k, v in indices.items()
                       if k not in t.names)
    captured = set()
    for replacement in types.values():
        more_t, more_i = free_vars(replacement)
        captured |= more_t | more_i
    for replacement in indices.values():
        captured |= index_free_vars(replacement)

    names, body = list(t.names), t.body
    for i, name in enumerate(names):
        if name in captured:
            new = _fresh(name)
            names[i] = new
            if isinstance(t, Forall):
                var = ArrVar(new) if name.startswith('@') else ElemVar(new)
                body = subst_type(body, types={name: var})
            else:
                body = subst_type(body, indices={name: index_var(new)})
    return type(t)(names, subst_type(body, types, indices))


# Equality

def _canon_index(index, renames):
    renamed = subst_index(index, renames)
    return index.sort, normalize_index(renamed)


def _canon(t, renames, depth):
    if isinstance(t, Base):
        return ('base', t.name)
    if isinstance(t, ElemVar):
        var = renames.get(t.name)
        return ('evar', var.name if var is not None else t.name)
    if isinstance(t, ArrVar):
        var = renames.get(t.name)
        return ('avar', var.name if var is not None else t.name)
    if isinstance(t, Arr):
        return ('arr', _canon(t.elem, renames, depth),
                _canon_index(t.shape, renames))
    if isinstance(t, Fn):
        return ('fn', tuple(_canon(a, renames, depth) for a in t.args),
                _canon(t.result, renames, depth))

    renames = dict(renames)
    for i, name in enumerate(t.names):
        canonical = '%{0}'.format(depth + i)
        if name.startswith('@'):
            canonical = '@' + canonical
        if isinstance(t, Forall):
            var = ArrVar(canonical) if name.startswith('@') else \
                ElemVar(canonical)
        else:
            var = index_var(canonical)
        renames[name] = var
    return (type(t).__name__, len(t.names),
            _canon(t.body, renames, depth + len(t.names)))


def canonical(t):
    return _canon(t, {}, 0)


def type_equal(t1, t2):
    """
    Structural equality up to renaming of bound variables and index
    normalization.
    """
    return canonical(array_type(t1)) == canonical(array_type(t2))


# Printing

def _show_dim(index):
    if isinstance(index, DimLit):
        return six.text_type(index.value)
    if isinstance(index, DimVar):
        return index.name
    return '(+ {0})'.format(' '.join(_show_dim(p) for p in index.parts))


def _shape_items(shape):
    if isinstance(shape, ShapeLit):
        return [_show_dim(d) for d in shape.dims]
    if isinstance(shape, ShapeVar):
        return [shape.name]
    items = []
    for part in shape.parts:
        items.extend(_shape_items(part))
    return items


def show_index(index):
    if index.sort == DIM:
        return _show_dim(index)
    return '[{0}]'.format(' '.join(_shape_items(index)))


def show_type(t):
    if isinstance(t, (Base, ElemVar, ArrVar)):
        return t.name
    if isinstance(t, Arr):
        elem = show_type(t.elem)
        items = _shape_items(t.shape)
        if not items:
            return elem
        return '[{0} {1}]'.format(elem, ' '.join(items))
    if isinstance(t, Fn):
        return '(→ ({0}) {1})'.format(
            ' '.join(show_type(a) for a in t.args), show_type(t.result))
    return '({0} ({1}) {2})'.format(
        t.keyword, ' '.join(t.names), show_type(t.body))


def show(node):
    if isinstance(node, Index):
        return show_index(node)
    return show_type(node)


def simplify_type(t):
    """
    Rewrite every index inside a type to its normal form, so that
    ``[int (+ 2 7)]`` reads ``[int 9]``.
    """
    if isinstance(t, Arr):
        return Arr(simplify_type(t.elem), simplify_index(t.shape))
    if isinstance(t, Fn):
        return Fn([simplify_type(a) for a in t.args], simplify_type(t.result))
    if isinstance(t, _Binder):
        return type(t)(t.names, simplify_type(t.body))
    return t
