# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import six


class ConfigError(Exception):
    "There was a problem with the configuration"


class UsageError(Exception):
    "The command line arguments could not be used together"


@six.python_2_unicode_compatible
class RemoraError(Exception):
    """
    Base Remora error class.

    The class name doubles as the diagnostic code that is printed to the
    user and matched by the corpus runner (``ERROR <code>``).
    """

    def __init__(self, message=None, position=None):
        self.message = message or self.__doc__
        self.position = position
        super(RemoraError, self).__init__(self.message)

    @property
    def code(self):
        return type(self).__name__

    def at(self, position):
        """
        Attach a source position if the error doesn't already have one.
        """
        if self.position is None and position is not None:
            self.position = position
        return self

    def __str__(self):
        if self.position is None:
            return '{0}: {1}'.format(self.code, self.message)
        return '{0} at {1}: {2}'.format(self.code, self.position, self.message)


class ReaderError(RemoraError):
    "The source text could not be read"


class UnterminatedString(ReaderError):
    "String literal is missing its closing quote"


class BadStringEscape(ReaderError):
    "Unknown escape sequence inside a string literal"


class BadCharLiteral(ReaderError):
    "Unknown character name"


class UnknownHashSyntax(ReaderError):
    "Unknown `#` syntax"


class IllegalCodepoint(ReaderError):
    "Character is not allowed in source text"


class UnbalancedDelimiter(ReaderError):
    "Delimiter is never closed, or closed without being opened"


class MismatchedDelimiter(ReaderError):
    "Delimiter closed by the wrong kind of bracket"


class DanglingRerank(ReaderError):
    "`~` must be followed by a rank list and a form"


class FloatOutOfRange(ReaderError):
    "Float literal too large to represent"


class DesugarError(RemoraError):
    "The form could not be desugared"


class MalformedForm(DesugarError):
    "Special form has the wrong structure"


class RaggedLiteral(DesugarError):
    "Bracket siblings have different shapes"


class BadFrameArity(DesugarError):
    "Number of elements does not match the declared dimensions"


class MalformedBox(DesugarError):
    "Box form binds a different number of index variables and indices"


class DuplicateParameter(DesugarError):
    "Parameter names must be distinct"


class WitnessArity(RemoraError):
    "Box clause gives the wrong number of witness indices"


class NonScalarCondition(RemoraError):
    "Condition must be a scalar boolean"


class FrameDisagreement(RemoraError):
    "Argument frames are not prefixes of the principal frame"


class EvaluationError(RemoraError):
    "The expression could not be evaluated"


class UnboundVariable(EvaluationError):
    "Variable is not bound"


class TypedFormInDynamicCode(EvaluationError):
    "Type and index abstractions must be erased before evaluation"


class NotAFunction(EvaluationError):
    "Function position holds a non-function atom"


class ArityMismatch(EvaluationError):
    "Wrong number of arguments"


class HeterogeneousFunctionArray(EvaluationError):
    "Functions in one application must share arity and cell ranks"


class TypeMismatchAtom(EvaluationError):
    "Atom has the wrong type for this operation"


class DivisionByZero(EvaluationError):
    "Division by zero"


class NegativeSqrt(EvaluationError):
    "Square root of a negative number"


class NumericOverflow(EvaluationError):
    "Numeric result is out of range"


class UnknownBuiltin(EvaluationError):
    "No builtin is registered under this name"


class ShapeError(EvaluationError):
    "Array shapes are incompatible"


class RankTooLow(ShapeError):
    "Argument does not comprise at least one complete cell"


class CellShapeMismatch(ShapeError):
    "Result cells have different shapes"


class EmptyFrameUnknownCell(ShapeError):
    "Result cell shape of an empty frame is unknown"


class RankZeroAppend(ShapeError):
    "Cannot append scalars"


class TrailingShapeMismatch(ShapeError):
    "Appended arrays disagree past the first dimension"


class RankZeroLength(ShapeError):
    "Scalar has no length"


class NegativeDimension(ShapeError):
    "Dimensions must be natural numbers"


class RotationArity(ShapeError):
    "Need one rotation amount per axis"


class EmptyDataSource(ShapeError):
    "Cannot fill a shape from an empty array"


class CountOutOfRange(ShapeError):
    "Count exceeds the dimension"


class IndexOutOfBounds(ShapeError):
    "Index is outside the array"


class IndexTooLong(ShapeError):
    "Index has more components than the array has axes"


class RankZeroSource(ShapeError):
    "Cannot select items from a scalar"


class RegionOutOfBounds(ShapeError):
    "Region extends past the edge of the array"


class SelectorLengthMismatch(ShapeError):
    "Selector length differs from the number of items"


class RankZeroData(ShapeError):
    "Data array may not be a scalar"


class NegativeCount(ShapeError):
    "Replication counts must be natural numbers"


class EmptyReduce(ShapeError):
    "Cannot reduce an array whose leading dimension is zero"


@six.python_2_unicode_compatible
class TypeCheckError(RemoraError):
    "The program is not well typed"

    def __init__(self, message=None, position=None, expected=None,
                 actual=None):
        self.expected = expected
        self.actual = actual
        super(TypeCheckError, self).__init__(message, position)

    def __str__(self):
        text = super(TypeCheckError, self).__str__()
        if self.expected is not None:
            text += '\n  expected: {0}'.format(self.expected)
        if self.actual is not None:
            text += '\n  actual:   {0}'.format(self.actual)
        return text


class UnboundName(TypeCheckError):
    "Name is not bound in the type environment"


class KindError(TypeCheckError):
    "Type is not well formed"


class SortError(TypeCheckError):
    "Dimension used where a shape is expected, or the reverse"


class NotPolymorphic(TypeCheckError):
    "Type application of a term without a universal type"


class NotIndexed(TypeCheckError):
    "Index application of a term without a dependent product type"


class InstantiationArity(TypeCheckError):
    "Wrong number of type or index arguments"


class BranchTypeMismatch(TypeCheckError):
    "Conditional branches have different types"


class ArgumentTypeMismatch(TypeCheckError):
    "Argument element type differs from the parameter type"


class CellSuffixMismatch(TypeCheckError):
    "Argument shape does not end in the declared cell shape"


class UnderdeterminedFactoring(TypeCheckError):
    "Argument shape cannot be split into frame and cell unambiguously"


class ClauseTypeMismatch(TypeCheckError):
    "Box clause does not have the declared type"


class EscapingIndexVariable(TypeCheckError):
    "Unboxed index variable escapes its scope"


class NotABox(TypeCheckError):
    "Unbox subject is not an array of boxes"


class MissingExpectation(RemoraError):
    "Corpus case has no .expected file"


class NotAFunctionType(TypeCheckError):
    "Function position does not have a function type"


class ApplicationArity(TypeCheckError):
    "Function type takes a different number of arguments"


class FrameTypeMismatch(TypeCheckError):
    "Frame elements have different types"
