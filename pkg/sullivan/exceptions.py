from __future__ import annotations

# flake8: noqa

__all__ = [
    'DuplicateDeclarationError',
    'GeneratorMismatchError',
    'InvalidGeneratorError',
    'InvalidModelError',
    'InvalidParameterError',
    'LengthMismatchError',
    'MalformedReferenceError',
    'ModelParseError',
    'ModelSyntaxError',
    'NotACocycleError',
    'NotHomogeneousError',
    'NotOddGeneratedError',
    'OddFormalDimensionError',
    'UndeclaredGeneratorError',
    'UnknownGeneratorError',
    'UnknownModelError',
    'WindowError',
]


class GeneratorMismatchError(ValueError):
    """Raised when two elements (or an element and a model) live over different generator lists."""

    def __init__(self, message: str = "The given elements are not defined over the same generators!"):
        super().__init__(message)


class UnknownGeneratorError(KeyError):
    """Raised when a generator index or name can't be found."""

    def __init__(self, generator: int | str, line: int | None = None,
                 message: str = "unknown generator {generator}{where}"):
        self.generator = generator
        self.line = line
        super().__init__(message.format(generator=generator, where=f" (line {line})" if line else ''))

    def __str__(self) -> str:
        return str(self.args[0])


class InvalidGeneratorError(ValueError):
    def __init__(self, message: str = "Invalid generator declaration!"):
        super().__init__(message)


class InvalidModelError(ValueError):
    def __init__(self, message: str = "Invalid Sullivan model!"):
        super().__init__(message)


class NotHomogeneousError(ValueError):
    def __init__(self, position: int | None = None, message: str = "Element{where} is not homogeneous!"):
        self.position = position
        super().__init__(message.format(where=f" {position}" if position is not None else ''))


class NotACocycleError(ValueError):
    """Raised when an element that should be closed under the differential isn't."""

    def __init__(self, position: int, element: str = '',
                 message: str = "Element {position} ({element}) is not a cocycle!"):
        self.position = position
        super().__init__(message.format(position=position, element=element))


class WindowError(ValueError):
    def __init__(self, message: str = "The cohomology window must be a positive degree!"):
        super().__init__(message)


class NotOddGeneratedError(ValueError):
    def __init__(self, name: str = 'model',
                 message: str = "{name} has even generators, expected an odd-generated model!"):
        super().__init__(message.format(name=name))


class LengthMismatchError(ValueError):
    def __init__(self, expected: int, got: int, message: str = "Expected {expected} Betti numbers, got {got}!"):
        super().__init__(message.format(expected=expected, got=got))


class OddFormalDimensionError(ValueError):
    def __init__(self, fd: int, half_dim: int,
                 message: str = "Formal dimension {fd} is not twice the half dimension {half_dim}!"):
        super().__init__(message.format(fd=fd, half_dim=half_dim))


class ModelParseError(ValueError):
    """Base class for everything that goes wrong while reading a model file."""

    def __init__(self, message: str = "Could not parse the model!", line: int | None = None):
        self.line = line
        super().__init__(message)


class ModelSyntaxError(ModelParseError):
    def __init__(self, line: int, column: int, detail: str,
                 message: str = "Syntax error at line {line}, column {column}: {detail}"):
        self.column = column
        super().__init__(message.format(line=line, column=column, detail=detail), line)


class DuplicateDeclarationError(ModelParseError):
    def __init__(self, kind: str, name: str, line: int,
                 message: str = "The {kind} for {name} is declared twice (line {line})!"):
        super().__init__(message.format(kind=kind, name=name, line=line), line)


class UndeclaredGeneratorError(ModelParseError, UnknownGeneratorError):
    """Raised when a model file uses a generator it never declares."""

    def __init__(self, generator: str, line: int | None = None):
        UnknownGeneratorError.__init__(self, generator, line)


class MalformedReferenceError(ValueError):
    def __init__(self, row: str, reason: str, message: str = "Malformed reference row \"{row}\": {reason}"):
        super().__init__(message.format(row=row, reason=reason))


class UnknownModelError(KeyError):
    def __init__(self, name: str, message: str = "There is no corpus model named \"{name}\"!"):
        super().__init__(message.format(name=name))

    def __str__(self) -> str:
        return str(self.args[0])


class InvalidParameterError(ValueError):
    def __init__(self, name: str, reason: str, message: str = "Invalid parameters for {name}: {reason}"):
        super().__init__(message.format(name=name, reason=reason))
