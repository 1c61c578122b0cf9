"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`SnakeError`.
:class:`InputError` marks malformed user input (the CLI maps it to exit code 1);
every other :class:`SnakeError` is a domain error (exit code 2).
"""


class SnakeError(Exception):
    pass


class InputError(SnakeError):
    pass


class ExprSyntaxError(InputError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ScalarParseError(InputError):
    pass


class FieldSpecError(InputError):
    pass


class CompositeModulus(SnakeError):
    pass


class EvenOrCompositeModulus(SnakeError):
    pass


class ModulusTooLarge(SnakeError):
    pass


class InvalidExtension(SnakeError):
    pass


class DivisionByZero(SnakeError, ZeroDivisionError):
    pass


class MixedFields(SnakeError):
    pass


class MixedHeadCounts(SnakeError):
    pass


class UnsupportedHeadCount(SnakeError):
    pass


class HeadIndexOutOfRange(SnakeError):
    pass


class InvalidHeadTag(SnakeError):
    pass


class WordTooLong(SnakeError):
    pass


class NotSingular(SnakeError):
    pass


class NotAugmentationZero(SnakeError):
    pass


class InfiniteField(SnakeError):
    pass


class BudgetExceeded(SnakeError):
    pass
