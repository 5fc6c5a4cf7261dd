from typing import Any, Optional


class NegacyclicError(Exception):
    exit_code = 2


class FieldError(NegacyclicError):
    pass


class NotPrime(FieldError):
    def __init__(self, p: int) -> None:
        super().__init__(f"Modulus must be an odd prime, got {p!r}")
        self.p = p


class NotInvertible(FieldError):
    def __init__(self, value: int, p: int) -> None:
        super().__init__(f"{value} is not invertible modulo {p}")
        self.value = value
        self.p = p


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class UndefinedGcd(FieldError):
    pass


class FieldMismatch(FieldError):
    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(f"Cannot mix values over {left!r} and {right!r}")
        self.left = left
        self.right = right


class RingError(NegacyclicError):
    pass


class OddLengthRequired(RingError):
    def __init__(self, n: int) -> None:
        super().__init__(f"Code length must be odd and positive, got {n!r}")
        self.n = n


class ModulusMismatch(RingError, FieldMismatch):
    pass


class NotDivisibleSetup(RingError):
    pass


class CodeError(NegacyclicError):
    pass


class NotFree(CodeError):
    pass


class NotCoprime(CodeError):
    def __init__(self, p: int, n: int) -> None:
        super().__init__(f"Length {n} is not coprime to {p}")
        self.p = p
        self.n = n


class NoCoprimeForm(CodeError):
    def __init__(self, message: str, *, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness


class ZeroCode(CodeError):
    pass


class OutOfRange(NegacyclicError):
    pass


class NotApplicable(NegacyclicError):
    pass


class GrammarError(NegacyclicError):
    def __init__(self, message: str, *, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class BudgetExceeded(NegacyclicError):
    exit_code = 3

    def __init__(self, what: str, *, needed: int, budget: int) -> None:
        super().__init__(f"{what} needs {needed} steps, budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget


class InvariantViolation(NegacyclicError):
    exit_code = 4

    def __init__(self, message: str, *, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness


class HypothesisUnmet(UserWarning):
    pass


class RankUnproven(UserWarning):
    pass
