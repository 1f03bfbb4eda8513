from qseries.qcore.exceptions import EvaluationError, QSeriesException
from qseries.typing import GenericJSONDict


class IdentityException(QSeriesException):
    pass


class FormulaError(IdentityException):
    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'formula-error'
        }


class UnexpectedCharacter(FormulaError):
    def __init__(self, c: str, pos: int) -> None:
        self.c: str = c
        self.pos: int = pos

        super().__init__(f'Unexpected character "{c}" at position {pos}')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'unexpected-character',
            'token': self.c,
            'pos': self.pos
        }


class UnbalancedParentheses(FormulaError):
    def __init__(self, pos: int) -> None:
        self.pos: int = pos

        super().__init__('Unbalanced parentheses')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'unbalanced-parentheses',
            'pos': self.pos
        }


class UnknownSymbol(FormulaError):
    def __init__(self, name: str, pos: int) -> None:
        self.name: str = name
        self.pos: int = pos

        super().__init__(f'Unknown symbol "{name}"')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'unknown-symbol',
            'token': self.name,
            'pos': self.pos
        }


class EmptyFormula(FormulaError):
    def __init__(self) -> None:
        super().__init__('Empty formula')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'empty'
        }


class UnknownIdentity(IdentityException):
    def __init__(self, identity_id: str) -> None:
        self.identity_id: str = identity_id

        super().__init__(f'Unknown identity "{identity_id}"')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'unknown-identity',
            'identity': self.identity_id
        }


class TermEvaluationError(EvaluationError):
    def __init__(self, side: str, index: int, cause: EvaluationError) -> None:
        self.side: str = side
        self.index: int = index
        self.cause: EvaluationError = cause

        super().__init__(f'{side} term {index}: {cause}')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': self.cause.to_json().get('reason', 'evaluation-error'),
            'side': self.side,
            'index': self.index,
            'cause': self.cause.to_json()
        }
