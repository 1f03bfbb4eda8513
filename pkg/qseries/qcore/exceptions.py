from typing import Any, Optional

from qseries.typing import GenericJSONDict


class QSeriesException(Exception):
    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'error'
        }


class EvaluationError(QSeriesException):
    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'evaluation-error'
        }


class PoleError(EvaluationError):
    def __init__(self, param: Any, index: Optional[int] = None) -> None:
        self.param: str = str(param)
        self.index: Optional[int] = index

        if index is None:
            super().__init__(f'Vanishing denominator factor for parameter {self.param}')
        else:
            super().__init__(f'Vanishing denominator factor for parameter {self.param} at index {index}')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'pole',
            'param': self.param,
            'index': self.index
        }


class PrecisionError(EvaluationError):
    def __init__(self, what: str, precision: int) -> None:
        self.what: str = what
        self.precision: int = precision

        super().__init__(f'Cannot certify {what} at {precision} bits')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'precision',
            'what': self.what,
            'precision': self.precision
        }


class DomainError(EvaluationError):
    def __init__(self, what: str) -> None:
        self.what: str = what

        super().__init__(f'Outside of domain: {what}')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'domain',
            'what': self.what
        }


class DivergenceError(EvaluationError):
    def __init__(self, side: str, ratio: Any) -> None:
        self.side: str = side
        self.ratio: str = str(ratio)

        super().__init__(f'Series diverges on the {side} side (ratio {self.ratio})')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'divergence',
            'side': self.side,
            'ratio': self.ratio
        }


class BudgetError(EvaluationError):
    def __init__(self, max_terms: int) -> None:
        self.max_terms: int = max_terms

        super().__init__(f'Tolerance not reached within {max_terms} terms')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'budget',
            'max_terms': self.max_terms
        }
