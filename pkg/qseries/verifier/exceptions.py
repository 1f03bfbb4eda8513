from qseries.qcore.exceptions import QSeriesException
from qseries.typing import GenericJSONDict


class VerifierException(QSeriesException):
    pass


class InvalidSampleSpec(VerifierException):
    def __init__(self, field: str, value: str) -> None:
        self.field: str = field
        self.value: str = value

        super().__init__(f'Invalid sampling {field}: {value}')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'invalid-sample-spec',
            'field': self.field,
            'value': self.value
        }


class ExhaustionError(VerifierException):
    def __init__(self, identity: str, diagnostic: str) -> None:
        self.identity: str = identity
        self.diagnostic: str = diagnostic

        super().__init__(f'Not enough admissible samples for {identity}; mostly rejected by: {diagnostic}')

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'exhausted',
            'identity': self.identity,
            'diagnostic': self.diagnostic
        }
