from typing import Any, Optional

import jsonschema

from qseries.typing import GenericJSONDict


NULLABLE_STRING = {
    "type": ["string", "null"]
}

RECORD = {
    "type": "object",
    "properties": {
        "identity": {
            "type": "string"
        },
        "sample_index": {
            "type": "integer",
            "minimum": 0
        },
        "params": {
            "type": "object",
            "additionalProperties": {
                "type": "string"
            }
        },
        "lhs": NULLABLE_STRING,
        "rhs": NULLABLE_STRING,
        "abs_err": NULLABLE_STRING,
        "rel_err": NULLABLE_STRING,
        "radius": NULLABLE_STRING,
        "precision_bits": {
            "type": ["integer", "null"],
            "minimum": 1
        },
        "terms_used": {
            "type": "integer",
            "minimum": 0
        },
        "status": {
            "enum": ["pass", "fail", "inconclusive", "rejected"]
        },
        "reason": NULLABLE_STRING
    },
    "additionalProperties": False,
    "required": [
        "identity", "sample_index", "params", "lhs", "rhs", "abs_err", "rel_err", "radius", "precision_bits",
        "terms_used", "status"
    ]
}

SUMMARY = {
    "type": "object",
    "properties": {
        "count": {
            "type": "integer",
            "minimum": 0
        },
        "passed": {
            "type": "integer",
            "minimum": 0
        },
        "failed": {
            "type": "integer",
            "minimum": 0
        },
        "inconclusive": {
            "type": "integer",
            "minimum": 0
        },
        "rejected": {
            "type": "integer",
            "minimum": 0
        },
        "max_abs_err": NULLABLE_STRING,
        "max_rel_err": NULLABLE_STRING
    },
    "additionalProperties": False,
    "required": ["count", "passed", "failed", "inconclusive", "rejected"]
}

REPORT = {
    "type": "object",
    "properties": {
        "identity": {
            "type": "string"
        },
        "tol_rel": {
            "type": "string"
        },
        "summary": SUMMARY,
        "records": {
            "type": "array",
            "items": RECORD
        }
    },
    "additionalProperties": False,
    "required": ["identity", "summary", "records"]
}


def validate(json: Any, schema: GenericJSONDict) -> Optional[str]:
    """Returns `None` for a valid document, otherwise a short description of the first violation."""

    try:
        jsonschema.Draft4Validator(schema=schema).validate(json)
        return None
    except jsonschema.ValidationError as e:
        path = '/'.join(str(p) for p in e.absolute_path)
        return f'{path}: {e.message}' if path else e.message
