"""JSON Schemas for every ``--format json`` document and the checkpoint file."""

_NAT = {"type": "integer", "minimum": 0}
_FRACTION = {
    "type": "object",
    "required": ["numerator", "denominator"],
    "properties": {"numerator": {"type": "integer"}, "denominator": {"type": "integer", "minimum": 1}},
    "additionalProperties": False,
}
_CLASS = {"enum": ["Lesser", "On", "Greater"]}

TRACE = {
    "type": "object",
    "required": ["n", "steps", "m", "converged"],
    "properties": {
        "n": _NAT,
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["value", "k"],
                "properties": {"value": _NAT, "k": _NAT},
                "additionalProperties": False,
            },
        },
        "m": _NAT,
        "converged": {"type": "boolean"},
    },
    "additionalProperties": False,
}

COORDS = {
    "type": "object",
    "required": ["n", "i", "j"],
    "properties": {"n": _NAT, "i": {"type": "integer", "minimum": 1}, "j": _NAT},
    "additionalProperties": False,
}

TABLE = {
    "type": "object",
    "required": ["rows", "cols", "table"],
    "properties": {
        "rows": {"type": "integer", "minimum": 1},
        "cols": {"type": "integer", "minimum": 1},
        "table": {"type": "array", "items": {"type": "array", "items": _NAT}},
    },
    "additionalProperties": False,
}

REDUCE = {
    "type": "object",
    "required": ["n0", "sequence", "halt"],
    "properties": {
        "n0": _NAT,
        "sequence": {"type": "array", "items": _NAT},
        "halt": {"enum": ["zero", "cycle", "budget"]},
    },
    "additionalProperties": False,
}

_CLASSIFY_ONE = {
    "type": "object",
    "required": ["J", "i", "j", "D", "class"],
    "properties": {
        "J": {"type": "integer", "minimum": 1},
        "i": {"type": "integer", "minimum": 1},
        "j": _NAT,
        "D": _FRACTION,
        "class": _CLASS,
    },
    "additionalProperties": False,
}

CLASSIFY = {"oneOf": [_CLASSIFY_ONE, {"type": "array", "items": _CLASSIFY_ONE}]}

_APPENDIX_SOLUTION = {
    "type": "object",
    "required": ["a", "b", "c", "well_formed", "unified_agrees"],
    "properties": {
        "a": {"type": "integer", "minimum": 1},
        "b": {"type": "integer", "minimum": 1},
        "c": {"type": "integer", "minimum": 1},
        "well_formed": {"type": "boolean"},
        "unified_agrees": {"type": "boolean"},
    },
    "additionalProperties": False,
}

_UNIFIED_SOLUTION = {
    "type": "object",
    "required": ["i", "k", "j", "J"],
    "properties": {"i": {"type": "integer", "minimum": 1}, "k": _NAT, "j": _NAT, "J": _NAT},
    "additionalProperties": False,
}

_CURSOR = {
    "type": "object",
    "required": ["partition", "offset"],
    "properties": {"partition": {"type": "integer", "minimum": 1}, "offset": _NAT},
    "additionalProperties": False,
}

_BOUNDS = {
    "oneOf": [
        {
            "type": "object",
            "required": ["a_max", "b_max"],
            "properties": {"a_max": {"type": "integer", "minimum": 1}, "b_max": {"type": "integer", "minimum": 1}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["i_max", "k_max"],
            "properties": {"i_max": {"type": "integer", "minimum": 1}, "k_max": {"type": "integer", "minimum": 1}},
            "additionalProperties": False,
        },
    ]
}

_SOLUTIONS = {"type": "array", "items": {"oneOf": [_APPENDIX_SOLUTION, _UNIFIED_SOLUTION]}}

SEARCH_REPORT = {
    "type": "object",
    "required": ["kind", "bounds", "solutions", "cells_total", "scanned", "skipped", "complete", "cursor"],
    "properties": {
        "kind": {"enum": ["appendix", "unified"]},
        "bounds": _BOUNDS,
        "solutions": _SOLUTIONS,
        "cells_total": _NAT,
        "scanned": _NAT,
        "skipped": _NAT,
        "complete": {"type": "boolean"},
        "cursor": {"oneOf": [{"type": "null"}, _CURSOR]},
        "elapsed_seconds": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}

CHECKPOINT = {
    "type": "object",
    "required": ["version", "kind", "bounds", "cursor", "solutions", "scanned"],
    "properties": {
        "version": {"const": 1},
        "kind": {"enum": ["appendix", "unified"]},
        "bounds": _BOUNDS,
        "cursor": _CURSOR,
        "solutions": _SOLUTIONS,
        "scanned": _NAT,
    },
    "additionalProperties": False,
}

VERIFY = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["suite", "name", "passed", "checked", "counterexample"],
        "properties": {
            "suite": {"type": "string"},
            "name": {"type": "string"},
            "passed": {"type": "boolean"},
            "checked": _NAT,
            "counterexample": {"type": ["string", "null"]},
        },
        "additionalProperties": False,
    },
}

BY_COMMAND = {
    "trace": TRACE,
    "coords": COORDS,
    "table": TABLE,
    "reduce": REDUCE,
    "classify": CLASSIFY,
    "search": SEARCH_REPORT,
    "verify": VERIFY,
}
