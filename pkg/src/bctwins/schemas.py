"""JSON schemas for every CLI input and report payload.

Rationals travel as exact strings ("-1", "7/3") or JSON integers, never
floats.  The same schema objects are written to /schemas in the repository;
a test keeps the two in sync.
"""

from __future__ import annotations

RATIONAL = {
    "oneOf": [
        {"type": "string", "pattern": r"^-?\d+(/[1-9]\d*)?$"},
        {"type": "integer"},
    ]
}

FORM = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "bctwins/form.schema.json",
    "title": "Diagonal quadratic form",
    "type": "array",
    "items": RATIONAL,
    "minItems": 1,
}

GROUP = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "bctwins/group.schema.json",
    "title": "Type B or C group over Q",
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "type": {"const": "B"},
                "q": {"type": "array", "items": RATIONAL, "minItems": 5},
                "isogeny": {"enum": ["adjoint", "adj", "sc", "simply_connected"]},
            },
            "required": ["type", "q"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "C"},
                "a": RATIONAL,
                "b": RATIONAL,
                "h": {"type": "array", "items": RATIONAL, "minItems": 2},
                "isogeny": {"enum": ["adjoint", "adj", "sc", "simply_connected"]},
            },
            "required": ["type", "a", "b", "h"],
            "additionalProperties": False,
        },
    ],
}

ABSTRACT_DATA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "bctwins/abstract.schema.json",
    "title": "Abstract per-place local data for the twin test",
    "type": "object",
    "properties": {
        "type": {"const": "abstract"},
        "rank": {"type": "integer", "minimum": 2},
        "places": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "kind": {"enum": ["real", "finite"]},
                    "b_witt": {"type": "integer", "minimum": 0},
                    "b_signature": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 0},
                        "minItems": 2, "maxItems": 2,
                    },
                    "c_ramified": {"type": "boolean"},
                    "c_signature": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 0},
                        "minItems": 2, "maxItems": 2,
                    },
                    "b_hasse": {"enum": [1, -1]},
                },
                "required": ["name", "kind"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["type", "rank", "places"],
    "additionalProperties": False,
}

ALGEBRA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "bctwins/algebra.schema.json",
    "title": "Etale algebra with involution in normal form",
    "type": "object",
    "properties": {
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "min_poly": {"type": "array", "items": RATIONAL, "minItems": 2},
                    "d": {"type": "array", "items": RATIONAL, "minItems": 1},
                },
                "required": ["min_poly", "d"],
                "additionalProperties": False,
            },
        },
        "fixed": {"enum": [0, 1]},
        "assert_irreducible": {"type": "boolean"},
    },
    "required": ["factors", "fixed"],
    "additionalProperties": False,
}

TARGET = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "bctwins/target.schema.json",
    "title": "Involution target for embedding",
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "kind": {"const": "symplectic"},
                "n": {"type": "integer", "minimum": 2},
            },
            "required": ["kind", "n"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "kind": {"const": "orthogonal"},
                "f": {"type": "array", "items": RATIONAL, "minItems": 1},
            },
            "required": ["kind", "f"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "kind": {"const": "unitary"},
                "m": RATIONAL,
                "h": {"type": "array", "items": RATIONAL, "minItems": 1},
            },
            "required": ["kind", "m", "h"],
            "additionalProperties": False,
        },
    ],
}

MATRIX = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "bctwins/matrix.schema.json",
    "title": "Square integer matrix",
    "type": "object",
    "properties": {
        "matrix": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "oneOf": [{"type": "string", "pattern": r"^-?\d+$"},
                              {"type": "integer"}],
                },
                "minItems": 1,
            },
            "minItems": 1,
        },
    },
    "required": ["matrix"],
    "additionalProperties": False,
}

_LOCAL_STATUS = {
    "type": "object",
    "properties": {
        "place": {"type": "string"},
        "rank1": {"type": "integer"},
        "rank2": {"type": "integer"},
        "status": {
            "type": "array",
            "items": {"enum": ["split", "anisotropic", "intermediate"]},
            "minItems": 2, "maxItems": 2,
        },
    },
    "required": ["place", "rank1", "rank2", "status"],
    "additionalProperties": False,
}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "bctwins/report.schema.json",
    "title": "CLI report envelope",
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "seed": {"type": "integer"},

        "dim": {"type": "integer"},
        "det": {"type": "string"},
        "signature": {"type": "array", "items": {"type": "integer"}},
        "hasse": {"type": "object",
                  "additionalProperties": {"enum": [1, -1]}},

        "place": {"type": "string"},
        "witt_index": {"type": "integer"},
        "anisotropic_dim": {"type": "integer"},

        "twin": {"type": "boolean"},
        "weakly_commensurable": {"type": "boolean"},
        "certificate": {"type": "array", "items": _LOCAL_STATUS},
        "first_failure": _LOCAL_STATUS,

        "form": {"type": "string"},
        "tori": {"type": "array",
                 "items": {"type": "array",
                           "items": {"type": "integer", "minimum": 0},
                           "minItems": 3, "maxItems": 3}},
        "forms": {"type": "array", "items": {"type": "string"}},
        "same_tori": {"type": "boolean"},
        "classes": {"type": "array",
                    "items": {"type": "array", "items": {"type": "string"}}},
        "rank": {"type": "integer"},

        "same_isomorphism_tori": {"type": "boolean"},
        "similar": {"type": "boolean"},
        "scalar": {"type": ["string", "null"]},
        "places": {"type": "array"},
        "local_dichotomy": {"type": "boolean"},

        "radicand": {"type": "string"},
        "lambda_decimal": {"type": "string"},

        "alpha": {"type": "integer"},
        "beta": {"type": "integer"},
        "gamma": {"type": "integer"},

        "outcome": {"enum": ["embeds", "does_not_embed", "not_applicable"]},
        "reason": {"type": "string"},
        "failing_place": {"type": "string"},
        "embedding": {"type": "object"},

        "figure": {"type": "string"},
    },
    "required": ["command"],
    "additionalProperties": False,
}

SCHEMAS = {
    "form": FORM,
    "group": GROUP,
    "abstract": ABSTRACT_DATA,
    "algebra": ALGEBRA,
    "target": TARGET,
    "matrix": MATRIX,
    "report": REPORT,
}


def validate(payload, schema_name: str) -> None:
    """Validate a payload, raising jsonschema.ValidationError with the field
    path on failure."""
    import jsonschema

    jsonschema.validate(payload, SCHEMAS[schema_name])
