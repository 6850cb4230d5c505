"""Published JSON schemas for every CLI subcommand's stdout payload."""

_META = {"type": "object"}

_SIG = {"type": "array", "items": {"type": "integer"}}

_SCALAR = {"type": "string"}

_L1VECTOR = {
    "type": "object",
    "required": ["level", "entries"],
    "additionalProperties": False,
    "properties": {
        "level": {"type": "integer", "minimum": 0},
        "entries": {
            "type": "array",
            "items": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "prefixItems": [_SIG, _SCALAR],
            },
        },
    },
}

_SYSTEM = {
    "type": "object",
    "required": ["graph", "levels"],
    "properties": {
        "graph": {"enum": ["gtq", "gt", "young"]},
        "beta": {"enum": [-1, 1]},
        "q": {"type": ["string", "null"]},
        "levels": {"type": "array", "items": _L1VECTOR},
    },
    "additionalProperties": False,
}

_ZHAT_TERM = {
    "type": "object",
    "required": ["level", "sig", "coef"],
    "additionalProperties": False,
    "properties": {
        "level": {"type": "integer", "minimum": 0},
        "sig": _SIG,
        "coef": _SCALAR,
    },
}

SCHEMAS = {
    "qdim": {
        "type": "object",
        "required": ["qdim", "meta"],
        "additionalProperties": False,
        "properties": {"qdim": _SCALAR, "meta": _META},
    },
    "dim": {
        "type": "object",
        "required": ["dim", "meta"],
        "additionalProperties": False,
        "properties": {"dim": {"type": "integer", "minimum": 1}, "meta": _META},
    },
    "lr-splice": {
        "type": "object",
        "required": ["coefficient", "meta"],
        "additionalProperties": False,
        "properties": {"coefficient": {"type": "integer", "minimum": 0}, "meta": _META},
    },
    "lr-tensor": {
        "type": "object",
        "required": ["coefficient", "meta"],
        "additionalProperties": False,
        "properties": {"coefficient": {"type": "integer", "minimum": 0}, "meta": _META},
    },
    "cartan-moment": {
        "type": "object",
        "required": ["moment", "meta"],
        "additionalProperties": False,
        "properties": {"moment": _SCALAR, "meta": _META},
    },
    "link": {
        "type": "object",
        "required": ["kappa", "meta"],
        "additionalProperties": False,
        "properties": {"kappa": _SCALAR, "meta": _META},
    },
    "stochastic-check": {
        "type": "object",
        "required": ["status", "rows", "failures", "meta"],
        "additionalProperties": False,
        "properties": {
            "status": {"enum": ["pass", "fail"]},
            "rows": {"type": "integer", "minimum": 0},
            "failures": {"type": "array"},
            "meta": _META,
        },
    },
    "ring-mul": {
        "type": "object",
        "required": ["product", "meta"],
        "additionalProperties": False,
        "properties": {"product": {"type": "array", "items": _ZHAT_TERM}, "meta": _META},
    },
    "harmonic-check": {
        "type": "object",
        "required": ["status", "meta"],
        "additionalProperties": False,
        "properties": {
            "status": {"enum": ["pass", "fail"]},
            "witness": {"type": "object"},
            "meta": _META,
        },
    },
    "pushdown": {
        "type": "object",
        "required": ["system", "meta"],
        "additionalProperties": False,
        "properties": {"system": _SYSTEM, "meta": _META},
    },
    "char-product": {
        "type": "object",
        "required": ["vector", "meta"],
        "additionalProperties": False,
        "properties": {"vector": _L1VECTOR, "meta": _META},
    },
    "charfun": {
        "type": "object",
        "required": ["value", "exact", "level", "meta"],
        "additionalProperties": False,
        "properties": {
            "value": {"type": "string"},
            "exact": {"type": "boolean"},
            "level": {"type": "integer", "minimum": 0},
            "meta": _META,
        },
    },
    "coherence-check": {
        "type": "object",
        "required": ["status", "defect", "lhs", "rhs", "meta"],
        "additionalProperties": False,
        "properties": {
            "status": {"enum": ["pass", "fail"]},
            "defect": {"type": "number"},
            "lhs": {"type": "string"},
            "rhs": {"type": "string"},
            "meta": _META,
        },
    },
    "sample": {
        "type": "object",
        "required": ["count", "histograms", "meta"],
        "additionalProperties": False,
        "properties": {
            "count": {"type": "integer", "minimum": 1},
            "histograms": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["level", "counts"],
                    "additionalProperties": False,
                    "properties": {
                        "level": {"type": "integer", "minimum": 0},
                        "counts": {
                            "type": "array",
                            "items": {
                                "type": "array",
                                "minItems": 2,
                                "maxItems": 2,
                                "prefixItems": [_SIG, {"type": "integer"}],
                            },
                        },
                    },
                },
            },
            "meta": _META,
        },
    },
    "export-dot": {
        "type": "object",
        "required": ["dot", "meta"],
        "additionalProperties": False,
        "properties": {"dot": {"type": "string"}, "meta": _META},
    },
    "verify-all": {
        "type": "object",
        "required": ["status", "checks", "meta"],
        "additionalProperties": False,
        "properties": {
            "status": {"enum": ["pass", "fail"]},
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "ok", "detail"],
                    "additionalProperties": False,
                    "properties": {
                        "name": {"type": "string"},
                        "ok": {"type": "boolean"},
                        "detail": {"type": "string"},
                    },
                },
            },
            "meta": _META,
        },
    },
}
