"""Experiment configs: JSON schema, semantic validation, model catalog."""

from __future__ import annotations

import json

import jsonschema


class ConfigError(ValueError):
    """Raised for malformed or inconsistent experiment configs."""


ESTIMATOR_KINDS = ("fidelity", "renyi", "gaussian_renyi1", "ising_fidelity", "ising_renyi2k")
REGION_FAMILIES = ("interval", "disk", "halfspace", "rectangle")

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["name", "model", "estimator", "region", "ells", "seeds"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "model": {
            "type": "object",
            "required": ["id"],
            "additionalProperties": False,
            "properties": {
                "id": {"type": "string", "minLength": 1},
                "params": {"type": "object"},
            },
        },
        "estimator": {
            "type": "object",
            "required": ["kind"],
            "additionalProperties": False,
            "properties": {
                "kind": {"enum": list(ESTIMATOR_KINDS)},
                "alpha": {"type": "number", "exclusiveMinimum": 0},
                "k": {"type": "integer", "minimum": 1},
                "operator": {"enum": ["X", "Y", "Z"]},
            },
        },
        "region": {
            "type": "object",
            "required": ["family"],
            "additionalProperties": False,
            "properties": {
                "family": {"enum": list(REGION_FAMILIES)},
                "center": {"type": "integer", "minimum": 0},
                "growth": {"enum": ["symmetric", "left"]},
                "normal": {
                    "type": "array",
                    "items": {"type": "number"},
                    "minItems": 1,
                    "maxItems": 3,
                },
                "height": {"type": "integer", "minimum": 1},
            },
        },
        "ells": {
            "type": "array",
            "items": {"type": "number", "exclusiveMinimum": 0},
            "minItems": 1,
        },
        "seeds": {
            "type": "object",
            "required": ["base", "count"],
            "additionalProperties": False,
            "properties": {
                "base": {"type": "integer", "minimum": 0},
                "count": {"type": "integer", "minimum": 1},
            },
        },
        "fit": {
            "type": "object",
            "required": ["method", "window"],
            "additionalProperties": False,
            "properties": {
                "method": {"enum": ["power_law", "plateau"]},
                "window": {
                    "type": "array",
                    "items": {"type": "number"},
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
        "output": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "csv": {"type": "string"},
                "json": {"type": "string"},
                "svg": {"type": "string"},
            },
        },
    },
}

# id -> (class, allowed region families, required params, one-line description)
MODEL_CATALOG = {
    "fermi_chain_1d": (
        "gaussian",
        ("interval",),
        ("length", "filling"),
        "1d tight-binding chain at a given filling",
    ),
    "square_lattice_2d": (
        "gaussian",
        ("disk", "halfspace", "rectangle"),
        ("lx", "ly", "filling"),
        "2d square-lattice hopping model",
    ),
    "pi_flux_2d": (
        "gaussian",
        ("disk", "halfspace", "rectangle"),
        ("lx", "ly", "filling"),
        "2d hopping with flux pi per plaquette (Dirac cones at half filling)",
    ),
    "anderson_2d": (
        "gaussian",
        ("disk", "halfspace", "rectangle"),
        ("length", "disorder", "filling"),
        "2d square lattice with uniform on-site disorder; one sample per seed",
    ),
    "goe": (
        "gaussian",
        ("interval",),
        ("n", "filling"),
        "random symmetric matrix ensemble; one sample per seed",
    ),
    "gibbs_paramagnet": (
        "dense",
        ("interval",),
        ("n", "beta"),
        "product of single-qubit transverse-field Gibbs states",
    ),
    "sector_paramagnet": (
        "dense",
        ("interval",),
        ("n", "beta"),
        "paramagnet projected onto one parity sector",
    ),
    "infinite_temperature_sector": (
        "dense",
        ("interval",),
        ("n",),
        "flat mixture over one parity sector",
    ),
    "markov_product": (
        "dense",
        ("interval",),
        ("n_a", "n_b", "n_c"),
        "random rho_AB x rho_C product (short Markov length); one draw per seed",
    ),
    "decohered_ising": (
        "ising",
        ("rectangle",),
        ("p",),
        "phase-flipped cluster-like state as an x-basis distribution",
    ),
}

_ESTIMATORS_BY_CLASS = {
    "gaussian": ("gaussian_renyi1",),
    "dense": ("fidelity", "renyi"),
    "ising": ("ising_fidelity", "ising_renyi2k"),
}


def model_class(model_id):
    if model_id not in MODEL_CATALOG:
        raise ConfigError(f"unknown model id {model_id!r}")
    return MODEL_CATALOG[model_id][0]


def allowed_estimators(model_id):
    return _ESTIMATORS_BY_CLASS[model_class(model_id)]


def allowed_regions(model_id):
    return MODEL_CATALOG[model_id][1]


def validate_config(config):
    """Schema check plus the semantic rules the schema cannot express."""
    try:
        jsonschema.validate(config, CONFIG_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ConfigError(f"schema violation: {exc.message}") from exc

    model_id = config["model"]["id"]
    cls = model_class(model_id)
    params = config["model"].get("params", {})
    missing = [k for k in MODEL_CATALOG[model_id][2] if k not in params]
    if missing:
        raise ConfigError(f"model {model_id!r} missing params: {missing}")

    est = config["estimator"]
    if est["kind"] not in _ESTIMATORS_BY_CLASS[cls]:
        raise ConfigError(
            f"estimator {est['kind']!r} incompatible with {cls} model {model_id!r}"
        )
    if est["kind"] == "renyi" and "alpha" not in est:
        raise ConfigError("renyi estimator requires alpha")
    if est["kind"] == "ising_renyi2k" and "k" not in est:
        raise ConfigError("ising_renyi2k estimator requires k")

    family = config["region"]["family"]
    if family not in MODEL_CATALOG[model_id][1]:
        raise ConfigError(
            f"region family {family!r} incompatible with model {model_id!r}"
        )

    ells = config["ells"]
    if any(b <= a for a, b in zip(ells, ells[1:])):
        raise ConfigError("ells must be strictly increasing")

    if "fit" in config:
        lo, hi = config["fit"]["window"]
        if not lo < hi:
            raise ConfigError("fit window must satisfy a < b")
    return config


def load_config(path):
    """Read and validate a JSON experiment config."""
    try:
        with open(path, encoding="utf-8") as fh:
            config = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return validate_config(config)
