"""Reading and writing model files (JSON)."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .digit_system import Model, require_valid
from .exceptions import ModelError
from .rational import format_rational, parse_rational

EXAMPLE_MODELS = (
    "binary_uniform",
    "ternary_015_uniform",
    "ternary_015_singular",
    "ternary_013_uniform",
    "binary_discrete",
)

_KNOWN_FIELDS = {"s", "digit_prefix", "digit_cycle", "prob_prefix", "prob_cycle", "name", "description"}


def _columns(doc: dict, key: str, required: bool) -> list | None:
    if key not in doc:
        if required:
            raise ModelError(f"{key}: missing required field")
        return None
    cols = doc[key]
    if not isinstance(cols, list):
        raise ModelError(f"{key}: expected an array of columns")
    out = []
    for i, col in enumerate(cols):
        if not isinstance(col, list):
            raise ModelError(f"{key}[{i}]: expected an array of rationals")
        row = []
        for j, v in enumerate(col):
            try:
                row.append(parse_rational(v))
            except ValueError as exc:
                raise ModelError(f"{key}[{i}][{j}]: {exc}") from None
        out.append(tuple(row))
    return out


def model_from_dict(doc, check: bool = True) -> Model:
    """Build and validate a model from a parsed JSON document.

    Missing probability columns default to ``1/s`` everywhere; supplying
    only one of ``prob_prefix``/``prob_cycle`` is allowed when the matching
    digit list is empty.
    """
    if not isinstance(doc, dict):
        raise ModelError("model: expected a JSON object")
    unknown = sorted(set(doc) - _KNOWN_FIELDS)
    if unknown:
        raise ModelError(f"{unknown[0]}: unknown field")
    s = doc.get("s")
    if not isinstance(s, int) or isinstance(s, bool) or s < 2:
        raise ModelError(f"s: must be an integer >= 2, got {s!r}")
    dp = _columns(doc, "digit_prefix", False) or []
    dc = _columns(doc, "digit_cycle", True)
    pp = _columns(doc, "prob_prefix", False)
    pc = _columns(doc, "prob_cycle", False)
    uniform = tuple(Fraction(1, s) for _ in range(s))
    if pp is None and pc is None:
        pp = [uniform] * len(dp)
        pc = [uniform] * len(dc)
    else:
        if pp is None:
            if dp:
                raise ModelError("prob_prefix: required when prob_cycle is given and digit_prefix is nonempty")
            pp = []
        if pc is None:
            raise ModelError("prob_cycle: required when prob_prefix is given")
    model = Model(s, dp, dc, pp, pc)
    if check:
        require_valid(model)
    return model


def model_to_dict(model: Model) -> dict:
    def enc(cols):
        return [[format_rational(v) for v in col] for col in cols]

    return {
        "s": model.s,
        "digit_prefix": enc(model.digit_prefix),
        "digit_cycle": enc(model.digit_cycle),
        "prob_prefix": enc(model.prob_prefix),
        "prob_cycle": enc(model.prob_cycle),
    }


def loads_model(text: str, check: bool = True) -> Model:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return model_from_dict(doc, check)


def load_model(path, check: bool = True) -> Model:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelError(f"{path}: {exc.strerror}") from None
    try:
        return loads_model(text, check)
    except ModelError as exc:
        raise ModelError(f"{path}: {exc}", exc.messages) from None


def example_model(name: str) -> Model:
    """One of the models shipped in ``subsums/models``."""
    if name not in EXAMPLE_MODELS:
        raise KeyError(name)
    text = resources.files("subsums.models").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return loads_model(text)
