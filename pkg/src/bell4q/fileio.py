"""File formats: JSON specs for states/expressions/settings, CSV emitters.

JSON is the structured-text format; complex amplitudes are serialized as
[re, im] pairs so no locale or formatting ambiguity can creep in.  Floats
survive a JSON round trip exactly (shortest-repr encoding), which makes
spec round trips lossless.

CSV output uses '.' decimals and 17 significant digits, so parsing a
number back returns the identical double.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import numpy as np

from .bell import (
    SLOT_NAMES,
    BellExpression,
    MeasurementSettings,
    generic_family_value,
    quantum_value,
    reference_expression,
    reference_settings,
)
from .quantum import ATOL_EXACT, DIM, ConsistencyError, StateVector
from .states import NAMED_STATE_TAGS, GabcdParams, g_abcd, named_state
from .tangle import bell_value_from_tangle, genuine_four_tangle


class SpecFormatError(ValueError):
    """A spec document does not match its schema; message names the field."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SpecFormatError(message)


def _as_real(value, where: str) -> float:
    _require(isinstance(value, (int, float)) and not isinstance(value, bool),
             f"{where}: expected a number, got {value!r}")
    return float(value)


# ---------------------------------------------------------------- states

@dataclass(frozen=True)
class ResolvedState:
    """A state plus whatever structure the spec carried."""

    state: StateVector
    params: GabcdParams | None = None
    tag: str | None = None


def parse_state_spec(obj) -> ResolvedState:
    """Resolve a state spec: kind "named" (tag), "gabcd" (a,b,c,d) or "raw".

    Raw amplitudes are accepted unnormalized: they are rescaled, with a
    warning when the norm is off by more than 1e-6.  Amplitudes already
    normalized within 1e-12 are taken bit-for-bit (lossless round trip).
    """
    _require(isinstance(obj, dict), f"state spec must be an object, got {type(obj).__name__}")
    kind = obj.get("kind")
    if kind == "named":
        tag = obj.get("tag")
        _require(isinstance(tag, str) and tag in NAMED_STATE_TAGS,
                 f"state spec: unknown tag {tag!r}; expected one of {list(NAMED_STATE_TAGS)}")
        return ResolvedState(named_state(tag), tag=tag)
    if kind == "gabcd":
        values = [_as_real(obj.get(name), f"state spec: field {name!r}") for name in "abcd"]
        params = GabcdParams(*values)
        return ResolvedState(g_abcd(params), params=params)
    if kind == "raw":
        pairs = obj.get("amplitudes")
        _require(isinstance(pairs, list) and len(pairs) == DIM,
                 f"state spec: 'amplitudes' must be a list of {DIM} [re, im] pairs")
        amps = np.empty(DIM, dtype=complex)
        for i, pair in enumerate(pairs):
            _require(isinstance(pair, list) and len(pair) == 2,
                     f"state spec: amplitude {i} must be a [re, im] pair, got {pair!r}")
            amps[i] = complex(_as_real(pair[0], f"amplitude {i} re"),
                              _as_real(pair[1], f"amplitude {i} im"))
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) <= ATOL_EXACT:
            return ResolvedState(StateVector(amps))
        if abs(norm - 1.0) > 1e-6:
            warnings.warn(f"raw state norm {norm!r} deviates from 1; normalizing", stacklevel=2)
        return ResolvedState(StateVector.normalized(amps))
    raise SpecFormatError(f"state spec: unknown kind {kind!r}; expected named/gabcd/raw")


def state_to_spec(state: StateVector) -> dict:
    """Raw-amplitude spec; parse_state_spec returns the identical state."""
    return {"kind": "raw", "amplitudes": [[float(a.real), float(a.imag)] for a in state.amps]}


def params_to_spec(params: GabcdParams) -> dict:
    return {"kind": "gabcd", "a": params.a, "b": params.b, "c": params.c, "d": params.d}


# ----------------------------------------------------------- expressions

def parse_expression_spec(obj) -> BellExpression:
    """Expression spec: a list of {"coeff": real, "settings": [sA, sB, sC, sD]}."""
    _require(isinstance(obj, list) and len(obj) > 0,
             "expression spec must be a non-empty list of terms")
    terms = []
    for i, term in enumerate(obj):
        _require(isinstance(term, dict), f"term {i}: expected an object, got {term!r}")
        coeff = _as_real(term.get("coeff"), f"term {i}: field 'coeff'")
        choices = term.get("settings")
        _require(isinstance(choices, list) and len(choices) == 4,
                 f"term {i}: 'settings' must be a list of 4 entries")
        for j, c in enumerate(choices):
            _require(c in (1, 2), f"term {i}: settings[{j}] must be 1 or 2, got {c!r}")
        terms.append((coeff, tuple(choices)))
    try:
        return BellExpression(terms)
    except ValueError as exc:
        raise SpecFormatError(f"expression spec: {exc}") from exc


def expression_to_spec(expr: BellExpression) -> list:
    return [{"coeff": c, "settings": list(ch)} for c, ch in expr.terms]


# -------------------------------------------------------------- settings

def parse_settings_spec(obj) -> MeasurementSettings:
    """Settings spec: an object mapping each of a1..d2 to an [x, y, z] triple."""
    _require(isinstance(obj, dict), f"settings spec must be an object, got {type(obj).__name__}")
    unknown = set(obj) - set(SLOT_NAMES)
    _require(not unknown, f"settings spec: unknown keys {sorted(unknown)}")
    rows = []
    for name in SLOT_NAMES:
        triple = obj.get(name)
        _require(isinstance(triple, list) and len(triple) == 3,
                 f"settings spec: field {name!r} must be an [x, y, z] triple")
        rows.append([_as_real(c, f"settings {name}[{i}]") for i, c in enumerate(triple)])
    return MeasurementSettings.from_array(np.array(rows))


def settings_to_spec(settings: MeasurementSettings) -> dict:
    arr = settings.as_array()
    return {name: [float(c) for c in arr[i]] for i, name in enumerate(SLOT_NAMES)}


# ------------------------------------------------------------ file layer

def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise SpecFormatError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _rethrow_with_path(path: str, exc: SpecFormatError):
    raise SpecFormatError(f"{path}: {exc}") from exc


def load_state_file(path: str) -> ResolvedState:
    try:
        return parse_state_spec(_load_json(path))
    except SpecFormatError as exc:
        if str(exc).startswith(f"{path}:"):
            raise
        _rethrow_with_path(path, exc)


def load_expression_file(path: str) -> BellExpression:
    try:
        return parse_expression_spec(_load_json(path))
    except SpecFormatError as exc:
        if str(exc).startswith(f"{path}:"):
            raise
        _rethrow_with_path(path, exc)


def load_settings_file(path: str) -> MeasurementSettings:
    try:
        return parse_settings_spec(_load_json(path))
    except SpecFormatError as exc:
        if str(exc).startswith(f"{path}:"):
            raise
        _rethrow_with_path(path, exc)


def save_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(obj, handle, indent=2)
        handle.write("\n")


# ---------------------------------------------------------- CSV emitters

def _scan_row_value(a: float, b: float, expr, settings) -> float:
    d_sq = 1.0 - a * a - b * b
    if d_sq < -ATOL_EXACT:
        raise ValueError(f"(a, b) = ({a}, {b}) lies outside the unit disk")
    params = GabcdParams(a, b, 0.0, float(np.sqrt(max(0.0, d_sq))))
    numeric = quantum_value(g_abcd(params), expr, settings)
    closed = generic_family_value(params)
    if abs(numeric - closed) >= ATOL_EXACT:
        raise ConsistencyError(
            f"scan row (a={a}, b={b}): numeric {numeric!r} vs closed form {closed!r}"
        )
    return numeric


def scan_row_value(a: float, b: float) -> float:
    """Numeric reference-expression value at the family point (a, b, 0, d).

    d completes normalization; the closed form 2(a+b)^2 is checked against
    the numeric value per call.
    """
    return _scan_row_value(a, b, reference_expression(), reference_settings())


def write_family_scan(stream, n: int) -> int:
    """CSV a,b,value on the n-by-n grid over [-1, 1]^2, disk rows only.

    Returns the number of data rows written.  Deterministic byte-for-byte
    for a given n.
    """
    if n < 2:
        raise ValueError(f"grid resolution must be >= 2, got {n}")
    stream.write("a,b,value\n")
    expr = reference_expression()
    settings = reference_settings()
    axis = np.linspace(-1.0, 1.0, n)
    rows = 0
    for a in axis:
        for b in axis:
            if a * a + b * b > 1.0 + ATOL_EXACT:
                continue
            value = _scan_row_value(float(a), float(b), expr, settings)
            stream.write(f"{_fmt(a)},{_fmt(b)},{_fmt(value)}\n")
            rows += 1
    return rows


def write_tangle_curve(stream, n: int) -> int:
    """CSV tau,value for a_k = k/(n+1), b = sqrt(1-a^2), k = 1..n.

    value is 2(1+sqrt(tau)) by construction and is cross-checked against
    the numeric quantum value within 1e-12 per row.
    """
    if n < 2:
        raise ValueError(f"sample count must be >= 2, got {n}")
    stream.write("tau,value\n")
    expr = reference_expression()
    settings = reference_settings()
    for k in range(1, n + 1):
        a = k / (n + 1)
        b = float(np.sqrt(1.0 - a * a))
        params = GabcdParams(a, b, 0.0, 0.0)
        tau = genuine_four_tangle(params)
        value = bell_value_from_tangle(tau)
        numeric = quantum_value(g_abcd(params), expr, settings)
        if abs(value - numeric) >= ATOL_EXACT:
            raise ConsistencyError(
                f"curve row a={a}: 2(1+sqrt(tau)) = {value!r} vs numeric {numeric!r}"
            )
        stream.write(f"{_fmt(tau)},{_fmt(value)}\n")
    return n
