"""Job-file parsing for the command-line front end.

A job is a single INI-style text file with nested key-value sections.
Matrices are written row by row as whitespace-separated (re, im) pairs;
coupling vectors the same way, one vector per key.

    [job]
    command = evolve
    n = 2
    seed = 7

    [model]
    kind = explicit            ; explicit | physical | hatano-nelson

    [model.a]
    row1 = -0.5 0.0   0.1 0.0
    row2 =  0.1 0.0  -0.7 0.0

    [model.m]
    row1 = 0.2 0.0   0.0 0.0
    row2 = 0.0 0.0   0.1 0.0

    [initial]
    state = vacuum             ; vacuum | matrix (with [initial.r])

    [times]
    values = 0.0 0.5 1.0

    [output]
    path = out.csv

A `physical` model uses [model.h] plus optional [model.loss] / [model.gain]
vector sections; a `hatano-nelson` model uses scalar keys in
[model.hatano-nelson].  [tolerances] holds per-check overrides for verify.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .gaussian import (GaussianState, LiouvillianParams, PhysicalModel,
                       params_from_model)
from .skin import HatanoNelsonParams

__all__ = ["JobConfig", "load_config", "parse_config_text"]

_MODEL_KINDS = ("explicit", "physical", "hatano-nelson")


@dataclass
class JobConfig:
    command: str | None = None
    model_kind: str | None = None
    params: LiouvillianParams | None = None
    hatano_nelson: HatanoNelsonParams | None = None
    delta: float = 1.0 / 3.0
    initial: GaussianState | None = None
    times: list[float] = field(default_factory=list)
    output: str | None = None
    tolerances: dict = field(default_factory=dict)
    n: int | None = None
    seed: int = 7
    draws: int = 20


def _floats(text: str, where: str) -> list[float]:
    out = []
    for token in text.replace(",", " ").split():
        try:
            out.append(float(token))
        except ValueError:
            raise ValidationError(f"{where}: cannot parse {token!r} as a number")
    return out


def _parse_matrix(cp, section: str) -> np.ndarray:
    if not cp.has_section(section):
        raise ValidationError(f"missing matrix section [{section}]")
    rows = []
    for idx, key in enumerate(cp[section], start=1):
        expected = f"row{idx}"
        if key != expected:
            raise ValidationError(
                f"[{section}]: expected key {expected!r}, found {key!r}"
            )
        values = _floats(cp[section][key], f"[{section}] {key}")
        if len(values) % 2 != 0:
            raise ValidationError(
                f"[{section}] {key}: entries come as (re, im) pairs, "
                f"got {len(values)} numbers"
            )
        rows.append([complex(values[i], values[i + 1])
                     for i in range(0, len(values), 2)])
    if not rows:
        raise ValidationError(f"[{section}] is empty")
    width = len(rows[0])
    for idx, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ValidationError(
                f"[{section}] row{idx}: expected {width} entries, got {len(row)}"
            )
    if len(rows) != width:
        raise ValidationError(
            f"[{section}]: matrix must be square, got {len(rows)} x {width}"
        )
    return np.array(rows, dtype=complex)


def _parse_vectors(cp, section: str) -> list[np.ndarray]:
    if not cp.has_section(section):
        return []
    vectors = []
    for key in cp[section]:
        values = _floats(cp[section][key], f"[{section}] {key}")
        if len(values) % 2 != 0:
            raise ValidationError(
                f"[{section}] {key}: entries come as (re, im) pairs"
            )
        vectors.append(np.array(
            [complex(values[i], values[i + 1]) for i in range(0, len(values), 2)]
        ))
    return vectors


def _get_float(cp, section: str, key: str, default=None) -> float | None:
    if not cp.has_option(section, key) or not cp[section][key].strip():
        return default
    try:
        return float(cp[section][key])
    except ValueError:
        raise ValidationError(f"[{section}] {key}: not a number")


def _get_int(cp, section: str, key: str, default=None) -> int | None:
    if not cp.has_option(section, key) or not cp[section][key].strip():
        return default
    try:
        return int(cp[section][key])
    except ValueError:
        raise ValidationError(f"[{section}] {key}: not an integer")


def parse_config_text(text: str) -> JobConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    cp.optionxform = str.lower
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ValidationError(f"config parse error: {exc}") from exc

    cfg = JobConfig()
    if cp.has_section("job"):
        cfg.command = cp["job"].get("command", "").strip().lower() or None
        cfg.n = _get_int(cp, "job", "n")
        cfg.seed = _get_int(cp, "job", "seed", 7)
        cfg.draws = _get_int(cp, "job", "draws", 20)

    kind = None
    if cp.has_section("model"):
        kind = cp["model"].get("kind", "").strip().lower() or None
        if kind not in _MODEL_KINDS:
            raise ValidationError(
                f"[model] kind must be one of {_MODEL_KINDS}, got {kind!r}"
            )
    cfg.model_kind = kind

    model_sections = {
        "explicit": {"model.a", "model.m"},
        "physical": {"model.h", "model.loss", "model.gain"},
        "hatano-nelson": {"model.hatano-nelson"},
    }
    present = {s for s in cp.sections() if s.startswith("model.")}
    if kind is not None:
        stray = present - model_sections[kind]
        if stray:
            raise ValidationError(
                f"sections {sorted(stray)} do not belong to model kind {kind!r}; "
                "exactly one model source may be present"
            )

    if kind == "explicit":
        a = _parse_matrix(cp, "model.a")
        m = _parse_matrix(cp, "model.m")
        cfg.params = LiouvillianParams(a, m)
    elif kind == "physical":
        h = _parse_matrix(cp, "model.h")
        model = PhysicalModel(
            h,
            loss_vectors=tuple(_parse_vectors(cp, "model.loss")),
            gain_vectors=tuple(_parse_vectors(cp, "model.gain")),
        )
        cfg.params = params_from_model(model)
    elif kind == "hatano-nelson":
        sec = "model.hatano-nelson"
        n = _get_int(cp, sec, "n")
        if n is None:
            raise ValidationError(f"[{sec}]: chain length n is required")
        cfg.hatano_nelson = HatanoNelsonParams(
            n=n,
            omega=_get_float(cp, sec, "omega", 1.0),
            lam=_get_float(cp, sec, "lambda", 0.3),
            gamma=_get_float(cp, sec, "gamma", 0.5),
            a=_get_float(cp, sec, "a", 2.5),
            x=_get_float(cp, sec, "x"),
        )
        cfg.delta = _get_float(cp, sec, "delta", cfg.delta)

    if cp.has_section("initial"):
        state = cp["initial"].get("state", "vacuum").strip().lower()
        if state == "vacuum":
            cfg.initial = None
        elif state == "matrix":
            cfg.initial = GaussianState(_parse_matrix(cp, "initial.r"))
        else:
            raise ValidationError(
                f"[initial] state must be 'vacuum' or 'matrix', got {state!r}"
            )
    elif cp.has_section("initial.r"):
        cfg.initial = GaussianState(_parse_matrix(cp, "initial.r"))

    if cp.has_section("times"):
        cfg.times = _floats(cp["times"].get("values", ""), "[times] values")
        if any(t < 0 for t in cfg.times):
            raise ValidationError("[times] values must be nonnegative")
        if sorted(cfg.times) != cfg.times:
            raise ValidationError("[times] values must be sorted ascending")

    if cp.has_section("output"):
        cfg.output = cp["output"].get("path", "").strip() or None

    if cp.has_section("tolerances"):
        for key in cp["tolerances"]:
            cfg.tolerances[key] = _get_float(cp, "tolerances", key)

    return cfg


def load_config(path: str) -> JobConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read config {path!r}: {exc}") from exc
    return parse_config_text(text)
