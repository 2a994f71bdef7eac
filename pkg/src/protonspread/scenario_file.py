"""Strict JSON scenario documents.

Example::

    {
      "channel": {"name": "p -> pi0 e+", "parent_mass_mev": 938.272,
                  "product_masses_mev": [134.9768, 0.511]},
      "lifetime": {"value": 1e31, "unit": "years"},
      "model": {"kind": "localization",
                "params": {"v": {"value": 1, "unit": "c"},
                           "R": {"value": 10, "unit": "cm"}}},
      "campaign_limit": {"value": 10, "unit": "years"},
      "output": {"format": "csv", "path": "report.csv"}
    }

``lifetime`` and ``model`` are required.  ``channel`` defaults to the
built-in p -> pi0 e+.  Unknown keys anywhere are rejected, and every error
names the offending key path.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .bounds import DEFAULT_CAMPAIGN_LIMIT, Scenario
from .channels import P_TO_PI0_EPLUS, DecayChannel
from .errors import ConfigurationError, ProtonSpreadError
from .spread_models import Localization, StepCutoffGUT, SymmetricResonance
from .units import ENERGY, LENGTH, SPEED, TIME, UNITS, PhysQuantity

__all__ = ["OutputSpec", "parse_scenario", "load_scenario"]

TOP_KEYS = {"channel", "lifetime", "model", "campaign_limit", "safety_factor", "output"}
REQUIRED_TOP = ("lifetime", "model")
TIME_UNITS = ("s", "years")
FORMATS = ("csv", "json")

MODEL_PARAMS = {
    "symmetric_resonance": {},
    "step_cutoff_gut": {"M": ENERGY},
    "localization": {"v": SPEED, "R": LENGTH},
}


@dataclass(frozen=True)
class OutputSpec:
    format: Optional[str] = None
    path: Optional[Path] = None


def _obj(node, path, allowed, required=()):
    if not isinstance(node, dict):
        raise ConfigurationError("expected an object", path)
    for key in node:
        if key not in allowed:
            raise ConfigurationError("unknown key", f"{path}.{key}" if path else key)
    for key in required:
        if key not in node:
            raise ConfigurationError("missing required key", f"{path}.{key}" if path else key)
    return node


def _number(node, path, positive=True, allow_zero=False):
    if isinstance(node, bool) or not isinstance(node, (int, float)):
        raise ConfigurationError(f"expected a number, got {node!r}", path)
    x = float(node)
    if not math.isfinite(x):
        raise ConfigurationError("must be finite", path)
    if positive and (x < 0 or (x == 0 and not allow_zero)):
        raise ConfigurationError(f"must be {'non-negative' if allow_zero else 'positive'}, got {node!r}", path)
    return x


def _quantity(node, path, dim, units=None) -> PhysQuantity:
    _obj(node, path, {"value", "unit"}, ("value", "unit"))
    unit = node["unit"]
    ok = units if units is not None else [u for u, (d, _) in UNITS.items() if d == dim]
    if unit not in ok:
        raise ConfigurationError(f"unit must be one of {list(ok)}, got {unit!r}", f"{path}.unit")
    value = _number(node["value"], f"{path}.value")
    return PhysQuantity(value, dim, unit)


def _channel(node) -> DecayChannel:
    _obj(node, "channel", {"name", "parent_mass_mev", "product_masses_mev"},
         ("parent_mass_mev", "product_masses_mev"))
    name = node.get("name", "custom")
    if not isinstance(name, str):
        raise ConfigurationError("expected a string", "channel.name")
    parent = _number(node["parent_mass_mev"], "channel.parent_mass_mev")
    products = node["product_masses_mev"]
    if not isinstance(products, list) or not products:
        raise ConfigurationError("expected a non-empty list", "channel.product_masses_mev")
    masses = [_number(m, f"channel.product_masses_mev[{i}]", allow_zero=True)
              for i, m in enumerate(products)]
    try:
        return DecayChannel.from_mev(name, parent, masses)
    except ProtonSpreadError as exc:
        raise ConfigurationError(str(exc), "channel") from exc


def _model(node, channel):
    _obj(node, "model", {"kind", "params"}, ("kind",))
    kind = node["kind"]
    if kind not in MODEL_PARAMS:
        raise ConfigurationError(f"must be one of {sorted(MODEL_PARAMS)}, got {kind!r}", "model.kind")
    spec = MODEL_PARAMS[kind]
    params = _obj(node.get("params", {}), "model.params", set(spec), tuple(spec))
    q = {k: _quantity(params[k], f"model.params.{k}", dim) for k, dim in spec.items()}
    try:
        if kind == "symmetric_resonance":
            return SymmetricResonance(channel)
        if kind == "step_cutoff_gut":
            return StepCutoffGUT(q["M"], channel)
        return Localization(q["v"], q["R"])
    except ProtonSpreadError as exc:
        raise ConfigurationError(str(exc), "model.params") from exc


def _output(node, base_dir):
    _obj(node, "output", {"format", "path"})
    fmt = node.get("format")
    if fmt is not None and fmt not in FORMATS:
        raise ConfigurationError(f"must be one of {list(FORMATS)}, got {fmt!r}", "output.format")
    path = node.get("path")
    if path is not None:
        if not isinstance(path, str) or not path:
            raise ConfigurationError("expected a non-empty string", "output.path")
        path = Path(path)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
    return OutputSpec(fmt, path)


def parse_scenario(doc: Any, base_dir: Optional[Path] = None) -> tuple[Scenario, OutputSpec]:
    """Validate a decoded scenario document; relative output paths resolve against ``base_dir``."""
    _obj(doc, "", TOP_KEYS, REQUIRED_TOP)
    channel = _channel(doc["channel"]) if "channel" in doc else P_TO_PI0_EPLUS
    lifetime = _quantity(doc["lifetime"], "lifetime", TIME, TIME_UNITS)
    model = _model(doc["model"], channel)
    campaign = (_quantity(doc["campaign_limit"], "campaign_limit", TIME, TIME_UNITS)
                if "campaign_limit" in doc else DEFAULT_CAMPAIGN_LIMIT)
    safety = 1.0
    if "safety_factor" in doc:
        safety = _number(doc["safety_factor"], "safety_factor")
        if safety < 1.0:
            raise ConfigurationError("must be >= 1", "safety_factor")
    output = _output(doc.get("output", {}), base_dir)
    return Scenario(lifetime, model, channel, campaign, safety), output


def load_scenario(path) -> tuple[Scenario, OutputSpec]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot read scenario file: {exc.strerror}", str(path)) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}",
                                 "<document>") from exc
    return parse_scenario(doc, path.parent)
