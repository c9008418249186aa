"""Canonical JSON: sorted keys, rationals as exact "p/q" strings."""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from typing import Any

from .algebra import BinaryForm
from .bundle import BundleContext, DivisorClass


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, BinaryForm):
        return {"degree": obj.degree,
                "coefficients": [to_jsonable(c) for c in obj.coefficients],
                "text": str(obj)}
    if isinstance(obj, DivisorClass):
        return {"alpha": to_jsonable(obj.alpha), "beta": to_jsonable(obj.beta)}
    if isinstance(obj, BundleContext):
        return {"g": obj.g, "b": obj.b}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)


def parse_rational(text: str) -> Fraction:
    """Inverse of the "p/q" encoding; plain integers are accepted too."""
    return Fraction(text)
