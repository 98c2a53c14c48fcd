"""Identifier-style transformations (category 1).

Each rule rewrites every identifier whose spelling matches the rule's source
style, consistently at all occurrences. See _rename for the safety rules.
"""

from __future__ import annotations

import re

from ._rename import rename_by

_CAMEL_RE = re.compile(r"^[a-z][a-z0-9]*(?:[A-Z][A-Za-z0-9]*)+$")
_SNAKE_RE = re.compile(r"^[a-z][a-z0-9]*(?:_[a-z0-9]+)+$")
_HUMP1_RE = re.compile(r"(.)([A-Z][a-z]+)")
_HUMP2_RE = re.compile(r"([a-z0-9])([A-Z])")


def _camel_to_snake(name: str) -> str | None:
    if not _CAMEL_RE.match(name):
        return None
    s = _HUMP1_RE.sub(r"\1_\2", name)
    s = _HUMP2_RE.sub(r"\1_\2", s)
    return s.lower()


def _snake_to_camel(name: str) -> str | None:
    if not _SNAKE_RE.match(name):
        return None
    head, *rest = name.split("_")
    return head + "".join(p.capitalize() for p in rest)


def _to_pascal(name: str) -> str | None:
    if not name[0].islower():
        return None
    parts = [p for p in name.split("_") if p]
    if len(parts) > 1:
        return "".join(p[0].upper() + p[1:] for p in parts)
    return name[0].upper() + name[1:]


def _to_upper(name: str) -> str | None:
    up = name.upper()
    return up if up != name else None


def _to_lower(name: str) -> str | None:
    low = name.lower()
    return low if low != name else None


def _add_suffix(name: str) -> str | None:
    if name.endswith("Val"):
        return None
    return name + "Val"


def camel_to_snake(text: str, language: str) -> str:
    return rename_by(text, language, _camel_to_snake)


def snake_to_camel(text: str, language: str) -> str:
    return rename_by(text, language, _snake_to_camel)


def to_pascal(text: str, language: str) -> str:
    return rename_by(text, language, _to_pascal)


def to_upper(text: str, language: str) -> str:
    return rename_by(text, language, _to_upper)


def to_lower(text: str, language: str) -> str:
    return rename_by(text, language, _to_lower)


def add_suffix(text: str, language: str) -> str:
    return rename_by(text, language, _add_suffix)
